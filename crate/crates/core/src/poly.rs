//! Sparse multivariate polynomials with cyclotomic coefficients.

use crate::arith::{CycNum, Rational};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Exponent vector ordered by graded reverse lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `deg` in `nvars` variables, largest first.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(0, deg, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    level: u32,
    terms: BTreeMap<Monomial, CycNum>,
}

impl Poly {
    pub fn zero(nvars: usize, level: u32) -> Poly {
        Poly {
            nvars,
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: CycNum) -> Poly {
        Poly::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize, level: u32) -> Poly {
        Poly::constant(nvars, CycNum::one(level))
    }

    pub fn term(m: Monomial, c: CycNum) -> Poly {
        let mut p = Poly::zero(m.0.len(), c.level());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial, level: u32) -> Poly {
        Poly::term(m, CycNum::one(level))
    }

    pub fn var(nvars: usize, i: usize, level: u32) -> Poly {
        Poly::monomial(Monomial::var(nvars, i), level)
    }

    pub fn from_terms(nvars: usize, level: u32, terms: impl IntoIterator<Item = (Monomial, CycNum)>) -> Poly {
        let mut p = Poly::zero(nvars, level);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CycNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&CycNum> {
        self.terms.get(m)
    }

    pub fn leading(&self) -> Option<(&Monomial, &CycNum)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, c: &CycNum) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), -v);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-CycNum::one(self.level))
    }

    pub fn scale(&self, c: &CycNum) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars, self.level);
        }
        Poly {
            nvars: self.nvars,
            level: self.level,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Poly {
        self.scale(&CycNum::from_rational(self.level, q.clone()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars, self.level);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            nvars: self.nvars,
            level: self.level,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars, self.level);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Total degree of the highest term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn eval(&self, point: &[CycNum]) -> CycNum {
        let mut acc = CycNum::zero(self.level);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e as i64).expect("nonnegative power");
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(target, self.level);
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(p.nvars, self.level), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }
}

/// Variable names for a polynomial ring in X and W variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySpace {
    pub x_vars: Vec<String>,
    pub w_vars: Vec<String>,
    pub level: u32,
}

impl PolySpace {
    /// Default names: X, Y, Z (or X1, …) and W (or W1, …).
    pub fn new(d: usize, m: usize, level: u32) -> PolySpace {
        let x_vars = if d <= 3 {
            ["X", "Y", "Z"][..d].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=d).map(|i| format!("X{}", i)).collect()
        };
        let w_vars = if m == 1 {
            vec!["W".to_string()]
        } else {
            (1..=m).map(|i| format!("W{}", i)).collect()
        };
        PolySpace { x_vars, w_vars, level }
    }

    /// Generator symbols A, B, C, … for presentations.
    pub fn symbols(count: usize, level: u32) -> PolySpace {
        let names = (0..count)
            .map(|i| {
                let letter = (b'A' + (i % 26) as u8) as char;
                if i < 26 {
                    letter.to_string()
                } else {
                    format!("{}{}", letter, i / 26)
                }
            })
            .collect();
        PolySpace {
            x_vars: names,
            w_vars: Vec::new(),
            level,
        }
    }

    pub fn d(&self) -> usize {
        self.x_vars.len()
    }

    pub fn m(&self) -> usize {
        self.w_vars.len()
    }

    pub fn nvars(&self) -> usize {
        self.d() + self.m()
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.x_vars.iter().chain(&self.w_vars)
    }

    /// (X-degree, W-degree) of a monomial.
    pub fn bidegree(&self, m: &Monomial) -> (u32, u32) {
        let d = self.d();
        (m.0[..d].iter().sum(), m.0[d..].iter().sum())
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (name, &e) in self.names().zip(&m.0) {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(name);
            if e > 1 {
                let _ = write!(s, "^{}", e);
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Human-readable form, leading term first.
    pub fn format(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in p.terms().rev().enumerate() {
            let mono = self.format_monomial(m);
            let is_const = m.degree() == 0;
            let (neg, body) = match c.as_rational() {
                Some(q) => {
                    let neg = q < Rational::from_integer(0.into());
                    let abs = if neg { -q } else { q };
                    let one = abs == Rational::from_integer(1.into());
                    let body = if is_const {
                        abs.to_string()
                    } else if one {
                        mono
                    } else {
                        format!("{}*{}", abs, mono)
                    };
                    (neg, body)
                }
                None => {
                    let body = if is_const {
                        format!("({})", c)
                    } else {
                        format!("({})*{}", c, mono)
                    };
                    (false, body)
                }
            };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&body);
        }
        s
    }
}
