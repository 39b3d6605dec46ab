//! Elements of Q(ζ_n) stored in the power basis modulo Φ_n.

use super::upoly;
use super::{ArithError, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut n = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic level must be positive");
    let mut num: Vec<Rational> = vec![Rational::zero(); n as usize + 1];
    num[0] = -Rational::one();
    num[n as usize] = Rational::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d: Vec<Rational> = cyclotomic_polynomial(d)
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            let (q, r) = upoly::divmod(&num, &phi_d);
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num.into_iter().map(|c| c.to_integer()).collect()
}

/// Precomputed reduction data for one cyclotomic level.
#[derive(Debug)]
pub struct Field {
    level: u32,
    degree: usize,
    phi: Vec<Rational>,
    // x^(degree + j) mod Φ_n for j = 0..degree-1
    high: Vec<Vec<Rational>>,
    // x^e mod Φ_n for e = 0..level-1
    zeta: Vec<Vec<Rational>>,
}

impl Field {
    fn build(level: u32) -> Field {
        let phi: Vec<Rational> = cyclotomic_polynomial(level)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let degree = phi.len() - 1;
        let times_x = |v: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero(); degree];
            for i in 0..degree - 1 {
                out[i + 1] = v[i].clone();
            }
            let top = &v[degree - 1];
            if !top.is_zero() {
                for i in 0..degree {
                    out[i] -= top * &phi[i];
                }
            }
            out
        };
        let mut zeta = Vec::with_capacity(level as usize);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..level.max(2 * degree as u32) {
            zeta.push(cur.clone());
            cur = times_x(&cur);
        }
        let high = (0..degree).map(|j| zeta[degree + j].clone()).collect();
        zeta.truncate(level as usize);
        Field {
            level,
            degree,
            phi,
            high,
            zeta,
        }
    }

    /// Shared field data for the given level.
    pub fn get(level: u32) -> Arc<Field> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = cache.lock().expect("field cache poisoned");
        map.entry(level)
            .or_insert_with(|| Arc::new(Field::build(level)))
            .clone()
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// An element of Q(ζ_level).
#[derive(Clone)]
pub struct CycNum {
    field: Arc<Field>,
    coeffs: Vec<Rational>,
}

/// Binary operations accepted by [`cyc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Sub,
    Mul,
}

/// Exact `a op b` for two elements of the same level.
pub fn cyc_arith(a: &CycNum, b: &CycNum, op: CycOp) -> Result<CycNum, ArithError> {
    match op {
        CycOp::Add => a.checked_add(b),
        CycOp::Sub => a.checked_sub(b),
        CycOp::Mul => a.checked_mul(b),
    }
}

impl CycNum {
    pub fn zero(level: u32) -> CycNum {
        let field = Field::get(level);
        let coeffs = vec![Rational::zero(); field.degree];
        CycNum { field, coeffs }
    }

    pub fn one(level: u32) -> CycNum {
        CycNum::from_rational(level, Rational::one())
    }

    pub fn from_rational(level: u32, q: Rational) -> CycNum {
        let mut out = CycNum::zero(level);
        out.coeffs[0] = q;
        out
    }

    pub fn from_int(level: u32, n: i64) -> CycNum {
        CycNum::from_rational(level, Rational::from_integer(BigInt::from(n)))
    }

    /// ζ^e where ζ is the primitive root of order `level`.
    pub fn zeta(level: u32, e: i64) -> CycNum {
        let field = Field::get(level);
        let e = e.rem_euclid(level as i64) as usize;
        let coeffs = field.zeta[e].clone();
        CycNum { field, coeffs }
    }

    /// ζ_order^e expressed at `level`; `order` must divide `level`.
    pub fn root_of_unity(level: u32, order: u32, e: i64) -> Result<CycNum, ArithError> {
        if order == 0 || level % order != 0 {
            return Err(ArithError::MissingRoot(level, order));
        }
        Ok(CycNum::zeta(level, e * (level / order) as i64))
    }

    pub fn level(&self) -> u32 {
        self.field.level
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Builds an element from a coefficient polynomial of any length, reducing mod Φ_n.
    pub fn from_poly(level: u32, poly: &[Rational]) -> CycNum {
        let mut out = CycNum::zero(level);
        for (e, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = &out.field.zeta[e % level as usize];
            let mut acc = out.coeffs.clone();
            for (i, zc) in z.iter().enumerate() {
                if !zc.is_zero() {
                    acc[i] += c * zc;
                }
            }
            out.coeffs = acc;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn same_level(&self, other: &CycNum) -> Result<(), ArithError> {
        if self.field.level != other.field.level {
            Err(ArithError::LevelMismatch(self.field.level, other.field.level))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum, ArithError> {
        self.same_level(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNum {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum, ArithError> {
        self.same_level(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNum {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum, ArithError> {
        self.same_level(other)?;
        let deg = self.field.degree;
        if deg == 1 {
            return Ok(CycNum {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut prod = vec![Rational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<Rational> = prod[..deg].to_vec();
        for (j, c) in prod[deg..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, h) in self.field.high[j].iter().enumerate() {
                if !h.is_zero() {
                    coeffs[i] += c * h;
                }
            }
        }
        Ok(CycNum {
            field: self.field.clone(),
            coeffs,
        })
    }

    /// Scales by a rational number.
    pub fn scale(&self, q: &Rational) -> CycNum {
        CycNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_n.
    pub fn inv(&self) -> Result<CycNum, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycNum::from_rational(self.level(), q.recip()));
        }
        let s = upoly::inverse_mod(&self.coeffs, &self.field.phi)
            .expect("nonzero element of a field is invertible");
        Ok(CycNum::from_poly(self.level(), &s))
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum, ArithError> {
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<CycNum, ArithError> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycNum::one(self.level());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> CycNum {
        let n = self.level() as usize;
        let mut poly = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[(n - i) % n] += c;
        }
        CycNum::from_poly(self.level(), &poly)
    }

    /// Embeds into Q(ζ_new) where `level` divides `new_level`.
    pub fn lift(&self, new_level: u32) -> Result<CycNum, ArithError> {
        let n = self.level();
        if new_level % n != 0 {
            return Err(ArithError::LevelMismatch(n, new_level));
        }
        if new_level == n {
            return Ok(self.clone());
        }
        let step = (new_level / n) as usize;
        let mut poly = vec![Rational::zero(); step * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(CycNum::from_poly(new_level, &poly))
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.level == other.field.level && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.level.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [level {}]", self, self.level())
    }
}

/// Renders as a sum of `c*z^i` terms, `z` standing for ζ_level.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", abs)?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{}", i)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic level mismatch")
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$checked(&rhs).expect("cyclotomic level mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}
