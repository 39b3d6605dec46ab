//! Invariants of finite matrix groups by exact linear algebra.

use crate::arith::{lcm_u64, CycMatrix, CycNum, Rational};
use crate::group::{GroupError, MatrixGroup, Representation};
use crate::poly::{monomials_of_degree, Monomial, Poly, PolySpace};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("caps must be at least {0}")]
    CapTooSmall(u32),
    #[error("character must be one-dimensional")]
    NotACharacter,
}

/// Row-echelon span of polynomials keyed by leading monomial.
#[derive(Debug, Clone)]
pub struct Span {
    rows: BTreeMap<Monomial, Poly>,
}

impl Default for Span {
    fn default() -> Self {
        Span::new()
    }
}

impl Span {
    pub fn new() -> Span {
        Span { rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut p = p.clone();
        let mut cursor: Option<Monomial> = None;
        loop {
            let hit = p
                .terms()
                .rev()
                .find(|(m, _)| cursor.as_ref().map_or(true, |c| *m < c) && self.rows.contains_key(m))
                .map(|(m, c)| (m.clone(), c.clone()));
            match hit {
                Some((m, c)) => {
                    p.add_scaled(&self.rows[&m], &-c);
                    cursor = Some(m);
                }
                None => return p,
            }
        }
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p`; false when it was already in the span.
    pub fn insert(&mut self, p: &Poly) -> bool {
        let r = self.reduce(p);
        match r.leading() {
            None => false,
            Some((m, _)) => {
                let m = m.clone();
                self.rows.insert(m, r.monic());
                true
            }
        }
    }
}

/// A representation acting on polynomial variables by `var_i ↦ Σ_j M_ij var_j`.
#[derive(Debug, Clone)]
pub struct Action {
    rep: Representation,
    linear: Vec<Vec<Poly>>,
}

impl Action {
    pub fn new(rep: &Representation) -> Action {
        let n = rep.dim();
        let level = rep.level();
        let linear = rep
            .images()
            .iter()
            .map(|m| {
                (0..n)
                    .map(|i| {
                        Poly::from_terms(
                            n,
                            level,
                            (0..n).map(|j| (Monomial::var(n, j), m.get(i, j).clone())),
                        )
                    })
                    .collect()
            })
            .collect();
        Action {
            rep: rep.clone(),
            linear,
        }
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn nvars(&self) -> usize {
        self.rep.dim()
    }

    pub fn level(&self) -> u32 {
        self.rep.level()
    }

    /// `f∘g`.
    pub fn apply(&self, f: &Poly, g: usize) -> Poly {
        f.substitute(&self.linear[g])
    }

    pub fn is_invariant(&self, f: &Poly) -> bool {
        self.rep
            .group()
            .generator_indices()
            .iter()
            .all(|&g| self.apply(f, g) == *f)
    }

    /// Averages `χ(g)^{-1} · f∘g`; plain Reynolds when `chi` is `None`.
    pub fn project(&self, f: &Poly, chi: Option<&[CycNum]>) -> Poly {
        let order = self.rep.group().order();
        let mut acc = Poly::zero(self.nvars(), self.level());
        for g in 0..order {
            let img = self.apply(f, g);
            match chi {
                None => acc = acc.add(&img),
                Some(vals) => acc.add_scaled(&img, &vals[g]),
            }
        }
        acc.scale_rational(&Rational::new(BigInt::one(), BigInt::from(order)))
    }

    pub fn reynolds(&self, f: &Poly) -> Poly {
        self.project(f, None)
    }
}

/// `(1/|G|) Σ_g f∘g`.
pub fn reynolds(f: &Poly, act: &Representation) -> Poly {
    Action::new(act).reynolds(f)
}

/// Inverse character values χ(g)^{-1} at the given level.
fn inverse_values(chi: &Representation, level: u32) -> Result<Vec<CycNum>, InvariantError> {
    if chi.dim() != 1 {
        return Err(InvariantError::NotACharacter);
    }
    chi.images()
        .iter()
        .map(|m| {
            m.get(0, 0)
                .lift(level)
                .and_then(|c| c.inv())
                .map_err(|e| InvariantError::Group(GroupError::Arith(e)))
        })
        .collect()
}

/// Projected images of monomials in descending order, kept while independent.
fn basis_from_candidates(act: &Action, candidates: &[Monomial], chi: Option<&[CycNum]>) -> Vec<Poly> {
    let mut span = Span::new();
    let mut out = Vec::new();
    for m in candidates {
        let p = act.project(&Poly::monomial(m.clone(), act.level()), chi);
        if !p.is_zero() && span.insert(&p) {
            out.push(p.monic());
        }
    }
    out
}

/// Monomials of bidegree (a, b) with `d` X variables, largest first.
pub fn monomials_of_bidegree(d: usize, m: usize, a: u32, b: u32) -> Vec<Monomial> {
    let xs = monomials_of_degree(d, a);
    let ws = monomials_of_degree(m, b);
    let mut out: Vec<Monomial> = xs
        .iter()
        .flat_map(|x| ws.iter().map(move |w| Monomial([x.0.clone(), w.0.clone()].concat())))
        .collect();
    out.sort_by(|p, q| q.cmp(p));
    out
}

/// Basis of the degree-n invariants of `act`.
pub fn invariant_basis(act: &Representation, degree: u32) -> Vec<Poly> {
    basis_from_candidates(&Action::new(act), &monomials_of_degree(act.dim(), degree), None)
}

/// Basis of the degree-n semi-invariants {f : f∘g = χ(g) f}.
pub fn semi_invariant_basis(act: &Representation, chi: &Representation, degree: u32) -> Result<Vec<Poly>, InvariantError> {
    let level = lcm_u64(act.level() as u64, chi.level() as u64) as u32;
    let act = act.lift(level)?;
    let vals = inverse_values(chi, level)?;
    Ok(basis_from_candidates(
        &Action::new(&act),
        &monomials_of_degree(act.dim(), degree),
        Some(&vals),
    ))
}

/// β acting on X variables, ρ on W variables, and their product on both.
#[derive(Debug, Clone)]
pub struct Setting {
    pub beta: Representation,
    pub rho: Option<Representation>,
    pub space: PolySpace,
    action: Action,
    cache: std::cell::RefCell<HashMap<(u32, u32), Vec<Poly>>>,
}

impl Setting {
    pub fn new(beta: &Representation, rho: Option<&Representation>) -> Result<Setting, InvariantError> {
        let rho = rho.filter(|r| r.dim() > 0);
        let level = rho.map_or(beta.level(), |r| lcm_u64(beta.level() as u64, r.level() as u64) as u32);
        let beta = beta.lift(level)?;
        let rho = rho.map(|r| r.lift(level)).transpose()?;
        let product = match &rho {
            Some(r) => Representation::product(&beta, r)?,
            None => beta.clone(),
        };
        let space = PolySpace::new(beta.dim(), rho.as_ref().map_or(0, |r| r.dim()), level);
        Ok(Setting {
            action: Action::new(&product),
            beta,
            rho,
            space,
            cache: Default::default(),
        })
    }

    pub fn group(&self) -> &Arc<MatrixGroup> {
        self.beta.group()
    }

    pub fn d(&self) -> usize {
        self.space.d()
    }

    pub fn m(&self) -> usize {
        self.space.m()
    }

    pub fn level(&self) -> u32 {
        self.space.level
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    /// Basis of invariants of bidegree (a, b), cached.
    pub fn basis(&self, a: u32, b: u32) -> Vec<Poly> {
        if b > 0 && self.m() == 0 {
            return Vec::new();
        }
        if let Some(v) = self.cache.borrow().get(&(a, b)) {
            return v.clone();
        }
        let cands = monomials_of_bidegree(self.d(), self.m(), a, b);
        let basis = basis_from_candidates(&self.action, &cands, None);
        self.cache.borrow_mut().insert((a, b), basis.clone());
        basis
    }

    /// Products `r·h` with r ∈ R_{a'}, a' ≥ 1, h ∈ B_{(a−a', b)}.
    fn r_plus_span(&self, a: u32, b: u32) -> Span {
        let mut span = Span::new();
        for a1 in 1..=a {
            let rs = self.basis(a1, 0);
            let hs = self.basis(a - a1, b);
            for r in &rs {
                for h in &hs {
                    span.insert(&r.mul(h));
                }
            }
        }
        span
    }

    /// Evaluates a polynomial in generator symbols.
    pub fn evaluate(&self, rel: &Poly, gens: &[Generator]) -> Poly {
        let images: Vec<Poly> = gens.iter().map(|g| g.poly.clone()).collect();
        if images.is_empty() {
            return rel.clone();
        }
        rel.substitute(&images)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub poly: Poly,
    pub bidegree: (u32, u32),
}

/// Caps on generator degrees: X-degree, W-degree and total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub x: u32,
    pub w: u32,
    pub total: u32,
}

impl Caps {
    pub fn uniform(n: u32) -> Caps {
        Caps { x: n, w: n, total: n }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPresentation {
    pub generators: Vec<Generator>,
    /// Polynomials in the generator symbols (one variable per generator).
    pub relations: Vec<Poly>,
    pub relation_cap: u32,
    pub generator_caps: Caps,
    /// The caps reach the Noether bound, so the generators are complete.
    pub complete_generators: bool,
}

impl GradedPresentation {
    pub fn symbols(&self, level: u32) -> PolySpace {
        PolySpace::symbols(self.generators.len(), level)
    }

    pub fn degrees(&self) -> Vec<(u32, u32)> {
        self.generators.iter().map(|g| g.bidegree).collect()
    }
}

/// Bidegrees (a, b) ≠ (0, 0) within caps, by total degree then larger X-degree first.
fn bidegrees(caps: Caps, m: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for t in 1..=caps.total {
        for a in (0..=t.min(caps.x)).rev() {
            let b = t - a;
            if b <= caps.w && (m > 0 || b == 0) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Minimal homogeneous generators by graded Nakayama, then relations up to `relation_cap`.
pub fn min_generators(setting: &Setting, caps: Caps, relation_cap: u32) -> Result<GradedPresentation, InvariantError> {
    if caps.total < 1 || caps.x < 1 {
        return Err(InvariantError::CapTooSmall(1));
    }
    let mut gens: Vec<Generator> = Vec::new();
    for (a, b) in bidegrees(caps, setting.m()) {
        let basis = setting.basis(a, b);
        if basis.is_empty() {
            continue;
        }
        let mut span = Span::new();
        for g in &gens {
            let (ga, gb) = g.bidegree;
            if ga > a || gb > b || (ga, gb) == (a, b) {
                continue;
            }
            for h in setting.basis(a - ga, b - gb) {
                span.insert(&g.poly.mul(&h));
            }
        }
        for p in basis {
            if span.insert(&p) {
                gens.push(Generator { poly: p, bidegree: (a, b) });
            }
        }
    }
    let n = setting.group().order() as u32;
    let complete = caps.total >= n && caps.x >= n && (setting.m() == 0 || caps.w >= n);
    let relations = relations_up_to(setting, &gens, relation_cap);
    Ok(GradedPresentation {
        generators: gens,
        relations,
        relation_cap,
        generator_caps: caps,
        complete_generators: complete,
    })
}

/// Symbol monomials of a given weighted bidegree.
fn symbol_monomials(degrees: &[(u32, u32)], target: (u32, u32)) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; degrees.len()];
    fn rec(i: usize, left: (u32, u32), degrees: &[(u32, u32)], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == degrees.len() {
            if left == (0, 0) {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let (a, b) = degrees[i];
        let mut e = 0;
        loop {
            let need = (a * e, b * e);
            if need.0 > left.0 || need.1 > left.1 {
                break;
            }
            cur[i] = e;
            rec(i + 1, (left.0 - need.0, left.1 - need.1), degrees, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    rec(0, target, degrees, &mut cur, &mut out);
    out.sort_by(|p, q| q.cmp(p));
    out
}

fn eval_symbols(m: &Monomial, gens: &[Generator], memo: &mut HashMap<Monomial, Poly>) -> Poly {
    if let Some(p) = memo.get(m) {
        return p.clone();
    }
    let i = m.0.iter().position(|&e| e > 0).expect("nonconstant symbol monomial");
    let mut rest = m.clone();
    rest.0[i] -= 1;
    let p = if rest.degree() == 0 {
        gens[i].poly.clone()
    } else {
        eval_symbols(&rest, gens, memo).mul(&gens[i].poly)
    };
    memo.insert(m.clone(), p.clone());
    p
}

/// Minimal relations among generators, by bidegree up to total degree `cap`.
fn relations_up_to(setting: &Setting, gens: &[Generator], cap: u32) -> Vec<Poly> {
    let s = gens.len();
    let level = setting.level();
    let degrees: Vec<(u32, u32)> = gens.iter().map(|g| g.bidegree).collect();
    let mut relations: Vec<(Poly, (u32, u32))> = Vec::new();
    let mut evals: HashMap<Monomial, Poly> = HashMap::new();
    let mut by_target: Vec<((u32, u32), Vec<Monomial>)> = Vec::new();
    for t in 1..=cap {
        for a in (0..=t).rev() {
            let target = (a, t - a);
            if target.1 > 0 && setting.m() == 0 {
                continue;
            }
            by_target.push((target, symbol_monomials(&degrees, target)));
        }
    }
    for (target, monos) in by_target {
        if monos.len() < 2 {
            continue;
        }
        let images: Vec<Poly> = monos.iter().map(|m| eval_symbols(m, gens, &mut evals)).collect();
        let mut cols: Vec<Monomial> = images.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
        cols.sort();
        cols.dedup();
        let col_index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
        // Columns of this matrix are symbol monomials; its nullspace holds the relations.
        let mut mat = CycMatrix::zeros(cols.len().max(1), monos.len(), level);
        for (j, p) in images.iter().enumerate() {
            for (m, c) in p.terms() {
                mat.set(col_index[m], j, c.clone());
            }
        }
        let null = mat.nullspace();
        if null.is_empty() {
            continue;
        }
        let mut lower = Span::new();
        for (rel, (ra, rb)) in &relations {
            if *ra > target.0 || *rb > target.1 {
                continue;
            }
            for mu in symbol_monomials(&degrees, (target.0 - ra, target.1 - rb)) {
                lower.insert(&rel.mul_monomial(&mu));
            }
        }
        let mut found: Vec<Poly> = Vec::new();
        for v in null {
            let rel = Poly::from_terms(s, level, monos.iter().cloned().zip(v));
            found.push(rel);
        }
        // Prefer relations with few terms: reduce the nullspace to echelon form first.
        let mut echelon = Span::new();
        for rel in &found {
            echelon.insert(rel);
        }
        let mut rows: Vec<Poly> = echelon.rows.values().cloned().collect();
        rows.reverse();
        for rel in rows {
            if lower.insert(&rel) {
                relations.push((rel, target));
            }
        }
    }
    for (rel, _) in &relations {
        assert!(setting.evaluate(rel, gens).is_zero(), "relation must vanish");
    }
    relations.into_iter().map(|(r, _)| r).collect()
}

/// Truncated bigraded series: `coeffs[i][j]` is the coefficient of s^i t^j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerSeries {
    pub coeffs: Vec<Vec<u64>>,
}

impl PowerSeries {
    pub fn single(&self) -> Vec<u64> {
        self.coeffs.iter().map(|row| row[0]).collect()
    }
}

/// 1/p(t) truncated at degree `trunc`, for p(0) = 1.
fn invert_series(p: &[CycNum], trunc: usize, level: u32) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero(level); trunc + 1];
    out[0] = CycNum::one(level);
    for n in 1..=trunc {
        let mut acc = CycNum::zero(level);
        for k in 1..=n.min(p.len() - 1) {
            acc = &acc - &(&p[k] * &out[n - k]);
        }
        out[n] = acc;
    }
    out
}

fn series_of(m: &CycMatrix, trunc: usize) -> Vec<CycNum> {
    let det = m.det_one_minus_t().expect("square");
    invert_series(&det, trunc, m.level())
}

fn to_count(c: &CycNum) -> u64 {
    let q = c.as_rational().expect("Molien coefficients are rational");
    assert!(q.is_integer() && q >= Rational::zero(), "Molien coefficient {} is not a count", q);
    q.to_integer().to_u64().unwrap()
}

/// (1/|G|) Σ 1/det(I − s·β(g)) · 1/det(I − t·ρ(g)), truncated in both variables.
pub fn molien(beta: &Representation, rho: Option<&Representation>, trunc_x: usize, trunc_w: usize) -> PowerSeries {
    let level = rho.map_or(beta.level(), |r| lcm_u64(beta.level() as u64, r.level() as u64) as u32);
    let order = beta.group().order();
    let mut acc = vec![vec![CycNum::zero(level); trunc_w + 1]; trunc_x + 1];
    for g in 0..order {
        let sx = series_of(&beta.image(g).lift(level).unwrap(), trunc_x);
        let sw = match rho {
            Some(r) => series_of(&r.image(g).lift(level).unwrap(), trunc_w),
            None => {
                let mut v = vec![CycNum::zero(level); trunc_w + 1];
                v[0] = CycNum::one(level);
                v
            }
        };
        for i in 0..=trunc_x {
            for j in 0..=trunc_w {
                acc[i][j] = &acc[i][j] + &(&sx[i] * &sw[j]);
            }
        }
    }
    let inv = Rational::new(BigInt::one(), BigInt::from(order));
    PowerSeries {
        coeffs: acc
            .iter()
            .map(|row| row.iter().map(|c| to_count(&c.scale(&inv))).collect())
            .collect(),
    }
}

/// Minimal R-generators of the covariants (S ⊗ V)^G, with V carrying ρ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovariantModule {
    /// Each generator as W-linear invariant Σ f_j W_j.
    pub polys: Vec<Poly>,
    /// Coefficient vectors (f_1, …, f_m) over S.
    pub generators: Vec<Vec<Poly>>,
    pub degrees: Vec<u32>,
    /// Rank of the generator matrix at a generic point.
    pub generic_rank: usize,
}

/// Splits `Σ f_j W_j` into its coefficient vector.
fn coefficient_vector(p: &Poly, d: usize, m: usize) -> Vec<Poly> {
    let level = p.level();
    let mut out = vec![Poly::zero(d, level); m];
    for (mono, c) in p.terms() {
        let j = mono.0[d..].iter().position(|&e| e == 1).expect("W-linear");
        out[j].add_term(Monomial(mono.0[..d].to_vec()), c.clone());
    }
    out
}

/// Basis of B_{(a,b)} modulo R_+·B, keeping the first independent elements.
fn nakayama_new(setting: &Setting, a: u32, b: u32) -> Vec<Poly> {
    let mut span = setting.r_plus_span(a, b);
    setting.basis(a, b).into_iter().filter(|p| span.insert(p)).collect()
}

pub fn covariant_generators(setting: &Setting, cap: u32) -> CovariantModule {
    let (d, m) = (setting.d(), setting.m());
    let mut polys = Vec::new();
    let mut degrees = Vec::new();
    if m > 0 {
        for a in 0..=cap {
            for p in nakayama_new(setting, a, 1) {
                polys.push(p);
                degrees.push(a);
            }
        }
    }
    let generators: Vec<Vec<Poly>> = polys.iter().map(|p| coefficient_vector(p, d, m)).collect();
    let generic_rank = generic_rank(setting, &generators);
    CovariantModule {
        polys,
        generators,
        degrees,
        generic_rank,
    }
}

fn generic_rank(setting: &Setting, generators: &[Vec<Poly>]) -> usize {
    if generators.is_empty() {
        return 0;
    }
    let point = setting.beta.generic_point(17).unwrap_or_else(|_| {
        (0..setting.d())
            .map(|i| CycNum::from_int(setting.level(), 3 + 7 * i as i64))
            .collect()
    });
    let rows: Vec<Vec<CycNum>> = generators.iter().map(|v| v.iter().map(|f| f.eval(&point)).collect()).collect();
    CycMatrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymDegree {
    pub n: u32,
    /// μ_R(B_n) up to the X-degree cap.
    pub mu: usize,
    pub surjective: bool,
    /// First invariant of W-degree n outside the image of Sym^n(M).
    pub witness: Option<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub degrees: Vec<SymDegree>,
    pub first_failure: Option<u32>,
    /// For reflection β: μ_R(B_n) equals C(n+m−1, m−1) at every degree.
    pub reflection_hilbert_check: Option<bool>,
    pub caps: (u32, u32),
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Compares Sym(M) → B^ρ degreewise in W.
pub fn sym_vs_invariant(setting: &Setting, cap_x: u32, cap_w: u32) -> Result<ComparisonReport, InvariantError> {
    if cap_w < 2 {
        return Err(InvariantError::CapTooSmall(2));
    }
    let m = setting.m();
    let cov = covariant_generators(setting, cap_x);
    let mut degrees = Vec::new();
    // products[n] lists (poly, X-degree) for products of n covariant generators.
    let mut products: Vec<Vec<(Poly, u32)>> = vec![vec![(Poly::one(setting.space.nvars(), setting.level()), 0)]];
    for n in 1..=cap_w {
        let mut next = Vec::new();
        let mut seen = Span::new();
        for (p, a) in &products[n as usize - 1] {
            for (c, ca) in cov.polys.iter().zip(&cov.degrees) {
                if a + ca > cap_x {
                    continue;
                }
                let q = p.mul(c);
                if seen.insert(&q) {
                    next.push((q, a + ca));
                }
            }
        }
        products.push(next);
    }
    for n in 0..=cap_w {
        let mut mu = 0;
        let mut witness = None;
        if m > 0 || n == 0 {
            for a in 0..=cap_x {
                mu += nakayama_new(setting, a, n).len();
                if witness.is_some() {
                    continue;
                }
                let mut image = Span::new();
                for (p, pa) in &products[n as usize] {
                    if *pa <= a {
                        for r in setting.basis(a - pa, 0) {
                            image.insert(&r.mul(p));
                        }
                    }
                }
                witness = setting.basis(a, n).into_iter().find(|p| !image.contains(p));
            }
        }
        degrees.push(SymDegree {
            n,
            mu,
            surjective: witness.is_none(),
            witness,
        });
    }
    assert!(degrees[0].surjective && degrees[1].surjective, "Sym(M) → B^ρ is onto in degrees 0 and 1");
    let first_failure = degrees.iter().find(|d| !d.surjective).map(|d| d.n);
    let reflection_hilbert_check = crate::reflection::is_reflection_group_on(&setting.beta, &setting.group().whole())
        .then(|| {
            m > 0
                && degrees
                    .iter()
                    .all(|d| d.mu as u64 == binomial(d.n as u64 + m as u64 - 1, m as u64 - 1))
        });
    Ok(ComparisonReport {
        degrees,
        first_failure,
        reflection_hilbert_check,
        caps: (cap_x, cap_w),
    })
}

/// First-degree part of B^reg against the irreducible decomposition of the regular representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularFirstDegree {
    pub regular_generators: usize,
    /// (dim ρ, number of covariant generators) per irreducible.
    pub per_irreducible: Vec<(usize, usize)>,
    pub weighted_sum: usize,
    pub embedding_verified: bool,
}

pub fn regular_first_degree(
    beta: &Representation,
    irreducibles: &[Representation],
    cap: u32,
) -> Result<RegularFirstDegree, InvariantError> {
    let group = beta.group().clone();
    let reg = Representation::regular(group.clone());
    let setting = Setting::new(beta, Some(&reg))?;
    let regular_generators = covariant_generators(&setting, cap).polys.len();
    let mut per_irreducible = Vec::new();
    for irr in irreducibles {
        let s = Setting::new(beta, Some(irr))?;
        per_irreducible.push((irr.dim(), covariant_generators(&s, cap).polys.len()));
    }
    let weighted_sum = per_irreducible.iter().map(|(d, c)| d * c).sum();
    let (d, n) = (beta.dim(), group.order());
    let level = setting.level();
    let beta_act = Action::new(&setting.beta);
    let mut embedding_verified = true;
    for deg in 0..=cap {
        for s in monomials_of_degree(d, deg) {
            let s = Poly::monomial(s, level);
            let mut f = Poly::zero(d + n, level);
            for h in 0..n {
                let moved = beta_act.apply(&s, group.inverse(h));
                for (mono, c) in moved.terms() {
                    let mut e = mono.0.clone();
                    e.extend(std::iter::repeat(0).take(n));
                    e[d + h] = 1;
                    f.add_term(Monomial(e), c.clone());
                }
            }
            embedding_verified &= setting.action().is_invariant(&f);
        }
    }
    Ok(RegularFirstDegree {
        regular_generators,
        per_irreducible,
        weighted_sum,
        embedding_verified,
    })
}
