//! Diagonal abelian actions: degree-zero monoids and their algebras.

mod grading;

pub use grading::AbelianGrading;

use crate::arith::smith::solve_row_combination;
use crate::arith::lcm_u64;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ToricError {
    #[error("invalid grading: {0}")]
    Invalid(String),
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),
    #[error("no multiple of {generator:?} up to {bound} lies in the submonoid")]
    IntegralityBudget { generator: Vec<u32>, bound: u64 },
    #[error("the X weights do not generate the grading group")]
    NotFaithful,
}

/// Limits for Hilbert basis enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToricBudget {
    pub max_order: u64,
    pub max_vars: usize,
}

impl Default for ToricBudget {
    fn default() -> Self {
        ToricBudget {
            max_order: 64,
            max_vars: 8,
        }
    }
}

/// Minimal generators of the monoid of degree-zero exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertBasis {
    /// Sorted by total degree, then lexicographically with larger vectors first.
    pub generators: Vec<Vec<u32>>,
    pub degree_bound_used: u64,
}

fn total(v: &[u32]) -> u32 {
    v.iter().sum()
}

fn dominates(v: &[u32], g: &[u32]) -> bool {
    v.iter().zip(g).all(|(a, b)| a >= b)
}

fn sub_vec(v: &[u32], g: &[u32]) -> Vec<u32> {
    v.iter().zip(g).map(|(a, b)| a - b).collect()
}

fn add_vec(v: &[u32], g: &[u32]) -> Vec<u32> {
    v.iter().zip(g).map(|(a, b)| a + b).collect()
}

fn scale_vec(v: &[u32], t: u32) -> Vec<u32> {
    v.iter().map(|a| a * t).collect()
}

fn sort_generators(gens: &mut [Vec<u32>]) {
    gens.sort_by(|a, b| total(a).cmp(&total(b)).then_with(|| b.cmp(a)));
}

pub fn hilbert_basis(g: &AbelianGrading) -> Result<HilbertBasis, ToricError> {
    hilbert_basis_with_budget(g, ToricBudget::default())
}

/// Level-by-level enumeration of vectors that dominate no generator found so far.
///
/// Degree bound: if v has degree 0 and total degree T > |D|, list its unit
/// steps in any order and take the T+1 prefix sums in D. Positions 0..T-1
/// hold T > |D| values, so two agree, and the steps between them form a
/// proper nonzero degree-0 part of v. Hence generators have total degree ≤ |D|.
pub fn hilbert_basis_with_budget(g: &AbelianGrading, budget: ToricBudget) -> Result<HilbertBasis, ToricError> {
    let order = g.order();
    let n = g.nvars();
    if order > budget.max_order {
        return Err(ToricError::Budget(format!("|D| = {} exceeds {}", order, budget.max_order)));
    }
    if n > budget.max_vars {
        return Err(ToricError::Budget(format!("{} variables exceed {}", n, budget.max_vars)));
    }
    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut frontier: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0u32; n]]);
    for _ in 1..=order {
        let mut next: BTreeSet<Vec<u32>> = BTreeSet::new();
        for v in &frontier {
            for i in 0..n {
                let mut w = v.clone();
                w[i] += 1;
                if !gens.iter().any(|gen| dominates(&w, gen)) {
                    next.insert(w);
                }
            }
        }
        let found: Vec<Vec<u32>> = next.iter().filter(|w| g.is_degree_zero(w)).cloned().collect();
        for w in &found {
            next.remove(w);
        }
        gens.extend(found);
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    sort_generators(&mut gens);
    Ok(HilbertBasis {
        generators: gens,
        degree_bound_used: order,
    })
}

/// `lhs − rhs` in generator symbols, stored as multiplicity vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Binomial {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
}

impl Binomial {
    /// Renders with generator letters, e.g. `A*B - C^2`.
    pub fn format(&self, names: &[String]) -> String {
        let side = |v: &[u32]| -> String {
            let parts: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                .collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join("*")
            }
        };
        format!("{} - {}", side(&self.lhs), side(&self.rhs))
    }

    /// Exponent vector of either side after substituting the generators.
    pub fn evaluate(&self, gens: &[Vec<u32>]) -> (Vec<u32>, Vec<u32>) {
        let n = gens.first().map_or(0, |g| g.len());
        let eval = |v: &[u32]| {
            v.iter()
                .zip(gens)
                .fold(vec![0u32; n], |acc, (&e, g)| add_vec(&acc, &scale_vec(g, e)))
        };
        (eval(&self.lhs), eval(&self.rhs))
    }
}

/// Symbol order for orienting binomials: graded reverse lexicographic.
fn symbol_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    crate::poly::Monomial(a.to_vec()).cmp(&crate::poly::Monomial(b.to_vec()))
}

/// Multisets of generator indices of size ≤ cap, as multiplicity vectors.
fn multisets_up_to(s: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; s];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, cap, &mut cur, &mut out);
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Minimal binomial relations among the generators, complete up to `cap`
/// generator factors on each side.
///
/// Fibers of the factorization map are processed by increasing exponent
/// degree; within a fiber the multiples of earlier relations connect
/// factorizations, and each extra connected component needs one new relation.
pub fn binomial_relations(hb: &HilbertBasis, cap: u32) -> Vec<Binomial> {
    let gens = &hb.generators;
    let s = gens.len();
    if s == 0 {
        return Vec::new();
    }
    let n = gens[0].len();
    let mut fibers: BTreeMap<(u32, Vec<u32>), Vec<Vec<u32>>> = BTreeMap::new();
    for u in multisets_up_to(s, cap) {
        if total(&u) == 0 {
            continue;
        }
        let e = u
            .iter()
            .zip(gens)
            .fold(vec![0u32; n], |acc, (&c, g)| add_vec(&acc, &scale_vec(g, c)));
        fibers.entry((total(&e), e)).or_default().push(u);
    }
    let mut relations: Vec<Binomial> = Vec::new();
    for (_, mut fiber) in fibers {
        if fiber.len() < 2 {
            continue;
        }
        fiber.sort_by(|a, b| symbol_cmp(b, a));
        let pos: HashMap<Vec<u32>, usize> = fiber.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect();
        let mut parent: Vec<usize> = (0..fiber.len()).collect();
        for (i, u) in fiber.iter().enumerate() {
            for rel in &relations {
                for (from, to) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
                    if dominates(u, from) {
                        let v = add_vec(&sub_vec(u, from), to);
                        if let Some(&j) = pos.get(&v) {
                            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                            if a != b {
                                parent[a.max(b)] = a.min(b);
                            }
                        }
                    }
                }
            }
        }
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..fiber.len() {
            let r = find(&mut parent, i);
            if !reps.contains(&r) {
                reps.push(r);
            }
        }
        for &r in &reps[1..] {
            relations.push(Binomial {
                lhs: fiber[reps[0]].clone(),
                rhs: fiber[r].clone(),
            });
        }
    }
    for rel in &relations {
        let (a, b) = rel.evaluate(gens);
        assert_eq!(a, b, "binomial relation must vanish");
    }
    relations
}

/// Whether the binomial lies in the ideal generated by `relations`, using
/// factorizations with at most `cap` factors.
pub fn binomial_in_ideal(hb: &HilbertBasis, relations: &[Binomial], target: &Binomial, cap: u32) -> bool {
    let gens = &hb.generators;
    let (a, b) = target.evaluate(gens);
    if a != b {
        return false;
    }
    let fiber: Vec<Vec<u32>> = multisets_up_to(gens.len(), cap)
        .into_iter()
        .filter(|u| target.evaluate_side(u, gens) == a)
        .collect();
    let pos: HashMap<Vec<u32>, usize> = fiber.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect();
    let (Some(&start), Some(&goal)) = (pos.get(&target.lhs), pos.get(&target.rhs)) else {
        return false;
    };
    let mut parent: Vec<usize> = (0..fiber.len()).collect();
    for (i, u) in fiber.iter().enumerate() {
        for rel in relations {
            for (from, to) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
                if dominates(u, from) {
                    let v = add_vec(&sub_vec(u, from), to);
                    if let Some(&j) = pos.get(&v) {
                        let (x, y) = (find(&mut parent, i), find(&mut parent, j));
                        parent[x] = y;
                    }
                }
            }
        }
    }
    find(&mut parent, start) == find(&mut parent, goal)
}

impl Binomial {
    fn evaluate_side(&self, u: &[u32], gens: &[Vec<u32>]) -> Vec<u32> {
        let n = gens[0].len();
        u.iter()
            .zip(gens)
            .fold(vec![0u32; n], |acc, (&e, g)| add_vec(&acc, &scale_vec(g, e)))
    }
}

/// One summand S_{−λ} ⊗ K[W]_λ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterPiece {
    pub lambda: Vec<u64>,
    pub x_monomials: Vec<Vec<u32>>,
    pub w_monomials: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterDecomposition {
    pub pieces: Vec<CharacterPiece>,
    /// Per-bidegree pairing counts agree with a direct count of degree-zero monomials.
    pub verified: bool,
}

fn monomials_up_to(nvars: usize, cap: u32) -> Vec<Vec<u32>> {
    (0..=cap)
        .flat_map(|deg| crate::poly::monomials_of_degree(nvars, deg))
        .map(|m| m.0)
        .collect()
}

fn partial_degree(g: &AbelianGrading, weights: &[Vec<u64>], exps: &[u32]) -> Vec<u64> {
    let mut deg = vec![0u64; g.factors.len()];
    for (w, &e) in weights.iter().zip(exps) {
        for t in 0..deg.len() {
            deg[t] = (deg[t] + w[t] * e as u64) % g.factors[t];
        }
    }
    deg
}

pub fn character_decomposition(g: &AbelianGrading, cap_x: u32, cap_w: u32) -> CharacterDecomposition {
    let xs = monomials_up_to(g.d(), cap_x);
    let ws = monomials_up_to(g.m(), cap_w);
    let pieces: Vec<CharacterPiece> = g
        .elements()
        .into_iter()
        .map(|lambda| {
            let neg = g.negate(&lambda);
            CharacterPiece {
                x_monomials: xs.iter().filter(|x| partial_degree(g, &g.x_weights, x) == neg).cloned().collect(),
                w_monomials: ws.iter().filter(|w| partial_degree(g, &g.w_weights, w) == lambda).cloned().collect(),
                lambda,
            }
        })
        .collect();
    let mut verified = true;
    for a in 0..=cap_x {
        for b in 0..=cap_w {
            let paired: usize = pieces
                .iter()
                .map(|p| {
                    p.x_monomials.iter().filter(|x| total(x) == a).count()
                        * p.w_monomials.iter().filter(|w| total(w) == b).count()
                })
                .sum();
            let direct = xs
                .iter()
                .filter(|x| total(x) == a)
                .flat_map(|x| ws.iter().filter(|w| total(w) == b).map(move |w| [x.clone(), w.clone()].concat()))
                .filter(|v| g.is_degree_zero(v))
                .count();
            verified &= paired == direct;
        }
    }
    CharacterDecomposition { pieces, verified }
}

/// Filtration data of the fiber ring over the vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexFiberReport {
    /// dim 𝔪^i/𝔪^{i+1} for i < cap.
    pub assoc_graded_dims: Vec<usize>,
    /// dim F/𝔪^i for i ≤ cap.
    pub trunc_dims: Vec<usize>,
    pub reduction_generators: Vec<Vec<u32>>,
    /// Mixed generators with their nilpotency exponent.
    pub nilpotent_witnesses: Vec<(Vec<u32>, u32)>,
    pub hilbert_basis: HilbertBasis,
}

/// Longest factorization of monoid elements into Hilbert basis generators.
struct FactorLength<'a> {
    gens: &'a [Vec<u32>],
    memo: HashMap<Vec<u32>, u32>,
}

impl FactorLength<'_> {
    fn get(&mut self, v: &[u32]) -> u32 {
        if v.iter().all(|&x| x == 0) {
            return 0;
        }
        if let Some(&l) = self.memo.get(v) {
            return l;
        }
        let mut best = 0;
        for g in self.gens {
            if dominates(v, g) {
                let rest = sub_vec(v, g);
                best = best.max(1 + self.get(&rest));
            }
        }
        self.memo.insert(v.to_vec(), best);
        best
    }
}

/// The fiber ring B/(R₊B) over the vertex, on monomial bases.
pub fn vertex_fiber(g: &AbelianGrading, cap: u32) -> Result<VertexFiberReport, ToricError> {
    let hb = hilbert_basis(g)?;
    Ok(vertex_fiber_from_basis(g, hb, cap))
}

fn vertex_fiber_from_basis(g: &AbelianGrading, hb: HilbertBasis, cap: u32) -> VertexFiberReport {
    let d = g.d();
    let gens = &hb.generators;
    let is_pure_x = |v: &[u32]| v[d..].iter().all(|&x| x == 0);
    let is_pure_w = |v: &[u32]| v[..d].iter().all(|&x| x == 0);
    let pure_x: Vec<&Vec<u32>> = gens.iter().filter(|v| is_pure_x(v)).collect();
    let in_ideal = |v: &[u32]| pure_x.iter().any(|r| dominates(v, r));
    let mut lengths = FactorLength {
        gens,
        memo: HashMap::new(),
    };
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0u32; g.nvars()]]);
    let mut shell: BTreeSet<Vec<u32>> = seen.clone();
    for _ in 1..cap {
        let mut next = BTreeSet::new();
        for v in &shell {
            if in_ideal(v) {
                continue;
            }
            for gen in gens {
                let w = add_vec(v, gen);
                if !in_ideal(&w) && seen.insert(w.clone()) {
                    next.insert(w);
                }
            }
        }
        shell = next;
    }
    let mut assoc = vec![0usize; cap as usize];
    for v in &seen {
        let l = lengths.get(v);
        if (l as usize) < assoc.len() {
            assoc[l as usize] += 1;
        }
    }
    let mut trunc = vec![0usize];
    for a in &assoc {
        trunc.push(trunc.last().unwrap() + a);
    }
    let reduction_generators = gens.iter().filter(|v| is_pure_w(v)).cloned().collect();
    let mut nilpotent_witnesses = Vec::new();
    for gen in gens.iter().filter(|v| !is_pure_x(v) && !is_pure_w(v)) {
        if let Some(e) = (1..=cap.max(1)).find(|&e| in_ideal(&scale_vec(gen, e))) {
            nilpotent_witnesses.push((gen.clone(), e));
        }
    }
    VertexFiberReport {
        assoc_graded_dims: assoc,
        trunc_dims: trunc,
        reduction_generators,
        nilpotent_witnesses,
        hilbert_basis: hb,
    }
}

/// Local grading at a point with the given nonzero X coordinates: D is
/// divided by the weights of those coordinates, which become units.
pub fn localized_grading(g: &AbelianGrading, support: &[bool]) -> AbelianGrading {
    let units: Vec<Vec<u64>> = g
        .x_weights
        .iter()
        .zip(support)
        .filter(|(_, &s)| s)
        .map(|(w, _)| w.clone())
        .collect();
    let q = g.quotient_by(&units);
    AbelianGrading {
        factors: q.factors,
        x_weights: q.x_weights.into_iter().zip(support).filter(|(_, &s)| !s).map(|(w, _)| w).collect(),
        w_weights: q.w_weights,
    }
}

/// Monoid generated by a finite set, with memoized membership.
struct Submonoid<'a> {
    gens: &'a [Vec<u32>],
    memo: HashMap<Vec<u32>, Option<Vec<u32>>>,
}

impl Submonoid<'_> {
    fn new(gens: &[Vec<u32>]) -> Submonoid<'_> {
        Submonoid {
            gens,
            memo: HashMap::new(),
        }
    }

    /// Multiplicities of generators summing to `v`, if any.
    fn factor(&mut self, v: &[u32]) -> Option<Vec<u32>> {
        if v.iter().all(|&x| x == 0) {
            return Some(vec![0; self.gens.len()]);
        }
        if let Some(r) = self.memo.get(v) {
            return r.clone();
        }
        let mut out = None;
        for (i, g) in self.gens.iter().enumerate() {
            if g.iter().all(|&x| x == 0) || !dominates(v, g) {
                continue;
            }
            if let Some(mut f) = self.factor(&sub_vec(v, g)) {
                f[i] += 1;
                out = Some(f);
                break;
            }
        }
        self.memo.insert(v.to_vec(), out.clone());
        out
    }
}

/// A positive multiple of a generator that lands in the submonoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralityCertificate {
    pub generator: Vec<u32>,
    pub multiple: u32,
    /// Multiplicities of the submonoid generators summing to `multiple · generator`.
    pub factorization: Vec<u32>,
}

/// Integer combination of lattice generators equal to a target vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeWitness {
    pub target: Vec<u32>,
    pub coefficients: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizationVerdict {
    pub is_normalization: bool,
    /// Generators of the submonoid (tensor or pullback image).
    pub sub_generators: Vec<Vec<u32>>,
    /// Hilbert basis of the target monoid.
    pub target_generators: Vec<Vec<u32>>,
    pub non_surjective: Vec<Vec<u32>>,
    pub certificates: Vec<IntegralityCertificate>,
    pub lattice_witnesses: Vec<LatticeWitness>,
}

fn integrality(
    sub: &mut Submonoid,
    target: &[u32],
    bound: u64,
) -> Result<IntegralityCertificate, ToricError> {
    for t in 1..=bound as u32 {
        if let Some(f) = sub.factor(&scale_vec(target, t)) {
            return Ok(IntegralityCertificate {
                generator: target.to_vec(),
                multiple: t,
                factorization: f,
            });
        }
    }
    Err(ToricError::IntegralityBudget {
        generator: target.to_vec(),
        bound,
    })
}

fn lattice_witness(gens: &[Vec<u32>], target: &[u32]) -> Option<LatticeWitness> {
    let rows: Vec<Vec<BigInt>> = gens.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let t: Vec<BigInt> = target.iter().map(|&x| BigInt::from(x)).collect();
    let c = solve_row_combination(&rows, &t)?;
    Some(LatticeWitness {
        target: target.to_vec(),
        coefficients: c.iter().map(|x| x.to_i64().expect("small coefficient")).collect(),
    })
}

fn integrality_bound(g: &AbelianGrading) -> u64 {
    let l = g.factors.iter().fold(1, |a, &k| lcm_u64(a, k));
    l * l
}

/// Compares B^{ρ1×ρ2} with the subalgebra generated by B^{ρ1} and B^{ρ2}.
pub fn normalization_check(g1: &AbelianGrading, g2: &AbelianGrading) -> Result<NormalizationVerdict, ToricError> {
    if g1.factors != g2.factors || g1.x_weights != g2.x_weights {
        return Err(ToricError::Invalid("the two gradings must share D and the X weights".into()));
    }
    let (d, m1, m2) = (g1.d(), g1.m(), g2.m());
    let joint = g1.with_w_weights([g1.w_weights.clone(), g2.w_weights.clone()].concat());
    let embed = |v: &[u32], offset: usize, m: usize| -> Vec<u32> {
        let mut out = vec![0u32; d + m1 + m2];
        out[..d].copy_from_slice(&v[..d]);
        out[d + offset..d + offset + m].copy_from_slice(&v[d..]);
        out
    };
    let mut sub_generators: Vec<Vec<u32>> = Vec::new();
    for v in hilbert_basis(g1)?.generators {
        sub_generators.push(embed(&v, 0, m1));
    }
    for v in hilbert_basis(g2)?.generators {
        let w = embed(&v, m1, m2);
        if !sub_generators.contains(&w) {
            sub_generators.push(w);
        }
    }
    sort_generators(&mut sub_generators);
    assert!(sub_generators.iter().all(|v| joint.is_degree_zero(v)));
    let target = hilbert_basis(&joint)?.generators;
    finish_verdict(sub_generators, target, integrality_bound(g1))
}

fn finish_verdict(
    sub_generators: Vec<Vec<u32>>,
    target: Vec<Vec<u32>>,
    bound: u64,
) -> Result<NormalizationVerdict, ToricError> {
    let mut sub = Submonoid::new(&sub_generators);
    let mut non_surjective = Vec::new();
    let mut certificates = Vec::new();
    let mut lattice_witnesses = Vec::new();
    let mut birational = true;
    for h in &target {
        let cert = integrality(&mut sub, h, bound)?;
        if cert.multiple > 1 {
            non_surjective.push(h.clone());
            certificates.push(cert);
        }
        match lattice_witness(&sub_generators, h) {
            Some(w) => {
                if non_surjective.last() == Some(h) {
                    lattice_witnesses.push(w);
                }
            }
            None => birational = false,
        }
    }
    Ok(NormalizationVerdict {
        is_normalization: birational,
        sub_generators: sub_generators.clone(),
        target_generators: target,
        non_surjective,
        certificates,
        lattice_witnesses,
    })
}

/// Compares S ⊗_R B^ρ with S[W]: every W_j should be integral over the
/// image and lie in its lattice.
pub fn pullback_check(g: &AbelianGrading) -> Result<NormalizationVerdict, ToricError> {
    if !g.x_part_surjective() {
        return Err(ToricError::NotFaithful);
    }
    let n = g.nvars();
    let mut sub_generators: Vec<Vec<u32>> = (0..g.d())
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = 1;
            e
        })
        .collect();
    for v in hilbert_basis(g)?.generators {
        if !sub_generators.contains(&v) {
            sub_generators.push(v);
        }
    }
    sort_generators(&mut sub_generators);
    let target: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut e = vec![0u32; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut verdict = finish_verdict(sub_generators, target, integrality_bound(g))?;
    verdict.target_generators.drain(..g.d());
    Ok(verdict)
}
