use invar_core::arith::{CycMatrix, CycNum, Rational};
use invar_core::builtin::{self, SymRho};
use invar_core::group::{close_group, Representation, DEFAULT_GROUP_CAP};
use invar_core::invariant::{
    covariant_generators, invariant_basis, min_generators, molien, regular_first_degree, reynolds,
    semi_invariant_basis, sym_vs_invariant, Caps, Setting, Span,
};
use invar_core::poly::{Monomial, Poly};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::sync::Arc;

fn mono(e: &[u32], level: u32) -> Poly {
    Poly::monomial(Monomial(e.to_vec()), level)
}

fn negation(d: usize) -> Representation {
    let m = CycMatrix::diag(vec![CycNum::from_int(1, -1); d]);
    Representation::natural(Arc::new(close_group(&[m], DEFAULT_GROUP_CAP).unwrap()))
}

fn s3() -> Representation {
    builtin::sym(3, SymRho::None).unwrap().beta
}

fn e(n: usize) -> Poly {
    let x = |i| Poly::var(3, i, 1);
    match n {
        1 => x(0).add(&x(1)).add(&x(2)),
        2 => x(0).mul(&x(1)).add(&x(0).mul(&x(2))).add(&x(1).mul(&x(2))),
        _ => x(0).mul(&x(1)).mul(&x(2)),
    }
}

fn vandermonde() -> Poly {
    let x = |i| Poly::var(3, i, 1);
    x(0).sub(&x(1)).mul(&x(0).sub(&x(2))).mul(&x(1).sub(&x(2)))
}

#[test]
fn reynolds_examples() {
    let neg = negation(1);
    assert!(reynolds(&mono(&[1], 1), &neg).is_zero());
    assert_eq!(reynolds(&mono(&[2], 1), &neg), mono(&[2], 1));
    let f = mono(&[2, 1, 0], 1);
    let mut orbit = Poly::zero(3, 1);
    for m in [[2, 1, 0], [2, 0, 1], [1, 2, 0], [0, 2, 1], [1, 0, 2], [0, 1, 2]] {
        orbit = orbit.add(&mono(&m, 1));
    }
    let sixth = Rational::new(BigInt::from(1), BigInt::from(6));
    assert_eq!(reynolds(&f, &s3()), orbit.scale_rational(&sixth));
    assert_eq!(reynolds(&e(2), &s3()), e(2));
}

#[test]
fn invariant_basis_examples() {
    let trivial = Representation::trivial(negation(1).group().clone(), 3);
    for n in 0..5u32 {
        let expected = ((n + 1) * (n + 2) / 2) as usize;
        assert_eq!(invariant_basis(&trivial, n).len(), expected);
    }
    let neg2 = negation(2);
    let basis = invariant_basis(&neg2, 2);
    assert_eq!(basis.len(), 3);
    let mut span = Span::new();
    for p in &basis {
        span.insert(p);
    }
    for m in [[2, 0], [1, 1], [0, 2]] {
        assert!(span.contains(&mono(&m, 1)));
    }
    assert_eq!(invariant_basis(&s3(), 2).len(), 2);
    assert_eq!(invariant_basis(&s3(), 2).len() as u64, molien(&s3(), None, 2, 0).single()[2]);
}

#[test]
fn semi_invariant_examples() {
    let g = s3();
    let sign = Representation::sign(g.group().clone()).unwrap();
    let basis = semi_invariant_basis(&g, &sign, 3).unwrap();
    assert_eq!(basis, vec![vandermonde().monic()]);
    let trivial = Representation::trivial(g.group().clone(), 1);
    assert_eq!(semi_invariant_basis(&g, &trivial, 2).unwrap(), invariant_basis(&g, 2));
    for k in 2..=5u32 {
        let b = builtin::cyclicone(k as u64, 0).unwrap();
        for chi in &b.irreducibles {
            let j = (0..k as i64)
                .find(|&j| chi.image(b.group().generator_indices()[0]) == &CycMatrix::diag(vec![CycNum::zeta(k, j)]))
                .unwrap();
            for n in 0..8u32 {
                let dim = semi_invariant_basis(&b.beta, chi, n).unwrap().len();
                assert_eq!(dim == 1, (n as i64 - j) % k as i64 == 0, "k={} j={} n={}", k, j, n);
            }
        }
    }
}

/// Degree-n part of the algebra generated by `gens` (homogeneous in 3 variables).
fn graded_span(gens: &[(Poly, u32)], n: u32) -> Span {
    let mut span = Span::new();
    fn rec(gens: &[(Poly, u32)], start: usize, left: u32, acc: Poly, span: &mut Span) {
        if left == 0 {
            span.insert(&acc);
            return;
        }
        for i in start..gens.len() {
            if gens[i].1 <= left {
                rec(gens, i, left - gens[i].1, acc.mul(&gens[i].0), span);
            }
        }
    }
    rec(gens, 0, n, Poly::one(3, 1), &mut span);
    span
}

#[test]
fn symmetric_group_generators() {
    let setting = Setting::new(&s3(), None).unwrap();
    let pres = min_generators(&setting, Caps::uniform(6), 6).unwrap();
    assert_eq!(pres.degrees(), vec![(1, 0), (2, 0), (3, 0)]);
    assert!(pres.complete_generators);
    assert!(pres.relations.is_empty());
    let ours: Vec<(Poly, u32)> = pres.generators.iter().map(|g| (g.poly.clone(), g.bidegree.0)).collect();
    let elementary: Vec<(Poly, u32)> = (1..=3).map(|i| (e(i), i as u32)).collect();
    for n in 1..=6 {
        let a = graded_span(&ours, n);
        let b = graded_span(&elementary, n);
        assert_eq!(a.dim(), b.dim());
        for (p, _) in &elementary {
            if p.degree() == Some(n) {
                assert!(a.contains(p));
            }
        }
    }
}

#[test]
fn symmetric_group_with_sign() {
    let b = builtin::sym(3, SymRho::Sign).unwrap();
    let setting = Setting::new(&b.beta, b.rho.as_ref()).unwrap();
    let pres = min_generators(&setting, Caps::uniform(6), 8).unwrap();
    assert_eq!(pres.degrees(), vec![(1, 0), (2, 0), (0, 2), (3, 0), (3, 1)]);
    assert_eq!(pres.relations.len(), 1);
    let rel = &pres.relations[0];
    // symbols: U = W² at 2, V = D·W at 4
    let v2 = Monomial(vec![0, 0, 0, 0, 2]);
    assert!(rel.coeff(&v2).is_some());
    for (m, _) in rel.terms() {
        assert!(m == &v2 || m.0[2] == 1);
    }
    let w = Poly::var(4, 3, 1);
    let d = Poly::from_terms(4, 1, vandermonde().terms().map(|(m, c)| {
        let mut e = m.0.clone();
        e.push(0);
        (Monomial(e), c.clone())
    }));
    let u = &pres.generators[2].poly;
    let v = &pres.generators[4].poly;
    assert_eq!(u, &w.mul(&w));
    assert!(v == &d.mul(&w).monic());
    assert!(v.mul(v).sub(&u.mul(&d).mul(&d)).is_zero());
}

#[test]
fn cyclic4_invariant_ring() {
    let b = builtin::cyclic4();
    let setting = Setting::new(&b.beta, None).unwrap();
    let pres = min_generators(&setting, Caps::uniform(4), 8).unwrap();
    let gens: Vec<Poly> = pres.generators.iter().map(|g| g.poly.clone()).collect();
    let level = setting.level();
    assert_eq!(gens, vec![mono(&[2, 0], level), mono(&[1, 2], level), mono(&[0, 4], level)]);
    assert_eq!(pres.relations.len(), 1);
    let expected = mono(&[1, 0, 1], level).sub(&mono(&[0, 2, 0], level));
    let rel = &pres.relations[0];
    assert!(rel == &expected || rel == &expected.neg());
}

#[test]
fn molien_examples() {
    let trivial = Representation::trivial(negation(1).group().clone(), 2);
    assert_eq!(molien(&trivial, None, 5, 0).single(), vec![1, 2, 3, 4, 5, 6]);
    assert_eq!(molien(&negation(1), None, 5, 0).single(), vec![1, 0, 1, 0, 1, 0]);
    for b in builtin::standard_builtins() {
        let series = molien(&b.beta, b.rho.as_ref(), 4, 2);
        let setting = Setting::new(&b.beta, b.rho.as_ref()).unwrap();
        let wmax = if b.rho.is_some() { 2 } else { 0 };
        for a in 0..=4u32 {
            for w in 0..=wmax {
                if a + w <= 4 {
                    assert_eq!(setting.basis(a, w).len() as u64, series.coeffs[a as usize][w as usize], "{} ({}, {})", b.name, a, w);
                }
            }
        }
    }
}

#[test]
fn covariant_examples() {
    for k in 2..=5u64 {
        for l in 1..k as i64 {
            let b = builtin::cyclicone(k, l).unwrap();
            let setting = Setting::new(&b.beta, b.rho.as_ref()).unwrap();
            let cov = covariant_generators(&setting, k as u32);
            assert_eq!(cov.degrees, vec![k as u32 - l as u32]);
            assert_eq!(cov.polys[0], mono(&[k as u32 - l as u32, 1], setting.level()));
            assert_eq!(cov.generic_rank, 1);
        }
    }
    let b = builtin::a_singularity(2, 1).unwrap();
    let setting = Setting::new(&b.beta, b.rho.as_ref()).unwrap();
    let cov = covariant_generators(&setting, 4);
    assert_eq!(cov.polys, vec![mono(&[1, 0, 1], 2), mono(&[0, 1, 1], 2)]);
    let g = s3();
    let setting = Setting::new(&g, Some(&Representation::trivial(g.group().clone(), 2))).unwrap();
    let cov = covariant_generators(&setting, 3);
    assert_eq!(cov.degrees, vec![0, 0]);
    assert_eq!(cov.generic_rank, 2);
}

#[test]
fn sym_comparison_examples() {
    let g = s3();
    let setting = Setting::new(&g, Some(&Representation::trivial(g.group().clone(), 1))).unwrap();
    assert_eq!(sym_vs_invariant(&setting, 4, 3).unwrap().first_failure, None);
    for k in 2..=5u32 {
        for l in 1..k {
            let b = builtin::cyclicone(k as u64, l as i64).unwrap();
            let setting = Setting::new(&b.beta, b.rho.as_ref()).unwrap();
            let report = sym_vs_invariant(&setting, k, k).unwrap();
            let j = (1..).find(|j| j * (k - l) >= k).unwrap();
            assert_eq!(report.first_failure, Some(j), "k={} l={}", k, l);
            let witness = report.degrees[j as usize].witness.clone().unwrap();
            assert_eq!(witness, mono(&[j * (k - l) - k, j], k));
        }
    }
    let b = builtin::sym(3, SymRho::Sign).unwrap();
    let setting = Setting::new(&b.beta, b.rho.as_ref()).unwrap();
    let report = sym_vs_invariant(&setting, 6, 4).unwrap();
    assert!(report.degrees.iter().all(|d| d.mu == 1));
    assert_eq!(report.reflection_hilbert_check, Some(true));
}

#[test]
fn regular_first_degree_examples() {
    for k in 1..=4u32 {
        let b = builtin::regular_cyclic(k);
        let r = regular_first_degree(&b.beta, &b.irreducibles, k).unwrap();
        assert_eq!(r.regular_generators, r.weighted_sum);
        assert_eq!(r.regular_generators, k as usize);
        assert!(r.embedding_verified);
    }
    let b = builtin::sym(3, SymRho::None).unwrap();
    let r = regular_first_degree(&b.beta, &b.irreducibles, 3).unwrap();
    assert_eq!(r.regular_generators, r.weighted_sum);
    assert!(r.embedding_verified);
}

#[test]
fn character_orthogonality() {
    for b in builtin::standard_builtins() {
        if b.irreducibles.is_empty() {
            continue;
        }
        let chars: Vec<_> = b.irreducibles.iter().map(|r| r.character()).collect();
        let sum: usize = b.irreducibles.iter().map(|r| r.dim() * r.dim()).sum();
        assert_eq!(sum, b.group().order(), "{}", b.name);
        for (i, a) in chars.iter().enumerate() {
            for (j, c) in chars.iter().enumerate() {
                let ip = a.inner_product(c).unwrap();
                assert_eq!(ip, Rational::from_integer(BigInt::from((i == j) as i64)), "{}", b.name);
            }
        }
    }
}

/// Invariants split as Σ_χ S^χ ⊗ K[W]^{χ^{-1}} on abelian builtins.
#[test]
fn character_contributions_span() {
    for b in builtin::standard_builtins() {
        let (Some(rho), true) = (b.rho.as_ref(), b.group().is_abelian()) else { continue };
        let setting = Setting::new(&b.beta, Some(rho)).unwrap();
        for a in 0..=3u32 {
            for w in 0..=2u32 {
                let mut total = 0;
                for chi in &b.irreducibles {
                    let inverse = b
                        .irreducibles
                        .iter()
                        .find(|c| (0..b.group().order()).all(|g| c.image(g).get(0, 0) == &chi.image(g).get(0, 0).inv().unwrap()))
                        .unwrap();
                    total += semi_invariant_basis(&b.beta, chi, a).unwrap().len()
                        * semi_invariant_basis(rho, inverse, w).unwrap().len();
                }
                assert_eq!(total, setting.basis(a, w).len(), "{} ({}, {})", b.name, a, w);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reynolds_idempotent(coeffs in prop::collection::vec(-3i64..=3, 10)) {
        let g = s3();
        let monos = invar_core::poly::monomials_of_degree(3, 3);
        let f = Poly::from_terms(3, 1, monos.into_iter().zip(coeffs).map(|(m, c)| (m, CycNum::from_int(1, c))));
        let once = reynolds(&f, &g);
        prop_assert_eq!(reynolds(&once, &g), once.clone());
        let setting = Setting::new(&g, None).unwrap();
        prop_assert!(setting.action().is_invariant(&once));
    }

    #[test]
    fn reynolds_idempotent_cyclic(k in 2u32..=6, e0 in 0u32..6, e1 in 0u32..6) {
        let b = builtin::a_singularity(k as u64, 1).unwrap();
        let f = mono(&[e0, e1], k);
        let once = reynolds(&f, &b.beta);
        prop_assert_eq!(reynolds(&once, &b.beta), once.clone());
        prop_assert_eq!(once.is_zero(), (e0 as i64 - e1 as i64) % k as i64 != 0);
    }
}
