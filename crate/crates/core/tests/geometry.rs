use invar_core::arith::CycNum;
use invar_core::builtin::{self, SymRho};
use invar_core::geometry::{
    fiber_report, fiberflat_diagnostic, fixed_space_atlas, point_singular, singularity_report, FiberflatVerdict,
};
use invar_core::group::Representation;

fn pt(level: u32, v: &[i64]) -> Vec<CycNum> {
    v.iter().map(|&x| CycNum::from_int(level, x)).collect()
}

#[test]
fn fiber_examples() {
    let b = builtin::sym(3, SymRho::Sign).unwrap();
    let rho = b.rho.as_ref().unwrap();
    let f = fiber_report(&b.beta, rho, &pt(1, &[1, 2, 3])).unwrap();
    assert!(f.stabilizer.is_trivial() && f.reduced);
    let f = fiber_report(&b.beta, rho, &pt(1, &[0, 0, 1])).unwrap();
    assert_eq!(f.stabilizer_order(), 2);
    assert!(!f.reduced);
    assert_eq!(f.geometric_fiber.image_order, 2);
    let trivial = Representation::trivial(b.group().clone(), 2);
    for q in [[0, 0, 0], [1, 1, 1], [0, 0, 1]] {
        assert!(fiber_report(&b.beta, &trivial, &pt(1, &q)).unwrap().reduced);
    }
}

#[test]
fn singularity_three_cases() {
    let b = builtin::sym(3, SymRho::Sign).unwrap();
    let rho = b.rho.as_ref().unwrap();
    let none = singularity_report(&b.beta, rho, &pt(1, &[1, 2, 3])).unwrap();
    assert!(!none.contains_singular && !none.all_singular);
    let one = singularity_report(&b.beta, rho, &pt(1, &[0, 0, 1])).unwrap();
    assert!(one.contains_singular && !one.all_singular && one.zero_section_singular);
    let all = singularity_report(&b.beta, rho, &pt(1, &[1, 1, 1])).unwrap();
    assert!(all.contains_singular && all.all_singular);
}

#[test]
fn cyclic4_singular_locus() {
    let b = builtin::cyclic4();
    let rho = b.rho.as_ref().unwrap();
    let level = b.beta.level();
    for x1 in [1, -2, 5] {
        assert!(point_singular(&b.beta, rho, &pt(level, &[x1, 0]), &pt(level, &[0])).unwrap());
    }
    for (q, v) in [([1, 1], [0]), ([0, 1], [0]), ([1, 0], [1]), ([0, 0], [2]), ([3, 2], [1])] {
        assert!(!point_singular(&b.beta, rho, &pt(level, &q), &pt(level, &v)).unwrap());
    }
}

#[test]
fn singularity_invariants() {
    for b in builtin::standard_builtins() {
        let Some(rho) = b.rho.as_ref() else { continue };
        if !b.beta.is_faithful() {
            continue;
        }
        let level = b.beta.level();
        let d = b.beta.dim();
        let samples: Vec<Vec<i64>> = vec![vec![0; d], vec![1; d], (0..d as i64).map(|i| i + 1).collect(), (0..d as i64).map(|i| i % 2).collect()];
        let zero = vec![CycNum::zero(rho.level().max(level)); rho.dim()];
        for s in samples {
            let q = pt(level, &s);
            let rep = singularity_report(&b.beta, rho, &q).unwrap();
            let zero = zero.iter().map(|z| z.lift(level).unwrap_or_else(|_| z.clone())).collect::<Vec<_>>();
            assert_eq!(rep.zero_section_singular, point_singular(&b.beta, rho, &q, &zero).unwrap());
            let fiber = fiber_report(&b.beta, rho, &q).unwrap();
            if !fiber.reduced {
                assert!(rep.contains_singular, "{} {:?}", b.name, s);
            }
            let trivial = Representation::trivial(b.group().clone(), 1);
            let t = singularity_report(&b.beta, &trivial, &q).unwrap();
            assert!(fiber_report(&b.beta, &trivial, &q).unwrap().reduced);
            let stab = b.beta.stabilizer(&q).unwrap();
            assert_eq!(t.contains_singular, !invar_core::reflection::is_reflection_group_on(&b.beta, &stab));
        }
    }
}

#[test]
fn fixed_space_examples() {
    let neg = builtin::a_singularity(2, 1).unwrap();
    let atlas = fixed_space_atlas(&neg.beta).unwrap();
    assert_eq!(atlas.spaces.len(), 1);
    assert!(atlas.spaces[0].basis.is_empty());
    assert!(atlas.is_small);
    let s3 = builtin::sym(3, SymRho::None).unwrap();
    let atlas = fixed_space_atlas(&s3.beta).unwrap();
    let transposition = s3.group().generator_indices()[0];
    let plane = &atlas.spaces.iter().find(|s| s.element == transposition).unwrap().basis;
    assert_eq!(plane.len(), 2);
    for v in plane {
        assert_eq!(v[0], v[1]);
    }
    let klein = builtin::klein(1).unwrap();
    let atlas = fixed_space_atlas(&klein.beta).unwrap();
    let mut dims: Vec<usize> = atlas.spaces.iter().map(|s| s.basis.len()).collect();
    dims.sort();
    assert_eq!(dims, vec![0, 1, 1]);
}

#[test]
fn fiberflat_examples() {
    assert_eq!(fiberflat_diagnostic(1, 2, 3, true, true).unwrap().verdict, FiberflatVerdict::NotFiberflat);
    assert_eq!(fiberflat_diagnostic(2, 3, 3, true, true).unwrap().verdict, FiberflatVerdict::NotFiberflat);
    assert_eq!(fiberflat_diagnostic(2, 2, 3, true, true).unwrap().verdict, FiberflatVerdict::CriterionInapplicable);
    assert_eq!(fiberflat_diagnostic(1, 2, 3, false, true).unwrap().verdict, FiberflatVerdict::CriterionInapplicable);
    assert!(fiberflat_diagnostic(3, 2, 3, true, true).is_err());
}
