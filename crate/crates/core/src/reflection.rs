//! Pseudo-reflections, reflection subgroups, mirrors and fundamental groups
//! of regular loci as finite quotients.

use crate::arith::{CycMatrix, CycNum};
use crate::group::{AbstractQuotient, GroupError, Representation, Subgroup};
use crate::poly::{Monomial, Poly};

/// `g ≠ I` and `g − I` has rank one.
pub fn is_reflection(g: &CycMatrix) -> bool {
    if !g.is_square() || g.is_identity() {
        return false;
    }
    let id = CycMatrix::identity(g.rows(), g.level());
    g.sub(&id).expect("square").rank() == 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionReport {
    /// Elements whose image is a pseudo-reflection.
    pub reflections: Vec<usize>,
    /// Preimage of the subgroup generated by the reflections of the image.
    pub refl_subgroup: Subgroup,
    pub is_small: bool,
    pub is_reflection_group: bool,
    pub kernel: Subgroup,
}

/// Elements of `within` acting as pseudo-reflections under `r`.
pub fn reflections_in(r: &Representation, within: &Subgroup) -> Vec<usize> {
    within
        .members()
        .iter()
        .copied()
        .filter(|&g| is_reflection(r.image(g)))
        .collect()
}

/// True when `r` restricted to `sub` has image generated by its pseudo-reflections.
pub fn is_reflection_group_on(r: &Representation, sub: &Subgroup) -> bool {
    let group = r.group();
    let kernel = group.intersect(&r.kernel(), sub);
    let mut gens = reflections_in(r, sub);
    gens.extend_from_slice(kernel.members());
    group.generated_subgroup(&gens) == *sub
}

pub fn reflection_report(r: &Representation) -> ReflectionReport {
    let group = r.group();
    let reflections = reflections_in(r, &group.whole());
    let kernel = r.kernel();
    let mut gens = reflections.clone();
    gens.extend_from_slice(kernel.members());
    let refl_subgroup = group.generated_subgroup(&gens);
    assert!(
        group.is_normal(&refl_subgroup),
        "reflection subgroup must be normal"
    );
    ReflectionReport {
        is_small: reflections.is_empty(),
        is_reflection_group: refl_subgroup.order() == group.order(),
        reflections,
        refl_subgroup,
        kernel,
    }
}

/// G / G_refl for a faithful representation.
pub fn fundamental_group(r: &Representation) -> Result<AbstractQuotient, GroupError> {
    if !r.is_faithful() {
        return Err(GroupError::NotFaithful);
    }
    let report = reflection_report(r);
    r.group().quotient(&report.refl_subgroup)
}

/// The surjection G/G_{β×ρ refl} → G/G_{β refl}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1Surjection {
    pub total: AbstractQuotient,
    pub base: AbstractQuotient,
    /// Image in `base` of each coset of `total`.
    pub map: Vec<usize>,
}

pub fn pi1_surjection(beta: &Representation, rho: &Representation) -> Result<Pi1Surjection, GroupError> {
    if !beta.is_faithful() {
        return Err(GroupError::NotFaithful);
    }
    let product = Representation::product(beta, rho)?;
    let total = fundamental_group(&product)?;
    let base = fundamental_group(beta)?;
    let map: Vec<usize> = total
        .representatives
        .iter()
        .map(|&g| base.coset_of[g])
        .collect();
    for a in 0..total.order {
        for b in 0..total.order {
            assert_eq!(
                map[total.table[a][b]],
                base.table[map[a]][map[b]],
                "coset map must be a homomorphism"
            );
        }
    }
    let mut hit = vec![false; base.order];
    for &x in &map {
        hit[x] = true;
    }
    assert!(hit.iter().all(|&h| h), "coset map must be surjective");
    Ok(Pi1Surjection { total, base, map })
}

/// A reflecting hyperplane `L = 0` with the order of its pointwise stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mirror {
    /// Coefficients of the linear form, first nonzero coefficient 1.
    pub form: Vec<CycNum>,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorData {
    pub mirrors: Vec<Mirror>,
}

impl MirrorData {
    pub fn discriminant_exponents(&self) -> Vec<usize> {
        self.mirrors.iter().map(|m| m.order).collect()
    }

    /// Π L_i^{ν_i}, expanded.
    pub fn discriminant(&self, nvars: usize, level: u32) -> Poly {
        let mut acc = Poly::one(nvars, level);
        for mirror in &self.mirrors {
            let form = Poly::from_terms(
                nvars,
                level,
                mirror
                    .form
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (Monomial::var(nvars, i), c.clone())),
            );
            acc = acc.mul(&form.pow(mirror.order as u32));
        }
        acc
    }
}

pub fn mirror_data(r: &Representation) -> Result<MirrorData, GroupError> {
    if !r.is_faithful() {
        return Err(GroupError::NotFaithful);
    }
    let level = r.level();
    let id = CycMatrix::identity(r.dim(), level);
    let mut mirrors: Vec<Mirror> = Vec::new();
    for g in reflections_in(r, &r.group().whole()) {
        let diff = r.image(g).sub(&id)?;
        let row = (0..diff.rows())
            .map(|i| diff.row(i))
            .find(|row| row.iter().any(|c| !c.is_zero()))
            .expect("reflection has a nonzero row");
        let lead = row.iter().find(|c| !c.is_zero()).unwrap().inv()?;
        let form: Vec<CycNum> = row.iter().map(|c| c * &lead).collect();
        if mirrors.iter().any(|m| m.form == form) {
            continue;
        }
        let hyperplane = CycMatrix::new(1, form.len(), form.clone())?.nullspace();
        let order = r
            .images()
            .iter()
            .filter(|h| {
                let diff = h.sub(&id).expect("square");
                hyperplane
                    .iter()
                    .all(|v| diff.apply(v).expect("dimension").iter().all(|x| x.is_zero()))
            })
            .count();
        mirrors.push(Mirror { form, order });
    }
    Ok(MirrorData { mirrors })
}
