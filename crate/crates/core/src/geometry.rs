//! Pointwise diagnostics of the quotient scheme over the quotient of the X space.

use crate::arith::{CycMatrix, CycNum};
use crate::group::{GroupError, Representation, Subgroup};
use crate::reflection::{is_reflection_group_on, reflection_report};
use serde::Serialize;

/// Attached to verdicts whose group-theoretic criterion is established over the complex numbers.
pub const COMPLEX_NOTE: &str = "criterion proven for K = C";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("the X representation must be faithful")]
    NotFaithful,
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

fn require_faithful(beta: &Representation) -> Result<(), GeometryError> {
    if beta.is_faithful() {
        Ok(())
    } else {
        Err(GeometryError::NotFaithful)
    }
}

/// The geometric fiber as A^m modulo ρ restricted to the stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricFiber {
    pub m: usize,
    /// Images ρ(h) for h in the stabilizer, in element order.
    pub restricted_images: Vec<CycMatrix>,
    /// Order of ρ(H).
    pub image_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub point: Vec<CycNum>,
    pub stabilizer: Subgroup,
    pub rho_restricted_trivial: bool,
    pub reduced: bool,
    pub geometric_fiber: GeometricFiber,
}

impl FiberReport {
    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer.order()
    }
}

pub fn fiber_report(beta: &Representation, rho: &Representation, q: &[CycNum]) -> Result<FiberReport, GeometryError> {
    require_faithful(beta)?;
    let stabilizer = beta.stabilizer(q)?;
    let restricted_images: Vec<CycMatrix> = stabilizer.members().iter().map(|&h| rho.image(h).clone()).collect();
    let mut distinct = restricted_images.clone();
    distinct.sort_by_key(|m| m.to_string());
    distinct.dedup();
    let trivial = rho.is_trivial_on(&stabilizer);
    Ok(FiberReport {
        point: q.to_vec(),
        rho_restricted_trivial: trivial,
        reduced: trivial,
        geometric_fiber: GeometricFiber {
            m: rho.dim(),
            image_order: distinct.len(),
            restricted_images,
        },
        stabilizer,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityReport {
    pub contains_singular: bool,
    pub all_singular: bool,
    pub zero_section_singular: bool,
    pub stabilizer: Subgroup,
    /// Stab(Q) ∩ ker ρ.
    pub stabilizer_in_kernel: Subgroup,
    pub note: &'static str,
}

pub fn singularity_report(
    beta: &Representation,
    rho: &Representation,
    q: &[CycNum],
) -> Result<SingularityReport, GeometryError> {
    require_faithful(beta)?;
    let group = beta.group();
    let product = Representation::product(beta, rho)?;
    let stabilizer = beta.stabilizer(q)?;
    let stabilizer_in_kernel = group.intersect(&stabilizer, &rho.kernel());
    let contains_singular = !is_reflection_group_on(&product, &stabilizer);
    let all_singular = !is_reflection_group_on(beta, &stabilizer_in_kernel);
    let zero = vec![CycNum::zero(rho.level()); rho.dim()];
    let zero_section_singular = point_singular(beta, rho, q, &zero)?;
    assert!(!all_singular || contains_singular);
    assert_eq!(zero_section_singular, contains_singular);
    Ok(SingularityReport {
        contains_singular,
        all_singular,
        zero_section_singular,
        stabilizer,
        stabilizer_in_kernel,
        note: COMPLEX_NOTE,
    })
}

/// Whether the point (Q, v) of the quotient scheme is singular.
pub fn point_singular(beta: &Representation, rho: &Representation, q: &[CycNum], v: &[CycNum]) -> Result<bool, GeometryError> {
    require_faithful(beta)?;
    let group = beta.group();
    let product = Representation::product(beta, rho)?;
    let stab = group.intersect(&beta.stabilizer(q)?, &rho.stabilizer(v)?);
    Ok(!is_reflection_group_on(&product, &stab))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSpace {
    pub element: usize,
    /// Basis of ker(β(g) − I) as column vectors.
    pub basis: Vec<Vec<CycNum>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedSpaceAtlas {
    pub spaces: Vec<FixedSpace>,
    /// No pseudo-reflections, so the images of these spaces form the singular locus.
    pub is_small: bool,
    pub note: &'static str,
}

pub fn fixed_space_atlas(beta: &Representation) -> Result<FixedSpaceAtlas, GeometryError> {
    require_faithful(beta)?;
    let id = CycMatrix::identity(beta.dim(), beta.level());
    let spaces = (1..beta.group().order())
        .map(|g| {
            let diff = beta.image(g).sub(&id).expect("square");
            FixedSpace {
                element: g,
                basis: diff.nullspace(),
            }
        })
        .collect();
    Ok(FixedSpaceAtlas {
        spaces,
        is_small: reflection_report(beta).is_small,
        note: COMPLEX_NOTE,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiberflatVerdict {
    NotFiberflat,
    CriterionInapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberflatReport {
    pub verdict: FiberflatVerdict,
    pub rank: u32,
    pub mu: u32,
    pub d: u32,
    /// Caller-asserted hypotheses, echoed.
    pub isolated_nonfree_locus: bool,
    pub sym_irreducible: bool,
}

/// A module of rank r with μ generators on a d-dimensional base is not fiberflat
/// when d ≥ 3, r < μ ≤ r + d − 2 and both hypotheses hold.
pub fn fiberflat_diagnostic(
    rank: u32,
    mu: u32,
    d: u32,
    isolated_nonfree_locus: bool,
    sym_irreducible: bool,
) -> Result<FiberflatReport, GeometryError> {
    if rank < 1 || d < 1 {
        return Err(GeometryError::Inconsistent("rank and dimension must be positive".into()));
    }
    if mu < rank {
        return Err(GeometryError::Inconsistent(format!("{} generators cannot span rank {}", mu, rank)));
    }
    let applies = d >= 3 && rank < mu && mu + 2 <= rank + d && isolated_nonfree_locus && sym_irreducible;
    Ok(FiberflatReport {
        verdict: if applies {
            FiberflatVerdict::NotFiberflat
        } else {
            FiberflatVerdict::CriterionInapplicable
        },
        rank,
        mu,
        d,
        isolated_nonfree_locus,
        sym_irreducible,
    })
}
