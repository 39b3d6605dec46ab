//! Named group actions used by the gallery and the tests.

use crate::arith::{CycMatrix, CycNum};
use crate::group::{close_group, GroupError, MatrixGroup, Representation, DEFAULT_GROUP_CAP};
use crate::toric::{AbelianGrading, ToricError};
use std::sync::Arc;

/// A group action β on X variables with an optional ρ on W variables.
#[derive(Debug, Clone)]
pub struct Builtin {
    pub name: String,
    pub beta: Representation,
    pub rho: Option<Representation>,
    pub grading: Option<AbelianGrading>,
    /// A complete list of irreducible representations, when known.
    pub irreducibles: Vec<Representation>,
}

impl Builtin {
    pub fn group(&self) -> &Arc<MatrixGroup> {
        self.beta.group()
    }

    /// Same group and β with a different ρ.
    pub fn with_rho(&self, name: &str, rho: Option<Representation>) -> Builtin {
        Builtin {
            name: name.to_string(),
            rho,
            ..self.clone()
        }
    }
}

/// Diagonal action of an abelian grading, with all its characters as irreducibles.
pub fn toric(name: &str, grading: AbelianGrading) -> Builtin {
    let group = grading.group();
    let irreducibles = grading
        .elements()
        .iter()
        .map(|l| grading.character(&group, l))
        .collect();
    Builtin {
        name: name.to_string(),
        beta: grading.beta(&group),
        rho: grading.rho(&group),
        grading: Some(grading),
        irreducibles,
    }
}

/// Z/k acting on X by ζ and on W by ζ^ℓ.
pub fn cyclicone(k: u64, l: i64) -> Result<Builtin, ToricError> {
    Ok(toric(&format!("cyclicone-{}-{}", k, l), AbelianGrading::cyclic(k, &[1], &[l])?))
}

/// Z/k acting on (X, Y) by (ζ, ζ^{-1}) and on W by ζ^ℓ.
pub fn a_singularity(k: u64, l: i64) -> Result<Builtin, ToricError> {
    Ok(toric(&format!("asing-{}-{}", k, l), AbelianGrading::cyclic(k, &[1, -1], &[l])?))
}

/// Z/2 negating X and Y, sign on W.
pub fn toric11() -> Builtin {
    toric("toric11", AbelianGrading::cyclic(2, &[1, 1], &[1]).expect("valid weights"))
}

/// Z/2 × Z/2 negating X and Y componentwise; W negated by the first
/// factor (variant 1) or by the sum of both (variant 2).
pub fn klein(variant: u8) -> Result<Builtin, ToricError> {
    let w = match variant {
        1 => vec![1, 0],
        2 => vec![1, 1],
        _ => return Err(ToricError::Invalid(format!("klein variant {} is not 1 or 2", variant))),
    };
    Ok(toric(
        &format!("klein-{}", variant),
        AbelianGrading::new(vec![2, 2], vec![vec![1, 0], vec![0, 1]], vec![w])?,
    ))
}

/// Z/4 acting by diag(−1, i) on X and by i on W.
pub fn cyclic4() -> Builtin {
    toric("cyclic4", AbelianGrading::cyclic(4, &[2, 1], &[1]).expect("valid weights"))
}

pub fn permutation_matrix(perm: &[usize], level: u32) -> CycMatrix {
    let n = perm.len();
    let mut m = CycMatrix::zeros(n, n, level);
    for (i, &p) in perm.iter().enumerate() {
        m.set(p, i, CycNum::one(level));
    }
    m
}

/// S_n permuting n coordinates, generated by adjacent transpositions.
pub fn symmetric_group(n: usize) -> Result<Arc<MatrixGroup>, GroupError> {
    if n < 2 {
        return Err(GroupError::NoGenerators);
    }
    let gens: Vec<CycMatrix> = (0..n - 1)
        .map(|i| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            permutation_matrix(&perm, 1)
        })
        .collect();
    Ok(Arc::new(close_group(&gens, DEFAULT_GROUP_CAP)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymRho {
    Sign,
    Natural,
    Trivial,
    None,
}

/// S_n on n variables with ρ among sign, natural, trivial (one W) or none.
pub fn sym(n: usize, rho: SymRho) -> Result<Builtin, GroupError> {
    let group = symmetric_group(n)?;
    let beta = Representation::natural(group.clone());
    let sign = Representation::sign(group.clone())?;
    let rho_rep = match rho {
        SymRho::Sign => Some(sign.clone()),
        SymRho::Natural => Some(beta.clone()),
        SymRho::Trivial => Some(Representation::trivial(group.clone(), 1)),
        SymRho::None => None,
    };
    let irreducibles = if n == 3 {
        let standard = Representation::from_generator_images(
            group.clone(),
            &[
                CycMatrix::from_ints(1, &[&[0, 1], &[1, 0]]),
                CycMatrix::from_ints(1, &[&[1, -1], &[0, -1]]),
            ],
        )?;
        vec![Representation::trivial(group.clone(), 1), sign, standard]
    } else {
        Vec::new()
    };
    let tag = match rho {
        SymRho::Sign => "sign",
        SymRho::Natural => "natural",
        SymRho::Trivial => "trivial",
        SymRho::None => "none",
    };
    Ok(Builtin {
        name: format!("sym{}-{}", n, tag),
        beta,
        rho: rho_rep,
        grading: None,
        irreducibles,
    })
}

/// S_3 as the reflection group of the plane, with ρ = det when requested.
pub fn sym3_plane(with_det: bool) -> Builtin {
    let group = Arc::new(
        close_group(
            &[
                CycMatrix::from_ints(1, &[&[0, 1], &[1, 0]]),
                CycMatrix::from_ints(1, &[&[1, -1], &[0, -1]]),
            ],
            DEFAULT_GROUP_CAP,
        )
        .expect("finite group"),
    );
    let beta = Representation::natural(group.clone());
    let det = Representation::det(&beta).expect("square images");
    let irreducibles = vec![Representation::trivial(group, 1), det.clone(), beta.clone()];
    Builtin {
        name: if with_det { "sym3-plane-det".into() } else { "sym3-plane".into() },
        rho: with_det.then_some(det),
        beta,
        grading: None,
        irreducibles,
    }
}

/// Z/k acting on one X variable by ζ and regularly on k W variables.
pub fn regular_cyclic(k: u32) -> Builtin {
    let grading = AbelianGrading::cyclic(k as u64, &[1], &[]).expect("valid weights");
    let mut b = toric(&format!("regular-cyclic-{}", k), grading);
    b.rho = Some(Representation::regular(b.group().clone()));
    b.grading = None;
    b
}

/// Small instances of every family, for property and cross-oracle tests.
pub fn standard_builtins() -> Vec<Builtin> {
    vec![
        cyclicone(2, 1).unwrap(),
        cyclicone(3, 1).unwrap(),
        cyclicone(3, 2).unwrap(),
        cyclicone(5, 2).unwrap(),
        cyclicone(5, 3).unwrap(),
        a_singularity(2, 1).unwrap(),
        toric11(),
        klein(1).unwrap(),
        klein(2).unwrap(),
        cyclic4(),
        sym(3, SymRho::Sign).unwrap(),
        sym(3, SymRho::Natural).unwrap(),
        sym3_plane(true),
        regular_cyclic(3),
        sym(3, SymRho::None).unwrap(),
    ]
}
