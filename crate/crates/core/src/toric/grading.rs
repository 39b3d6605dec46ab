use super::ToricError;
use crate::arith::smith::smith_normal_form;
use crate::arith::{lcm_u64, CycMatrix, CycNum};
use crate::group::{close_group, MatrixGroup, Representation, DEFAULT_GROUP_CAP};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::sync::Arc;

/// A finite abelian group D = Z/k_1 × … × Z/k_r with weights for the X and W variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGrading {
    pub factors: Vec<u64>,
    pub x_weights: Vec<Vec<u64>>,
    pub w_weights: Vec<Vec<u64>>,
}

impl AbelianGrading {
    pub fn new(
        factors: Vec<u64>,
        x_weights: Vec<Vec<i64>>,
        w_weights: Vec<Vec<i64>>,
    ) -> Result<AbelianGrading, ToricError> {
        if factors.iter().any(|&k| k == 0) {
            return Err(ToricError::Invalid("invariant factors must be positive".into()));
        }
        if x_weights.is_empty() {
            return Err(ToricError::Invalid("at least one X variable is required".into()));
        }
        let reduce = |ws: Vec<Vec<i64>>| -> Result<Vec<Vec<u64>>, ToricError> {
            ws.into_iter()
                .map(|w| {
                    if w.len() != factors.len() {
                        return Err(ToricError::Invalid(format!(
                            "weight {:?} has {} components for {} factors",
                            w,
                            w.len(),
                            factors.len()
                        )));
                    }
                    Ok(w.iter()
                        .zip(&factors)
                        .map(|(&a, &k)| a.rem_euclid(k as i64) as u64)
                        .collect())
                })
                .collect()
        };
        let x_weights = reduce(x_weights)?;
        let w_weights = reduce(w_weights)?;
        Ok(AbelianGrading {
            factors,
            x_weights,
            w_weights,
        })
    }

    /// Z/k with integer weights.
    pub fn cyclic(k: u64, x: &[i64], w: &[i64]) -> Result<AbelianGrading, ToricError> {
        AbelianGrading::new(
            vec![k],
            x.iter().map(|&a| vec![a]).collect(),
            w.iter().map(|&a| vec![a]).collect(),
        )
    }

    pub fn d(&self) -> usize {
        self.x_weights.len()
    }

    pub fn m(&self) -> usize {
        self.w_weights.len()
    }

    pub fn nvars(&self) -> usize {
        self.d() + self.m()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Smallest cyclotomic level holding all characters of D.
    pub fn level(&self) -> u32 {
        self.factors.iter().fold(1, |a, &k| lcm_u64(a, k)) as u32
    }

    /// Weight of variable `i`, X variables first.
    pub fn weight(&self, i: usize) -> &[u64] {
        if i < self.d() {
            &self.x_weights[i]
        } else {
            &self.w_weights[i - self.d()]
        }
    }

    /// D-degree of an exponent vector over all d+m variables.
    pub fn degree_of(&self, exps: &[u32]) -> Vec<u64> {
        let mut deg = vec![0u64; self.factors.len()];
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (t, w) in self.weight(i).iter().enumerate() {
                deg[t] = (deg[t] + w * e as u64) % self.factors[t];
            }
        }
        deg
    }

    pub fn is_degree_zero(&self, exps: &[u32]) -> bool {
        self.degree_of(exps).iter().all(|&x| x == 0)
    }

    /// All elements of D in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &k in &self.factors {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..k).map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        out
    }

    pub fn negate(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(&x, &k)| (k - x) % k).collect()
    }

    /// Same D and X weights with different W weights.
    pub fn with_w_weights(&self, w_weights: Vec<Vec<u64>>) -> AbelianGrading {
        AbelianGrading {
            factors: self.factors.clone(),
            x_weights: self.x_weights.clone(),
            w_weights,
        }
    }

    /// True when the X weights generate D.
    pub fn x_part_surjective(&self) -> bool {
        self.quotient_by(&self.x_weights).order() == 1
    }

    /// Grading by D/⟨extra⟩, rewritten in invariant factors.
    pub fn quotient_by(&self, extra: &[Vec<u64>]) -> AbelianGrading {
        let r = self.factors.len();
        let mut rel: Vec<Vec<BigInt>> = Vec::new();
        for (t, &k) in self.factors.iter().enumerate() {
            let mut row = vec![BigInt::from(0); r];
            row[t] = BigInt::from(k);
            rel.push(row);
        }
        for e in extra {
            rel.push(e.iter().map(|&x| BigInt::from(x)).collect());
        }
        let snf = smith_normal_form(&rel, r);
        let keep: Vec<usize> = (0..r).filter(|&i| snf.diag[i] != BigInt::from(1)).collect();
        let factors: Vec<u64> = keep.iter().map(|&i| snf.diag[i].to_u64().unwrap()).collect();
        let map = |w: &Vec<u64>| -> Vec<u64> {
            keep.iter()
                .zip(&factors)
                .map(|(&i, &k)| {
                    let v: BigInt = w.iter().zip(&snf.q).map(|(&a, row)| BigInt::from(a) * &row[i]).sum();
                    let k = BigInt::from(k);
                    (((v % &k) + &k) % &k).to_u64().unwrap()
                })
                .collect()
        };
        AbelianGrading {
            x_weights: self.x_weights.iter().map(map).collect(),
            w_weights: self.w_weights.iter().map(map).collect(),
            factors,
        }
    }

    fn nontrivial_factors(&self) -> Vec<usize> {
        (0..self.factors.len()).filter(|&t| self.factors[t] > 1).collect()
    }

    /// Faithful diagonal model of the character group of D.
    pub fn group(&self) -> Arc<MatrixGroup> {
        let level = self.level();
        let active = self.nontrivial_factors();
        let gens: Vec<CycMatrix> = if active.is_empty() {
            vec![CycMatrix::identity(1, level)]
        } else {
            active
                .iter()
                .map(|&t| {
                    CycMatrix::diag(
                        active
                            .iter()
                            .map(|&s| {
                                let e = if s == t { 1 } else { 0 };
                                CycNum::root_of_unity(level, self.factors[s] as u32, e).unwrap()
                            })
                            .collect(),
                    )
                })
                .collect()
        };
        Arc::new(close_group(&gens, DEFAULT_GROUP_CAP).expect("finite abelian group"))
    }

    fn diagonal_rep(&self, group: &Arc<MatrixGroup>, weights: &[Vec<u64>]) -> Representation {
        let level = self.level();
        let active = self.nontrivial_factors();
        let images: Vec<CycMatrix> = if active.is_empty() {
            vec![CycMatrix::identity(weights.len(), level)]
        } else {
            active
                .iter()
                .map(|&t| {
                    CycMatrix::diag(
                        weights
                            .iter()
                            .map(|w| {
                                CycNum::root_of_unity(level, self.factors[t] as u32, w[t] as i64).unwrap()
                            })
                            .collect(),
                    )
                })
                .collect()
        };
        Representation::from_generator_images(group.clone(), &images).expect("diagonal characters")
    }

    /// Action on the X variables.
    pub fn beta(&self, group: &Arc<MatrixGroup>) -> Representation {
        self.diagonal_rep(group, &self.x_weights)
    }

    /// Action on the W variables, if there are any.
    pub fn rho(&self, group: &Arc<MatrixGroup>) -> Option<Representation> {
        (self.m() > 0).then(|| self.diagonal_rep(group, &self.w_weights))
    }

    /// The one-dimensional representation attached to λ ∈ D.
    pub fn character(&self, group: &Arc<MatrixGroup>, lambda: &[u64]) -> Representation {
        self.diagonal_rep(group, &[lambda.to_vec()])
    }
}
