//! Smith normal form over the integers, with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `p · a · q = diag`, with `p` and `q` unimodular.
#[derive(Debug, Clone)]
pub struct Snf {
    pub p: IntMatrix,
    pub q: IntMatrix,
    /// Diagonal entries, length `min(rows, cols)`, each dividing the next.
    pub diag: Vec<BigInt>,
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    let (src_row, dst_row) = if dst < src {
        let (a, b) = m.split_at_mut(src);
        (&b[0], &mut a[dst])
    } else {
        let (a, b) = m.split_at_mut(dst);
        (&a[src], &mut b[0])
    };
    for (d, s) in dst_row.iter_mut().zip(src_row) {
        *d += f * s;
    }
}

fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        let s = row[src].clone();
        row[dst] += f * s;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

pub fn smith_normal_form(a: &[Vec<BigInt>], cols: usize) -> Snf {
    let rows = a.len();
    let mut m: IntMatrix = a.to_vec();
    let mut p = identity(rows);
    let mut q = identity(cols);
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            m.swap(t, bi);
            p.swap(t, bi);
            swap_cols(&mut m, t, bj);
            swap_cols(&mut q, t, bj);
            let mut clean = true;
            for i in t + 1..rows {
                let f = -(&m[i][t] / &m[t][t]);
                row_axpy(&mut m, i, t, &f);
                row_axpy(&mut p, i, t, &f);
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..cols {
                let f = -(&m[t][j] / &m[t][t]);
                col_axpy(&mut m, j, t, &f);
                col_axpy(&mut q, j, t, &f);
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = m[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    row_axpy(&mut m, t, i, &BigInt::one());
                    row_axpy(&mut p, t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut() {
                *x = -x.clone();
            }
            for x in p[t].iter_mut() {
                *x = -x.clone();
            }
        }
        diag.push(m[t][t].clone());
    }
    Snf { p, q, diag }
}

/// Invariant factors of `Z^cols / rowspan(relations)`, one per column
/// (ones for trivial summands, zeros for free summands).
pub fn cokernel_factors(relations: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let snf = smith_normal_form(relations, cols);
    let mut out = snf.diag;
    out.resize(cols, BigInt::zero());
    out
}

/// Integer row vector `c` with `c · gens = target`, if one exists.
pub fn solve_row_combination(gens: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let cols = target.len();
    if gens.is_empty() {
        return target.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    let snf = smith_normal_form(gens, cols);
    // c·A = h  ⇔  (c·P⁻¹)·D = h·Q
    let hq: Vec<BigInt> = (0..cols)
        .map(|j| target.iter().zip(&snf.q).map(|(h, row)| h * &row[j]).sum())
        .collect();
    let rows = gens.len();
    let mut y = vec![BigInt::zero(); rows];
    for (j, v) in hq.iter().enumerate() {
        let d = snf.diag.get(j).cloned().unwrap_or_default();
        if d.is_zero() {
            if !v.is_zero() {
                return None;
            }
        } else {
            let (quo, rem) = v.div_rem(&d);
            if !rem.is_zero() {
                return None;
            }
            y[j] = quo;
        }
    }
    let c = (0..rows)
        .map(|i| y.iter().zip(&snf.p).map(|(yk, prow)| yk * &prow[i]).sum())
        .collect();
    Some(c)
}

pub fn to_int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}
