//! Dense matrices over Q(ζ_n).

use super::{ArithError, CycNum};
use std::fmt;

/// Row-major dense matrix with entries in Q(ζ_level).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    level: u32,
    entries: Vec<CycNum>,
}

impl CycMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<CycNum>) -> Result<CycMatrix, ArithError> {
        if entries.len() != rows * cols || entries.is_empty() {
            return Err(ArithError::Shape(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        let level = entries[0].level();
        if let Some(bad) = entries.iter().find(|e| e.level() != level) {
            return Err(ArithError::LevelMismatch(level, bad.level()));
        }
        Ok(CycMatrix {
            rows,
            cols,
            level,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Result<CycMatrix, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(ArithError::Shape("ragged rows".into()));
        }
        CycMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer matrix embedded at the given level.
    pub fn from_ints(level: u32, rows: &[&[i64]]) -> CycMatrix {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&x| CycNum::from_int(level, x)).collect())
            .collect();
        CycMatrix::from_rows(data).expect("well-formed integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize, level: u32) -> CycMatrix {
        CycMatrix {
            rows,
            cols,
            level,
            entries: vec![CycNum::zero(level); rows * cols],
        }
    }

    pub fn identity(n: usize, level: u32) -> CycMatrix {
        let mut m = CycMatrix::zeros(n, n, level);
        for i in 0..n {
            m.entries[i * n + i] = CycNum::one(level);
        }
        m
    }

    pub fn diag(values: Vec<CycNum>) -> CycMatrix {
        let n = values.len();
        let level = values[0].level();
        let mut m = CycMatrix::zeros(n, n, level);
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * n + i] = v;
        }
        m
    }

    /// Block diagonal matrix with the given square blocks.
    pub fn block_diag(blocks: &[&CycMatrix]) -> Result<CycMatrix, ArithError> {
        let level = blocks[0].level;
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = CycMatrix::zeros(n, n, level);
        let mut off = 0;
        for b in blocks {
            if b.level != level {
                return Err(ArithError::LevelMismatch(level, b.level));
            }
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.entries[(off + i) * n + off + j] = b.get(i, j).clone();
                }
            }
            off += b.rows;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Sub-block of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> CycMatrix {
        let mut entries = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for i in r0..r1 {
            entries.extend_from_slice(&self.row(i)[c0..c1]);
        }
        CycMatrix {
            rows: r1 - r0,
            cols: c1 - c0,
            level: self.level,
            entries,
        }
    }

    pub fn mul(&self, other: &CycMatrix) -> Result<CycMatrix, ArithError> {
        if self.cols != other.rows {
            return Err(ArithError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.level != other.level {
            return Err(ArithError::LevelMismatch(self.level, other.level));
        }
        let mut out = CycMatrix::zeros(self.rows, other.cols, self.level);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        other: &CycMatrix,
        f: impl Fn(&CycNum, &CycNum) -> CycNum,
    ) -> Result<CycMatrix, ArithError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ArithError::Shape("entrywise operation on different shapes".into()));
        }
        if self.level != other.level {
            return Err(ArithError::LevelMismatch(self.level, other.level));
        }
        Ok(CycMatrix {
            rows: self.rows,
            cols: self.cols,
            level: self.level,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &CycMatrix) -> Result<CycMatrix, ArithError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &CycMatrix) -> Result<CycMatrix, ArithError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &CycNum) -> CycMatrix {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            level: self.level,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> CycMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        CycMatrix {
            rows: self.cols,
            cols: self.rows,
            level: self.level,
            entries,
        }
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[CycNum]) -> Result<Vec<CycNum>, ArithError> {
        if v.len() != self.cols {
            return Err(ArithError::Shape(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero(self.level);
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    /// Re-expresses the matrix at a multiple of its level.
    pub fn lift(&self, level: u32) -> Result<CycMatrix, ArithError> {
        Ok(CycMatrix {
            rows: self.rows,
            cols: self.cols,
            level,
            entries: self.entries.iter().map(|e| e.lift(level)).collect::<Result<_, _>>()?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// True when every row and column holds exactly one nonzero entry.
    pub fn is_monomial(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut col_used = vec![false; self.cols];
        for i in 0..self.rows {
            let nz: Vec<usize> = (0..self.cols).filter(|&j| !self.get(i, j).is_zero()).collect();
            if nz.len() != 1 || col_used[nz[0]] {
                return false;
            }
            col_used[nz[0]] = true;
        }
        true
    }

    /// Reduced row echelon form and pivot columns. Pivots are the first
    /// nonzero entry met scanning columns left to right.
    pub fn rref(&self) -> (CycMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<CycNum>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![CycNum::zero(self.level); self.cols];
                v[f] = CycNum::one(self.level);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<CycNum, ArithError> {
        if !self.is_square() {
            return Err(ArithError::Shape("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = CycNum::one(self.level);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(CycNum::zero(self.level));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv()?;
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<CycMatrix, ArithError> {
        if !self.is_square() {
            return Err(ArithError::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = CycMatrix::zeros(n, 2 * n, self.level);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, CycNum::one(self.level));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(ArithError::Singular);
        }
        Ok(r.block(0, n, n, 2 * n))
    }

    pub fn pow(&self, e: u64) -> Result<CycMatrix, ArithError> {
        let mut base = self.clone();
        let mut acc = CycMatrix::identity(self.rows, self.level);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> CycNum {
        let mut acc = CycNum::zero(self.level);
        for i in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Coefficients `c_0 = 1, c_1, …, c_n` of det(I − t·M).
    pub fn det_one_minus_t(&self) -> Result<Vec<CycNum>, ArithError> {
        if !self.is_square() {
            return Err(ArithError::Shape("characteristic polynomial of a non-square matrix".into()));
        }
        // Faddeev–LeVerrier: charpoly x^n + a_1 x^{n-1} + … + a_n, and det(I − tM) = Σ a_k t^k.
        let n = self.rows;
        let id = CycMatrix::identity(n, self.level);
        let mut coeffs = vec![CycNum::one(self.level)];
        let mut mk = CycMatrix::zeros(n, n, self.level);
        for k in 1..=n {
            mk = self.mul(&mk)?.add(&id.scale(&coeffs[k - 1]))?;
            let tr = self.mul(&mk)?.trace();
            let a = tr.scale(&super::rat(-1, k as i64));
            coeffs.push(a);
        }
        Ok(coeffs)
    }
}

/// Least `t ≥ 1` with `M^t = I`, searched up to `cap`.
pub fn mat_order(m: &CycMatrix, cap: u64) -> Result<u64, ArithError> {
    if !m.is_square() {
        return Err(ArithError::Shape("order of a non-square matrix".into()));
    }
    if m.det()?.is_zero() {
        return Err(ArithError::Singular);
    }
    let mut p = m.clone();
    for t in 1..=cap {
        if p.is_identity() {
            return Ok(t);
        }
        p = p.mul(m)?;
    }
    Err(ArithError::OrderCap(cap))
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [level {}]", self, self.level)
    }
}
