//! Exact rational linear algebra: fraction-free Bareiss elimination with
//! rational back-substitution, kernels/ranks/solves, cochain-complex
//! cohomology, and a sparse matrix type for large structured maps.

use crate::error::AstkError;
use crate::ratio::{common_denominator, Int, Rat};
use num::traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: Vec<Vec<Rat>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn matmul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows);
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).clone() + a.clone() * b.clone();
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a.clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Clear denominators row by row, giving the integer matrix Bareiss runs on.
    fn to_int_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let den = common_denominator(&row.iter().collect::<Vec<_>>());
                row.iter()
                    .map(|v| (v.clone() * Rat::from_integer(den.clone())).to_integer())
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        bareiss_echelon(self.to_int_rows()).1.len()
    }

    /// Basis of the right kernel {v : A v = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (ech, pivots) = bareiss_echelon(self.to_int_rows());
        let rank = pivots.len();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &c in &pivots {
                s[c] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            // Back-substitute pivot rows bottom-up (rational phase).
            for r in (0..rank).rev() {
                let p = pivots[r];
                let mut acc = Rat::zero();
                for j in (p + 1)..self.cols {
                    if !ech[r][j].is_zero() && !v[j].is_zero() {
                        acc += Rat::from_integer(ech[r][j].clone()) * v[j].clone();
                    }
                }
                v[p] = -acc / Rat::from_integer(ech[r][p].clone());
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of A x = b, if any.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = ExactMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (ech, pivots) = bareiss_echelon(aug.to_int_rows());
        if pivots.iter().any(|&c| c == self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![Rat::zero(); self.cols];
        for r in (0..pivots.len()).rev() {
            let p = pivots[r];
            let mut acc = Rat::from_integer(ech[r][self.cols].clone());
            for j in (p + 1)..self.cols {
                if !ech[r][j].is_zero() && !x[j].is_zero() {
                    acc -= Rat::from_integer(ech[r][j].clone()) * x[j].clone();
                }
            }
            x[p] = acc / Rat::from_integer(ech[r][p].clone());
        }
        Some(x)
    }

}

/// Fraction-free Bareiss echelon with column pivoting.
/// Returns the echelon rows and the pivot column indices.
fn bareiss_echelon(mut m: Vec<Vec<Int>>) -> (Vec<Vec<Int>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = Int::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                m[i][j] = num / &prev;
            }
            m[i][c] = Int::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Extend `base` (assumed independent) by those of `candidates` that stay
/// independent; returns indices of the kept candidates.
pub fn extend_to_independent(base: &[Vec<Rat>], candidates: &[Vec<Rat>]) -> Vec<usize> {
    let dim = base
        .first()
        .map(|v| v.len())
        .or_else(|| candidates.first().map(|v| v.len()))
        .unwrap_or(0);
    let mut stack: Vec<Vec<Rat>> = base.to_vec();
    let mut rank = if stack.is_empty() {
        0
    } else {
        ExactMatrix::from_rows(stack.clone()).rank()
    };
    let mut kept = Vec::new();
    for (idx, cand) in candidates.iter().enumerate() {
        assert_eq!(cand.len(), dim);
        stack.push(cand.clone());
        let new_rank = ExactMatrix::from_rows(stack.clone()).rank();
        if new_rank > rank {
            rank = new_rank;
            kept.push(idx);
        } else {
            stack.pop();
        }
    }
    kept
}

/// A cochain complex of finite-dimensional Q-vector spaces:
/// dims d_0..d_M and differentials del^k: degree k -> k+1.
#[derive(Clone, Debug)]
pub struct CochainComplexQ {
    pub dims: Vec<usize>,
    pub diffs: Vec<ExactMatrix>,
}

pub struct CohomologyAt {
    pub dim: usize,
    /// Kernel representatives spanning H^k modulo the image.
    pub representatives: Vec<Vec<Rat>>,
}

impl CochainComplexQ {
    pub fn new(dims: Vec<usize>, diffs: Vec<ExactMatrix>) -> Result<Self, AstkError> {
        if diffs.len() + 1 != dims.len() && !(dims.is_empty() && diffs.is_empty()) {
            return Err(AstkError::Invalid(format!(
                "expected {} differentials for {} levels, got {}",
                dims.len().saturating_sub(1),
                dims.len(),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows != dims[k + 1] || d.cols != dims[k] {
                return Err(AstkError::Invalid(format!(
                    "differential {k} has shape {}x{}, expected {}x{}",
                    d.rows,
                    d.cols,
                    dims[k + 1],
                    dims[k]
                )));
            }
        }
        let cx = CochainComplexQ { dims, diffs };
        cx.check_composition()?;
        Ok(cx)
    }

    fn check_composition(&self) -> Result<(), AstkError> {
        for k in 0..self.diffs.len().saturating_sub(1) {
            if !self.diffs[k + 1].matmul(&self.diffs[k]).is_zero() {
                return Err(AstkError::Integrity(format!(
                    "del^{} o del^{} != 0: malformed complex",
                    k + 1,
                    k
                )));
            }
        }
        Ok(())
    }

    /// dim H^k = nullity(del^k) - rank(del^{k-1}), plus explicit representatives.
    pub fn cohomology(&self, k: usize) -> Result<CohomologyAt, AstkError> {
        if k >= self.dims.len() {
            return Err(AstkError::Invalid(format!(
                "degree {k} out of range (levels 0..{})",
                self.dims.len()
            )));
        }
        let kernel: Vec<Vec<Rat>> = if k < self.diffs.len() {
            self.diffs[k].kernel_basis()
        } else {
            (0..self.dims[k])
                .map(|i| {
                    let mut v = vec![Rat::zero(); self.dims[k]];
                    v[i] = Rat::one();
                    v
                })
                .collect()
        };
        let image: Vec<Vec<Rat>> = if k == 0 {
            Vec::new()
        } else {
            let d = &self.diffs[k - 1];
            let cols: Vec<Vec<Rat>> = (0..d.cols).map(|j| d.col(j)).collect();
            let keep = extend_to_independent(&[], &cols);
            keep.into_iter().map(|j| cols[j].clone()).collect()
        };
        let nullity = kernel.len();
        let rank_im = image.len();
        let dim = nullity - rank_im;
        let kept = extend_to_independent(&image, &kernel);
        let representatives: Vec<Vec<Rat>> = kept.into_iter().map(|i| kernel[i].clone()).collect();
        if representatives.len() != dim {
            return Err(AstkError::Integrity(format!(
                "H^{k}: rank formula gives {dim} but quotient basis has {}",
                representatives.len()
            )));
        }
        Ok(CohomologyAt { dim, representatives })
    }
}

/// Column-sparse matrix over Q; column j lists (row, value) pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, Rat)>>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { rows: n, cols: (0..n).map(|i| vec![(i, Rat::one())]).collect() }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn from_dense(m: &ExactMatrix) -> Self {
        let mut s = Self::zero(m.rows, m.cols);
        for j in 0..m.cols {
            for i in 0..m.rows {
                let v = m.get(i, j);
                if !v.is_zero() {
                    s.cols[j].push((i, v.clone()));
                }
            }
        }
        s
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.rows, self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    fn normalize_col(col: &mut Vec<(usize, Rat)>) {
        col.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Rat)> = Vec::with_capacity(col.len());
        for (i, v) in col.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == i {
                    last.1 += v;
                    continue;
                }
            }
            out.push((i, v));
        }
        out.retain(|(_, v)| !v.is_zero());
        *col = out;
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ncols());
        let mut out = vec![Rat::zero(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            if v[j].is_zero() {
                continue;
            }
            for (i, a) in col {
                out[*i] += a.clone() * v[j].clone();
            }
        }
        out
    }

    /// self o other (apply `other` first).
    pub fn compose(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.ncols(), other.rows);
        let mut cols = Vec::with_capacity(other.ncols());
        for col in &other.cols {
            let mut acc: Vec<(usize, Rat)> = Vec::new();
            for (k, v) in col {
                for (i, a) in &self.cols[*k] {
                    acc.push((*i, a.clone() * v.clone()));
                }
            }
            Self::normalize_col(&mut acc);
            cols.push(acc);
        }
        SparseMat { rows: self.rows, cols }
    }

    /// Kronecker product: (self (x) other), tensor-slot convention
    /// column (jA, jB) -> jA * other.ncols + jB.
    pub fn kron(&self, other: &SparseMat) -> SparseMat {
        let mut cols = Vec::with_capacity(self.ncols() * other.ncols());
        for ca in &self.cols {
            for cb in &other.cols {
                let mut col = Vec::with_capacity(ca.len() * cb.len());
                for (ia, va) in ca {
                    for (ib, vb) in cb {
                        col.push((ia * other.rows + ib, va.clone() * vb.clone()));
                    }
                }
                Self::normalize_col(&mut col);
                cols.push(col);
            }
        }
        SparseMat { rows: self.rows * other.rows, cols }
    }

    pub fn scale(&self, c: &Rat) -> SparseMat {
        let cols = self
            .cols
            .iter()
            .map(|col| col.iter().map(|(i, v)| (*i, v.clone() * c.clone())).collect())
            .collect();
        SparseMat { rows: self.rows, cols }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.ncols(), other.ncols());
        let mut cols = Vec::with_capacity(self.ncols());
        for (a, b) in self.cols.iter().zip(&other.cols) {
            let mut col: Vec<(usize, Rat)> = a.iter().cloned().chain(b.iter().cloned()).collect();
            Self::normalize_col(&mut col);
            cols.push(col);
        }
        SparseMat { rows: self.rows, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        for v in &k {
            assert!(a.apply(v).iter().all(|x| x.is_zero()));
        }
        // rank + nullity = cols
        assert_eq!(a.rank() + k.len(), a.cols);
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let x = a.solve(&[rat_int(4), rat_int(6)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(2)]);
        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(b.solve(&[rat_int(0), rat_int(1)]).is_none());
        let x = b.solve(&[rat_int(3), rat_int(3)]).unwrap();
        assert_eq!(b.apply(&x), vec![rat_int(3), rat_int(3)]);
    }

    #[test]
    fn rational_entries() {
        let a = ExactMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 6)]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn cochain_cohomology() {
        // 0 -> Q -0-> Q -> 0 gives H^0 = H^1 = Q... with zero maps;
        // and Q -id-> Q gives H^0 = H^1 = 0.
        let zero = CochainComplexQ::new(vec![1, 1], vec![ExactMatrix::zeros(1, 1)]).unwrap();
        assert_eq!(zero.cohomology(0).unwrap().dim, 1);
        assert_eq!(zero.cohomology(1).unwrap().dim, 1);
        let id = CochainComplexQ::new(vec![1, 1], vec![ExactMatrix::identity(1)]).unwrap();
        assert_eq!(id.cohomology(0).unwrap().dim, 0);
        assert_eq!(id.cohomology(1).unwrap().dim, 0);
    }

    #[test]
    fn cochain_rejects_nonzero_square() {
        let d0 = ExactMatrix::identity(1);
        let d1 = ExactMatrix::identity(1);
        assert!(CochainComplexQ::new(vec![1, 1, 1], vec![d0, d1]).is_err());
    }

    #[test]
    fn sparse_matches_dense() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 1]]);
        let sa = SparseMat::from_dense(&a);
        let sb = SparseMat::from_dense(&b);
        assert_eq!(sa.compose(&sb).to_dense(), a.matmul(&b));
        let kron = sa.kron(&sb);
        assert_eq!(kron.rows, 4);
        assert_eq!(kron.ncols(), 4);
        // (A (x) B) applied to e_{(0,1)} = A e_0 (x) B e_1.
        let mut e = vec![Rat::zero(); 4];
        e[1] = Rat::one();
        let out = kron.apply(&e);
        assert_eq!(out, vec![rat_int(1), rat_int(1), rat_int(3), rat_int(3)]);
    }
}
