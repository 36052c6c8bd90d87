//! Finite-dimensional unital Q-algebras given by basis and structure
//! constants, plus the normalized Hochschild (bar) complex used as the
//! homology oracle for small algebras.

use crate::error::{AstkError, Result};
use crate::linalg::ExactMatrix;
use crate::ratio::{format_rat, parse_rat, Rat};
use crate::upoly::UPoly;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// mult[i][j] is the coefficient vector of (basis_i * basis_j).
#[derive(Clone, Debug)]
pub struct FinDimAlgebra {
    pub basis: Vec<String>,
    pub mult: Vec<Vec<Vec<Rat>>>,
    pub unit: Vec<Rat>,
}

impl FinDimAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn new(basis: Vec<String>, mult: Vec<Vec<Vec<Rat>>>, unit: Vec<Rat>) -> Result<Self> {
        let alg = FinDimAlgebra { basis, mult, unit };
        alg.validate()?;
        Ok(alg)
    }

    /// Q itself.
    pub fn base_field() -> Self {
        FinDimAlgebra {
            basis: vec!["1".into()],
            mult: vec![vec![vec![Rat::one()]]],
            unit: vec![Rat::one()],
        }
    }

    /// The dual numbers Q[e]/(e^2).
    pub fn dual_numbers() -> Self {
        let z = Rat::zero;
        let o = Rat::one;
        FinDimAlgebra {
            basis: vec!["1".into(), "e".into()],
            mult: vec![
                vec![vec![o(), z()], vec![z(), o()]],
                vec![vec![z(), o()], vec![z(), z()]],
            ],
            unit: vec![o(), z()],
        }
    }

    /// Q[t]/(t^n - 1) in the monomial basis 1, t, ..., t^{n-1}.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let dim = n;
        let mut mult = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                mult[i][j][(i + j) % n] = Rat::one();
            }
        }
        let mut unit = vec![Rat::zero(); dim];
        unit[0] = Rat::one();
        FinDimAlgebra {
            basis: (0..n).map(|k| if k == 0 { "1".into() } else { format!("t^{k}") }).collect(),
            mult,
            unit,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        if self.mult.len() != n
            || self.mult.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n))
            || self.unit.len() != n
        {
            return Err(AstkError::Invalid("structure tensor shape mismatch".into()));
        }
        for i in 0..n {
            let ei = self.basis_vec(i);
            if self.mul_vec(&self.unit, &ei) != ei || self.mul_vec(&ei, &self.unit) != ei {
                return Err(AstkError::Invalid(format!("unit fails on basis element {i}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ij = self.mult[i][j].clone();
                    let jk = self.mult[j][k].clone();
                    let left = self.mul_vec(&ij, &self.basis_vec(k));
                    let right = self.mul_vec(&self.basis_vec(i), &jk);
                    if left != right {
                        return Err(AstkError::Invalid(format!(
                            "associativity fails on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim()];
        v[i] = Rat::one();
        v
    }

    pub fn mul_vec(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let c = a[i].clone() * b[j].clone();
                for k in 0..n {
                    if !self.mult[i][j][k].is_zero() {
                        out[k] += c.clone() * self.mult[i][j][k].clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `a` in the basis.
    pub fn mult_matrix(&self, a: &[Rat]) -> ExactMatrix {
        let n = self.dim();
        let cols: Vec<Vec<Rat>> = (0..n).map(|j| self.mul_vec(a, &self.basis_vec(j))).collect();
        ExactMatrix::from_cols(cols)
    }

    pub fn pow_vec(&self, a: &[Rat], k: usize) -> Vec<Rat> {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul_vec(&acc, a);
        }
        acc
    }

    /// Minimal polynomial of `a`: least monic p with p(a) = 0, via the first
    /// linear dependence among 1, a, a^2, ...
    pub fn minimal_polynomial(&self, a: &[Rat]) -> UPoly {
        let mut powers: Vec<Vec<Rat>> = vec![self.unit.clone()];
        loop {
            let last = powers.last().unwrap().clone();
            let next = self.mul_vec(&last, a);
            // Solve sum c_i * powers[i] = next.
            let mat = ExactMatrix::from_cols(powers.clone());
            if let Some(sol) = mat.solve(&next) {
                let mut coeffs: Vec<Rat> = sol.into_iter().map(|c| -c).collect();
                coeffs.push(Rat::one());
                return UPoly::from_coeffs(coeffs);
            }
            powers.push(next);
            assert!(powers.len() <= self.dim() + 1, "minimal polynomial search overran dimension");
        }
    }

    /// Evaluate p(a) in the algebra.
    pub fn eval_upoly(&self, p: &UPoly, a: &[Rat]) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); self.dim()];
        for c in p.0.iter().rev() {
            acc = self.mul_vec(&acc, a);
            for (x, u) in acc.iter_mut().zip(&self.unit) {
                *x += c.clone() * u.clone();
            }
        }
        acc
    }
}

// --- JSON schema for `astk split` ----------------------------------------

#[derive(Serialize, Deserialize)]
pub struct AlgebraJson {
    /// Shorthand: Q[t]/(t^n - 1).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    /// multiplication[i][j] = coefficients of basis_i * basis_j, "num/den".
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub multiplication: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unit: Vec<String>,
    /// Optional augmentation functional, one value per basis element.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<Vec<String>>,
}

impl AlgebraJson {
    pub fn build(&self) -> Result<(FinDimAlgebra, Option<Vec<Rat>>)> {
        if let Some(n) = self.cyclic_order {
            if n == 0 {
                return Err(AstkError::Invalid("cyclic_order must be >= 1".into()));
            }
            let alg = FinDimAlgebra::cyclic(n);
            let aug = vec![Rat::one(); n]; // evaluation at t = 1
            return Ok((alg, Some(aug)));
        }
        let parse_vec = |v: &[String]| -> Result<Vec<Rat>> {
            v.iter().map(|s| parse_rat(s).map_err(AstkError::Invalid)).collect()
        };
        let mult: Result<Vec<Vec<Vec<Rat>>>> = self
            .multiplication
            .iter()
            .map(|row| row.iter().map(|v| parse_vec(v)).collect())
            .collect();
        let alg = FinDimAlgebra::new(self.basis.clone(), mult?, parse_vec(&self.unit)?)?;
        let aug = match &self.augmentation {
            Some(a) => Some(parse_vec(a)?),
            None => None,
        };
        Ok((alg, aug))
    }
}

pub fn vec_to_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

// --- Normalized Hochschild (bar) complex ----------------------------------

/// Homology dimensions of the normalized Hochschild complex of `alg`
/// through degree `max_degree`, by exact rank computation.
///
/// C_n = A (x) Abar^{(x)n} with Abar = A / Q*1; the boundary is the usual
/// alternating sum with the cyclic last face.
pub fn bar_homology_dims(alg: &FinDimAlgebra, max_degree: usize) -> Result<Vec<usize>> {
    let n = alg.dim();
    // Complement of the unit line: basis of Abar lifted to A.
    let unit_mat = ExactMatrix::from_cols(vec![alg.unit.clone()]);
    if unit_mat.rank() != 1 {
        return Err(AstkError::Invalid("unit vector is zero".into()));
    }
    let std: Vec<Vec<Rat>> = (0..n).map(|i| alg.basis_vec(i)).collect();
    let kept = crate::linalg::extend_to_independent(&[vec_clone(&alg.unit)], &std);
    let abar: Vec<Vec<Rat>> = kept.iter().map(|&i| std[i].clone()).collect();
    let r = abar.len(); // dim Abar = n - 1

    // Projection A -> Abar coordinates along the unit line: solve
    // a = c*unit + sum x_i abar_i.
    let mut cols = vec![alg.unit.clone()];
    cols.extend(abar.iter().cloned());
    let basis_change = ExactMatrix::from_cols(cols);
    let project = |a: &[Rat]| -> (Rat, Vec<Rat>) {
        let sol = basis_change.solve(a).expect("unit + complement span A");
        (sol[0].clone(), sol[1..].to_vec())
    };

    // Chain module C_k has basis A-basis x Abar-basis^k; index little-endian
    // with slot 0 the A factor.
    let dim_c = |k: usize| n * r.pow(k as u32);
    let need = max_degree + 1;

    let mut boundaries: Vec<ExactMatrix> = Vec::new(); // d_k: C_k -> C_{k-1}, k = 1..=need
    for k in 1..=need {
        let rows = dim_c(k - 1);
        let colsn = dim_c(k);
        let mut mat = ExactMatrix::zeros(rows, colsn);
        // Enumerate basis of C_k: (a_idx, [b_1..b_k]) with b_i in 0..r.
        for col in 0..colsn {
            let mut rest = col;
            let a_idx = rest % n;
            rest /= n;
            let mut bs = Vec::with_capacity(k);
            for _ in 0..k {
                bs.push(rest % r);
                rest /= r;
            }
            let a_vec = alg.basis_vec(a_idx);
            // Face 0: (a * b_1) (x) b_2 ... b_k  -- the product stays in A.
            let mut add_chain =
                |sign: i64, avec: Vec<Rat>, slots: Vec<SlotVec>, mat: &mut ExactMatrix| {
                    // Expand each slot (vector in Abar coords) into indices.
                    push_chain(mat, col, sign, &avec, &slots, n, r, rows);
                };
            {
                let prod = alg.mul_vec(&a_vec, &abar[bs[0]]);
                let slots: Vec<SlotVec> =
                    bs[1..].iter().map(|&b| SlotVec::unit_index(b, r)).collect();
                add_chain(1, prod, slots, &mut mat);
            }
            // Inner faces i = 1..k-1: a (x) ... (b_i * b_{i+1}) ... ; the
            // product is re-expanded in Abar (the unit component dies in Abar).
            for i in 1..k {
                let prod = alg.mul_vec(&abar[bs[i - 1]], &abar[bs[i]]);
                let (_, pbar) = project(&prod);
                let mut slots: Vec<SlotVec> = Vec::with_capacity(k - 1);
                for (pos, &b) in bs.iter().enumerate() {
                    if pos == i - 1 {
                        slots.push(SlotVec::full(pbar.clone()));
                    } else if pos == i {
                        continue;
                    } else {
                        slots.push(SlotVec::unit_index(b, r));
                    }
                }
                let sign = if i % 2 == 0 { 1 } else { -1 };
                add_chain(sign, a_vec.clone(), slots, &mut mat);
            }
            // Last (cyclic) face: (b_k * a) (x) b_1 ... b_{k-1}.
            {
                let prod = alg.mul_vec(&abar[bs[k - 1]], &a_vec);
                let slots: Vec<SlotVec> =
                    bs[..k - 1].iter().map(|&b| SlotVec::unit_index(b, r)).collect();
                let sign = if k % 2 == 0 { 1 } else { -1 };
                add_chain(sign, prod, slots, &mut mat);
            }
        }
        boundaries.push(mat);
    }

    // Verify d o d = 0 on the range we use.
    for k in 1..boundaries.len() {
        if !boundaries[k - 1].matmul(&boundaries[k]).is_zero() {
            return Err(AstkError::Integrity("bar differential does not square to zero".into()));
        }
    }

    let mut dims = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        let nullity = if k == 0 {
            dim_c(0)
        } else {
            dim_c(k) - boundaries[k - 1].rank()
        };
        let img_rank = boundaries[k].rank();
        dims.push(nullity - img_rank);
    }
    Ok(dims)
}

enum SlotVec {
    Index(usize),
    Full(Vec<Rat>),
}

impl SlotVec {
    fn unit_index(i: usize, _r: usize) -> Self {
        SlotVec::Index(i)
    }
    fn full(v: Vec<Rat>) -> Self {
        SlotVec::Full(v)
    }
}

fn push_chain(
    mat: &mut ExactMatrix,
    col: usize,
    sign: i64,
    avec: &[Rat],
    slots: &[SlotVec],
    n: usize,
    r: usize,
    _rows: usize,
) {
    let sgn = Rat::from_integer(sign.into());
    // Expand the product of slot vectors into index combinations.
    let mut combos: Vec<(usize, Rat, usize)> = vec![(0usize, Rat::one(), 1usize)]; // (index acc, coeff, stride)
    let mut stride = n;
    for slot in slots {
        let mut next = Vec::new();
        match slot {
            SlotVec::Index(i) => {
                for (idx, c, _) in &combos {
                    next.push((idx + i * stride, c.clone(), 0));
                }
            }
            SlotVec::Full(v) => {
                for (b, cv) in v.iter().enumerate() {
                    if cv.is_zero() {
                        continue;
                    }
                    for (idx, c, _) in &combos {
                        next.push((idx + b * stride, c.clone() * cv.clone(), 0));
                    }
                }
            }
        }
        combos = next;
        stride *= r;
    }
    for (a_idx, ac) in avec.iter().enumerate() {
        if ac.is_zero() {
            continue;
        }
        for (idx, c, _) in &combos {
            let row = a_idx + idx;
            let v = mat.get(row, col).clone() + sgn.clone() * ac.clone() * c.clone();
            mat.set(row, col, v);
        }
    }
}

fn vec_clone(v: &[Rat]) -> Vec<Rat> {
    v.to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat_int;

    #[test]
    fn cyclic_algebra_is_associative() {
        for n in 1..=6 {
            FinDimAlgebra::cyclic(n).validate().unwrap();
            assert!(FinDimAlgebra::cyclic(n).is_commutative());
        }
    }

    #[test]
    fn dual_numbers_minimal_polynomials() {
        let a = FinDimAlgebra::dual_numbers();
        a.validate().unwrap();
        let eps = a.basis_vec(1);
        let m = a.minimal_polynomial(&eps);
        // eps^2 = 0: minimal polynomial x^2.
        assert_eq!(m, UPoly::from_coeffs(vec![rat_int(0), rat_int(0), rat_int(1)]));
        assert!(a.eval_upoly(&m, &eps).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn min_poly_of_t_in_cyclic() {
        let a = FinDimAlgebra::cyclic(5);
        let t = a.basis_vec(1);
        assert_eq!(a.minimal_polynomial(&t), UPoly::xn_minus_one(5));
    }

    #[test]
    fn bar_homology_of_base_field() {
        let dims = bar_homology_dims(&FinDimAlgebra::base_field(), 4).unwrap();
        assert_eq!(dims, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn bar_homology_of_dual_numbers() {
        let dims = bar_homology_dims(&FinDimAlgebra::dual_numbers(), 4).unwrap();
        assert_eq!(dims, vec![2, 1, 1, 1, 1]);
    }
}
