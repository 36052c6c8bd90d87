//! Monomials (exponent vectors, negatives allowed in Laurent mode) and term orders.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Exponent vector, one slot per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sum of absolute exponent values; the degree used for Laurent windows.
    pub fn abs_degree(&self) -> i64 {
        self.0.iter().map(|e| e.abs()).sum()
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&e| e < 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Exact quotient self / other when it has nonnegative exponents.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            let d = a - b;
            if d < 0 {
                return None;
            }
            out.push(d);
        }
        Some(Monomial(out))
    }

    /// Componentwise quotient, negatives allowed (Laurent division).
    pub fn div_laurent(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    GradedReverseLex,
    Lex,
    /// Blocks compared left to right, graded-reverse-lex inside each block.
    Elimination { block_sizes: Vec<usize> },
}

/// A monomial order: kind plus a variable permutation applied before comparison.
///
/// `permutation[i]` is the variable slot read as the i-th comparison position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub permutation: Vec<usize>,
}

impl TermOrder {
    pub fn grevlex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::GradedReverseLex, permutation: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        TermOrder { kind: OrderKind::Lex, permutation: (0..nvars).collect() }
    }

    /// Eliminates the first `head` permuted variables: a block order
    /// [head | rest], graded-reverse-lex inside each block.
    pub fn elimination(nvars: usize, head: usize) -> Self {
        assert!(head <= nvars);
        TermOrder {
            kind: OrderKind::Elimination { block_sizes: vec![head, nvars - head] },
            permutation: (0..nvars).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.permutation.len()
    }

    fn permuted<'a>(&self, m: &'a Monomial) -> Vec<i64> {
        self.permutation.iter().map(|&i| m.0[i]).collect()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.permutation.len());
        let pa = self.permuted(a);
        let pb = self.permuted(b);
        match &self.kind {
            OrderKind::Lex => pa.cmp(&pb),
            OrderKind::GradedReverseLex => grevlex_cmp(&pa, &pb),
            OrderKind::Elimination { block_sizes } => {
                let mut start = 0;
                for &len in block_sizes {
                    let ord = grevlex_cmp(&pa[start..start + len], &pb[start..start + len]);
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    start += len;
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn grevlex_cmp(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // Equal degree: the last nonzero entry of a-b decides; negative means larger.
    for i in (0..a.len()).rev() {
        let d = a[i] - b[i];
        if d != 0 {
            return if d < 0 { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[i64]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_classic() {
        let o = TermOrder::grevlex(3);
        // x > y > z and x*z < y^2 under grevlex.
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // Higher total degree always wins.
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_order() {
        let o = TermOrder::lex(2);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn elimination_blocks() {
        // Eliminate the first variable: anything containing it beats anything that doesn't.
        let o = TermOrder::elimination(3, 1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), grevlex_cmp(&[2, 0], &[1, 1]));
    }

    #[test]
    fn multiplicative() {
        let o = TermOrder::grevlex(2);
        let (a, b, w) = (m(&[2, 0]), m(&[1, 1]), m(&[3, 1]));
        let ord = o.cmp(&a, &b);
        assert_eq!(o.cmp(&a.mul(&w), &b.mul(&w)), ord);
    }

    #[test]
    fn monomial_arith() {
        assert_eq!(m(&[2, 1]).mul(&m(&[0, 3])), m(&[2, 4]));
        assert_eq!(m(&[2, 1]).try_div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[2, 1]).try_div(&m(&[3, 0])), None);
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert!(m(&[1, 0]).coprime(&m(&[0, 2])));
        assert_eq!(m(&[-2, 1]).abs_degree(), 3);
    }
}
