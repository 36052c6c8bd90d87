//! Dense univariate polynomials over Q: the Euclidean toolkit used by
//! idempotent splitting (minimal polynomials, Bezout coefficients,
//! cyclotomic factors) and by the rational-series model.

use crate::ratio::{Int, Rat};
use num::traits::{One, Signed, Zero};
use std::fmt;

/// Coefficients in ascending degree; the top coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(pub Vec<Rat>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![Rat::one()])
    }

    pub fn x() -> Self {
        UPoly(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = UPoly(vec![c]);
        p.normalize();
        p
    }

    pub fn from_coeffs(cs: Vec<Rat>) -> Self {
        let mut p = UPoly(cs);
        p.normalize();
        p
    }

    /// x^n - 1
    pub fn xn_minus_one(n: usize) -> Self {
        let mut cs = vec![Rat::zero(); n + 1];
        cs[0] = -Rat::one();
        cs[n] = Rat::one();
        UPoly(cs)
    }

    fn normalize(&mut self) {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.0.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut cs = vec![Rat::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            cs[i] += c.clone();
        }
        for (i, c) in other.0.iter().enumerate() {
            cs[i] += c.clone();
        }
        UPoly::from_coeffs(cs)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        UPoly::from_coeffs(self.0.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut cs = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                cs[i + j] += a.clone() * b.clone();
            }
        }
        UPoly::from_coeffs(cs)
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading();
        let mut rem = self.clone();
        let mut quo = vec![Rat::zero(); self.0.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = rem.leading() / lead.clone();
            let shift = dr - dd;
            quo[shift] = c.clone();
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(divisor.0.iter().map(|a| a.clone() * c.clone()));
            rem = rem.sub(&UPoly::from_coeffs(sub));
        }
        (UPoly::from_coeffs(quo), rem)
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&(Rat::one() / self.leading()))
    }

    pub fn derivative(&self) -> UPoly {
        if self.0.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::from_coeffs(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * Rat::from_integer(Int::from(i)))
                .collect(),
        )
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, u, v) with u*self + v*other = g, g monic.
    pub fn extended_gcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (UPoly::zero(), UPoly::zero(), UPoly::zero());
        }
        let lead = r0.leading();
        let inv = Rat::one() / lead;
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn squarefree_part(&self) -> UPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Rational roots of a nonzero polynomial, by the rational root test
    /// on the integer-cleared form.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let mut roots = Vec::new();
        if self.is_zero() {
            return roots;
        }
        // Clear denominators.
        let den = crate::ratio::common_denominator(&self.0.iter().collect::<Vec<_>>());
        let ints: Vec<Int> =
            self.0.iter().map(|c| (c.clone() * Rat::from_integer(den.clone())).to_integer()).collect();
        // Strip trailing zero coefficients (x | p): 0 is a root.
        let mut low = 0;
        while low < ints.len() && ints[low].is_zero() {
            low += 1;
        }
        if low > 0 {
            roots.push(Rat::zero());
        }
        if low >= ints.len() {
            return roots;
        }
        let a0 = ints[low].abs();
        let an = ints.last().unwrap().abs();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(p.clone() * Int::from(sign), q.clone());
                    if self.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &Int) -> Vec<Int> {
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = Int::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// Cyclotomic polynomial of order d, by the recursive exact division
/// Phi_d = (x^d - 1) / prod_{d' | d, d' < d} Phi_{d'}.
pub fn cyclotomic(d: usize) -> UPoly {
    let mut num = UPoly::xn_minus_one(d);
    for dp in 1..d {
        if d % dp == 0 {
            let phi = cyclotomic(dp);
            let (q, r) = num.div_rem(&phi);
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    num
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", crate::ratio::format_rat(c))?;
            } else if c.is_one() {
                write!(f, "x^{}", i)?;
            } else {
                write!(f, "{}*x^{}", crate::ratio::format_rat(c), i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat_int;

    #[test]
    fn division() {
        // (x^2 - 1) / (x - 1) = x + 1
        let p = UPoly::from_coeffs(vec![rat_int(-1), rat_int(0), rat_int(1)]);
        let d = UPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]);
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UPoly::from_coeffs(vec![rat_int(1), rat_int(1)]));
    }

    #[test]
    fn gcd_and_bezout() {
        let a = UPoly::xn_minus_one(6);
        let b = a.derivative();
        // x^6-1 is separable over Q.
        assert_eq!(a.gcd(&b).degree(), Some(0));
        let f = UPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]); // x-1
        let g = UPoly::from_coeffs(vec![rat_int(1), rat_int(1), rat_int(1)]); // x^2+x+1
        let (d, u, v) = f.extended_gcd(&g);
        assert_eq!(d, UPoly::one());
        assert_eq!(u.mul(&f).add(&v.mul(&g)), UPoly::one());
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), UPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]));
        assert_eq!(cyclotomic(2), UPoly::from_coeffs(vec![rat_int(1), rat_int(1)]));
        assert_eq!(cyclotomic(3), UPoly::from_coeffs(vec![rat_int(1), rat_int(1), rat_int(1)]));
        assert_eq!(
            cyclotomic(6),
            UPoly::from_coeffs(vec![rat_int(1), rat_int(-1), rat_int(1)])
        );
        // prod over d | 12 of Phi_d = x^12 - 1
        let mut prod = UPoly::one();
        for d in 1..=12 {
            if 12 % d == 0 {
                prod = prod.mul(&cyclotomic(d));
            }
        }
        assert_eq!(prod, UPoly::xn_minus_one(12));
    }

    #[test]
    fn roots() {
        // (x-1)(x+2)(2x-3)
        let p = UPoly::from_coeffs(vec![rat_int(-1), rat_int(1)])
            .mul(&UPoly::from_coeffs(vec![rat_int(2), rat_int(1)]))
            .mul(&UPoly::from_coeffs(vec![rat_int(-3), rat_int(2)]));
        let roots = p.rational_roots();
        assert_eq!(roots.len(), 3);
        assert!(roots.contains(&rat_int(1)));
        assert!(roots.contains(&rat_int(-2)));
        assert!(roots.contains(&crate::ratio::rat(3, 2)));
    }

    #[test]
    fn squarefree() {
        let p = UPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]); // x-1
        let sq = p.mul(&p);
        assert!(!sq.is_squarefree());
        assert_eq!(sq.squarefree_part(), p.monic());
    }
}
