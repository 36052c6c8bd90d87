//! Multivariate (Laurent) polynomials over exact rationals.
//!
//! The carrier type for representation rings, class-function rings and all
//! ideal computations. Terms live in a `BTreeMap` keyed by exponent vector;
//! zero coefficients are never stored, so equality is structural.

use crate::error::AstkError;
use crate::monomial::{Monomial, TermOrder};
use crate::ratio::{format_rat, parse_rat, Rat};
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoeffDomain {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "Z")]
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingMode {
    Poly,
    Laurent,
}

/// Ambient ring descriptor: variable names, coefficient domain, mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRing {
    pub variables: Vec<String>,
    pub coeffs: CoeffDomain,
    pub mode: RingMode,
}

impl PolyRing {
    pub fn poly_q(vars: &[&str]) -> Arc<Self> {
        Arc::new(PolyRing {
            variables: vars.iter().map(|s| s.to_string()).collect(),
            coeffs: CoeffDomain::Q,
            mode: RingMode::Poly,
        })
    }

    pub fn laurent_q(vars: &[&str]) -> Arc<Self> {
        Arc::new(PolyRing {
            variables: vars.iter().map(|s| s.to_string()).collect(),
            coeffs: CoeffDomain::Q,
            mode: RingMode::Laurent,
        })
    }

    pub fn laurent_z(vars: &[&str]) -> Arc<Self> {
        Arc::new(PolyRing {
            variables: vars.iter().map(|s| s.to_string()).collect(),
            coeffs: CoeffDomain::Z,
            mode: RingMode::Laurent,
        })
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }
}

/// Sparse multivariate polynomial; in Laurent mode exponents may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Rat>,
}

impl LaurentPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        LaurentPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Rat::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        LaurentPoly { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), Rat::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Rat) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial width mismatch");
        if ring.mode == RingMode::Poly {
            assert!(!m.has_negative(), "negative exponent in polynomial mode");
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { ring: ring.clone(), terms }
    }

    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, Rat)>,
    ) -> Result<Self, AstkError> {
        let mut out = Self::zero(ring);
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(AstkError::RingMismatch(format!(
                    "exponent vector of width {} in a ring with {} variables",
                    m.nvars(),
                    ring.nvars()
                )));
            }
            if ring.mode == RingMode::Poly && m.has_negative() {
                return Err(AstkError::Invalid(
                    "negative exponent in polynomial mode".into(),
                ));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn same_ring(&self, other: &LaurentPoly) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map_or(false, |(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn abs_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.abs_degree()).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert!(self.same_ring(other));
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert!(self.same_ring(other));
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c;
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert!(self.same_ring(other));
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> LaurentPoly {
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            out.add_term(ma.mul(m), ca.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u64) -> LaurentPoly {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading (monomial, coefficient) under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Evaluate at all variables = 1; the augmentation of group-ring carriers.
    pub fn eval_all_ones(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c.clone())
    }

    /// Substitute each variable by the given polynomial (in the target ring).
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[LaurentPoly]) -> LaurentPoly {
        assert_eq!(images.len(), self.ring.nvars());
        let mut out = LaurentPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = LaurentPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = &images[i];
                if e > 0 {
                    term = term.mul(&img.pow(e as u64));
                } else {
                    let inv = invert_unit(img).unwrap_or_else(|| {
                        panic!("substitute: image of {} is not a unit", self.ring.variables[i])
                    });
                    term = term.mul(&inv.pow((-e) as u64));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Apply e |-> k*e to every exponent vector (monomial-wise power map).
    pub fn scale_exponents(&self, k: i64) -> LaurentPoly {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.pow(k), c.clone());
        }
        out
    }

    /// Apply a permutation of the variables: slot i receives old slot perm[i].
    pub fn permute_vars(&self, perm: &[usize]) -> LaurentPoly {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e: Vec<i64> = (0..m.nvars()).map(|i| m.0[perm[i]]).collect();
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    /// Multiply by the least monomial making all exponents nonnegative;
    /// returns the shift used and the shifted polynomial in `target`.
    pub fn clear_negative_exponents(&self, target: &Arc<PolyRing>) -> (Monomial, LaurentPoly) {
        let n = self.ring.nvars();
        let mut shift = vec![0i64; n];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e < 0 {
                    shift[i] = shift[i].max(-e);
                }
            }
        }
        let shift = Monomial(shift);
        let mut out = LaurentPoly::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.mul(&shift), c.clone());
        }
        (shift, out)
    }

    /// Re-home the polynomial into an equal ring handle (for Arc sharing).
    pub fn with_ring(&self, ring: &Arc<PolyRing>) -> LaurentPoly {
        assert_eq!(**ring, *self.ring);
        LaurentPoly { ring: ring.clone(), terms: self.terms.clone() }
    }

    /// Terms in the canonical serialization order: descending exponent vectors.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rat)> {
        let mut v: Vec<(Monomial, Rat)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.reverse();
        v
    }
}

/// Invert a unit. In Laurent mode monomials are units; a general polynomial is
/// a unit only when it is a single term.
pub fn invert_unit(f: &LaurentPoly) -> Option<LaurentPoly> {
    if f.terms.len() != 1 {
        return None;
    }
    let (m, c) = f.terms.iter().next().unwrap();
    let minv = m.pow(-1);
    if f.ring().mode == RingMode::Poly && minv.has_negative() {
        return None;
    }
    Some(LaurentPoly::monomial(f.ring(), minv, Rat::one() / c.clone()))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            let neg = c < Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            if !unit_coeff || m.is_one() {
                write!(f, "{}", format_rat(&mag))?;
            }
            let mut printed_var = false;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if printed_var || !unit_coeff {
                    write!(f, "*")?;
                }
                printed_var = true;
                if e == 1 {
                    write!(f, "{}", self.ring.variables[i])?;
                } else {
                    write!(f, "{}^{}", self.ring.variables[i], e)?;
                }
            }
        }
        Ok(())
    }
}

// --- JSON schema ---------------------------------------------------------
//
// { "variables": [...], "mode": "laurent"|"poly", "coeffs": "Q"|"Z",
//   "generators": [ [ [[e...], "num/den"], ... ], ... ] }

#[derive(Serialize, Deserialize)]
pub struct RingJson {
    pub variables: Vec<String>,
    pub mode: RingMode,
    pub coeffs: CoeffDomain,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<(Vec<i64>, String)>>,
}

impl RingJson {
    pub fn ring(&self) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            variables: self.variables.clone(),
            coeffs: self.coeffs,
            mode: self.mode,
        })
    }

    pub fn polys(&self) -> Result<Vec<LaurentPoly>, AstkError> {
        let ring = self.ring();
        self.generators
            .iter()
            .map(|terms| {
                let parsed: Result<Vec<(Monomial, Rat)>, AstkError> = terms
                    .iter()
                    .map(|(e, c)| {
                        Ok((Monomial(e.clone()), parse_rat(c).map_err(AstkError::Invalid)?))
                    })
                    .collect();
                LaurentPoly::from_terms(&ring, parsed?)
            })
            .collect()
    }

    pub fn from_polys(ring: &PolyRing, polys: &[LaurentPoly]) -> RingJson {
        RingJson {
            variables: ring.variables.clone(),
            mode: ring.mode,
            coeffs: ring.coeffs,
            generators: polys
                .iter()
                .map(|p| {
                    p.sorted_terms()
                        .into_iter()
                        .map(|(m, c)| (m.0, format_rat(&c)))
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn poly_to_json_terms(p: &LaurentPoly) -> Vec<(Vec<i64>, String)> {
    p.sorted_terms().into_iter().map(|(m, c)| (m.0, format_rat(&c))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, rat_int};

    fn qxy() -> Arc<PolyRing> {
        PolyRing::poly_q(&["x", "y"])
    }

    #[test]
    fn no_zero_terms_stored() {
        let r = qxy();
        let x = LaurentPoly::var(&r, 0);
        let z = x.sub(&x);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn display_and_arith() {
        let r = qxy();
        let x = LaurentPoly::var(&r, 0);
        let y = LaurentPoly::var(&r, 1);
        let f = x.mul(&x).add(&y.scale(&rat(-1, 2))).add(&LaurentPoly::one(&r));
        assert_eq!(f.to_string(), "x^2 - 1/2*y + 1");
        assert_eq!(f.eval_all_ones(), rat(3, 2));
    }

    #[test]
    fn laurent_units() {
        let r = PolyRing::laurent_q(&["x"]);
        let x = LaurentPoly::var(&r, 0);
        let xinv = invert_unit(&x).unwrap();
        assert!(x.mul(&xinv).is_one());
        let f = x.add(&LaurentPoly::one(&r));
        assert!(invert_unit(&f).is_none());
    }

    #[test]
    fn substitution_is_ring_hom() {
        let r = qxy();
        let s = PolyRing::poly_q(&["t"]);
        let t = LaurentPoly::var(&s, 0);
        let images = [t.clone(), t.mul(&t)];
        let x = LaurentPoly::var(&r, 0);
        let y = LaurentPoly::var(&r, 1);
        let f = x.add(&y);
        let g = x.mul(&y);
        let fg = f.mul(&g);
        let sub = |p: &LaurentPoly| p.substitute(&s, &images);
        assert_eq!(sub(&fg), sub(&f).mul(&sub(&g)));
    }

    #[test]
    fn json_roundtrip() {
        let r = PolyRing::laurent_q(&["x"]);
        let x = LaurentPoly::var(&r, 0);
        let xinv = invert_unit(&x).unwrap();
        let f = xinv.sub(&LaurentPoly::constant(&r, rat_int(1)));
        let j = RingJson::from_polys(&r, std::slice::from_ref(&f));
        let text = serde_json::to_string(&j).unwrap();
        let back: RingJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.polys().unwrap()[0], f.with_ring(&back.ring()));
    }

    #[test]
    fn clearing_negatives() {
        let r = PolyRing::laurent_q(&["x", "y"]);
        let p = PolyRing::poly_q(&["x", "y"]);
        let x = LaurentPoly::var(&r, 0);
        let f = invert_unit(&x).unwrap().sub(&LaurentPoly::one(&r));
        let (shift, cleared) = f.clear_negative_exponents(&p);
        assert_eq!(shift, Monomial(vec![1, 0]));
        assert_eq!(cleared.to_string(), "-x + 1");
    }
}
