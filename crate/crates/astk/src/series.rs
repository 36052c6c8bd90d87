//! Truncated power series: total-degree truncation with an explicit
//! precision tag on every value. Mixing precisions takes the minimum.

use crate::error::{AstkError, Result};
use crate::monomial::Monomial;
use crate::ratio::{rat_int, Rat};
use num::traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    pub variables: Vec<String>,
    pub precision: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl TruncSeries {
    pub fn zero(variables: &[&str], precision: usize) -> Self {
        TruncSeries {
            variables: variables.iter().map(|s| s.to_string()).collect(),
            precision,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(variables: &[&str], precision: usize, c: Rat) -> Self {
        let mut s = Self::zero(variables, precision);
        s.add_term(Monomial::one(s.variables.len()), c);
        s
    }

    pub fn one(variables: &[&str], precision: usize) -> Self {
        Self::constant(variables, precision, Rat::one())
    }

    pub fn var(variables: &[&str], precision: usize, i: usize) -> Self {
        let mut s = Self::zero(variables, precision);
        s.add_term(Monomial::var(s.variables.len(), i), Rat::one());
        s
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Monomial::one(self.nvars())).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of u^k, univariate view.
    pub fn coeff1(&self, k: i64) -> Rat {
        assert_eq!(self.nvars(), 1);
        self.terms.get(&Monomial(vec![k])).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert!(!m.has_negative());
        if c.is_zero() || m.total_degree() as usize > self.precision {
            return;
        }
        let now_zero = {
            let e = self.terms.entry(m).or_insert_with(Rat::zero);
            *e += c;
            e.is_zero()
        };
        if now_zero {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn truncate(&self, precision: usize) -> TruncSeries {
        let mut out = self.clone();
        out.precision = precision.min(self.precision);
        out.terms.retain(|m, _| m.total_degree() as usize <= out.precision);
        out
    }

    fn check_compatible(&self, other: &TruncSeries) -> Result<usize> {
        if self.variables != other.variables {
            return Err(AstkError::RingMismatch("series variables differ".into()));
        }
        Ok(self.precision.min(other.precision))
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let prec = self.check_compatible(other).expect("series variables differ");
        let mut out = self.truncate(prec);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> TruncSeries {
        let mut out = self.clone();
        if c.is_zero() {
            out.terms.clear();
            return out;
        }
        for v in out.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        out
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let prec = self.check_compatible(other).expect("series variables differ");
        let mut out = TruncSeries {
            variables: self.variables.clone(),
            precision: prec,
            terms: BTreeMap::new(),
        };
        for (ma, ca) in &self.terms {
            if ma.total_degree() as usize > prec {
                continue;
            }
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u64) -> TruncSeries {
        let vars: Vec<&str> = self.variables.iter().map(|s| s.as_str()).collect();
        let mut acc = TruncSeries::one(&vars, self.precision);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// log f = sum_{k>=1} (-1)^{k+1} (f-1)^k / k, requires constant term 1.
pub fn series_log(f: &TruncSeries) -> Result<TruncSeries> {
    if !f.constant_term().is_one() {
        return Err(AstkError::Invalid(format!(
            "series_log needs constant term 1, found {}",
            crate::ratio::format_rat(&f.constant_term())
        )));
    }
    let vars: Vec<&str> = f.variables.iter().map(|s| s.as_str()).collect();
    let u = f.sub(&TruncSeries::one(&vars, f.precision));
    let mut acc = TruncSeries::zero(&vars, f.precision);
    let mut upow = TruncSeries::one(&vars, f.precision);
    for k in 1..=f.precision.max(1) {
        upow = upow.mul(&u);
        if upow.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
        acc = acc.add(&upow.scale(&(sign / rat_int(k as i64))));
    }
    Ok(acc)
}

/// exp f = sum_{k>=0} f^k / k!, requires constant term 0.
pub fn series_exp(f: &TruncSeries) -> Result<TruncSeries> {
    if !f.constant_term().is_zero() {
        return Err(AstkError::Invalid("series_exp needs constant term 0".into()));
    }
    let vars: Vec<&str> = f.variables.iter().map(|s| s.as_str()).collect();
    let mut acc = TruncSeries::one(&vars, f.precision);
    let mut fpow = TruncSeries::one(&vars, f.precision);
    let mut fact = Rat::one();
    for k in 1..=f.precision.max(1) {
        fpow = fpow.mul(f);
        if fpow.is_zero() {
            break;
        }
        fact = fact * rat_int(k as i64);
        acc = acc.add(&fpow.scale(&(Rat::one() / fact.clone())));
    }
    Ok(acc)
}

/// f(g) for univariate outer f; g must have zero constant term so the
/// substitution is well-defined at finite precision.
pub fn series_compose(f: &TruncSeries, g: &TruncSeries) -> Result<TruncSeries> {
    if f.nvars() != 1 {
        return Err(AstkError::Unsupported(
            "series_compose composes a univariate outer series".into(),
        ));
    }
    if !g.constant_term().is_zero() {
        return Err(AstkError::Invalid(
            "series_compose needs zero constant term in the inner series".into(),
        ));
    }
    let prec = f.precision.min(g.precision);
    let vars: Vec<&str> = g.variables.iter().map(|s| s.as_str()).collect();
    let mut acc = TruncSeries::zero(&vars, prec);
    // Horner in g over the univariate coefficients of f.
    let max_deg = f.terms.keys().map(|m| m.0[0]).max().unwrap_or(0);
    for k in (0..=max_deg).rev() {
        acc = acc.mul(g);
        let c = f.coeff1(k);
        if !c.is_zero() {
            acc = acc.add(&TruncSeries::constant(&vars, prec, c));
        }
    }
    Ok(acc)
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 + O(deg {})", self.precision + 1);
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut s = crate::ratio::format_rat(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                s.push('*');
                s.push_str(&self.variables[i]);
                if e != 1 {
                    s.push_str(&format!("^{}", e));
                }
            }
            parts.push(s);
        }
        write!(f, "{} + O(deg {})", parts.join(" + "), self.precision + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    fn u(prec: usize) -> TruncSeries {
        TruncSeries::var(&["u"], prec, 0)
    }

    #[test]
    fn log_defining_series() {
        // log(1 + u) at precision 4.
        let f = TruncSeries::one(&["u"], 4).add(&u(4));
        let l = series_log(&f).unwrap();
        assert_eq!(l.coeff1(1), rat(1, 1));
        assert_eq!(l.coeff1(2), rat(-1, 2));
        assert_eq!(l.coeff1(3), rat(1, 3));
        assert_eq!(l.coeff1(4), rat(-1, 4));
        // log(1) = 0
        assert!(series_log(&TruncSeries::one(&["u"], 4)).unwrap().is_zero());
    }

    #[test]
    fn log_of_square_is_twice_log() {
        let one = TruncSeries::one(&["u"], 3);
        let f = one.add(&u(3));
        let sq = f.mul(&f);
        let l = series_log(&sq).unwrap();
        let expected = series_log(&f).unwrap().scale(&rat(2, 1));
        assert_eq!(l, expected);
        assert_eq!(l.coeff1(1), rat(2, 1));
        assert_eq!(l.coeff1(2), rat(-1, 1));
        assert_eq!(l.coeff1(3), rat(2, 3));
    }

    #[test]
    fn exp_log_inverse() {
        let f = TruncSeries::one(&["u"], 6).add(&u(6)).add(&u(6).pow(3).scale(&rat(5, 7)));
        let back = series_exp(&series_log(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn log_requires_unit_constant_term() {
        assert!(series_log(&u(3)).is_err());
        assert!(series_exp(&TruncSeries::one(&["u"], 3)).is_err());
    }

    #[test]
    fn compose_identity_and_square() {
        let f = series_log(&TruncSeries::one(&["u"], 5).add(&u(5))).unwrap();
        let id = u(5);
        assert_eq!(series_compose(&f, &id).unwrap(), f);

        // f = u, g = (1+u)^2 - 1 at precision 3 -> 2u + u^2.
        let one = TruncSeries::one(&["u"], 3);
        let g = one.add(&u(3)).pow(2).sub(&one);
        let composed = series_compose(&u(3), &g).unwrap();
        assert_eq!(composed.coeff1(1), rat(2, 1));
        assert_eq!(composed.coeff1(2), rat(1, 1));
        assert_eq!(composed.coeff1(3), rat(0, 1));
    }

    #[test]
    fn eigen_equation_example() {
        // log(1+u)^3 composed with (1+u)^2 - 1 equals 8 * log(1+u)^3 at precision 8.
        let prec = 8;
        let one = TruncSeries::one(&["u"], prec);
        let log = series_log(&one.add(&u(prec))).unwrap();
        let log3 = log.pow(3);
        let g = one.add(&u(prec)).pow(2).sub(&one);
        let lhs = series_compose(&log3, &g).unwrap();
        assert_eq!(lhs, log3.scale(&rat(8, 1)));
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let f = u(3);
        let g = TruncSeries::one(&["u"], 3);
        assert!(series_compose(&f, &g).is_err());
    }

    #[test]
    fn precision_is_minimum() {
        let a = u(5);
        let b = u(3);
        assert_eq!(a.add(&b).precision, 3);
        assert_eq!(a.mul(&b).precision, 3);
    }
}
