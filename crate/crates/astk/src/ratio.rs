//! Exact rational scalars: aliases and small helpers around `num`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Parse "a/b" or "a" into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().map_err(|e| format!("bad numerator {s:?}: {e}"))?;
            let d: Int = d.trim().parse().map_err(|e| format!("bad denominator {s:?}: {e}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: Int = s.parse().map_err(|e| format!("bad integer {s:?}: {e}"))?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// Render as "a/b", or "a" when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Least common multiple of the denominators of a slice of rationals.
pub fn common_denominator(rs: &[&Rat]) -> Int {
    let mut acc = Int::one();
    for r in rs {
        let d = r.denom().abs();
        let g = num::integer::gcd(acc.clone(), d.clone());
        acc = acc / g * d;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["3", "-7", "2/3", "-5/4"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(2, 1), int(2));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(10, 5), int(252));
    }

    #[test]
    fn common_denominators() {
        let a = rat(1, 6);
        let b = rat(3, 4);
        assert_eq!(common_denominator(&[&a, &b]), int(12));
    }
}
