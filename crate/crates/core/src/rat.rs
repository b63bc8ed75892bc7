//! The scalar field: arbitrary-precision rationals.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so equality of `Rat` is equality of numbers.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AlbertError, Result};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q`; panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn half() -> Rat {
    frac(1, 2)
}

/// Integer power, allowing negative exponents for nonzero bases.
pub fn pow(x: &Rat, e: i32) -> Rat {
    num_traits::pow::Pow::pow(x, e)
}

/// Parses `"p/q"` or `"p"`. The result is normalized.
pub fn parse(s: &str) -> Result<Rat> {
    let t = s.trim();
    if let Some((_, den)) = t.split_once('/') {
        if BigInt::from_str(den.trim()).map(|d| d.is_zero()).unwrap_or(false) {
            return Err(AlbertError::Parse(format!("zero denominator in {s:?}")));
        }
    }
    Rat::from_str(t).map_err(|_| AlbertError::Parse(format!("not a rational: {s:?}")))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn to_string(x: &Rat) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse("-7").unwrap(), int(-7));
        assert_eq!(parse(" 2/-4 ").unwrap(), frac(-1, 2));
        assert_eq!(to_string(&frac(-2, 6)), "-1/3");
        assert_eq!(to_string(&int(1)), "1");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&int(2), 3), int(8));
        assert_eq!(pow(&int(2), -2), frac(1, 4));
        assert_eq!(pow(&frac(-1, 3), 0), one());
    }
}
