use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"num/den"` or `"num"`.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let trimmed = input.trim();
    Rational::from_str(trimmed).map_err(|e| Error::Parse { input: input.to_string(), reason: e.to_string() })
}

/// `"num/den"`, with the denominator omitted when it is 1.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Parses a comma-separated list of exactly `len` rationals.
pub fn parse_rationals(input: &str, len: usize) -> Result<Vec<Rational>> {
    let values = input.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
    if values.len() != len {
        return Err(Error::Parse {
            input: input.to_string(),
            reason: format!("expected {len} comma-separated values, found {}", values.len()),
        });
    }
    Ok(values)
}

pub fn format_rationals(values: &[Rational]) -> String {
    values.iter().map(format_rational).collect::<Vec<_>>().join(",")
}

/// Exact integer square root of a nonnegative integer, if it is a perfect square.
pub fn integer_sqrt(value: &BigInt) -> Option<BigInt> {
    if value.is_negative() {
        return None;
    }
    let root = value.sqrt();
    (&root * &root == *value).then_some(root)
}

/// Square root of a rational that is the square of a rational.
pub fn rational_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_zero() {
        return Some(Rational::zero());
    }
    let numer = integer_sqrt(value.numer())?;
    let denom = integer_sqrt(value.denom())?;
    Some(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("15/4").unwrap(), frac(15, 4));
        assert_eq!(parse_rational("-6").unwrap(), int(-6));
        assert_eq!(parse_rational("6/-4").unwrap(), frac(-3, 2));
        assert_eq!(format_rational(&frac(-3, 4)), "-3/4");
        assert_eq!(format_rational(&frac(12, 2)), "6");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn lists() {
        let v = parse_rationals("2, 1/2,-3", 3).unwrap();
        assert_eq!(v, vec![int(2), frac(1, 2), int(-3)]);
        assert_eq!(format_rationals(&v), "2,1/2,-3");
        assert!(parse_rationals("1,2", 3).is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&int(41)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
        assert_eq!(rational_sqrt(&frac(2, 9)), None);
    }
}
