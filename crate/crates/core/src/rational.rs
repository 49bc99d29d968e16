//! Exact rational scalars and their canonical `"p/q"` text form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise.
pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` with decimal integers. Decimal points, exponents and
/// whitespace are rejected so that no floating-point literal sneaks in.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("`{s}` is not an exact rational of the form p or p/q"));
    let is_int = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    if !is_int(num) {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = match den {
        Some(q) if is_int(q) && !q.starts_with('-') => q.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(Rational::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format(&frac(46, 44)), "23/22");
        assert_eq!(format(&frac(4, 2)), "2");
        assert_eq!(format(&frac(-1, 2)), "-1/2");
    }

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse("-7").unwrap(), int(-7));
        assert_eq!(parse("0/5").unwrap(), int(0));
    }

    #[test]
    fn rejects_float_literals() {
        for s in ["1.5", "1e3", "2.", " 3", "1/2.0", "", "/3", "3/", "1/-2", "0x10", "1/0"] {
            assert!(parse(s).is_err(), "{s} should be rejected");
        }
    }
}
