use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`. Panics when `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, `p/q` (with optional surrounding whitespace).
/// Decimals are rejected so nothing binary-float shaped sneaks in.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |message: String| Error::Syntax {
        line: 1,
        column: 1,
        message,
    };
    if text.contains('.') || text.contains('e') || text.contains('E') {
        return Err(bad(format!(
            "`{text}`: decimal literals are not exact; write a fraction p/q instead"
        )));
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| bad(format!("`{text}` is not a rational number")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| bad(format!("`{text}` is not a rational number")))?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = parse_rational("6/-4").unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(parse_rational(" -12 ").unwrap(), rat(-12));
    }

    #[test]
    fn rejects_decimals_and_zero_denominators() {
        assert!(matches!(parse_rational("0.5"), Err(Error::Syntax { .. })));
        assert_eq!(parse_rational("1/0"), Err(Error::DivisionByZero));
        assert!(parse_rational("abc").is_err());
    }
}
