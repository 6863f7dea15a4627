//! Exact rational scalars.
//!
//! Every coefficient in the engine is a [`Rational`]. Text form is `p/q` in
//! lowest terms with `q > 0`, or a bare integer when `q == 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `n` or `p/q` (`q > 0`), normalizing to lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let text = text.trim();
    let bad = || ParseError::new(0, format!("invalid rational `{text}`"));
    match text.split_once('/') {
        None => text.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if !q.is_positive() {
                return Err(ParseError::new(0, format!("denominator must be positive in `{text}`")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Always renders `p/q`, including `q = 1` (the JSON coefficient form).
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Compact human form: `3`, `-1/2`.
pub fn to_short(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        to_pq(r)
    }
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

/// Serde adapter so coefficient fields serialize as `"p/q"` strings.
pub mod serde_pq {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        to_pq(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational(" -2/6 ").unwrap(), frac(-1, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn renders() {
        assert_eq!(to_pq(&int(3)), "3/1");
        assert_eq!(to_short(&int(3)), "3");
        assert_eq!(to_short(&frac(-2, 4)), "-1/2");
    }
}
