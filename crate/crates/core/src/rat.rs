//! Arbitrary-precision rationals in lowest terms, plus parsing and the
//! `"p/q"` string encoding used in all JSON output.

use crate::error::ArithError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// Exact rational number. Always in lowest terms with positive denominator;
/// zero is `0/1`. These invariants are maintained by the backing type on
/// every operation.
pub type Rat = num_rational::BigRational;

/// Rational from a pair of machine integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// True when the denominator is 1.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Parses `"p"` or `"p/q"` with optional leading sign. The denominator must
/// be nonzero.
pub fn rat_from_str(s: &str) -> Result<Rat, ArithError> {
    let bad = || ArithError::BadRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => BigInt::from_str(s).map(Rat::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Renders `p/q`, omitting the denominator when it is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Absolute value.
pub fn rat_abs(r: &Rat) -> Rat {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}

/// Serde adapter serializing a [`Rat`] as the `"p/q"` string form.
pub mod serde_rat {
    use super::*;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        rat_from_str(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter for `Vec<Rat>` in the `"p/q"` string form.
pub mod serde_rat_vec {
    use super::*;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(|r| rat_to_string(r)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rat>, D::Error> {
        let strs = Vec::<String>::deserialize(de)?;
        strs.iter()
            .map(|s| rat_from_str(s).map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(2, -4);
        assert_eq!(r, rat(-1, 2));
        assert_eq!(rat_to_string(&r), "-1/2");
        assert_eq!(rat_to_string(&rat(6, 3)), "2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7/3", "-22/7", "5", "-1/2"] {
            let r = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        assert_eq!(rat_from_str("4/6").unwrap(), rat(2, 3));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn canonical_zero() {
        let z = rat(0, 5);
        assert!(z.numer().is_zero());
        assert_eq!(z.denom(), &BigInt::from(1));
    }
}
