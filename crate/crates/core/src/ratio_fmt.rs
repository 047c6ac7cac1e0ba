//! Compact text form for exact rationals: `"p"` or `"p/q"`.
//!
//! JSON reports carry every rational (and big integer) as such a string, so
//! no precision is lost and output bytes are stable across runs.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// `"p"` for integers, `"p/q"` otherwise (always in lowest terms).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` (optional leading `-`). `None` on malformed
/// input or a zero denominator.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// serde adapter for a single `BigRational` as a `"p/q"` string.
pub mod serde_rational {
    use super::*;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`")))
    }
}

/// serde adapter for `Option<BigRational>` as `"p/q"` or `null`.
pub mod serde_rational_opt {
    use super::*;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigRational>, ser: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => ser.serialize_some(&format_rational(r)),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<Option<BigRational>, D::Error> {
        match Option::<String>::deserialize(de)? {
            None => Ok(None),
            Some(s) => parse_rational(&s)
                .map(Some)
                .ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`"))),
        }
    }
}

/// serde adapter for `Vec<BigRational>` as `["p/q", ...]`.
pub mod serde_rational_vec {
    use super::*;
    use serde::de::Error;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigRational>, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        strings
            .iter()
            .map(|s| {
                parse_rational(s).ok_or_else(|| D::Error::custom(format!("invalid rational `{s}`")))
            })
            .collect()
    }
}

/// serde adapter for `Vec<BigInt>` as `["z", ...]`.
pub mod serde_bigint_vec {
    use super::*;
    use serde::de::Error;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for z in v {
            seq.serialize_element(&z.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        strings
            .iter()
            .map(|s| {
                s.trim()
                    .parse()
                    .map_err(|_| D::Error::custom(format!("invalid integer `{s}`")))
            })
            .collect()
    }
}
