//! Text form of exact rationals.
//!
//! Every rational crossing a serialization boundary is written as `"p/q"` in
//! lowest terms, including integers (`"5/1"`). Parsing also accepts a bare
//! integer.

use std::fmt;

use rug::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatioError(pub String);

impl fmt::Display for ParseRatioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.0)
    }
}

impl std::error::Error for ParseRatioError {}

/// Formats `r` as `"p/q"`.
pub fn to_ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or `"p"`. The result is normalized; a zero denominator is rejected.
pub fn parse_ratio(s: &str) -> Result<Rational, ParseRatioError> {
    let err = || ParseRatioError(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Integer = p.trim().parse().map_err(|_| err())?;
            let q: Integer = q.trim().parse().map_err(|_| err())?;
            if q == 0 {
                return Err(err());
            }
            Ok(Rational::from((p, q)))
        }
        None => {
            let p: Integer = s.parse().map_err(|_| err())?;
            Ok(Rational::from(p))
        }
    }
}

/// `#[serde(with = "...")]` adapter for a single rational.
pub mod serde_ratio {
    use rug::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_ratio_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_ratio(&s).map_err(D::Error::custom)
    }
}

/// `#[serde(with = "...")]` adapter for a list of rationals.
pub mod serde_ratio_vec {
    use rug::Rational;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&super::to_ratio_string(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| super::parse_ratio(s).map_err(D::Error::custom))
            .collect()
    }
}
