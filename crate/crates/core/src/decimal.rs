//! Arbitrary-precision integers on the wire as plain decimal strings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;

/// Parses `-?[0-9]+` only. `BigInt::from_str` also accepts `+` and `_`
/// separators, which the wire format does not.
pub fn parse_decimal(s: &str) -> Result<BigInt, Error> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not a decimal integer: {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Newtype giving `BigInt` the decimal-string serde encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decimal(pub BigInt);

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct DecimalVisitor;

        impl Visitor<'_> for DecimalVisitor {
            type Value = Decimal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a decimal integer string")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Decimal, E> {
                parse_decimal(v).map(Decimal).map_err(E::custom)
            }
        }

        deserializer.deserialize_str(DecimalVisitor)
    }
}

/// `#[serde(with = "crate::decimal::bigint")]` adapter.
pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Decimal::deserialize(d).map(|v| v.0)
    }
}
