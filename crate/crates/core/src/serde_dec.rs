//! Serde helpers writing arbitrary-precision integers as decimal strings.

use num_bigint::BigInt;
use serde::{de::Error, Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_str_radix(10))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(D::Error::custom)
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_some(&v.to_str_radix(10)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(D::Error::custom))
            .transpose()
    }
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_str_radix(10))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

/// `Vec<(String, BigInt)>` as a list of `[name, "decimal"]` pairs.
pub mod named {
    use super::*;
    use serde::Serialize;

    pub fn serialize<S: Serializer>(values: &[(String, BigInt)], s: S) -> Result<S::Ok, S::Error> {
        values
            .iter()
            .map(|(k, v)| (k.as_str(), v.to_str_radix(10)))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(String, BigInt)>, D::Error> {
        Vec::<(String, String)>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| v.parse().map(|v| (k, v)).map_err(D::Error::custom))
            .collect()
    }
}

/// `Vec<(BigInt, BigInt)>` as a list of decimal string pairs.
pub mod pairs {
    use super::*;
    use serde::Serialize;

    pub fn serialize<S: Serializer>(values: &[(BigInt, BigInt)], s: S) -> Result<S::Ok, S::Error> {
        values
            .iter()
            .map(|(a, b)| (a.to_str_radix(10), b.to_str_radix(10)))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(BigInt, BigInt)>, D::Error> {
        Vec::<(String, String)>::deserialize(d)?
            .into_iter()
            .map(|(a, b)| Ok((a.parse().map_err(D::Error::custom)?, b.parse().map_err(D::Error::custom)?)))
            .collect()
    }
}
