//! `serialize_with` helpers that write arbitrary-precision integers as JSON
//! numbers rather than strings or digit arrays.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use serde_json::Number;

fn number(digits: String) -> Number {
    Number::from_str(&digits).expect("decimal integer is a valid JSON number")
}

pub fn uint<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    number(x.to_string()).serialize(s)
}

pub fn int<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    number(x.to_string()).serialize(s)
}

pub fn uints<S: Serializer>(xs: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&number(x.to_string()))?;
    }
    seq.end()
}

pub fn ints<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&number(x.to_string()))?;
    }
    seq.end()
}

/// Wrapper that serializes a `BigInt` as a plain JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        int(&self.0, s)
    }
}
