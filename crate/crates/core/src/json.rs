//! Small helpers for pulling typed fields out of `serde_json::Value` trees
//! and for writing canonical JSON text.

use std::fmt::Write;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

pub(crate) fn parse_document(bytes: &[u8]) -> Result<Value> {
    serde_json::from_slice(bytes).map_err(|e| Error::from_json(e, bytes))
}

pub(crate) fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::parse(format!("{path}: expected an object")))
}

pub(crate) fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::parse(format!("{path}: expected an array")))
}

pub(crate) fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::parse(format!("{path}: missing field `{key}`")))
}

pub(crate) fn string(v: &Value, path: &str) -> Result<String> {
    v.as_str()
        .map(str::to_owned)
        .ok_or_else(|| Error::parse(format!("{path}: expected a string")))
}

/// Integers may be written either as JSON numbers of any length or as
/// decimal strings.
pub(crate) fn bigint(v: &Value, path: &str) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(Error::parse(format!("{path}: expected an integer"))),
    };
    BigInt::from_str(text.trim())
        .map_err(|_| Error::parse(format!("{path}: `{text}` is not an integer")))
}

pub(crate) fn biguint(v: &Value, path: &str) -> Result<BigUint> {
    bigint(v, path)?
        .to_biguint()
        .ok_or_else(|| Error::parse(format!("{path}: expected a nonnegative integer")))
}

pub(crate) fn u64_of(v: &Value, path: &str) -> Result<u64> {
    let n = biguint(v, path)?;
    u64::try_from(&n).map_err(|_| Error::parse(format!("{path}: {n} is too large")))
}

pub(crate) fn write_str(out: &mut String, s: &str) {
    // serde_json's string escaping is exactly what we want here.
    out.push_str(&Value::String(s.to_owned()).to_string());
}

pub(crate) fn write_key(out: &mut String, key: &str) {
    write_str(out, key);
    out.push_str(": ");
}

pub(crate) fn write_display(out: &mut String, v: impl std::fmt::Display) {
    let _ = write!(out, "{v}");
}

/// A JSON number holding an integer of any size.
pub(crate) fn big_number(n: impl std::fmt::Display) -> Value {
    n.to_string()
        .parse::<serde_json::Number>()
        .map(Value::Number)
        .unwrap_or_else(|_| Value::String(n.to_string()))
}
