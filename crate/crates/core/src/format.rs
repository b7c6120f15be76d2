//! JSON file formats.
//!
//! Matrix: `{"dim": r, "entries": [[..], ..]}`.
//! Character table: `{"order": m, "values": {"0": v0, "1": v1, ..}}`.
//!
//! Integers are read from JSON integers or decimal strings. On output an
//! integer is a JSON number when `|v| ≤ 2^53` (exact in a double) and a
//! decimal string otherwise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::congruence::CharacterTable;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::sequence::parse_integer;
use crate::{Integer, Rational, WittVector};

const SAFE_BITS: u64 = 53;

fn fits_double(v: &Integer) -> bool {
    v.abs().bits() <= SAFE_BITS || v.abs() == BigInt::from(1u64 << SAFE_BITS)
}

/// Serde helper: an integer as a JSON number when it is exactly
/// representable as a double, otherwise as a decimal string.
pub fn int<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    if fits_double(v) {
        match i64::try_from(v) {
            Ok(small) => s.serialize_i64(small),
            Err(_) => s.serialize_str(&v.to_string()),
        }
    } else {
        s.serialize_str(&v.to_string())
    }
}

/// Serde helper: an integral rational as [`int`], otherwise `"p/q"`.
pub fn rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    if q.is_integer() {
        int(q.numer(), s)
    } else {
        s.serialize_str(&q.to_string())
    }
}

struct Int<'a>(&'a Integer);

impl Serialize for Int<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        int(self.0, s)
    }
}

struct Rat<'a>(&'a Rational);

impl Serialize for Rat<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational(self.0, s)
    }
}

pub(crate) fn opt_witt<S: Serializer>(
    x: &Option<WittVector>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        None => s.serialize_none(),
        Some(x) => {
            let mut seq = s.serialize_seq(Some(x.len()))?;
            for q in x.values() {
                seq.serialize_element(&Rat(q))?;
            }
            seq.end()
        }
    }
}

/// A JSON value as an exact integer.
pub fn integer_from_json(v: &Value) -> Result<Integer> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::Schema(format!(
                    "{n} is not an integer; write large values as decimal strings"
                )))
            }
        }
        Value::String(s) => parse_integer(s),
        other => Err(Error::Schema(format!("expected an integer, found {other}"))),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    dim: usize,
    entries: Vec<Vec<Value>>,
}

#[derive(Serialize)]
struct MatrixOut<'a> {
    dim: usize,
    entries: Vec<Vec<Int<'a>>>,
}

pub fn matrix_from_json(text: &str) -> Result<IntMatrix> {
    let doc: MatrixDoc = serde_json::from_str(text)?;
    if doc.entries.len() != doc.dim {
        return Err(Error::Schema(format!(
            "dim is {} but there are {} rows",
            doc.dim,
            doc.entries.len()
        )));
    }
    let rows = doc
        .entries
        .iter()
        .map(|row| row.iter().map(integer_from_json).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(rows)
}

/// Compact, single-line matrix JSON.
pub fn matrix_to_json(f: &IntMatrix) -> String {
    let out = MatrixOut {
        dim: f.dim(),
        entries: f.rows().map(|r| r.iter().map(Int).collect()).collect(),
    };
    serde_json::to_string(&out).expect("matrix serializes")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CharacterDoc {
    order: u64,
    values: BTreeMap<String, Value>,
}

pub fn character_table_from_json(text: &str) -> Result<CharacterTable> {
    let doc: CharacterDoc = serde_json::from_str(text)?;
    let entries = doc
        .values
        .iter()
        .map(|(key, v)| {
            let residue: u64 = key
                .parse()
                .map_err(|_| Error::CharacterTable(format!("residue key {key:?} is not a number")))?;
            Ok((residue, integer_from_json(v)?))
        })
        .collect::<Result<Vec<_>>>()?;
    CharacterTable::from_entries(doc.order, entries)
}

pub fn character_table_to_json(table: &CharacterTable) -> String {
    let values: serde_json::Map<String, Value> = table
        .values()
        .iter()
        .enumerate()
        .map(|(e, v)| (e.to_string(), serde_json::to_value(Int(v)).expect("integer")))
        .collect();
    serde_json::json!({ "order": table.order(), "values": values }).to_string()
}

/// Rationals as a JSON array, integral entries as numbers.
pub fn rationals_to_json(values: &[Rational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|q| serde_json::to_value(Rat(q)).expect("rational"))
            .collect(),
    )
}

pub fn integers_to_json(values: &[Integer]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| serde_json::to_value(Int(v)).expect("integer"))
            .collect(),
    )
}
