//! JSON documents for every type.
//!
//! Loading is two-staged: malformed text or a wrongly shaped document is
//! [`Error::Json`]; a well-shaped document breaking an invariant reports that
//! invariant's own error.

use std::collections::BTreeSet;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::ball::{BallSet, Interval, TorsionPair};
use crate::error::{Error, Result};
use crate::path::DyckPath;
use crate::perm::Permutation213;
use crate::tree::BinaryTree;
use crate::young::{GappedYoungDiagram, YoungDiagram};

pub trait Document: Sized {
    fn to_value(&self) -> Value;
    fn from_value(v: &Value) -> Result<Self>;
}

pub fn to_json<T: Document>(x: &T) -> String {
    x.to_value().to_string()
}

pub fn from_json<T: Document>(s: &str) -> Result<T> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    T::from_value(&v)
}

fn shape(what: &str) -> Error {
    Error::Json(format!("expected {what}"))
}

fn uint(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| shape(what))
}

fn uints(v: &Value, what: &str) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| shape(what))?
        .iter()
        .map(|x| uint(x, what))
        .collect()
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::Json(format!("missing field {key:?}")))
}

fn pair(v: &Value, what: &str) -> Result<(usize, usize)> {
    match uints(v, what)?.as_slice() {
        &[x, y] => Ok((x, y)),
        _ => Err(shape(what)),
    }
}

impl Document for BinaryTree {
    fn to_value(&self) -> Value {
        Value::String(self.to_string())
    }

    /// A paren string, or nested arrays with `[]` for a leaf and `[l, r]` for
    /// a node.
    fn from_value(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => s.parse(),
            Value::Array(items) => match items.as_slice() {
                [] => Ok(BinaryTree::leaf()),
                [l, r] => Ok(BinaryTree::node(Self::from_value(l)?, Self::from_value(r)?)),
                _ => Err(shape("a tree array of length 0 or 2")),
            },
            _ => Err(shape("a tree string or array")),
        }
    }
}

impl Document for DyckPath {
    fn to_value(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_value(v: &Value) -> Result<Self> {
        v.as_str()
            .ok_or_else(|| shape("a string over U and R"))?
            .parse()
    }
}

impl Document for YoungDiagram {
    fn to_value(&self) -> Value {
        json!({ "n": self.ambient(), "rows": self.rows() })
    }

    fn from_value(v: &Value) -> Result<Self> {
        let n = uint(field(v, "n")?, "an integer n")?;
        let rows = uints(field(v, "rows")?, "a list of row lengths")?;
        YoungDiagram::new(n, rows)
    }
}

impl Document for GappedYoungDiagram {
    fn to_value(&self) -> Value {
        let boxes: Vec<[usize; 2]> = self.boxes().iter().map(|&(r, c)| [r, c]).collect();
        json!({ "n": self.ambient(), "boxes": boxes })
    }

    fn from_value(v: &Value) -> Result<Self> {
        let n = uint(field(v, "n")?, "an integer n")?;
        let raw = field(v, "boxes")?
            .as_array()
            .ok_or_else(|| shape("a list of boxes"))?;
        let boxes = raw
            .iter()
            .map(|b| pair(b, "a box [row, col]"))
            .collect::<Result<BTreeSet<_>>>()?;
        GappedYoungDiagram::new(n, boxes)
    }
}

impl Document for Interval {
    fn to_value(&self) -> Value {
        json!([self.a, self.b])
    }

    fn from_value(v: &Value) -> Result<Self> {
        let (a, b) = pair(v, "an interval [a, b]")?;
        Ok(Interval::new(a, b))
    }
}

pub(crate) fn balls_value(s: &BallSet) -> Value {
    Value::Array(s.iter().map(Document::to_value).collect())
}

pub(crate) fn balls_from_value(v: &Value) -> Result<BallSet> {
    v.as_array()
        .ok_or_else(|| shape("a list of intervals"))?
        .iter()
        .map(Interval::from_value)
        .collect()
}

impl Document for TorsionPair {
    fn to_value(&self) -> Value {
        json!({ "n": self.ambient(), "torsion": balls_value(self.torsion()), "free": balls_value(self.free()) })
    }

    fn from_value(v: &Value) -> Result<Self> {
        let n = uint(field(v, "n")?, "an integer n")?;
        let torsion = balls_from_value(field(v, "torsion")?)?;
        let free = balls_from_value(field(v, "free")?)?;
        TorsionPair::new(n, torsion, free)
    }
}

impl Document for Permutation213 {
    fn to_value(&self) -> Value {
        json!(self.values())
    }

    fn from_value(v: &Value) -> Result<Self> {
        Permutation213::new(uints(v, "a list of positive integers")?)
    }
}

macro_rules! serde_via_document {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.to_value().serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let v = Value::deserialize(d)?;
                <$t>::from_value(&v).map_err(de::Error::custom)
            }
        }
    )*};
}

serde_via_document!(
    BinaryTree,
    DyckPath,
    YoungDiagram,
    GappedYoungDiagram,
    Interval,
    TorsionPair,
    Permutation213
);
