//! JSON encodings. Rationals are strings `"p/q"` (or `"p"`), indices are 0-based.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Rational, Subspace};
use crate::lie::{BracketEntry, LieAlgebra};

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn ser_vec<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&format_rational(r))?;
    }
    seq.end()
}

pub fn ser_vecs<S: Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        seq.serialize_element(&rational_strings(row))?;
    }
    seq.end()
}

pub fn ser_subspace<S: Serializer>(sub: &Subspace, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(3))?;
    map.serialize_entry("ambient_dim", &sub.ambient_dim())?;
    map.serialize_entry("dim", &sub.dim())?;
    let basis: Vec<Vec<String>> = sub.basis().iter().map(|b| rational_strings(b)).collect();
    map.serialize_entry("basis", &basis)?;
    map.end()
}

pub fn ser_opt_subspaces<S: Serializer>(v: &Option<Vec<Subspace>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(list) => {
            let values: Vec<Value> = list.iter().map(subspace_to_json).collect();
            values.serialize(s)
        }
    }
}

pub fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn subspace_to_json(s: &Subspace) -> Value {
    let basis: Vec<Vec<String>> = s.basis().iter().map(|b| rational_strings(b)).collect();
    json!({ "ambient_dim": s.ambient_dim(), "dim": s.dim(), "basis": basis })
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Serialize, Deserialize)]
struct BracketOut {
    k: usize,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct BracketJson {
    i: usize,
    j: usize,
    out: Vec<BracketOut>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<BracketJson>,
}

pub fn algebra_to_json(alg: &LieAlgebra) -> Value {
    let brackets = alg
        .bracket_entries()
        .map(|(i, j, out)| BracketJson {
            i,
            j,
            out: out.iter().map(|(k, c)| BracketOut { k: *k, c: format_rational(c) }).collect(),
        })
        .collect();
    serde_json::to_value(AlgebraJson { dim: alg.dim(), labels: Some(alg.labels().to_vec()), brackets })
        .expect("plain data")
}

/// Parses `{"dim": n, "labels": [...], "brackets": [{"i", "j", "out": [{"k", "c"}]}]}`.
/// Labels default to `x_1..x_n`.
pub fn algebra_from_json(value: &Value) -> Result<LieAlgebra> {
    let raw: AlgebraJson = serde_json::from_value(value.clone()).map_err(parse_err)?;
    let labels = match raw.labels {
        Some(l) if l.len() != raw.dim => {
            return Err(Error::DimensionMismatch { expected: raw.dim, found: l.len() })
        }
        Some(l) => l,
        None => crate::lie::default_labels(raw.dim),
    };
    let mut entries: Vec<BracketEntry> = Vec::new();
    for (pos, b) in raw.brackets.into_iter().enumerate() {
        let out = b
            .out
            .into_iter()
            .map(|o| {
                parse_rational(&o.c)
                    .map(|c| (o.k, c))
                    .map_err(|e| Error::Parse(format!("brackets[{pos}].out: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        entries.push((b.i, b.j, out));
    }
    LieAlgebra::new(labels, entries)
}

/// `{label: "p/q"}` for the nonzero coordinates, in basis order.
pub fn coeffs_to_json(alg: &LieAlgebra, psi: &[Rational]) -> Value {
    let mut map = Map::new();
    for (label, c) in alg.labels().iter().zip(psi) {
        if !num_traits::Zero::is_zero(c) {
            map.insert(label.clone(), Value::String(format_rational(c)));
        }
    }
    Value::Object(map)
}

pub fn functional_to_json(name: &str, alg: &LieAlgebra, psi: &[Rational]) -> Value {
    json!({ "algebra": name, "coeffs": coeffs_to_json(alg, psi) })
}

/// Accepts either `{"coeffs": {...}}` (optionally with an `"algebra"` key) or a
/// bare `{label: value}` map. Values may be strings or integers.
pub fn functional_from_json(alg: &LieAlgebra, value: &Value) -> Result<Vec<Rational>> {
    let map = match value.get("coeffs") {
        Some(inner) => inner,
        None => value,
    };
    let map = map
        .as_object()
        .ok_or_else(|| Error::Parse("functional must be a JSON object of label -> rational".into()))?;
    let mut out = crate::exact::zero_vec(alg.dim());
    for (label, v) in map {
        let idx = alg.label_index(label)?;
        out[idx] += value_to_rational(v).map_err(|e| Error::Parse(format!("coeffs.{label}: {e}")))?;
    }
    Ok(out)
}

pub fn value_to_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(crate::exact::rat)
            .ok_or_else(|| Error::Parse(format!("non-integer number {n}; use a \"p/q\" string"))),
        other => Err(Error::Parse(format!("expected a rational, found {other}"))),
    }
}

/// A flag as a list of coordinate index sets, one per member.
pub fn flag_from_json(dim: usize, value: &Value) -> Result<Vec<Subspace>> {
    let sets: Vec<Vec<usize>> = serde_json::from_value(value.clone()).map_err(parse_err)?;
    sets.into_iter()
        .map(|set| {
            if let Some(&bad) = set.iter().find(|&&i| i >= dim) {
                return Err(Error::IndexOutOfRange { i: bad, j: bad, dim });
            }
            Ok(Subspace::coordinate(dim, set))
        })
        .collect()
}

/// Coordinate index sets of a flag whose members are coordinate subspaces.
pub fn flag_to_json(flag: &[Subspace]) -> Value {
    let members: Vec<Value> = flag
        .iter()
        .map(|s| match s.coordinate_indices() {
            Some(idx) => json!(idx),
            None => subspace_to_json(s),
        })
        .collect();
    Value::Array(members)
}
