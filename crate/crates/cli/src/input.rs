//! Resolution of command inputs: catalog names, JSON algebras, functionals and shorthands.

use serde_json::{Map, Value};

use kirillov::exact::{parse_rational, Rational};
use kirillov::json::{algebra_from_json, functional_from_json};
use kirillov::lie::catalog::{self, gl_label, Family};
use kirillov::{LeviAction, LieAlgebra};

use crate::error::{CliError, Result};

pub type Inputs = Map<String, Value>;

pub struct Target {
    pub family: Option<Family>,
    pub algebra: LieAlgebra,
    pub levi: LeviAction,
}

pub fn parse_json(what: &str, text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| CliError::json(what, e))
}

pub fn require<'a>(inputs: &'a Inputs, key: &str) -> Result<&'a Value> {
    inputs.get(key).ok_or_else(|| CliError::MissingInput(key.to_string()))
}

/// A string value that looks like JSON is parsed; anything else is returned as is.
fn expand(field: &str, v: &Value) -> Result<Value> {
    match v {
        Value::String(s) if s.trim_start().starts_with(['{', '[']) => parse_json(field, s),
        other => Ok(other.clone()),
    }
}

/// A catalog name such as `gl_upper:4`, or an algebra JSON object (which gets a
/// trivial Levi action).
pub fn resolve_algebra(v: &Value) -> Result<Target> {
    match expand("algebra", v)? {
        Value::String(name) => {
            let e = catalog::lookup(&name)?;
            Ok(Target { family: Some(e.family), algebra: e.algebra, levi: e.levi })
        }
        obj @ Value::Object(_) => {
            Ok(Target { family: None, algebra: algebra_from_json(&obj)?, levi: LeviAction::trivial() })
        }
        other => Err(CliError::invalid("algebra", format!("expected a catalog name or object, found {other}"))),
    }
}

/// A JSON functional, or one of the shorthands `psi_ab(a,b)` and `f(a)`.
pub fn resolve_functional(target: &Target, field: &str, v: &Value) -> Result<Vec<Rational>> {
    match expand(field, v)? {
        Value::String(s) => shorthand(target, field, &s),
        obj @ Value::Object(_) => Ok(functional_from_json(&target.algebra, &obj)?),
        other => Err(CliError::invalid(field, format!("expected a functional, found {other}"))),
    }
}

fn call_args<'a>(s: &'a str, name: &str) -> Option<Vec<&'a str>> {
    let inner = s.trim().strip_prefix(name)?.trim_start().strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.split(',').map(str::trim).collect())
}

fn rationals(field: &str, args: &[&str], count: usize) -> Result<Vec<Rational>> {
    if args.len() != count {
        return Err(CliError::invalid(field, format!("expected {count} arguments, found {}", args.len())));
    }
    args.iter().map(|a| parse_rational(a).map_err(|e| CliError::invalid(field, e.to_string()))).collect()
}

fn shorthand(target: &Target, field: &str, s: &str) -> Result<Vec<Rational>> {
    let alg = &target.algebra;
    if let Some(args) = call_args(s, "psi_ab") {
        if target.family != Some(Family::GlUpper(4)) {
            return Err(CliError::invalid(field, "psi_ab(a,b) is defined on gl_upper:4"));
        }
        let ab = rationals(field, &args, 2)?;
        return Ok(kirillov::orbits::functional(alg, &[("e_1,4", ab[0].clone()), ("e_2,3", ab[1].clone())])?);
    }
    if let Some(args) = call_args(s, "f") {
        let a = rationals(field, &args, 1)?.remove(0);
        let label = match target.family {
            Some(Family::GlUpper(n)) => gl_label(1, n),
            Some(Family::Sp(n)) => gl_label(1, 2 * n),
            Some(Family::Heisenberg(_)) => "z".to_string(),
            None => return Err(CliError::invalid(field, "f(a) needs a catalog algebra")),
        };
        return Ok(kirillov::orbits::functional(alg, &[(&label, a)])?);
    }
    Err(CliError::invalid(field, format!("unrecognized functional {s:?}")))
}

/// `"0,0,1,0"` or `[0, 0, 1, 0]`.
pub fn parse_integers(field: &str, v: &Value) -> Result<Vec<i64>> {
    match expand(field, v)? {
        Value::String(s) => s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| CliError::invalid(field, format!("{t:?}: {e}"))))
            .collect(),
        Value::Array(items) => items
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| CliError::invalid(field, format!("{x} is not an integer"))))
            .collect(),
        other => Err(CliError::invalid(field, format!("expected integers, found {other}"))),
    }
}

/// `"x,y,y,x"` or `["x", "y", "y", "x"]`.
pub fn parse_pattern(field: &str, v: &Value) -> Result<Vec<String>> {
    match expand(field, v)? {
        Value::String(s) => Ok(s.split(',').map(|t| t.trim().to_string()).collect()),
        Value::Array(items) => items
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| CliError::invalid(field, format!("{x} is not a string"))))
            .collect(),
        other => Err(CliError::invalid(field, format!("expected a pattern, found {other}"))),
    }
}

pub fn parse_usize(field: &str, v: &Value) -> Result<usize> {
    match v {
        Value::Number(n) => n.as_u64().map(|x| x as usize),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
    .ok_or_else(|| CliError::invalid(field, format!("expected a nonnegative integer, found {v}")))
}
