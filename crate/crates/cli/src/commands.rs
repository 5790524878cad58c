use serde_json::{json, Value};

use kirillov::classification::{depth, heisenberg_quotient, metaplectic_degree_bound};
use kirillov::degeneration::{
    check_horizontal, check_simple, double_coset_reps, inner_coset_reps, levi_orbit_stabilizer_lie,
    p_orbit_dimension, search_cocharacters, RootDatum,
};
use kirillov::exact::{format_rational, Matrix, Subspace};
use kirillov::json::{coeffs_to_json, flag_from_json, flag_to_json, rational_strings, subspace_to_json};
use kirillov::lie::catalog::{gl_stable_polarization_labels, sp_stable_polarization_labels, Family};
use kirillov::orbits::describe;
use kirillov::polarization::{default_flags, is_polarization, vergne_polarization};

use crate::error::{CliError, Result};
use crate::input::{
    parse_integers, parse_json, parse_pattern, parse_usize, require, resolve_algebra, resolve_functional, Inputs, Target,
};

pub fn execute(command: &str, inputs: &Inputs) -> Result<Value> {
    match command {
        "orbit" => orbit(inputs),
        "classify" => classify(inputs),
        "polarize" => polarize(inputs),
        "stabilizer" => stabilizer(inputs),
        "degenerate" => degenerate(inputs),
        "cosets" => cosets(inputs),
        other => Err(CliError::UnknownCommand(other.to_string())),
    }
}

fn target_and_psi(inputs: &Inputs) -> Result<(Target, Vec<kirillov::Rational>)> {
    let target = resolve_algebra(require(inputs, "algebra")?)?;
    let psi = resolve_functional(&target, "psi", require(inputs, "psi")?)?;
    Ok((target, psi))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data")
}

/// The hand-entered flag-stable polarization for the matrix families.
fn stable_polarization(target: &Target) -> Option<(Vec<String>, Subspace)> {
    let labels = match target.family? {
        Family::GlUpper(n) => gl_stable_polarization_labels(n),
        Family::Sp(n) => sp_stable_polarization_labels(n),
        Family::Heisenberg(_) => return None,
    };
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let h = target.algebra.subalgebra_from_labels(&refs).ok()?;
    Some((labels, h))
}

fn orbit(inputs: &Inputs) -> Result<Value> {
    let (t, psi) = target_and_psi(inputs)?;
    let alg = &t.algebra;
    let d = describe(alg, &psi);
    let rep = depth(alg, &psi);
    Ok(json!({
        "algebra_dim": alg.dim(),
        "center_dim": alg.center().dim(),
        "orbit_dimension": d.dimension,
        "n_stabilizer_dim": d.n_stabilizer.dim(),
        "n_stabilizer": subspace_to_json(&d.n_stabilizer),
        "canonical_form": coeffs_to_json(alg, &d.canonical_form),
        "witness": d.witness.iter().map(|w| rational_strings(w)).collect::<Vec<_>>(),
        "depth": rep.depth,
        "vanishing_layer": rep.vanishing_layer,
        "classification": to_value(&rep.classification),
    }))
}

fn classify(inputs: &Inputs) -> Result<Value> {
    let (t, psi) = target_and_psi(inputs)?;
    let alg = &t.algebra;
    let rep = depth(alg, &psi);
    let mut out = json!({
        "depth": rep.depth,
        "classification": to_value(&rep.classification),
    });
    if rep.depth == 2 {
        let q = heisenberg_quotient(alg, &psi)?;
        out["symplectic_dim"] = json!(q.symplectic_space_dim);
        out["central_coefficient"] = json!(format_rational(&q.central_coefficient));
        out["quotient_steps"] = json!(q.quotient_chain.len());
        out["non_degenerate"] = json!(q.is_non_degenerate());
    }
    let s = levi_orbit_stabilizer_lie(alg, &t.levi, &psi);
    let candidates: Vec<Subspace> = stable_polarization(&t).map(|(_, h)| h).into_iter().collect();
    let bound = metaplectic_degree_bound(alg, &t.levi, &s, &psi, &candidates);
    out["degree_bound"] = to_value(&bound.bound);
    out["degree_reason"] = json!(bound.reason.tag());
    Ok(out)
}

fn polarize(inputs: &Inputs) -> Result<Value> {
    let (t, psi) = target_and_psi(inputs)?;
    let alg = &t.algebra;
    let flags = match inputs.get("flag") {
        Some(Value::String(s)) => vec![flag_from_json(alg.dim(), &parse_json("flag", s)?)?],
        Some(v) => vec![flag_from_json(alg.dim(), v)?],
        None => default_flags(alg),
    };
    let center = alg.center();
    let mut entries = Vec::new();
    for flag in &flags {
        let pol = vergne_polarization(alg, &psi, flag)?;
        entries.push(json!({
            "flag": flag_to_json(flag),
            "subspace": subspace_to_json(&pol.subspace),
            "dim": pol.subspace.dim(),
            "certified": pol.is_certified(),
            "contains_center": pol.subspace.contains_subspace(&center),
        }));
    }
    let mut out = json!({
        "polarization_dim": entries[0]["dim"],
        "certified": entries.iter().all(|e| e["certified"] == json!(true)),
        "contains_center": entries.iter().all(|e| e["contains_center"] == json!(true)),
        "polarizations": entries,
    });
    if let Some((labels, h)) = stable_polarization(&t) {
        out["stable_polarization"] = json!(labels);
        out["stable_polarization_certified"] = json!(is_polarization(alg, &psi, &h)?);
    }
    Ok(out)
}

fn stabilizer(inputs: &Inputs) -> Result<Value> {
    let (t, psi) = target_and_psi(inputs)?;
    let s = levi_orbit_stabilizer_lie(&t.algebra, &t.levi, &psi);
    let mut out = json!({
        "levi_labels": t.levi.labels(),
        "stabilizer_dim": s.dim(),
        "stabilizer": subspace_to_json(&s),
        "p_orbit_dimension": p_orbit_dimension(&t.algebra, &t.levi, &psi),
    });
    if let Some(p) = inputs.get("pattern") {
        let pattern = parse_pattern("pattern", p)?;
        let refs: Vec<&str> = pattern.iter().map(String::as_str).collect();
        out["pattern_match"] = json!(s == t.levi.diagonal_pattern(&refs)?);
    }
    Ok(out)
}

fn degenerate(inputs: &Inputs) -> Result<Value> {
    let t = resolve_algebra(require(inputs, "algebra")?)?;
    let psi = resolve_functional(&t, "psi", require(inputs, "psi")?)?;
    let psi0 = resolve_functional(&t, "psi0", require(inputs, "psi0")?)?;
    let roots = t.family.and_then(|f| RootDatum::for_family(f).ok());
    let mut out = json!({});
    if let Some(l) = inputs.get("lambda") {
        let lambda = parse_integers("lambda", l)?;
        let horizontal = check_horizontal(&t.algebra, &t.levi, &psi, &psi0, &lambda)?;
        let cert = match &roots {
            Some(rd) if horizontal.is_horizontal() => check_simple(&t.algebra, &t.levi, rd, &psi, &psi0, &lambda)?,
            _ => horizontal,
        };
        out["horizontal"] = json!(cert.is_horizontal());
        out["simple"] = json!(cert.is_simple());
        out["delta_root"] = json!(cert.delta_root);
        out["p_orbit_dims"] = json!(cert.p_orbit_dims);
        out["certificate"] = to_value(&cert);
    }
    if let Some(b) = inputs.get("search") {
        let bound = match b {
            Value::Bool(true) => 2,
            other => parse_usize("search", other)? as i64,
        };
        let found = search_cocharacters(&t.algebra, &t.levi, &psi, &psi0, bound)?;
        out["search_bound"] = json!(bound);
        out["found_count"] = json!(found.len());
        out["found_any"] = json!(!found.is_empty());
        out["found"] = json!(found);
    }
    if out.as_object().is_some_and(|m| m.is_empty()) {
        return Err(CliError::MissingInput("lambda or search".into()));
    }
    Ok(out)
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| rational_strings(r)).collect()
}

fn cosets(inputs: &Inputs) -> Result<Value> {
    let n = parse_usize("n", require(inputs, "n")?)?;
    let double = double_coset_reps(n)?;
    let mut out = json!({
        "double_coset_count": double.len(),
        "double_coset_reps": double.iter().map(matrix_strings).collect::<Vec<_>>(),
    });
    if n >= 5 {
        let inner = inner_coset_reps(n)?;
        out["inner_coset_count"] = json!(inner.len());
        out["inner_coset_reps"] = json!(inner.iter().map(matrix_strings).collect::<Vec<_>>());
    }
    Ok(out)
}
