//! Levi stabilizers of coadjoint orbits, cocharacter limits and horizontal
//! degenerations between functionals.

mod cosets;
mod roots;

pub use cosets::{double_coset_rep, double_coset_reps, inner_coset_rep, inner_coset_reps};
pub use roots::{GroupType, Root, RootDatum};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{is_zero_vec, rat, sub_vec, zero_vec, Matrix, Rational, Subspace};
use crate::lie::{LeviAction, LieAlgebra};
use crate::orbits::{orbit_dimension, same_orbit, skew_form};

/// `X·psi` as a coefficient vector, `(X·psi)(Y) = -psi([X, Y])`.
fn levi_tangent(levi: &LeviAction, k: usize, psi: &[Rational]) -> Vec<Rational> {
    levi.action()[k].vec_mul(psi).into_iter().map(|c| -c).collect()
}

/// Lie algebra of the stabilizer in `M` of the orbit of `psi`: the Levi elements
/// `X` with `X·psi` tangent to the orbit, i.e. in the row space of the skew form.
pub fn levi_orbit_stabilizer_lie(alg: &LieAlgebra, levi: &LeviAction, psi: &[Rational]) -> Subspace {
    if levi.dim() == 0 {
        return Subspace::zero(0);
    }
    let tangent = skew_form(alg, psi).matrix.row_space();
    let residues: Vec<Vec<Rational>> = (0..levi.dim()).map(|k| tangent.reduce(&levi_tangent(levi, k, psi))).collect();
    Matrix::from_columns(alg.dim(), &residues).kernel()
}

/// Dimension of the orbit of `psi` under `P = MN` at the Lie level: the rank of
/// `(X, Y) -> X·psi + psi ∘ ad Y`.
pub fn p_orbit_dimension(alg: &LieAlgebra, levi: &LeviAction, psi: &[Rational]) -> usize {
    let mut rows = skew_form(alg, psi).matrix.to_rows();
    rows.extend((0..levi.dim()).map(|k| levi_tangent(levi, k, psi)));
    Matrix::from_rows(alg.dim(), rows).expect("consistent width").rank()
}

/// Weight `-<lambda, alpha_i>` of `t -> lambda(t)` on each coordinate of a functional.
pub fn cocharacter_weights(torus_weights: &[Vec<i64>], lambda: &[i64]) -> Vec<i64> {
    torus_weights
        .iter()
        .map(|alpha| -alpha.iter().zip(lambda).map(|(a, l)| a * l).sum::<i64>())
        .collect()
}

/// `lim_{t -> 0} lambda(t)·psi`, or `None` when some coordinate in the support of
/// `psi` has negative weight. The limit keeps exactly the weight-zero coordinates.
pub fn cocharacter_limit(torus_weights: &[Vec<i64>], lambda: &[i64], psi: &[Rational]) -> Option<Vec<Rational>> {
    let w = cocharacter_weights(torus_weights, lambda);
    let mut out = zero_vec(psi.len());
    for (i, c) in psi.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match w[i] {
            x if x < 0 => return None,
            0 => out[i] = c.clone(),
            _ => {}
        }
    }
    Some(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HorizontalChecks {
    pub distinct_orbits: bool,
    pub equal_orbit_dims: bool,
    pub limit_matches: bool,
    pub lambda_commutes_with_stabilizer: bool,
}

impl HorizontalChecks {
    pub fn all(&self) -> bool {
        self.distinct_orbits && self.equal_orbit_dims && self.limit_matches && self.lambda_commutes_with_stabilizer
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SimpleChecks {
    pub p_orbit_dim_drop_one: bool,
    pub delta_is_simple_negative_root_multiple_orthogonal_to_j: bool,
}

impl SimpleChecks {
    pub fn all(&self) -> bool {
        self.p_orbit_dim_drop_one && self.delta_is_simple_negative_root_multiple_orthogonal_to_j
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerationCertificate {
    #[serde(serialize_with = "crate::json::ser_vec")]
    pub psi: Vec<Rational>,
    #[serde(serialize_with = "crate::json::ser_vec")]
    pub psi0: Vec<Rational>,
    pub lambda_weights: Vec<i64>,
    pub checks: HorizontalChecks,
    pub simple_checks: Option<SimpleChecks>,
    pub orbit_dims: (usize, usize),
    /// Cocharacter weight of each coordinate of the functionals.
    pub coordinate_weights: Vec<i64>,
    pub p_orbit_dims: Option<(usize, usize)>,
    /// Label of the root vector dual to `psi - psi0` when it is a single coordinate.
    pub delta_root: Option<String>,
}

impl DegenerationCertificate {
    pub fn is_horizontal(&self) -> bool {
        self.checks.all()
    }

    pub fn is_simple(&self) -> bool {
        self.is_horizontal() && self.simple_checks.is_some_and(|s| s.all())
    }
}

/// The torus element `d lambda` in Levi coordinates.
fn lambda_element(levi: &LeviAction, lambda: &[i64]) -> Vec<Rational> {
    let mut x = zero_vec(levi.dim());
    for (k, &l) in lambda.iter().enumerate() {
        x[k] = rat(l);
    }
    x
}

/// Checks the four conditions of a horizontal degeneration `psi ~> psi0` along
/// the torus cocharacter `lambda`.
pub fn check_horizontal(
    alg: &LieAlgebra,
    levi: &LeviAction,
    psi: &[Rational],
    psi0: &[Rational],
    lambda: &[i64],
) -> Result<DegenerationCertificate> {
    if is_zero_vec(psi) || is_zero_vec(psi0) {
        return Err(Error::TrivialFunctional);
    }
    if levi.torus_rank() == 0 {
        return Err(Error::MissingTorusWeights);
    }
    if lambda.len() != levi.torus_rank() {
        return Err(Error::DimensionMismatch { expected: levi.torus_rank(), found: lambda.len() });
    }
    let distinct = same_orbit(alg, psi, psi0)?.is_none();
    let dims = (orbit_dimension(alg, psi), orbit_dimension(alg, psi0));
    let limit = cocharacter_limit(levi.weights(), lambda, psi);
    let d_lambda = lambda_element(levi, lambda);
    let stab = levi_orbit_stabilizer_lie(alg, levi, psi);
    let commutes = stab.basis().iter().all(|x| is_zero_vec(&levi.bracket(&d_lambda, x)));
    let checks = HorizontalChecks {
        distinct_orbits: distinct,
        equal_orbit_dims: dims.0 == dims.1,
        limit_matches: limit.as_deref() == Some(psi0),
        lambda_commutes_with_stabilizer: commutes,
    };
    Ok(DegenerationCertificate {
        psi: psi.to_vec(),
        psi0: psi0.to_vec(),
        lambda_weights: lambda.to_vec(),
        checks,
        simple_checks: None,
        orbit_dims: dims,
        coordinate_weights: cocharacter_weights(levi.weights(), lambda),
        p_orbit_dims: None,
        delta_root: None,
    })
}

/// Adds the two conditions of a simple degeneration. Under the trace form the
/// coordinate functional dual to the root vector `e_alpha` corresponds to
/// `e_{-alpha}`, so `psi - psi0` must be supported on one coordinate whose root is
/// simple and orthogonal to every root in `J`.
pub fn check_simple(
    alg: &LieAlgebra,
    levi: &LeviAction,
    roots: &RootDatum,
    psi: &[Rational],
    psi0: &[Rational],
    lambda: &[i64],
) -> Result<DegenerationCertificate> {
    let mut cert = check_horizontal(alg, levi, psi, psi0, lambda)?;
    if !cert.is_horizontal() {
        return Err(Error::NotHorizontal);
    }
    let p = (p_orbit_dimension(alg, levi, psi), p_orbit_dimension(alg, levi, psi0));
    let delta = sub_vec(psi, psi0);
    let support: Vec<usize> = (0..delta.len()).filter(|&i| !delta[i].is_zero()).collect();
    let root = match support.as_slice() {
        [i] => roots.root_at(*i),
        _ => None,
    };
    let simple_root = root.is_some_and(|r| roots.is_simple(r.coordinate) && roots.orthogonal_to_j(&r.weight));
    cert.p_orbit_dims = Some(p);
    cert.delta_root = root.map(|r| r.label.clone());
    cert.simple_checks = Some(SimpleChecks {
        p_orbit_dim_drop_one: p.0 == p.1 + 1,
        delta_is_simple_negative_root_multiple_orthogonal_to_j: simple_root,
    });
    Ok(cert)
}

/// Whether the Levi stabilizer of `psi` is contained in that of `psi0`.
pub fn stabilizer_monotonicity_check(alg: &LieAlgebra, levi: &LeviAction, psi: &[Rational], psi0: &[Rational]) -> bool {
    levi_orbit_stabilizer_lie(alg, levi, psi0).contains_subspace(&levi_orbit_stabilizer_lie(alg, levi, psi))
}

/// Every integer vector in `[-bound, bound]^rank`, in lexicographic order.
pub fn cocharacter_box(rank: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-bound..=bound).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// All cocharacters in `[-bound, bound]^rank` certifying `psi ~> psi0` as a
/// horizontal degeneration. An empty result means no certificate was found in the
/// box, not that the pair is not a degeneration.
pub fn search_cocharacters(
    alg: &LieAlgebra,
    levi: &LeviAction,
    psi: &[Rational],
    psi0: &[Rational],
    bound: i64,
) -> Result<Vec<Vec<i64>>> {
    if levi.torus_rank() == 0 {
        return Err(Error::MissingTorusWeights);
    }
    if is_zero_vec(psi) || is_zero_vec(psi0) {
        return Err(Error::TrivialFunctional);
    }
    let candidates: Vec<Vec<i64>> = cocharacter_box(levi.torus_rank(), bound)
        .into_iter()
        .filter(|l| cocharacter_limit(levi.weights(), l, psi).as_deref() == Some(psi0))
        .collect();
    if candidates.is_empty() {
        return Ok(candidates);
    }
    let mut found = Vec::new();
    for l in candidates {
        if check_horizontal(alg, levi, psi, psi0, &l)?.is_horizontal() {
            found.push(l);
        }
    }
    Ok(found)
}

/// Distinct nonzero limits `psi0 != psi` reachable from `psi` by cocharacters in the
/// box that pass the horizontal checks, with the first cocharacter found for each.
pub fn horizontal_degenerations(
    alg: &LieAlgebra,
    levi: &LeviAction,
    psi: &[Rational],
    bound: i64,
) -> Result<Vec<(Vec<i64>, Vec<Rational>)>> {
    if levi.torus_rank() == 0 {
        return Err(Error::MissingTorusWeights);
    }
    let mut out: Vec<(Vec<i64>, Vec<Rational>)> = Vec::new();
    for l in cocharacter_box(levi.torus_rank(), bound) {
        let Some(limit) = cocharacter_limit(levi.weights(), &l, psi) else { continue };
        if is_zero_vec(&limit) || limit == psi || out.iter().any(|(_, seen)| *seen == limit) {
            continue;
        }
        if check_horizontal(alg, levi, psi, &limit, &l)?.is_horizontal() {
            out.push((l, limit));
        }
    }
    Ok(out)
}
