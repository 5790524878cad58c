//! Coadjoint action and orbit computations on coefficient vectors.
//!
//! A functional is stored as its coefficient vector in the dual basis, so
//! `psi(x) = dot(psi, x)`. Group elements of `N` are represented by their
//! logarithms; the coadjoint action of `exp(y)` is `psi -> psi ∘ exp(-ad y)`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{dot, is_zero_vec, neg_vec, scale_vec, zero_vec, Matrix, Rational, Subspace};
use crate::lie::{LeviAction, LieAlgebra};

/// Builds a coefficient vector from `(label, value)` pairs, other coordinates zero.
pub fn functional(alg: &LieAlgebra, coeffs: &[(&str, Rational)]) -> Result<Vec<Rational>> {
    let mut out = zero_vec(alg.dim());
    for (label, c) in coeffs {
        out[alg.label_index(label)?] += c;
    }
    Ok(out)
}

fn check_len(alg: &LieAlgebra, v: &[Rational]) -> Result<()> {
    if v.len() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: v.len() });
    }
    Ok(())
}

/// `psi ∘ exp(-ad y)`, exact because `ad y` is nilpotent.
pub fn coadjoint_act(alg: &LieAlgebra, y: &[Rational], psi: &[Rational]) -> Vec<Rational> {
    if is_zero_vec(y) {
        return psi.to_vec();
    }
    let flow = alg.ad(&neg_vec(y)).exp_nilpotent();
    flow.vec_mul(psi)
}

/// Applies the flows of a witness in order.
pub fn replay(alg: &LieAlgebra, witness: &[Vec<Rational>], psi: &[Rational]) -> Vec<Rational> {
    witness.iter().fold(psi.to_vec(), |acc, y| coadjoint_act(alg, y, &acc))
}

/// The form `(x_i, x_j) -> psi([x_i, x_j])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    pub matrix: Matrix,
}

impl SkewForm {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn radical(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.matrix.transpose() == self.matrix.scale(&-Rational::one())
    }

    /// The form restricted to a subspace, in the echelon basis of that subspace.
    pub fn restrict(&self, s: &Subspace) -> SkewForm {
        let basis = s.basis();
        let matrix = Matrix::from_fn(basis.len(), basis.len(), |a, b| dot(&self.matrix.mul_vec(&basis[b]), &basis[a]));
        SkewForm { matrix }
    }
}

pub fn skew_form(alg: &LieAlgebra, psi: &[Rational]) -> SkewForm {
    let n = alg.dim();
    let mut matrix = Matrix::zeros(n, n);
    for (i, j, out) in alg.bracket_entries() {
        let v: Rational = out.iter().map(|(k, c)| c * &psi[*k]).sum();
        if !v.is_zero() {
            matrix.set(j, i, -v.clone());
            matrix.set(i, j, v);
        }
    }
    SkewForm { matrix }
}

pub fn orbit_dimension(alg: &LieAlgebra, psi: &[Rational]) -> usize {
    skew_form(alg, psi).rank()
}

/// Lie algebra of the stabilizer of `psi` in `N`: the radical of the skew form.
pub fn n_stabilizer(alg: &LieAlgebra, psi: &[Rational]) -> Subspace {
    skew_form(alg, psi).radical()
}

/// Result of the normalization pass: the canonical representative, the flows
/// reaching it, and the positions (in the adapted basis) where a flow was used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub canonical: Vec<Rational>,
    pub witness: Vec<Vec<Rational>>,
    pub jumps: Vec<usize>,
}

/// Walks the basis adapted to the lower central series, deepest term first. At
/// step `k` the subspace `S` is the stabilizer of `psi` restricted to the ideal
/// spanned by `z_1..z_{k-1}`; every flow along `S` changes the value on `z_k`
/// linearly. If some basis vector `x` of `S` pairs nontrivially with `z_k`, the
/// flow along `x` zeroes `psi(z_k)` and `S` shrinks by one; otherwise `psi(z_k)`
/// is an orbit invariant and is kept.
pub fn normalize(alg: &LieAlgebra, psi: &[Rational]) -> Normalization {
    let n = alg.dim();
    let basis = alg.adapted_basis(false);
    let mut current = psi.to_vec();
    let mut stab = Subspace::full(n);
    let mut witness = Vec::new();
    let mut jumps = Vec::new();
    for (k, z) in basis.iter().enumerate() {
        let pair = |x: &[Rational], ell: &[Rational]| dot(ell, &alg.bracket(x, z));
        let jump = stab.basis().iter().find(|x| !pair(x, &current).is_zero()).cloned();
        let Some(x) = jump else { continue };
        jumps.push(k);
        let value = dot(&current, z);
        if !value.is_zero() {
            let t = &value / &pair(&x, &current);
            let y = scale_vec(&t, &x);
            current = coadjoint_act(alg, &y, &current);
            witness.push(y);
        }
        let cut: Vec<Vec<Rational>> = stab
            .basis()
            .iter()
            .map(|b| vec![pair(b, &current)])
            .collect();
        let constraint = Matrix::from_rows(1, cut).expect("single column").transpose();
        let coeffs = constraint.kernel();
        stab = Subspace::span(n, coeffs.basis().iter().map(|c| stab.combine(c)));
    }
    Normalization { canonical: current, witness, jumps }
}

/// A distinguished point of the orbit of `psi`: equal for two functionals exactly
/// when they lie in the same orbit.
pub fn canonical_form(alg: &LieAlgebra, psi: &[Rational]) -> Vec<Rational> {
    normalize(alg, psi).canonical
}

/// Flows `y_1..y_k` with `replay(witness, psi1) == psi2`, or `None` when the
/// functionals lie in different orbits.
pub fn same_orbit(alg: &LieAlgebra, psi1: &[Rational], psi2: &[Rational]) -> Result<Option<Vec<Vec<Rational>>>> {
    if psi1.len() != psi2.len() {
        return Err(Error::AlgebraMismatch { left: psi1.len(), right: psi2.len() });
    }
    check_len(alg, psi1)?;
    let a = normalize(alg, psi1);
    let b = normalize(alg, psi2);
    if a.canonical != b.canonical {
        return Ok(None);
    }
    let mut witness: Vec<Vec<Rational>> = Vec::new();
    for y in a.witness.into_iter().chain(b.witness.into_iter().rev().map(|y| neg_vec(&y))) {
        if is_zero_vec(&y) {
            continue;
        }
        if witness.last().is_some_and(|last| neg_vec(last) == y) {
            witness.pop();
        } else {
            witness.push(y);
        }
    }
    Ok(Some(witness))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDescriptor {
    #[serde(serialize_with = "crate::json::ser_vec")]
    pub representative: Vec<Rational>,
    pub dimension: usize,
    #[serde(serialize_with = "crate::json::ser_subspace")]
    pub n_stabilizer: Subspace,
    #[serde(serialize_with = "crate::json::ser_vec")]
    pub canonical_form: Vec<Rational>,
    #[serde(serialize_with = "crate::json::ser_vecs")]
    pub witness: Vec<Vec<Rational>>,
}

pub fn describe(alg: &LieAlgebra, psi: &[Rational]) -> OrbitDescriptor {
    let form = skew_form(alg, psi);
    let norm = normalize(alg, psi);
    OrbitDescriptor {
        representative: psi.to_vec(),
        dimension: form.rank(),
        n_stabilizer: form.radical(),
        canonical_form: norm.canonical,
        witness: norm.witness,
    }
}

/// Coefficients of the contragredient: `-psi`.
pub fn dual_functional(psi: &[Rational]) -> Vec<Rational> {
    neg_vec(psi)
}

/// `psi^g = psi ∘ exp(-ad X)` for the Levi element `X = g_log`, computed exactly
/// when `ad X` is nilpotent on `n`.
pub fn conjugate_functional(levi: &LeviAction, g_log: &[Rational], psi: &[Rational]) -> Result<Vec<Rational>> {
    if g_log.len() != levi.dim() {
        return Err(Error::DimensionMismatch { expected: levi.dim(), found: g_log.len() });
    }
    if is_zero_vec(g_log) {
        return Ok(psi.to_vec());
    }
    let ad = levi.act(g_log);
    let flow = ad.scale(&-Rational::one()).try_exp_nilpotent().ok_or(Error::NotExactlyExponentiable)?;
    Ok(flow.vec_mul(psi))
}

/// `psi^t` for a torus element with coordinates `t` (one nonzero scalar per torus
/// direction): coordinate `i` is multiplied by `prod_k t_k^(-w_ik)`.
pub fn torus_conjugate(levi: &LeviAction, t: &[Rational], psi: &[Rational]) -> Result<Vec<Rational>> {
    if levi.torus_rank() == 0 {
        return Err(Error::MissingTorusWeights);
    }
    if t.len() != levi.torus_rank() {
        return Err(Error::DimensionMismatch { expected: levi.torus_rank(), found: t.len() });
    }
    if t.iter().any(Zero::is_zero) {
        return Err(Error::SingularTorusElement);
    }
    let weights = levi.weights();
    if weights.len() != psi.len() {
        return Err(Error::DimensionMismatch { expected: weights.len(), found: psi.len() });
    }
    Ok(psi
        .iter()
        .zip(weights)
        .map(|(c, w)| {
            let scale: Rational = t.iter().zip(w).map(|(tk, &wk)| pow(tk, -wk)).product();
            c * scale
        })
        .collect())
}

fn pow(base: &Rational, e: i64) -> Rational {
    let b = if e < 0 { base.recip() } else { base.clone() };
    num_traits::pow(b, e.unsigned_abs() as usize)
}
