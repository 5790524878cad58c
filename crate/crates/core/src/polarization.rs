use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Rational, Subspace};
use crate::lie::{LeviAction, LieAlgebra};
use crate::orbits::{orbit_dimension, skew_form};

/// A subalgebra subordinate to a functional, with the checks that were run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polarization {
    #[serde(serialize_with = "crate::json::ser_subspace")]
    pub subspace: Subspace,
    #[serde(serialize_with = "crate::json::ser_opt_subspaces")]
    pub flag_used: Option<Vec<Subspace>>,
    pub subordinate_certificate: bool,
    pub maximal_certificate: bool,
}

impl Polarization {
    pub fn is_certified(&self) -> bool {
        self.subordinate_certificate && self.maximal_certificate
    }
}

/// Whether `psi([a, b]) = 0` on all basis pairs of `h`. Errors if `h` is not a
/// subalgebra.
pub fn is_subordinate(alg: &LieAlgebra, psi: &[Rational], h: &Subspace) -> Result<bool> {
    alg.check_subalgebra(h)?;
    let form = skew_form(alg, psi).restrict(h);
    Ok(form.matrix.is_zero())
}

/// Subordinate and of dimension `dim n - dim O_psi / 2`.
pub fn is_polarization(alg: &LieAlgebra, psi: &[Rational], h: &Subspace) -> Result<bool> {
    let sub = is_subordinate(alg, psi, h)?;
    Ok(sub && is_maximal_dimension(alg, psi, h))
}

fn is_maximal_dimension(alg: &LieAlgebra, psi: &[Rational], h: &Subspace) -> bool {
    2 * h.dim() == 2 * alg.dim() - orbit_dimension(alg, psi)
}

/// Runs both checks on `h` and packages the result.
pub fn certify(alg: &LieAlgebra, psi: &[Rational], h: Subspace, flag: Option<Vec<Subspace>>) -> Result<Polarization> {
    let subordinate = is_subordinate(alg, psi, &h)?;
    let maximal = is_maximal_dimension(alg, psi, &h);
    Ok(Polarization { subspace: h, flag_used: flag, subordinate_certificate: subordinate, maximal_certificate: maximal })
}

/// Validates a complete flag of ideals `n_1 ⊂ ... ⊂ n_d = n` with `dim n_k = k`,
/// dropping a leading zero member if present.
pub fn check_flag(alg: &LieAlgebra, flag: &[Subspace]) -> Result<Vec<Subspace>> {
    let n = alg.dim();
    let members: Vec<Subspace> = match flag.first() {
        Some(first) if first.is_zero() => flag[1..].to_vec(),
        _ => flag.to_vec(),
    };
    if members.len() != n {
        return Err(Error::NotAFlag(format!("expected {n} nonzero members, found {}", members.len())));
    }
    let mut prev = Subspace::zero(n);
    for (k, m) in members.iter().enumerate() {
        if m.ambient_dim() != n {
            return Err(Error::NotAFlag(format!("member {} lives in dimension {}", k + 1, m.ambient_dim())));
        }
        if m.dim() != k + 1 {
            return Err(Error::NotAFlag(format!("member {} has dimension {}", k + 1, m.dim())));
        }
        if !m.contains_subspace(&prev) {
            return Err(Error::NotAFlag(format!("member {} does not contain member {}", k + 1, k)));
        }
        if !alg.is_ideal(m) {
            return Err(Error::NotIdeals(k + 1));
        }
        prev = m.clone();
    }
    Ok(members)
}

/// `h = sum_k rad(B_psi restricted to n_k)` over a complete flag of ideals.
pub fn vergne_polarization(alg: &LieAlgebra, psi: &[Rational], flag: &[Subspace]) -> Result<Polarization> {
    let members = check_flag(alg, flag)?;
    let form = skew_form(alg, psi);
    let mut h = Subspace::zero(alg.dim());
    for m in &members {
        let radical = form.restrict(m).radical();
        let lifted = Subspace::span(alg.dim(), radical.basis().iter().map(|c| m.combine(c)));
        h = h.sum(&lifted);
    }
    certify(alg, psi, h, Some(members))
}

/// Prefixes of the basis adapted to the lower central series.
pub fn default_flag(alg: &LieAlgebra, reverse_layers: bool) -> Vec<Subspace> {
    let basis = alg.adapted_basis(reverse_layers);
    (1..=basis.len())
        .map(|k| Subspace::span(alg.dim(), basis[..k].iter().cloned()))
        .collect()
}

/// The fixed flags tried by default: label order within each layer, then reversed.
pub fn default_flags(alg: &LieAlgebra) -> Vec<Vec<Subspace>> {
    vec![default_flag(alg, false), default_flag(alg, true)]
}

/// Whether every basis direction of `s` (a subspace of the Levi) maps `h` into itself.
pub fn stabilizes_flag(levi: &LeviAction, s: &Subspace, h: &Subspace) -> bool {
    s.basis().iter().all(|x| {
        let ad = levi.act(x);
        h.basis().iter().all(|v| h.contains(&ad.mul_vec(v)))
    })
}
