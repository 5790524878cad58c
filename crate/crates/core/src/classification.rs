use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{dot, is_zero_vec, Matrix, Rational, Subspace};
use crate::lie::{LeviAction, LieAlgebra};
use crate::orbits::skew_form;
use crate::polarization::{certify, default_flags, is_polarization, stabilizes_flag, vergne_polarization, Polarization};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DepthClass {
    TrivialFunctionalOrbit,
    Character,
    WeilPullback,
    HighDepth,
}

impl DepthClass {
    pub fn from_depth(depth: usize) -> Self {
        match depth {
            0 => DepthClass::TrivialFunctionalOrbit,
            1 => DepthClass::Character,
            2 => DepthClass::WeilPullback,
            _ => DepthClass::HighDepth,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    pub depth: usize,
    /// Position in `lower_central_series()` (0-based) of the first term killed by
    /// the functional; equal to `depth`.
    pub vanishing_layer: usize,
    pub classification: DepthClass,
}

fn vanishes_on(psi: &[Rational], s: &Subspace) -> bool {
    s.basis().iter().all(|b| dot(psi, b).is_zero())
}

/// Least `n` with `psi` zero on `N_{n+1}`, where `N_1 = n` and `N_{k+1} = [N_k, n]`.
pub fn depth(alg: &LieAlgebra, psi: &[Rational]) -> DepthReport {
    let series = alg.lower_central_series();
    let depth = series
        .iter()
        .position(|term| vanishes_on(psi, term))
        .expect("series ends with the zero subspace");
    DepthReport { depth, vanishing_layer: depth, classification: DepthClass::from_depth(depth) }
}

/// Nonzero and zero on `[n, n]`.
pub fn is_character(alg: &LieAlgebra, psi: &[Rational]) -> bool {
    !is_zero_vec(psi) && depth(alg, psi).depth == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientStep {
    pub algebra: LieAlgebra,
    /// Projection from the previous algebra in the chain.
    pub projection: Matrix,
    /// The functional pushed down to `algebra`.
    pub functional: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergQuotient {
    pub quotient_chain: Vec<QuotientStep>,
    pub final_algebra: LieAlgebra,
    pub final_functional: Vec<Rational>,
    /// Spanning vector of the one-dimensional center of `final_algebra`.
    pub center: Vec<Rational>,
    pub symplectic_space_dim: usize,
    /// Commutator pairing on `final_algebra / center`, in the coordinates that
    /// complement the center's pivot.
    pub pairing: Matrix,
    pub central_coefficient: Rational,
}

impl HeisenbergQuotient {
    pub fn is_non_degenerate(&self) -> bool {
        self.pairing.rank() == self.symplectic_space_dim
    }
}

fn push_down(ideal: &Subspace, psi: &[Rational]) -> Vec<Rational> {
    ideal.complement_indices().into_iter().map(|i| psi[i].clone()).collect()
}

/// For a depth-2 functional: quotient by `N_3`, then repeatedly by the part of the
/// center killed by the functional, until the center is a line on which it is
/// nonzero. The result is a Heisenberg algebra.
pub fn heisenberg_quotient(alg: &LieAlgebra, psi: &[Rational]) -> Result<HeisenbergQuotient> {
    let d = depth(alg, psi).depth;
    if d != 2 {
        return Err(Error::WrongDepth { expected: 2, found: d });
    }
    let mut chain = Vec::new();
    let mut current = alg.clone();
    let mut ell = psi.to_vec();
    let mut ideal = alg.lower_central_series()[2].clone();
    loop {
        if !ideal.is_zero() {
            let (q, projection) = current.quotient(&ideal)?;
            ell = push_down(&ideal, &ell);
            current = q;
            chain.push(QuotientStep { algebra: current.clone(), projection, functional: ell.clone() });
        }
        let center = current.center();
        let kernel = Matrix::from_rows(current.dim(), vec![ell.clone()])?.kernel();
        ideal = center.intersection(&kernel);
        if ideal.is_zero() {
            break;
        }
    }
    let center = current.center();
    debug_assert_eq!(center.dim(), 1);
    let z = center.basis()[0].clone();
    let central_coefficient = dot(&ell, &z);
    let form = skew_form(&current, &ell);
    let keep = center.complement_indices();
    let pairing = Matrix::from_fn(keep.len(), keep.len(), |a, b| form.matrix.get(keep[a], keep[b]).clone());
    Ok(HeisenbergQuotient {
        quotient_chain: chain,
        final_algebra: current,
        final_functional: ell,
        center: z,
        symplectic_space_dim: keep.len(),
        pairing,
        central_coefficient,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DegreeBound {
    ExactlyOne,
    AtMostTwo,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BoundReason {
    Character,
    FlagStable(Polarization),
    Depth2,
    None,
}

impl BoundReason {
    pub fn tag(&self) -> &'static str {
        match self {
            BoundReason::Character => "Character",
            BoundReason::FlagStable(_) => "FlagStable",
            BoundReason::Depth2 => "Depth2",
            BoundReason::None => "None",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetaplecticBound {
    pub bound: DegreeBound,
    pub reason: BoundReason,
}

/// Bound on the degree of the metaplectic cover of the stabilizer with Lie
/// algebra `s`. Characters give 1; so does any polarization (user candidates
/// first, then Vergne's on the default flags) whose flag `0 ⊂ h ⊂ n` is stable
/// under `s`. Otherwise depth 2 gives at most 2, and anything else is unknown.
pub fn metaplectic_degree_bound(
    alg: &LieAlgebra,
    levi: &LeviAction,
    s: &Subspace,
    psi: &[Rational],
    candidates: &[Subspace],
) -> MetaplecticBound {
    let d = depth(alg, psi).depth;
    if d <= 1 {
        return MetaplecticBound { bound: DegreeBound::ExactlyOne, reason: BoundReason::Character };
    }
    for h in candidates {
        if is_polarization(alg, psi, h).unwrap_or(false) && stabilizes_flag(levi, s, h) {
            let pol = certify(alg, psi, h.clone(), None).expect("checked subalgebra");
            return MetaplecticBound { bound: DegreeBound::ExactlyOne, reason: BoundReason::FlagStable(pol) };
        }
    }
    for flag in default_flags(alg) {
        let pol = vergne_polarization(alg, psi, &flag).expect("default flags are valid");
        if pol.is_certified() && stabilizes_flag(levi, s, &pol.subspace) {
            return MetaplecticBound { bound: DegreeBound::ExactlyOne, reason: BoundReason::FlagStable(pol) };
        }
    }
    if d == 2 {
        MetaplecticBound { bound: DegreeBound::AtMostTwo, reason: BoundReason::Depth2 }
    } else {
        MetaplecticBound { bound: DegreeBound::Unknown, reason: BoundReason::None }
    }
}

/// For a unipotent radical presented by the central-torus weight of each of its
/// `u_dim` basis directions: true iff no weight vector is zero, so a generic torus
/// element acts on `Lie U` without kernel.
pub fn assumption_reductive_check(u_dim: usize, torus_weights: &[Vec<i64>]) -> bool {
    torus_weights.len() == u_dim && torus_weights.iter().all(|w| w.iter().any(|&x| x != 0))
}
