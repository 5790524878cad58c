//! Exact linear algebra for coadjoint orbits of unipotent groups: nilpotent Lie
//! algebras, the orbit method, polarizations, depth, Levi stabilizers and
//! horizontal degenerations.

pub mod classification;
pub mod degeneration;
pub mod error;
pub mod exact;
pub mod json;
pub mod lie;
pub mod orbits;
pub mod polarization;

pub use error::{Error, Result};
pub use exact::{Matrix, Rational, Subspace};
pub use lie::{LeviAction, LieAlgebra};
