mod algebra;
pub mod catalog;
mod levi;

pub use algebra::{default_labels, BracketEntry, LieAlgebra};
pub use levi::LeviAction;
