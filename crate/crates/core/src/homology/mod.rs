//! Reduced homology over ℚ and small prime fields, and the Cohen–Macaulay
//! family of tests built on it.

mod chain;
mod cm;
mod field;
mod linalg;

pub use chain::{boundary_matrix, reduced_homology_ranks, HomologyProfile, MAX_FACES};
pub use cm::{depth, depth_by_skeletons, is_cohen_macaulay, is_initially_cm, is_sequentially_cm};
pub use field::FieldSpec;
pub use linalg::IntMatrix;

pub(crate) use chain::reduced_homology_of;
