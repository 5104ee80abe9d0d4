//! Exact deciders, with checkable certificates, for vertex decomposability,
//! vertex dismissibility, shellability, scalability and Cohen–Macaulay type
//! properties of simplicial complexes, and for the dual properties of
//! squarefree monomial ideals.

pub mod battery;
pub mod bits;
pub mod certificate;
pub mod combinatorial;
pub mod complex;
pub mod decision;
pub mod error;
pub mod format;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod ideal_props;
pub mod random;

pub use complex::{Face, SimplicialComplex, SkeletonMode, VertexSet};
pub use decision::{Certificate, Decision, Method, SearchLimit, Truth};
pub use error::{Error, Result};
pub use graph::Graph;
pub use homology::FieldSpec;
pub use ideal::{Monomial, MonomialIdeal};
