//! sperner-forge: exact combinatorial search over Sperner labellings.
//!
//! The crate builds pure simplicial complexes from facet lists, enumerates
//! Sperner labellings against per-vertex label supports, and exhaustively
//! certifies rainbow-facet properties: that every valid labelling has a
//! rainbow facet, which facets can be the unique rainbow facet, how these
//! questions translate into graph colouring through the Gallai graph
//! construction, and how the same graphs arise as antipodal quotients of
//! centrally symmetric spheres. Everything is deterministic and desk-scale:
//! answers are exhaustive sweeps or backtracking proofs, never heuristics.

pub mod chromatic;
pub mod complex;
pub mod counterexample;
pub mod error;
pub mod gallai;
pub mod gallery;
pub mod instance;
pub mod io;
pub mod planar;
pub mod projective;
pub mod sperner;

pub use complex::{Simplex, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use instance::{Label, LabelSet, SpernerInstance};
pub use sperner::{Labelling, SearchOptions, Status};
