//! Matroids of maximally recoverable locally repairable codes (MR-LRCs).
//!
//! The crate builds the `(n, k, r)`-MR matroid in closed form, constructs and
//! verifies its uniform minors (the MDS codes reachable by puncturing and
//! shortening), searches them exhaustively at small sizes, and turns their sizes
//! into lower bounds on the field size. A finite-field layer connects the matroid
//! side to actual generator matrices.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod bounds;
pub mod cli;
pub mod code;
pub mod error;
pub mod field;
pub mod matroid;
pub mod mr;
pub mod subset;
pub mod sweep;
pub mod witness;

pub use error::{Error, FieldError, ParamError, Result};
pub use matroid::{Matroid, MinorView, TableMatroid};
pub use mr::{make_mr, LrcShape, MrMatroid, MrParams};
pub use subset::Subset;
pub use witness::MinorWitness;
