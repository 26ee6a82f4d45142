//! Pseudospherical functions on the one-sheet hyperboloid
//! (x¹)² + (x²)² - (x³)² = a² for the discrete, principal and supplementary series
//! of SO(2,1), the non-unitary class with m = ±k, and the machinery to check them:
//! finite-difference su(1,1) generators, the hyperboloid inner product and a
//! catalog of relations.

pub mod continuous;
pub mod discrete;
pub mod error;
pub mod newclass;
pub mod numerics;
pub mod operators;
pub mod options;
pub mod series;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
pub use options::EvalOptions;
pub use series::{HyperPoint, SeriesSpec};
pub use verify::{verify_relation, Relation, RelationParams, Suite, Tolerances, VerifyReport};

/// Complex values returned by every evaluation routine.
pub type ComplexValue = num_complex::Complex64;
