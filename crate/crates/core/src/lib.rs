//! Distinguishability quantifiers for pairs of quantum states and the bounds
//! that tie their revivals to environment and correlation contributions.

pub mod bounds;
pub mod divergences;
pub mod error;
pub mod qla;
pub mod models;
pub mod random;
pub mod runner;
pub mod states;
mod tolerances;

pub use divergences::{ExtendedReal, LogBase, Quantifier, SkewParam};
pub use error::{Error, Result, StateDefect};
pub use qla::ComplexMatrix;
pub use runner::{run_experiment, run_property_suite, ExperimentConfig};
pub use states::DensityMatrix;
pub use tolerances::Tolerances;

/// Complex double used throughout.
pub type C64 = num_complex::Complex64;
