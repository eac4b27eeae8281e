//! Dense complex linear algebra for Hermitian operators on small Hilbert spaces.

mod eigh;
mod functions;
mod matrix;
mod structure;

pub use eigh::{eigh, eigh_with, HermitianSpectrum};
pub use functions::{apply_function_on_spectrum, jordan_parts, trace_norm};
pub use matrix::ComplexMatrix;
pub use structure::{partial_trace, tensor, Subsystems};
