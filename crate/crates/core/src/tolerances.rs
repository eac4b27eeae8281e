//! Numerical thresholds shared by the whole crate.

use serde::{Deserialize, Serialize};

/// All tolerances in one place. Library entry points without an explicit
/// `Tolerances` argument use [`Tolerances::DEFAULT`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Hermiticity, trace, positivity and reconstruction checks.
    pub structural: f64,
    /// Off-diagonal Frobenius norm (relative to the input norm) at which Jacobi stops.
    pub solver: f64,
    pub max_sweeps: usize,
    /// Eigenvalues above this count as part of the support.
    pub support_eigenvalue: f64,
    /// Projector overlap beyond which supports are considered non-orthogonal / not nested.
    pub support_overlap: f64,
    /// Slack below `-violation` marks an inequality as violated.
    pub violation: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        structural: 1e-10,
        solver: 1e-13,
        max_sweeps: 100,
        support_eigenvalue: 1e-12,
        support_overlap: 1e-9,
        violation: 1e-9,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
