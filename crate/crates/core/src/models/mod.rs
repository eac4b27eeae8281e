//! Exactly solvable open-system models and the joint trajectories they produce.

mod jaynes_cummings;
mod spin_star;

pub use jaynes_cummings::{
    excitation_number, jc_default_pair, jc_evolve, jc_propagator, jc_reduced_analytic, JCParams, TAIL_MASS_LIMIT,
};
pub use spin_star::{
    spin_star_default_pair, spin_star_evolve, spin_star_reduced_analytic, Sign, SpinStarParams, MAX_ENVIRONMENT_QUBITS,
};

use crate::bounds::SnapshotPair;
use crate::error::{Error, Result};

/// Joint system-environment states of two initial conditions on a time grid.
#[derive(Debug, Clone)]
pub struct JointTrajectory {
    pub times: Vec<f64>,
    pub snapshots: Vec<SnapshotPair>,
}

impl JointTrajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// `points` equally spaced times on `[0, horizon]`.
pub fn uniform_grid(horizon: f64, points: usize) -> Result<Vec<f64>> {
    if !(horizon > 0.0 && horizon.is_finite()) {
        return Err(Error::InvalidParameter(format!("horizon must be positive, got {horizon}")));
    }
    if points < 2 {
        return Err(Error::InvalidParameter(format!("a grid needs at least 2 points, got {points}")));
    }
    let step = horizon / (points - 1) as f64;
    Ok((0..points)
        .map(|k| if k + 1 == points { horizon } else { k as f64 * step })
        .collect())
}

pub(crate) fn check_times(times: &[f64]) -> Result<()> {
    if times.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidParameter("times must be finite".into()));
    }
    if times.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidParameter("times must be ascending".into()));
    }
    Ok(())
}
