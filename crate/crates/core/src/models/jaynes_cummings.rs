//! Two-level system exchanging excitations with one bosonic mode,
//! in the frame rotating at the mode frequency.

use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_times, JointTrajectory};
use crate::bounds::SnapshotPair;
use crate::error::{Error, Result};
use crate::qla::{ComplexMatrix, Subsystems};
use crate::states::{DensityMatrix, ThermalSpec};

/// Largest thermal population allowed above the Fock cutoff.
pub const TAIL_MASS_LIMIT: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct JCParams {
    pub g: f64,
    /// Detuning `omega_S - omega_E`.
    pub delta: f64,
    pub beta_omega: f64,
    pub cutoff: usize,
}

impl Default for JCParams {
    fn default() -> Self {
        Self {
            g: 1.0,
            delta: 0.5,
            beta_omega: 1.0,
            cutoff: 40,
        }
    }
}

impl JCParams {
    pub fn check(&self) -> Result<()> {
        if !(self.g > 0.0 && self.g.is_finite()) {
            return Err(Error::InvalidParameter(format!("coupling g must be positive, got {}", self.g)));
        }
        if !self.delta.is_finite() {
            return Err(Error::InvalidParameter("detuning must be finite".into()));
        }
        if self.cutoff < 2 {
            return Err(Error::InvalidParameter(format!(
                "Fock cutoff must be at least 2, got {}",
                self.cutoff
            )));
        }
        ThermalSpec::new(self.beta_omega, self.cutoff)?;
        Ok(())
    }

    pub fn thermal(&self) -> Result<ThermalSpec> {
        ThermalSpec::new(self.beta_omega, self.cutoff)
    }

    fn mode_dim(&self) -> usize {
        self.cutoff + 1
    }

    /// `sin(f t / 2) / f` with `f = sqrt(delta^2 + 4 g^2 n)`, continuous at `f = 0`.
    fn sin_over_f(&self, n: usize, t: f64) -> (f64, f64) {
        let f = (self.delta * self.delta + 4.0 * self.g * self.g * n as f64).sqrt();
        let half = 0.5 * f * t;
        let ratio = if f == 0.0 { 0.5 * t } else { half.sin() / f };
        (half.cos(), ratio)
    }

    /// `c(n, t)`
    fn c(&self, n: usize, t: f64) -> C64 {
        let (cos, ratio) = self.sin_over_f(n, t);
        C64::from_polar(1.0, 0.5 * self.delta * t) * C64::new(cos, -self.delta * ratio)
    }

    /// `d(n, t)`
    fn d(&self, n: usize, t: f64) -> C64 {
        let (_, ratio) = self.sin_over_f(n, t);
        C64::from_polar(1.0, 0.5 * self.delta * t) * C64::new(0.0, -2.0 * self.g * ratio)
    }
}

/// Excited state `|1>` and `(|1> + |0>) / sqrt 2`, with basis index 0 for `|0>`.
pub fn jc_default_pair() -> (DensityMatrix, DensityMatrix) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    (
        DensityMatrix::basis(2, 1),
        DensityMatrix::trusted(ComplexMatrix::outer(&[C64::new(s, 0.0), C64::new(s, 0.0)])),
    )
}

/// Global unitary on `C^2 ⊗ C^(cutoff+1)`, joint index `s * (cutoff + 1) + n`.
///
/// Each sector `{|1,n>, |0,n+1>}` carries its exact 2x2 block; `|0,0>` and the
/// lone top state `|1,cutoff>` carry phase 1.
pub fn jc_propagator(params: &JCParams, t: f64) -> Result<ComplexMatrix> {
    params.check()?;
    let m = params.mode_dim();
    let mut u = ComplexMatrix::zeros(2 * m);
    u[(0, 0)] = C64::new(1.0, 0.0);
    u[(m + params.cutoff, m + params.cutoff)] = C64::new(1.0, 0.0);
    for n in 0..params.cutoff {
        let (excited, ground) = (m + n, n + 1);
        let c = params.c(n + 1, t);
        let d = params.d(n + 1, t) * ((n + 1) as f64).sqrt();
        u[(excited, excited)] = c;
        u[(excited, ground)] = d;
        u[(ground, excited)] = -d.conj();
        u[(ground, ground)] = c.conj();
    }
    Ok(u)
}

/// Reduced system state at `t` for the initial product `rho0 ⊗ thermal`.
pub fn jc_reduced_analytic(params: &JCParams, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    params.check()?;
    if rho0.dim() != 2 {
        return Err(Error::Dimension("Jaynes-Cummings system state must be a qubit".into()));
    }
    let p = params.thermal()?.occupation_probabilities();
    let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, C64::new(0.0, 0.0));
    for (n, pn) in p.iter().enumerate() {
        let cn = params.c(n, t);
        let cn1 = params.c(n + 1, t);
        alpha += pn * cn.norm_sqr();
        beta += pn * cn1.norm_sqr();
        gamma += cn * cn1 * *pn;
    }
    let r = rho0.matrix();
    let (r00, r11) = (r[(0, 0)].re, r[(1, 1)].re);
    let mut out = ComplexMatrix::zeros(2);
    out[(0, 0)] = C64::new(r00 * alpha + r11 * (1.0 - beta), 0.0);
    out[(1, 1)] = C64::new(r00 * (1.0 - alpha) + r11 * beta, 0.0);
    out[(1, 0)] = r[(1, 0)] * gamma;
    out[(0, 1)] = r[(0, 1)] * gamma.conj();
    Ok(DensityMatrix::trusted(out))
}

/// `<sigma_+ sigma_- ⊗ 1 + 1 ⊗ n>` on a joint state.
pub fn excitation_number(params: &JCParams, joint: &DensityMatrix) -> Result<f64> {
    let m = params.mode_dim();
    if joint.dim() != 2 * m {
        return Err(Error::Dimension(format!("expected joint dimension {}, got {}", 2 * m, joint.dim())));
    }
    Ok((0..2 * m)
        .map(|i| joint.matrix()[(i, i)].re * ((i / m) + (i % m)) as f64)
        .sum())
}

/// Exact joint evolution of `rho ⊗ thermal` and `sigma ⊗ thermal`.
pub fn jc_evolve(params: &JCParams, pair: (&DensityMatrix, &DensityMatrix), times: &[f64]) -> Result<JointTrajectory> {
    params.check()?;
    check_times(times)?;
    let thermal = params.thermal()?;
    let tail = thermal.tail_mass();
    if tail > TAIL_MASS_LIMIT {
        return Err(Error::CutoffTooSmall {
            tail,
            limit: TAIL_MASS_LIMIT,
            cutoff: params.cutoff,
        });
    }
    let (rho, sigma) = pair;
    if rho.dim() != 2 || sigma.dim() != 2 {
        return Err(Error::Dimension("Jaynes-Cummings system states must be qubits".into()));
    }
    let env = DensityMatrix::truncated_thermal(&thermal);
    let subs = Subsystems::bipartite(2, params.mode_dim())?;
    let rho0 = rho.tensor(&env);
    let sigma0 = sigma.tensor(&env);
    let snapshots = times
        .par_iter()
        .map(|&t| {
            let u = jc_propagator(params, t)?;
            SnapshotPair::new(rho0.evolve(&u), sigma0.evolve(&u), subs.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(JointTrajectory {
        times: times.to_vec(),
        snapshots,
    })
}
