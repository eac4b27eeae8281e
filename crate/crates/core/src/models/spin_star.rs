//! Central qubit dephasing through `sigma_z sigma_z` couplings to `N` environment qubits:
//! `H = omega_S sigma_z + sum_k g_k sigma_z sigma_z^k + sum_k omega_E^k sigma_z^k`.

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_times, JointTrajectory};
use crate::bounds::SnapshotPair;
use crate::error::{Error, Result};
use crate::qla::{ComplexMatrix, Subsystems};
use crate::states::DensityMatrix;

/// Keeps the joint dimension at or below 256.
pub const MAX_ENVIRONMENT_QUBITS: usize = 7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinStarParams {
    pub n_env: usize,
    pub omega_s: f64,
    pub omega_e: Vec<f64>,
    pub couplings: Vec<f64>,
    /// Seed the couplings were drawn with, if they were drawn.
    #[serde(default)]
    pub seed: Option<u64>,
}

impl SpinStarParams {
    pub fn new(omega_s: f64, omega_e: Vec<f64>, couplings: Vec<f64>) -> Result<Self> {
        let params = Self {
            n_env: couplings.len(),
            omega_s,
            omega_e,
            couplings,
            seed: None,
        };
        params.check()?;
        Ok(params)
    }

    /// Couplings i.i.d. uniform on `(0, 2 * mean_coupling]`, zero frequencies.
    pub fn random(n_env: usize, mean_coupling: f64, seed: u64) -> Result<Self> {
        if !(mean_coupling > 0.0 && mean_coupling.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "mean coupling must be positive, got {mean_coupling}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let couplings = (0..n_env)
            .map(|_| 2.0 * mean_coupling * (1.0 - rng.random::<f64>()))
            .collect();
        let params = Self {
            n_env,
            omega_s: 0.0,
            omega_e: vec![0.0; n_env],
            couplings,
            seed: Some(seed),
        };
        params.check()?;
        Ok(params)
    }

    pub fn check(&self) -> Result<()> {
        if self.n_env == 0 {
            return Err(Error::InvalidParameter("spin star needs at least one environment qubit".into()));
        }
        if self.n_env > MAX_ENVIRONMENT_QUBITS {
            return Err(Error::InvalidParameter(format!(
                "spin star supports at most {MAX_ENVIRONMENT_QUBITS} environment qubits, got {}",
                self.n_env
            )));
        }
        if self.couplings.len() != self.n_env || self.omega_e.len() != self.n_env {
            return Err(Error::InvalidParameter(format!(
                "expected {} couplings and frequencies, got {} and {}",
                self.n_env,
                self.couplings.len(),
                self.omega_e.len()
            )));
        }
        if self.couplings.iter().any(|g| *g == 0.0 || !g.is_finite()) {
            return Err(Error::InvalidParameter("couplings must be nonzero and finite".into()));
        }
        if !self.omega_s.is_finite() || self.omega_e.iter().any(|w| !w.is_finite()) {
            return Err(Error::InvalidParameter("frequencies must be finite".into()));
        }
        Ok(())
    }

    fn env_dim(&self) -> usize {
        1 << self.n_env
    }

    /// Eigenvalues of `H` on the product basis, joint index `s * 2^N + e`,
    /// qubit `k` being bit `N - 1 - k` of `e` and `|b>` having `sigma_z = 2b - 1`.
    fn energies(&self) -> Vec<f64> {
        let n = self.n_env;
        let env_dim = self.env_dim();
        let z = |bit: usize| 2.0 * bit as f64 - 1.0;
        (0..2 * env_dim)
            .map(|index| {
                let zs = z(index / env_dim);
                let e = index % env_dim;
                let mut energy = self.omega_s * zs;
                for k in 0..n {
                    let zk = z((e >> (n - 1 - k)) & 1);
                    energy += self.couplings[k] * zs * zk + self.omega_e[k] * zk;
                }
                energy
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// `|±> = (|1> ± |0>) / sqrt 2`, with basis index 0 for `|0>`.
pub fn spin_star_default_pair() -> (DensityMatrix, DensityMatrix) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let ket = |zero: f64| [C64::new(zero, 0.0), C64::new(s, 0.0)];
    (
        DensityMatrix::trusted(ComplexMatrix::outer(&ket(s))),
        DensityMatrix::trusted(ComplexMatrix::outer(&ket(-s))),
    )
}

/// Reduced state of `|±>` at time `t`: diagonal `1/2`, coherence `±(1/2) prod_k cos(2 g_k t)`
/// (times the free phase `e^{-2 i omega_S t}` on `<1|rho|0>`).
pub fn spin_star_reduced_analytic(params: &SpinStarParams, sign: Sign, t: f64) -> Result<DensityMatrix> {
    params.check()?;
    let decay: f64 = params.couplings.iter().map(|g| (2.0 * g * t).cos()).product();
    let coherence = C64::from_polar(0.5 * sign.value() * decay, -2.0 * params.omega_s * t);
    let mut m = ComplexMatrix::from_diagonal(&[0.5, 0.5]);
    m[(1, 0)] = coherence;
    m[(0, 1)] = coherence.conj();
    Ok(DensityMatrix::trusted(m))
}

/// Exact joint evolution of `rho ⊗ 1/2^N` and `sigma ⊗ 1/2^N`.
pub fn spin_star_evolve(
    params: &SpinStarParams,
    pair: (&DensityMatrix, &DensityMatrix),
    times: &[f64],
) -> Result<JointTrajectory> {
    params.check()?;
    check_times(times)?;
    let (rho, sigma) = pair;
    if rho.dim() != 2 || sigma.dim() != 2 {
        return Err(Error::Dimension("spin star system states must be qubits".into()));
    }
    let env = DensityMatrix::maximally_mixed(params.env_dim());
    let subs = Subsystems::bipartite(2, params.env_dim())?;
    let rho0 = rho.tensor(&env);
    let sigma0 = sigma.tensor(&env);
    let energies = params.energies();
    let evolve = |state: &DensityMatrix, t: f64| {
        let phases: Vec<C64> = energies.iter().map(|e| C64::from_polar(1.0, -e * t)).collect();
        let m = state.matrix();
        DensityMatrix::trusted(ComplexMatrix::from_fn(m.dim(), |a, b| m[(a, b)] * phases[a] * phases[b].conj()))
    };
    let snapshots = times
        .par_iter()
        .map(|&t| SnapshotPair::new(evolve(&rho0, t), evolve(&sigma0, t), subs.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(JointTrajectory {
        times: times.to_vec(),
        snapshots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_qubit_coherence() {
        let g = 0.7;
        let params = SpinStarParams::new(0.0, vec![0.0], vec![g]).unwrap();
        let (plus, minus) = spin_star_default_pair();
        let times = [0.0, 0.3, 1.1];
        let traj = spin_star_evolve(&params, (&plus, &minus), &times).unwrap();
        for (t, snap) in times.iter().zip(&traj.snapshots) {
            let c = snap.rho_s.matrix()[(0, 1)];
            assert!((c.re - 0.5 * (2.0 * g * t).cos()).abs() < 1e-14);
            assert!(c.im.abs() < 1e-14);
        }
    }

    #[test]
    fn random_couplings_are_in_range_and_seeded() {
        let a = SpinStarParams::random(7, 1.0, 3).unwrap();
        let b = SpinStarParams::random(7, 1.0, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.couplings.iter().all(|g| *g > 0.0 && *g <= 2.0));
        assert!(SpinStarParams::random(8, 1.0, 3).is_err());
    }

    #[test]
    fn coherence_vanishes_at_cosine_root() {
        let params = SpinStarParams::new(0.0, vec![0.0, 0.0], vec![1.0, 0.37]).unwrap();
        let t = std::f64::consts::PI / 4.0;
        let rho = spin_star_reduced_analytic(&params, Sign::Plus, t).unwrap();
        assert!(rho.matrix()[(0, 1)].norm() < 1e-16);
    }
}
