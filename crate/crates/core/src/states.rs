//! Density matrices and the initial states used by the models.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, StateDefect};
use crate::qla::{eigh, partial_trace, tensor, ComplexMatrix, Subsystems};
use crate::tolerances::Tolerances;

/// Hermitian, unit-trace, positive semidefinite matrix (all within the structural tolerance).
///
/// Tiny negative eigenvalues down to `-structural` are accepted as they are; nothing is clipped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn validate(m: ComplexMatrix) -> Result<Self> {
        Self::validate_with(m, &Tolerances::DEFAULT)
    }

    pub fn validate_with(m: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        let herm = m.hermiticity_defect();
        if !(herm <= tol.structural) {
            return Err(Error::InvalidState {
                defect: StateDefect::Hermiticity,
                magnitude: herm,
            });
        }
        let trace_defect = (m.trace() - C64::new(1.0, 0.0)).norm();
        if !(trace_defect <= tol.structural) {
            return Err(Error::InvalidState {
                defect: StateDefect::Trace,
                magnitude: trace_defect,
            });
        }
        let min_eig = eigh(&m)?.eigenvalues[0];
        if min_eig < -tol.structural {
            return Err(Error::InvalidState {
                defect: StateDefect::Positivity,
                magnitude: -min_eig,
            });
        }
        Ok(Self { matrix: m })
    }

    /// Wraps a matrix that is a density matrix by construction (convex mixtures,
    /// tensor products, partial traces and unitary conjugations of valid states).
    pub(crate) fn trusted(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    /// Normalized projector `v v^dagger / |v|^2`.
    pub fn pure(v: &[C64]) -> Result<Self> {
        let norm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if v.is_empty() || norm_sqr == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self::trusted(ComplexMatrix::outer(v).scale(1.0 / norm_sqr)))
    }

    pub fn pure_real(v: &[f64]) -> Result<Self> {
        let v: Vec<C64> = v.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::pure(&v)
    }

    /// Computational basis projector `|k><k|` in dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dimension {dim}");
        let mut p = ComplexMatrix::zeros(dim);
        p[(k, k)] = C64::new(1.0, 0.0);
        Self::trusted(p)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::trusted(ComplexMatrix::identity(dim).scale(1.0 / dim as f64))
    }

    /// Fock-diagonal thermal state with `p_n ∝ exp(-n * beta_omega)`, `n = 0..=cutoff`,
    /// renormalized after truncation.
    pub fn truncated_thermal(spec: &ThermalSpec) -> Self {
        Self::trusted(ComplexMatrix::from_diagonal(&spec.occupation_probabilities()))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn purity(&self) -> f64 {
        self.matrix.trace_product(&self.matrix).re
    }

    /// `w * self + (1 - w) * other` for `w` in `[0, 1]`.
    pub fn mix(&self, w: f64, other: &Self) -> Self {
        debug_assert!((0.0..=1.0).contains(&w));
        Self::trusted(self.matrix.linear_combination(w, &other.matrix, 1.0 - w))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::trusted(tensor(&self.matrix, &other.matrix))
    }

    pub fn reduce(&self, subs: &Subsystems, keep: usize) -> Result<Self> {
        Ok(Self::trusted(partial_trace(&self.matrix, subs, keep)?))
    }

    /// `U rho U^dagger`; the caller guarantees `U` is unitary.
    pub fn evolve(&self, unitary: &ComplexMatrix) -> Self {
        Self::trusted(self.matrix.conjugate_by(unitary).hermitian_part())
    }

    /// Kraus-map image `sum_i K_i rho K_i^dagger`; the caller guarantees trace preservation.
    pub fn apply_kraus(&self, kraus: &[ComplexMatrix]) -> Self {
        let mut out = ComplexMatrix::zeros(self.dim());
        for k in kraus {
            out += &self.matrix.conjugate_by(k);
        }
        Self::trusted(out.hermitian_part())
    }
}

/// Truncated thermal state of a bosonic mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalSpec {
    /// Dimensionless inverse temperature `beta * omega_E`.
    pub beta_omega: f64,
    /// Largest Fock number kept.
    pub cutoff: usize,
}

impl ThermalSpec {
    pub fn new(beta_omega: f64, cutoff: usize) -> Result<Self> {
        if !(beta_omega > 0.0 && beta_omega.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "beta_omega must be positive and finite, got {beta_omega}"
            )));
        }
        if cutoff < 1 {
            return Err(Error::InvalidParameter("Fock cutoff must be at least 1".into()));
        }
        Ok(Self { beta_omega, cutoff })
    }

    /// Renormalized occupation probabilities `p_0..=p_cutoff`.
    pub fn occupation_probabilities(&self) -> Vec<f64> {
        let weights: Vec<f64> = (0..=self.cutoff)
            .map(|n| (-(n as f64) * self.beta_omega).exp())
            .collect();
        let z: f64 = weights.iter().sum();
        weights.into_iter().map(|w| w / z).collect()
    }

    /// Probability mass of the untruncated distribution above the cutoff.
    pub fn tail_mass(&self) -> f64 {
        (-((self.cutoff + 1) as f64) * self.beta_omega).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximally_mixed_qubit_is_valid() {
        assert!(DensityMatrix::validate(ComplexMatrix::identity(2).scale(0.5)).is_ok());
    }

    #[test]
    fn negative_eigenvalue_is_a_positivity_error() {
        let m = ComplexMatrix::from_diagonal(&[1.2, -0.2]);
        match DensityMatrix::validate(m) {
            Err(Error::InvalidState {
                defect: StateDefect::Positivity,
                magnitude,
            }) => assert!((magnitude - 0.2).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trace_and_hermiticity_errors() {
        let m = ComplexMatrix::from_diagonal(&[0.7, 0.7]);
        assert!(matches!(
            DensityMatrix::validate(m),
            Err(Error::InvalidState { defect: StateDefect::Trace, .. })
        ));
        let mut m = ComplexMatrix::identity(2).scale(0.5);
        m[(0, 1)] = C64::new(0.1, 0.0);
        assert!(matches!(
            DensityMatrix::validate(m),
            Err(Error::InvalidState { defect: StateDefect::Hermiticity, .. })
        ));
    }

    #[test]
    fn tiny_negative_eigenvalue_is_kept_not_clipped() {
        let m = ComplexMatrix::from_diagonal(&[1.0 + 5e-11, -5e-11]);
        let rho = DensityMatrix::validate(m.clone()).unwrap();
        assert_eq!(rho.matrix(), &m);
    }

    #[test]
    fn pure_state_projectors() {
        let zero = DensityMatrix::pure_real(&[1.0, 0.0]).unwrap();
        assert_eq!(zero.matrix(), &ComplexMatrix::from_diagonal(&[1.0, 0.0]));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus = DensityMatrix::pure_real(&[s, s]).unwrap();
        assert!(plus.matrix().max_abs_diff(&ComplexMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap()) < 1e-15);
        let minus = DensityMatrix::pure_real(&[s, -s]).unwrap();
        assert!(minus.matrix().max_abs_diff(&ComplexMatrix::from_real_rows(&[&[0.5, -0.5], &[-0.5, 0.5]]).unwrap()) < 1e-15);
        assert!((plus.purity() - 1.0).abs() < 1e-10);
        assert!(matches!(DensityMatrix::pure_real(&[0.0, 0.0]), Err(Error::ZeroVector)));
    }

    #[test]
    fn unnormalized_vector_is_normalized() {
        let rho = DensityMatrix::pure_real(&[3.0, 4.0]).unwrap();
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-15);
        assert!(DensityMatrix::validate(rho.into_matrix()).is_ok());
    }

    #[test]
    fn thermal_spec_rejects_bad_parameters() {
        assert!(ThermalSpec::new(0.0, 10).is_err());
        assert!(ThermalSpec::new(1.0, 0).is_err());
        assert!(ThermalSpec::new(f64::NAN, 10).is_err());
    }

    #[test]
    fn zero_temperature_limit_is_vacuum() {
        let rho = DensityMatrix::truncated_thermal(&ThermalSpec::new(1e6, 5).unwrap());
        assert!(rho.matrix().max_abs_diff(&DensityMatrix::basis(6, 0).into_matrix()) < 1e-10);
    }

    #[test]
    fn default_cutoff_tail_is_negligible() {
        assert!(ThermalSpec::new(1.0, 40).unwrap().tail_mass() < 1e-17);
    }
}
