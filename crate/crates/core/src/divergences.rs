//! Distinguishability quantifiers between pairs of states.
//!
//! Entropies are in nats unless a [`LogBase`] is passed explicitly. The
//! normalized quantifiers (Holevo skew, quantum skew, Jensen-Shannon) do not
//! depend on the base because their prefactors carry the same logarithm.

use std::cmp::Ordering;
use std::fmt;
use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qla::{eigh, trace_norm, ComplexMatrix, HermitianSpectrum};
use crate::states::DensityMatrix;
use crate::tolerances::Tolerances;

/// Mixing weight `mu` in the open interval `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct SkewParam(f64);

impl SkewParam {
    pub const HALF: SkewParam = SkewParam(0.5);

    pub fn new(mu: f64) -> Result<Self> {
        if mu > 0.0 && mu < 1.0 {
            Ok(Self(mu))
        } else {
            Err(Error::SkewOutOfRange(mu))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - mu`.
    pub fn complement(self) -> Self {
        Self(1.0 - self.0)
    }
}

impl TryFrom<f64> for SkewParam {
    type Error = Error;

    fn try_from(mu: f64) -> Result<Self> {
        Self::new(mu)
    }
}

impl From<SkewParam> for f64 {
    fn from(mu: SkewParam) -> f64 {
        mu.0
    }
}

/// Nonnegative real or `+inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal {
    Finite(f64),
    Infinite,
}

impl ExtendedReal {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    /// The value as an `f64`, with `Infinite` mapped to `f64::INFINITY`.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedReal::Finite(x) => x,
            ExtendedReal::Infinite => f64::INFINITY,
        }
    }
}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.to_f64().partial_cmp(&other.to_f64())
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::Finite(x) => write!(f, "{x}"),
            ExtendedReal::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LogBase {
    #[default]
    Nats,
    Bits,
}

impl LogBase {
    /// Converts a quantity measured in nats into this base.
    #[inline]
    pub fn from_nats(self, nats: f64) -> f64 {
        match self {
            LogBase::Nats => nats,
            LogBase::Bits => nats / LN_2,
        }
    }
}

fn check_dims(a: &DensityMatrix, b: &DensityMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension(format!(
            "states of dimension {} and {} cannot be compared",
            a.dim(),
            b.dim()
        )));
    }
    Ok(())
}

/// `-sum x ln x` over the positive entries, i.e. with `0 ln 0 = 0`.
pub(crate) fn shannon_nats(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.ln()).sum()
}

pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    von_neumann_entropy_in(rho, LogBase::Nats)
}

pub fn von_neumann_entropy_in(rho: &DensityMatrix, base: LogBase) -> Result<f64> {
    Ok(base.from_nats(shannon_nats(&eigh(rho.matrix())?.eigenvalues)))
}

/// Shannon entropy of `{mu, 1 - mu}` in nats.
pub fn binary_entropy(mu: SkewParam) -> f64 {
    let m = mu.value();
    -m * m.ln() - (1.0 - m) * (-m).ln_1p()
}

pub fn binary_entropy_in(mu: SkewParam, base: LogBase) -> f64 {
    base.from_nats(binary_entropy(mu))
}

fn min_eigenvalue_check(spec: &HermitianSpectrum, tol: &Tolerances) -> Result<()> {
    let min = spec.eigenvalues[0];
    if min < -tol.structural {
        return Err(Error::NotPositive { min_eigenvalue: min });
    }
    Ok(())
}

/// `tr A ln A - tr A ln B` over the supports, or `None` when `supp A` is not inside `supp B`.
fn log_trace_difference(a: &HermitianSpectrum, a_op: &ComplexMatrix, b: &HermitianSpectrum, tol: &Tolerances) -> Option<f64> {
    let a_log_a: f64 = -shannon_nats(&a.eigenvalues);
    let weights = b.diagonal_of(a_op);
    let kernel: Vec<usize> = (0..b.dim())
        .filter(|&j| b.eigenvalues[j] <= tol.support_eigenvalue)
        .collect();
    if !kernel.is_empty() {
        // Frobenius norm of (kernel projector of B) x (support projector of A)
        let support_a = a.support_projector(tol.support_eigenvalue);
        let overlap: f64 = kernel
            .iter()
            .map(|&j| {
                let v = b.eigenvector(j);
                let pv = support_a.apply_to_vector(&v);
                v.iter().zip(&pv).map(|(x, y)| (x.conj() * y).re).sum::<f64>()
            })
            .sum();
        if overlap.max(0.0).sqrt() > tol.support_overlap {
            return None;
        }
    }
    let a_log_b: f64 = (0..b.dim())
        .filter(|&j| b.eigenvalues[j] > tol.support_eigenvalue)
        .map(|j| weights[j] * b.eigenvalues[j].ln())
        .sum();
    Some(a_log_a - a_log_b)
}

/// Relative entropy of positive operators, `tr A ln A - tr A ln B + tr(B - A)`,
/// infinite when the support of `A` is not contained in the support of `B`.
pub fn relative_entropy_general(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ExtendedReal> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension("operators of different dimension".into()));
    }
    let tol = Tolerances::DEFAULT;
    let sa = eigh(a)?;
    let sb = eigh(b)?;
    min_eigenvalue_check(&sa, &tol)?;
    min_eigenvalue_check(&sb, &tol)?;
    Ok(match log_trace_difference(&sa, a, &sb, &tol) {
        Some(d) => ExtendedReal::Finite((d + (b.trace().re - a.trace().re)).max(0.0)),
        None => ExtendedReal::Infinite,
    })
}

/// `tr A (ln A - ln B)` without the trace correction. Differs from
/// [`relative_entropy_general`] by `tr(B - A)`; this is the form in which the
/// telescoping bounds on positive operators hold.
pub fn relative_entropy_trace_free(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ExtendedReal> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension("operators of different dimension".into()));
    }
    let tol = Tolerances::DEFAULT;
    let sa = eigh(a)?;
    let sb = eigh(b)?;
    min_eigenvalue_check(&sa, &tol)?;
    min_eigenvalue_check(&sb, &tol)?;
    Ok(match log_trace_difference(&sa, a, &sb, &tol) {
        Some(d) => ExtendedReal::Finite(d),
        None => ExtendedReal::Infinite,
    })
}

/// Quantum relative entropy `S(rho, sigma)` in nats.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<ExtendedReal> {
    check_dims(rho, sigma)?;
    let tol = Tolerances::DEFAULT;
    let sr = eigh(rho.matrix())?;
    let ss = eigh(sigma.matrix())?;
    Ok(match log_trace_difference(&sr, rho.matrix(), &ss, &tol) {
        Some(d) => ExtendedReal::Finite(d.max(0.0)),
        None => ExtendedReal::Infinite,
    })
}

/// Entropies and relative entropies around the mixture `M = mu rho + (1 - mu) sigma`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct MixtureProfile {
    pub mu: f64,
    pub entropy_rho: f64,
    pub entropy_sigma: f64,
    pub entropy_mixture: f64,
    /// `S(rho, M)`
    pub rel_rho: f64,
    /// `S(sigma, M)`
    pub rel_sigma: f64,
}

impl MixtureProfile {
    pub fn new(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam) -> Result<Self> {
        check_dims(rho, sigma)?;
        let m = mu.value();
        let mixture = rho.matrix().linear_combination(m, sigma.matrix(), 1.0 - m);
        let sr = eigh(rho.matrix())?;
        let ss = eigh(sigma.matrix())?;
        let sm = eigh(&mixture)?;
        let entropy_rho = shannon_nats(&sr.eigenvalues);
        let entropy_sigma = shannon_nats(&ss.eigenvalues);
        let entropy_mixture = shannon_nats(&sm.eigenvalues);
        // supp(rho), supp(sigma) lie inside supp(M): an eigenvalue m_j carries weight
        // <m_j|rho|m_j> <= m_j / mu, so every term is O(m_j ln m_j). Summing over the
        // same positive eigenvalues as the entropy of M keeps both evaluation paths in step.
        let cross = |state: &DensityMatrix| -> f64 {
            let w = sm.diagonal_of(state.matrix());
            (0..sm.dim())
                .filter(|&j| sm.eigenvalues[j] > 0.0)
                .map(|j| w[j] * sm.eigenvalues[j].ln())
                .sum()
        };
        let rel_rho = (-entropy_rho - cross(rho)).max(0.0);
        let rel_sigma = (-entropy_sigma - cross(sigma)).max(0.0);
        Ok(Self {
            mu: m,
            entropy_rho,
            entropy_sigma,
            entropy_mixture,
            rel_rho,
            rel_sigma,
        })
    }

    pub fn holevo_chi(&self) -> f64 {
        (self.entropy_mixture - self.mu * self.entropy_rho - (1.0 - self.mu) * self.entropy_sigma).max(0.0)
    }

    /// `chi / h(mu)`.
    pub fn holevo_skew(&self) -> f64 {
        self.holevo_chi() / binary_entropy(SkewParam(self.mu))
    }

    /// The weighted relative-entropy form of the Holevo skew divergence, with the
    /// second prefactor written as `(1 - mu) / h(1 - mu)`.
    pub fn holevo_skew_via_relative_entropies(&self) -> f64 {
        let mu = SkewParam(self.mu);
        self.mu / binary_entropy(mu) * self.rel_rho
            + (1.0 - self.mu) / binary_entropy(mu.complement()) * self.rel_sigma
    }

    pub fn quantum_skew(&self) -> f64 {
        let m = self.mu;
        m / (-m.ln()) * self.rel_rho + (1.0 - m) / (-(-m).ln_1p()) * self.rel_sigma
    }

    pub fn check_dual_path(&self) {
        if cfg!(debug_assertions) {
            let a = self.holevo_skew();
            let b = self.holevo_skew_via_relative_entropies();
            debug_assert!(
                (a - b).abs() <= 1e-10,
                "Holevo skew evaluation paths disagree: {a} vs {b} (mu = {})",
                self.mu
            );
        }
    }
}

/// `D(rho, sigma) = ||rho - sigma||_1 / 2`.
pub fn trace_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    check_dims(rho, sigma)?;
    Ok(0.5 * trace_norm(&(rho.matrix() - sigma.matrix()))?)
}

/// Helstrom norm `||mu rho - (1 - mu) sigma||_1`.
pub fn helstrom(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam) -> Result<f64> {
    check_dims(rho, sigma)?;
    let m = mu.value();
    trace_norm(&rho.matrix().linear_combination(m, sigma.matrix(), -(1.0 - m)))
}

/// `(D_mu(rho, sigma) + D_mu(sigma, rho)) / 2`.
pub fn helstrom_symmetrized(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam) -> Result<f64> {
    Ok(0.5 * (helstrom(rho, sigma, mu)? + helstrom(sigma, rho, mu)?))
}

/// Holevo quantity of the ensemble `{mu, rho; 1 - mu, sigma}` in nats.
pub fn holevo_chi(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam) -> Result<f64> {
    Ok(MixtureProfile::new(rho, sigma, mu)?.holevo_chi())
}

/// Holevo skew divergence `K_mu = chi_mu / h(mu)`, in `[0, 1]`.
///
/// Debug builds also evaluate the weighted relative-entropy form and panic if
/// the two disagree by more than `1e-10`.
pub fn holevo_skew(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam) -> Result<f64> {
    let p = MixtureProfile::new(rho, sigma, mu)?;
    p.check_dual_path();
    Ok(p.holevo_skew())
}

/// Both evaluation routes of `K_mu`: `(chi / h, weighted relative entropies)`.
pub fn holevo_skew_dual(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam) -> Result<(f64, f64)> {
    let p = MixtureProfile::new(rho, sigma, mu)?;
    Ok((p.holevo_skew(), p.holevo_skew_via_relative_entropies()))
}

pub fn holevo_skew_in(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam, base: LogBase) -> Result<f64> {
    let p = MixtureProfile::new(rho, sigma, mu)?;
    let chi = base.from_nats(p.entropy_mixture)
        - mu.value() * base.from_nats(p.entropy_rho)
        - (1.0 - mu.value()) * base.from_nats(p.entropy_sigma);
    Ok(chi.max(0.0) / binary_entropy_in(mu, base))
}

/// Quantum skew divergence, always finite and in `[0, 1]`.
pub fn quantum_skew(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam) -> Result<f64> {
    Ok(MixtureProfile::new(rho, sigma, mu)?.quantum_skew())
}

pub fn quantum_skew_in(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam, base: LogBase) -> Result<f64> {
    let p = MixtureProfile::new(rho, sigma, mu)?;
    let m = mu.value();
    let l1 = base.from_nats(-m.ln());
    let l2 = base.from_nats(-(-m).ln_1p());
    Ok(m / l1 * base.from_nats(p.rel_rho) + (1.0 - m) / l2 * base.from_nats(p.rel_sigma))
}

/// Jensen-Shannon divergence normalized to `[0, 1]`.
pub fn jensen_shannon(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    jensen_shannon_in(rho, sigma, LogBase::Nats)
}

pub fn jensen_shannon_in(rho: &DensityMatrix, sigma: &DensityMatrix, base: LogBase) -> Result<f64> {
    let p = MixtureProfile::new(rho, sigma, SkewParam::HALF)?;
    Ok((base.from_nats(p.rel_rho) + base.from_nats(p.rel_sigma)) / (2.0 * base.from_nats(LN_2)))
}

pub fn sqrt_jensen_shannon(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    Ok(jensen_shannon(rho, sigma)?.sqrt())
}

/// Whether the supports of the two states are orthogonal: projectors on
/// eigenvalues above the support threshold with overlap norm below the overlap threshold.
pub fn support_orthogonal(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<bool> {
    check_dims(rho, sigma)?;
    let tol = Tolerances::DEFAULT;
    let pr = eigh(rho.matrix())?.support_projector(tol.support_eigenvalue);
    let ps = eigh(sigma.matrix())?.support_projector(tol.support_eigenvalue);
    Ok(pr.matmul(&ps).frobenius_norm() < tol.support_overlap)
}

/// The distinguishability quantifiers that can be tracked along a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantifier {
    TraceDistance,
    Helstrom,
    HelstromSymmetrized,
    HolevoSkew,
    QuantumSkew,
    JensenShannon,
    SqrtJensenShannon,
}

impl Quantifier {
    pub const ALL: [Quantifier; 7] = [
        Quantifier::TraceDistance,
        Quantifier::Helstrom,
        Quantifier::HelstromSymmetrized,
        Quantifier::HolevoSkew,
        Quantifier::QuantumSkew,
        Quantifier::JensenShannon,
        Quantifier::SqrtJensenShannon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantifier::TraceDistance => "trace_distance",
            Quantifier::Helstrom => "helstrom",
            Quantifier::HelstromSymmetrized => "helstrom_symmetrized",
            Quantifier::HolevoSkew => "holevo_skew",
            Quantifier::QuantumSkew => "quantum_skew",
            Quantifier::JensenShannon => "jensen_shannon",
            Quantifier::SqrtJensenShannon => "sqrt_jensen_shannon",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|q| q.name() == name)
    }

    pub fn evaluate(self, rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam) -> Result<f64> {
        Ok(evaluate_all(rho, sigma, mu, &[self])?[0])
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluates several quantifiers on one pair, sharing the mixture spectra
/// between the entropic ones.
pub fn evaluate_all(rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam, quantifiers: &[Quantifier]) -> Result<Vec<f64>> {
    check_dims(rho, sigma)?;
    let mut skewed: Option<MixtureProfile> = None;
    let mut balanced: Option<MixtureProfile> = None;
    let mut out = Vec::with_capacity(quantifiers.len());
    for &q in quantifiers {
        let value = match q {
            Quantifier::TraceDistance => trace_distance(rho, sigma)?,
            Quantifier::Helstrom => helstrom(rho, sigma, mu)?,
            Quantifier::HelstromSymmetrized => helstrom_symmetrized(rho, sigma, mu)?,
            Quantifier::HolevoSkew | Quantifier::QuantumSkew => {
                if skewed.is_none() {
                    skewed = Some(MixtureProfile::new(rho, sigma, mu)?);
                }
                let p = skewed.as_ref().unwrap();
                if q == Quantifier::HolevoSkew {
                    p.check_dual_path();
                    p.holevo_skew()
                } else {
                    p.quantum_skew()
                }
            }
            Quantifier::JensenShannon | Quantifier::SqrtJensenShannon => {
                if balanced.is_none() {
                    balanced = Some(match skewed {
                        Some(p) if mu == SkewParam::HALF => p,
                        _ => MixtureProfile::new(rho, sigma, SkewParam::HALF)?,
                    });
                }
                let p = balanced.as_ref().unwrap();
                let js = (p.rel_rho + p.rel_sigma) / (2.0 * LN_2);
                if q == Quantifier::JensenShannon {
                    js
                } else {
                    js.sqrt()
                }
            }
        };
        out.push(value);
    }
    Ok(out)
}
