//! Bounds on the revival of a distinguishability quantifier between two times
//! in terms of environment and correlation contributions at the earlier time.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::certificate::{BoundCertificate, InequalityId, RhsTerm};
use super::scalar::{kappa_mu, varsigma_mu, Phi};
use crate::divergences::{evaluate_all, Quantifier, SkewParam};
use crate::error::{Error, Result};
use crate::qla::Subsystems;
use crate::states::DensityMatrix;

pub const TERM_ENVIRONMENT: &str = "environment";
pub const TERM_CORRELATIONS_RHO: &str = "correlations_rho";
pub const TERM_CORRELATIONS_SIGMA: &str = "correlations_sigma";

/// Two global system-environment states at one instant, with their marginals.
#[derive(Debug, Clone)]
pub struct SnapshotPair {
    pub rho_se: DensityMatrix,
    pub sigma_se: DensityMatrix,
    pub subs: Subsystems,
    pub rho_s: DensityMatrix,
    pub sigma_s: DensityMatrix,
    pub rho_e: DensityMatrix,
    pub sigma_e: DensityMatrix,
}

impl SnapshotPair {
    pub fn new(rho_se: DensityMatrix, sigma_se: DensityMatrix, subs: Subsystems) -> Result<Self> {
        if subs.dims().len() != 2 {
            return Err(Error::Dimension("snapshots need a system-environment bipartition".into()));
        }
        subs.check(rho_se.matrix())?;
        subs.check(sigma_se.matrix())?;
        let rho_s = rho_se.reduce(&subs, 0)?;
        let sigma_s = sigma_se.reduce(&subs, 0)?;
        let rho_e = rho_se.reduce(&subs, 1)?;
        let sigma_e = sigma_se.reduce(&subs, 1)?;
        Ok(Self {
            rho_se,
            sigma_se,
            subs,
            rho_s,
            sigma_s,
            rho_e,
            sigma_e,
        })
    }

    /// `rho_S ⊗ rho_E`
    pub fn rho_product(&self) -> DensityMatrix {
        self.rho_s.tensor(&self.rho_e)
    }

    /// `sigma_S ⊗ sigma_E`
    pub fn sigma_product(&self) -> DensityMatrix {
        self.sigma_s.tensor(&self.sigma_e)
    }
}

/// Values of one quantifier on the four pairs entering a backflow bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SnapshotQuantities {
    /// `Q(rho_S, sigma_S)`
    pub system: f64,
    /// `Q(rho_E, sigma_E)`
    pub environment: f64,
    /// `Q(rho_SE, rho_S ⊗ rho_E)`
    pub corr_rho: f64,
    /// `Q(sigma_SE, sigma_S ⊗ sigma_E)`
    pub corr_sigma: f64,
}

/// Per-quantifier [`SnapshotQuantities`] at one instant.
#[derive(Debug, Clone, Default)]
pub struct QuantityTable {
    entries: BTreeMap<Quantifier, SnapshotQuantities>,
}

impl QuantityTable {
    pub fn get(&self, q: Quantifier) -> Option<&SnapshotQuantities> {
        self.entries.get(&q)
    }

    fn require(&self, q: Quantifier) -> Result<&SnapshotQuantities> {
        self.entries
            .get(&q)
            .ok_or_else(|| Error::InvalidParameter(format!("quantity table lacks {q}")))
    }
}

/// Quantifiers a bound on `q` needs besides `q` itself.
fn dependencies(q: Quantifier) -> &'static [Quantifier] {
    match q {
        Quantifier::Helstrom => &[Quantifier::Helstrom, Quantifier::TraceDistance],
        Quantifier::TraceDistance => &[Quantifier::TraceDistance],
        Quantifier::HelstromSymmetrized => &[Quantifier::HelstromSymmetrized],
        Quantifier::HolevoSkew => &[Quantifier::HolevoSkew],
        Quantifier::QuantumSkew => &[Quantifier::QuantumSkew],
        Quantifier::JensenShannon => &[Quantifier::JensenShannon],
        Quantifier::SqrtJensenShannon => &[Quantifier::SqrtJensenShannon],
    }
}

/// Evaluates the requested quantifiers (plus whatever their bounds need) on a snapshot.
pub fn snapshot_quantities(snapshot: &SnapshotPair, mu: SkewParam, quantifiers: &[Quantifier]) -> Result<QuantityTable> {
    let mut needed: Vec<Quantifier> = quantifiers.iter().flat_map(|&q| dependencies(q).iter().copied()).collect();
    needed.sort();
    needed.dedup();
    let system = evaluate_all(&snapshot.rho_s, &snapshot.sigma_s, mu, &needed)?;
    let environment = evaluate_all(&snapshot.rho_e, &snapshot.sigma_e, mu, &needed)?;
    let corr_rho = evaluate_all(&snapshot.rho_se, &snapshot.rho_product(), mu, &needed)?;
    let corr_sigma = evaluate_all(&snapshot.sigma_se, &snapshot.sigma_product(), mu, &needed)?;
    let entries = needed
        .iter()
        .enumerate()
        .map(|(i, &q)| {
            (
                q,
                SnapshotQuantities {
                    system: system[i],
                    environment: environment[i],
                    corr_rho: corr_rho[i],
                    corr_sigma: corr_sigma[i],
                },
            )
        })
        .collect();
    Ok(QuantityTable { entries })
}

/// Families with a dedicated (tighter than generic) backflow bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TightFamily {
    /// `kappa_mu` times the sum of fourth roots of `K_mu`.
    HolevoSkew,
    /// `varsigma_mu` times the sum of fourth roots of `S_mu`.
    QuantumSkew,
    /// Helstrom norm `D_mu` bounded by weighted trace distances.
    Helstrom,
    /// Sum of `sqrt J` terms.
    SqrtJensenShannon,
    /// `J = K_(1/2)`, so `kappa_(1/2)` times the sum of fourth roots of `J`.
    JensenShannon,
}

impl TightFamily {
    pub fn quantifier(self) -> Quantifier {
        match self {
            TightFamily::HolevoSkew => Quantifier::HolevoSkew,
            TightFamily::QuantumSkew => Quantifier::QuantumSkew,
            TightFamily::Helstrom => Quantifier::Helstrom,
            TightFamily::SqrtJensenShannon => Quantifier::SqrtJensenShannon,
            TightFamily::JensenShannon => Quantifier::JensenShannon,
        }
    }
}

/// The default concave function for `q` in the generic bound.
///
/// `Helstrom` has none unless `mu = 1/2`: `D_mu(rho, rho) = |2 mu - 1|` is not zero.
pub fn default_phi(q: Quantifier, mu: SkewParam) -> Result<Phi> {
    Ok(match q {
        Quantifier::TraceDistance | Quantifier::HelstromSymmetrized | Quantifier::SqrtJensenShannon => Phi::Identity,
        Quantifier::Helstrom if mu == SkewParam::HALF => Phi::Identity,
        Quantifier::Helstrom => return Err(Error::UnsupportedBound("helstrom")),
        Quantifier::HolevoSkew => Phi::FourthRoot { coefficient: kappa_mu(mu) },
        Quantifier::JensenShannon => Phi::FourthRoot {
            coefficient: kappa_mu(SkewParam::HALF),
        },
        Quantifier::QuantumSkew => Phi::FourthRoot {
            coefficient: varsigma_mu(mu),
        },
    })
}

fn terms(environment: f64, corr_rho: f64, corr_sigma: f64) -> Vec<RhsTerm> {
    vec![
        RhsTerm {
            label: TERM_ENVIRONMENT,
            value: environment,
        },
        RhsTerm {
            label: TERM_CORRELATIONS_RHO,
            value: corr_rho,
        },
        RhsTerm {
            label: TERM_CORRELATIONS_SIGMA,
            value: corr_sigma,
        },
    ]
}

/// Generic bound `Δ_S Q(t, s) <= phi(phi(Q_E)) + phi(Q_corr,rho) + phi(Q_corr,sigma)`,
/// from precomputed quantities at `s` and the system value at `t`.
pub fn general_bound_from(
    quantifier: Quantifier,
    phi: Phi,
    at_s: &QuantityTable,
    system_at_t: f64,
    tolerance: f64,
) -> Result<BoundCertificate> {
    let q = at_s.require(quantifier)?;
    Ok(BoundCertificate::new(
        InequalityId::GeneralBackflow(quantifier),
        system_at_t - q.system,
        terms(phi.compose_twice(q.environment), phi.apply(q.corr_rho), phi.apply(q.corr_sigma)),
        tolerance,
    ))
}

/// Family-specific bound from precomputed quantities at `s` and the system value at `t`.
pub fn tight_bound_from(
    family: TightFamily,
    mu: SkewParam,
    at_s: &QuantityTable,
    system_at_t: f64,
    tolerance: f64,
) -> Result<BoundCertificate> {
    let own = at_s.require(family.quantifier())?;
    let lhs = system_at_t - own.system;
    let r = |x: f64| x.max(0.0).sqrt().sqrt();
    let (id, rhs) = match family {
        TightFamily::HolevoSkew => {
            let k = kappa_mu(mu);
            (
                InequalityId::TightHolevo,
                terms(k * r(own.environment), k * r(own.corr_rho), k * r(own.corr_sigma)),
            )
        }
        TightFamily::QuantumSkew => {
            let c = varsigma_mu(mu);
            (
                InequalityId::TightSkew,
                terms(c * r(own.environment), c * r(own.corr_rho), c * r(own.corr_sigma)),
            )
        }
        TightFamily::Helstrom => {
            let d = at_s.require(Quantifier::TraceDistance)?;
            let m = mu.value();
            (
                InequalityId::TightHelstrom,
                terms(
                    2.0 * m.min(1.0 - m) * d.environment,
                    2.0 * m * d.corr_rho,
                    2.0 * (1.0 - m) * d.corr_sigma,
                ),
            )
        }
        TightFamily::SqrtJensenShannon => (
            InequalityId::TightSqrtJensenShannon,
            terms(own.environment, own.corr_rho, own.corr_sigma),
        ),
        TightFamily::JensenShannon => {
            let k = kappa_mu(SkewParam::HALF);
            (
                InequalityId::TightJensenShannon,
                terms(k * r(own.environment), k * r(own.corr_rho), k * r(own.corr_sigma)),
            )
        }
    };
    Ok(BoundCertificate::new(id, lhs, rhs, tolerance))
}

fn check_structure(s: &SnapshotPair, t: &SnapshotPair) -> Result<()> {
    if s.subs != t.subs {
        return Err(Error::Dimension(format!(
            "snapshots have different tensor structures {:?} and {:?}",
            s.subs.dims(),
            t.subs.dims()
        )));
    }
    Ok(())
}

/// Generic backflow bound for `quantifier` between the snapshots at `s` and `t >= s`.
pub fn general_backflow_bound(
    snapshot_s: &SnapshotPair,
    snapshot_t: &SnapshotPair,
    quantifier: Quantifier,
    mu: SkewParam,
    phi: Phi,
) -> Result<BoundCertificate> {
    check_structure(snapshot_s, snapshot_t)?;
    if quantifier == Quantifier::Helstrom && mu != SkewParam::HALF {
        return Err(Error::UnsupportedBound("helstrom"));
    }
    let at_s = snapshot_quantities(snapshot_s, mu, &[quantifier])?;
    let at_t = evaluate_all(&snapshot_t.rho_s, &snapshot_t.sigma_s, mu, &[quantifier])?[0];
    general_bound_from(quantifier, phi, &at_s, at_t, crate::Tolerances::DEFAULT.violation)
}

/// Family-specific backflow bound between the snapshots at `s` and `t >= s`.
pub fn tight_bound(
    snapshot_s: &SnapshotPair,
    snapshot_t: &SnapshotPair,
    family: TightFamily,
    mu: SkewParam,
) -> Result<BoundCertificate> {
    check_structure(snapshot_s, snapshot_t)?;
    let q = family.quantifier();
    let at_s = snapshot_quantities(snapshot_s, mu, &[q])?;
    let at_t = evaluate_all(&snapshot_t.rho_s, &snapshot_t.sigma_s, mu, &[q])?[0];
    tight_bound_from(family, mu, &at_s, at_t, crate::Tolerances::DEFAULT.violation)
}

/// Sum of the positive increments of a time-ordered series.
pub fn summed_revivals(series: &[f64]) -> Result<f64> {
    if series.len() < 2 {
        return Err(Error::InvalidParameter("revivals need at least two samples".into()));
    }
    Ok(series.windows(2).map(|w| (w[1] - w[0]).max(0.0)).sum())
}
