//! Trajectory tables: quantifier values along a model run and the backflow bound
//! at every grid time `s` against the reference time `T`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{BoundVariant, ExperimentConfig, ModelConfig};
use crate::bounds::{
    default_phi, general_bound_from, snapshot_quantities, summed_revivals, tight_bound_from, BoundCertificate,
    QuantityTable, TightFamily, TERM_CORRELATIONS_RHO, TERM_CORRELATIONS_SIGMA, TERM_ENVIRONMENT,
};
use crate::divergences::{Quantifier, SkewParam};
use crate::error::Result;
use crate::models::{
    jc_default_pair, jc_evolve, spin_star_default_pair, spin_star_evolve, uniform_grid, JCParams, JointTrajectory,
    SpinStarParams,
};
use crate::tolerances::Tolerances;

/// Model parameters after drawing anything random.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResolvedModel {
    SpinStar(SpinStarParams),
    Jc(JCParams),
}

impl ResolvedModel {
    pub fn from_config(model: &ModelConfig, seed: u64) -> Result<Self> {
        Ok(match model {
            ModelConfig::SpinStar(c) => {
                let mut params = match &c.couplings {
                    Some(g) => SpinStarParams::new(0.0, vec![0.0; g.len()], g.clone())?,
                    None => SpinStarParams::random(c.n_env, c.mean_coupling, seed)?,
                };
                params.omega_s = c.omega_s;
                if let Some(w) = &c.omega_e {
                    params.omega_e = w.clone();
                }
                params.check()?;
                ResolvedModel::SpinStar(params)
            }
            ModelConfig::Jc(p) => {
                p.check()?;
                ResolvedModel::Jc(*p)
            }
        })
    }

    /// Human-readable labels of the two initial system states.
    pub fn initial_states(&self) -> [&'static str; 2] {
        match self {
            ResolvedModel::SpinStar(_) => ["(|1> + |0>)/sqrt2", "(|1> - |0>)/sqrt2"],
            ResolvedModel::Jc(_) => ["|1>", "(|1> + |0>)/sqrt2"],
        }
    }

    /// Joint trajectory of the default initial pair.
    pub fn evolve(&self, times: &[f64]) -> Result<JointTrajectory> {
        match self {
            ResolvedModel::SpinStar(p) => {
                let (a, b) = spin_star_default_pair();
                spin_star_evolve(p, (&a, &b), times)
            }
            ResolvedModel::Jc(p) => {
                let (a, b) = jc_default_pair();
                jc_evolve(p, (&a, &b), times)
            }
        }
    }
}

/// Per-snapshot quantity tables, computed concurrently and returned in time order.
pub fn trajectory_tables(
    trajectory: &JointTrajectory,
    mu: SkewParam,
    quantifiers: &[Quantifier],
) -> Result<Vec<QuantityTable>> {
    trajectory
        .snapshots
        .par_iter()
        .map(|snap| snapshot_quantities(snap, mu, quantifiers))
        .collect()
}

/// The bound reported for `q` in a figure table.
pub fn figure_bound(
    q: Quantifier,
    variant: BoundVariant,
    mu: SkewParam,
    at_s: &QuantityTable,
    system_at_t: f64,
    tolerance: f64,
) -> Result<BoundCertificate> {
    let tight = |family| tight_bound_from(family, mu, at_s, system_at_t, tolerance);
    let general = || general_bound_from(q, default_phi(q, mu)?, at_s, system_at_t, tolerance);
    match (q, variant) {
        (Quantifier::Helstrom, _) => tight(TightFamily::Helstrom),
        (Quantifier::SqrtJensenShannon, _) => tight(TightFamily::SqrtJensenShannon),
        (Quantifier::TraceDistance | Quantifier::HelstromSymmetrized, _) => general(),
        (Quantifier::HolevoSkew, BoundVariant::Tight) => tight(TightFamily::HolevoSkew),
        (Quantifier::QuantumSkew, BoundVariant::Tight) => tight(TightFamily::QuantumSkew),
        (Quantifier::JensenShannon, BoundVariant::Tight) => tight(TightFamily::JensenShannon),
        (Quantifier::HolevoSkew | Quantifier::QuantumSkew | Quantifier::JensenShannon, BoundVariant::General) => {
            general()
        }
    }
}

/// One quantifier's columns in a [`FigureRow`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FigureEntry {
    pub quantifier: Quantifier,
    /// System value at `s`.
    pub value: f64,
    /// Value at `T` minus value at `s`.
    pub lhs: f64,
    pub rhs_env: f64,
    pub rhs_corr_rho: f64,
    pub rhs_corr_sigma: f64,
    pub rhs_total: f64,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureRow {
    pub s: f64,
    pub entries: Vec<FigureEntry>,
}

impl FigureRow {
    pub fn entry(&self, q: Quantifier) -> Option<&FigureEntry> {
        self.entries.iter().find(|e| e.quantifier == q)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureSummary {
    /// Summed positive increments of each system series.
    pub revivals: BTreeMap<Quantifier, f64>,
    /// Smallest slack per inequality.
    pub min_slack: BTreeMap<String, f64>,
    pub violations: usize,
    pub all_satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureMetadata {
    pub model: ResolvedModel,
    pub initial_states: Vec<String>,
    pub horizon: f64,
    /// Inequality reported for each quantifier.
    pub bounds: BTreeMap<Quantifier, String>,
}

/// Everything the `figure` command emits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureTable {
    pub version: String,
    pub config: ExperimentConfig,
    pub metadata: FigureMetadata,
    pub rows: Vec<FigureRow>,
    pub summary: FigureSummary,
}

/// Rows and summary from precomputed quantity tables; the last time is the reference `T`.
pub fn figure_rows(
    times: &[f64],
    tables: &[QuantityTable],
    quantifiers: &[Quantifier],
    mu: SkewParam,
    variant: BoundVariant,
    tolerances: &Tolerances,
) -> Result<(Vec<FigureRow>, FigureSummary, BTreeMap<Quantifier, String>)> {
    assert_eq!(times.len(), tables.len(), "one table per grid time");
    let last = tables.last().expect("non-empty grid");
    let mut rows = Vec::with_capacity(times.len());
    let mut min_slack: BTreeMap<String, f64> = BTreeMap::new();
    let mut bound_names = BTreeMap::new();
    let mut violations = 0;
    for (&s, at_s) in times.iter().zip(tables) {
        let mut entries = Vec::with_capacity(quantifiers.len());
        for &q in quantifiers {
            let at_t = last.get(q).expect("table covers every requested quantifier").system;
            let cert = figure_bound(q, variant, mu, at_s, at_t, tolerances.violation)?;
            let name = cert.inequality_id.to_string();
            let slot = min_slack.entry(name.clone()).or_insert(f64::INFINITY);
            *slot = slot.min(cert.slack);
            bound_names.insert(q, name);
            if !cert.satisfied {
                violations += 1;
            }
            entries.push(FigureEntry {
                quantifier: q,
                value: at_s.get(q).expect("table covers every requested quantifier").system,
                lhs: cert.lhs,
                rhs_env: cert.term(TERM_ENVIRONMENT).unwrap_or(0.0),
                rhs_corr_rho: cert.term(TERM_CORRELATIONS_RHO).unwrap_or(0.0),
                rhs_corr_sigma: cert.term(TERM_CORRELATIONS_SIGMA).unwrap_or(0.0),
                rhs_total: cert.rhs_total,
                slack: cert.slack,
            });
        }
        rows.push(FigureRow { s, entries });
    }
    let mut revivals = BTreeMap::new();
    for &q in quantifiers {
        let series: Vec<f64> = tables.iter().map(|t| t.get(q).expect("covered").system).collect();
        revivals.insert(q, summed_revivals(&series)?);
    }
    let summary = FigureSummary {
        revivals,
        min_slack,
        violations,
        all_satisfied: violations == 0,
    };
    Ok((rows, summary, bound_names))
}

/// Runs the configured model and evaluates every requested quantifier and its bound.
pub fn run_experiment(config: &ExperimentConfig) -> Result<FigureTable> {
    config.validate()?;
    let model = ResolvedModel::from_config(&config.model, config.seed)?;
    let horizon = config.horizon();
    let times = uniform_grid(horizon, config.grid_points)?;
    let trajectory = model.evolve(&times)?;
    let tables = trajectory_tables(&trajectory, config.mu, &config.quantifiers)?;
    let (rows, summary, bounds) = figure_rows(
        &times,
        &tables,
        &config.quantifiers,
        config.mu,
        config.bound,
        &config.tolerances,
    )?;
    Ok(FigureTable {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        metadata: FigureMetadata {
            initial_states: model.initial_states().iter().map(|s| s.to_string()).collect(),
            model,
            horizon,
            bounds,
        },
        rows,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::runner::config::ModelKind;

    fn small(kind: ModelKind) -> ExperimentConfig {
        ExperimentConfig {
            grid_points: 12,
            quantifiers: Quantifier::ALL.to_vec(),
            ..ExperimentConfig::for_model(kind)
        }
    }

    #[test]
    fn last_row_has_zero_lhs() {
        for kind in [ModelKind::SpinStar, ModelKind::Jc] {
            let table = run_experiment(&small(kind)).unwrap();
            let last = table.rows.last().unwrap();
            assert_eq!(last.s, table.metadata.horizon);
            assert!(last.entries.iter().all(|e| e.lhs == 0.0));
            assert!(table.summary.all_satisfied, "{:?}", table.summary);
        }
    }

    #[test]
    fn rhs_total_is_the_sum_of_terms() {
        let table = run_experiment(&small(ModelKind::Jc)).unwrap();
        for row in &table.rows {
            for e in &row.entries {
                let sum = e.rhs_env + e.rhs_corr_rho + e.rhs_corr_sigma;
                assert!((sum - e.rhs_total).abs() <= 1e-12, "{e:?}");
            }
        }
    }

    #[test]
    fn skews_coincide_at_half_on_spin_star() {
        let table = run_experiment(&small(ModelKind::SpinStar)).unwrap();
        for row in &table.rows {
            let k = row.entry(Quantifier::HolevoSkew).unwrap();
            let s = row.entry(Quantifier::QuantumSkew).unwrap();
            assert!((k.value - s.value).abs() < 1e-10);
        }
    }
}
