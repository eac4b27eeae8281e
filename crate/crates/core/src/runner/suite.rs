//! Randomized harness over the axioms, identities and auxiliary inequalities.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    check_appendix_a, check_audenaert, check_triangle_like, kappa_mu, BoundCertificate, InequalityId, Phi,
    TriangleFamily,
};
use crate::divergences::{
    binary_entropy, helstrom, helstrom_symmetrized, holevo_skew, holevo_skew_dual, holevo_skew_in, jensen_shannon,
    jensen_shannon_in, quantum_skew, quantum_skew_in, relative_entropy, support_orthogonal, trace_distance,
    ExtendedReal, LogBase, Quantifier, SkewParam,
};
use crate::error::{Error, Result};
use crate::random::{
    random_kraus, random_orthogonal_pair, random_positive, random_positive_diagonal, random_state_of_rank,
    random_unitary,
};
use crate::states::DensityMatrix;
use crate::tolerances::Tolerances;

/// Skewing parameters cycled through by the harness.
pub const MU_GRID: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];

/// Tolerance for exact identities.
const IDENTITY_TOL: f64 = 1e-10;
const BASE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityStats {
    pub checks: usize,
    pub passed: usize,
    pub worst_slack: f64,
}

impl InequalityStats {
    fn empty() -> Self {
        Self {
            checks: 0,
            passed: 0,
            worst_slack: f64::INFINITY,
        }
    }

    fn record(&mut self, cert: &BoundCertificate) {
        self.checks += 1;
        if cert.satisfied {
            self.passed += 1;
        }
        self.worst_slack = self.worst_slack.min(cert.slack);
    }

    fn merge(&mut self, other: &Self) {
        self.checks += other.checks;
        self.passed += other.passed;
        self.worst_slack = self.worst_slack.min(other.worst_slack);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    /// Keyed by inequality name, e.g. `contractivity/holevo_skew`.
    pub inequalities: BTreeMap<String, InequalityStats>,
}

impl SuiteReport {
    pub fn checks(&self) -> usize {
        self.inequalities.values().map(|s| s.checks).sum()
    }

    pub fn violations(&self) -> usize {
        self.inequalities.values().map(|s| s.checks - s.passed).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }

    /// Statistics merged by family, the part of the name before `/`.
    pub fn families(&self) -> BTreeMap<String, InequalityStats> {
        let mut out: BTreeMap<String, InequalityStats> = BTreeMap::new();
        for (name, stats) in &self.inequalities {
            let family = name.split('/').next().unwrap_or(name).to_string();
            out.entry(family).or_insert_with(InequalityStats::empty).merge(stats);
        }
        out
    }
}

#[derive(Default)]
struct Collector {
    stats: BTreeMap<String, InequalityStats>,
}

impl Collector {
    fn push(&mut self, cert: BoundCertificate) {
        self.stats
            .entry(cert.inequality_id.to_string())
            .or_insert_with(InequalityStats::empty)
            .record(&cert);
    }

    fn extend(&mut self, certs: impl IntoIterator<Item = BoundCertificate>) {
        for c in certs {
            self.push(c);
        }
    }

    fn inequality(&mut self, id: InequalityId, lhs: f64, rhs: f64) {
        self.push(BoundCertificate::single(id, lhs, "rhs", rhs, Tolerances::DEFAULT.violation));
    }

    fn equal(&mut self, id: InequalityId, a: f64, b: f64, tol: f64) {
        self.push(BoundCertificate::equality(id, a, b, tol));
    }
}

/// Runs `trials` independent randomized trials; trial `k` draws from stream `k` of a
/// ChaCha8 generator seeded with `seed`, so the report does not depend on scheduling.
pub fn run_property_suite(seed: u64, trials: usize) -> Result<SuiteReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("the property suite needs at least one trial".into()));
    }
    let per_trial = (0..trials)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let mut c = Collector::default();
            run_trial(k, &mut rng, &mut c)?;
            Ok(c.stats)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut inequalities: BTreeMap<String, InequalityStats> = BTreeMap::new();
    for stats in per_trial {
        for (name, s) in stats {
            inequalities.entry(name).or_insert_with(InequalityStats::empty).merge(&s);
        }
    }
    Ok(SuiteReport {
        seed,
        trials,
        inequalities,
    })
}

fn random_mixed(dim: usize, rng: &mut ChaCha8Rng) -> DensityMatrix {
    let rank = rng.random_range(1..=dim);
    random_state_of_rank(dim, rank, rng)
}

fn finite(x: ExtendedReal) -> Option<f64> {
    match x {
        ExtendedReal::Finite(v) => Some(v),
        ExtendedReal::Infinite => None,
    }
}

fn run_trial(k: usize, rng: &mut ChaCha8Rng, c: &mut Collector) -> Result<()> {
    let dim = 2 + k % 3;
    let mu = SkewParam::new(MU_GRID[(k / 3) % MU_GRID.len()])?;
    let m = mu.value();
    let rho = random_mixed(dim, rng);
    let sigma = random_mixed(dim, rng);
    let tau = random_mixed(dim, rng);

    let values: Vec<f64> = Quantifier::ALL
        .iter()
        .map(|q| q.evaluate(&rho, &sigma, mu))
        .collect::<Result<_>>()?;
    let value = |q: Quantifier| values[Quantifier::ALL.iter().position(|&x| x == q).unwrap()];

    // ranges, identifiability, saturation on orthogonal supports
    let (a, b) = random_orthogonal_pair(dim, rng);
    c.equal(
        InequalityId::OrthogonalSaturation(Quantifier::TraceDistance),
        support_orthogonal(&a, &b)? as u8 as f64,
        1.0,
        0.0,
    );
    let generic_pair_orthogonal = support_orthogonal(&rho, &sigma)?;
    for (i, &q) in Quantifier::ALL.iter().enumerate() {
        let helstrom_like = matches!(q, Quantifier::Helstrom | Quantifier::HelstromSymmetrized);
        let floor = if helstrom_like { (2.0 * m - 1.0).abs() } else { 0.0 };
        let v = values[i];
        c.inequality(InequalityId::Normalization(q), floor, v);
        c.inequality(InequalityId::Normalization(q), v, 1.0);
        let same = q.evaluate(&rho, &rho, mu)?;
        // the square root magnifies rounding noise in J, so compare J itself
        let same = if q == Quantifier::SqrtJensenShannon { same * same } else { same };
        c.equal(InequalityId::Identifiability(q), same, floor, IDENTITY_TOL);
        // D_mu sits at its floor whenever mu rho <= (1 - mu) sigma, so only the others separate states
        if !generic_pair_orthogonal && !helstrom_like {
            // distinct states stay strictly inside the range
            c.push(BoundCertificate::single(InequalityId::Identifiability(q), floor, "value", v - 1e-12, 0.0));
            c.push(BoundCertificate::single(InequalityId::OrthogonalSaturation(q), v, "one", 1.0 - 1e-12, 0.0));
        }
        c.equal(
            InequalityId::OrthogonalSaturation(q),
            q.evaluate(&a, &b, mu)?,
            1.0,
            Tolerances::DEFAULT.violation,
        );
    }

    // contractivity under a random channel
    let count = rng.random_range(1..=4);
    let kraus = random_kraus(dim, count, rng);
    let (lr, ls) = (rho.apply_kraus(&kraus), sigma.apply_kraus(&kraus));
    for &q in &Quantifier::ALL {
        c.inequality(InequalityId::Contractivity(q), q.evaluate(&lr, &ls, mu)?, value(q));
    }
    let rel = finite(relative_entropy(&rho, &sigma)?);
    if let Some(before) = rel {
        let after = finite(relative_entropy(&lr, &ls)?).unwrap_or(f64::INFINITY);
        c.inequality(InequalityId::ContractivityRelativeEntropy, after, before);
    }

    // unitary and ancilla invariance
    let u = random_unitary(dim, rng);
    let (ur, us) = (rho.evolve(&u), sigma.evolve(&u));
    let ancilla = random_mixed(2, rng);
    let (ar, as_) = (rho.tensor(&ancilla), sigma.tensor(&ancilla));
    for &q in &Quantifier::ALL {
        c.equal(InequalityId::UnitaryInvariance(q), q.evaluate(&ur, &us, mu)?, value(q), IDENTITY_TOL);
        c.equal(InequalityId::AncillaInvariance(q), q.evaluate(&ar, &as_, mu)?, value(q), IDENTITY_TOL);
    }

    // symmetries and base independence
    let swap = mu.complement();
    c.equal(
        InequalityId::SymmetryHolevo,
        value(Quantifier::HolevoSkew),
        holevo_skew(&sigma, &rho, swap)?,
        IDENTITY_TOL,
    );
    c.equal(
        InequalityId::SymmetryHelstrom,
        value(Quantifier::Helstrom),
        helstrom(&sigma, &rho, swap)?,
        IDENTITY_TOL,
    );
    c.equal(
        InequalityId::SymmetrySkew,
        value(Quantifier::QuantumSkew),
        quantum_skew(&sigma, &rho, swap)?,
        IDENTITY_TOL,
    );
    c.equal(
        InequalityId::SymmetryHelstrom,
        value(Quantifier::HelstromSymmetrized),
        helstrom_symmetrized(&rho, &sigma, swap)?,
        IDENTITY_TOL,
    );
    c.equal(
        InequalityId::BaseIndependence(Quantifier::HolevoSkew),
        holevo_skew_in(&rho, &sigma, mu, LogBase::Bits)?,
        value(Quantifier::HolevoSkew),
        BASE_TOL,
    );
    c.equal(
        InequalityId::BaseIndependence(Quantifier::QuantumSkew),
        quantum_skew_in(&rho, &sigma, mu, LogBase::Bits)?,
        value(Quantifier::QuantumSkew),
        BASE_TOL,
    );
    c.equal(
        InequalityId::BaseIndependence(Quantifier::JensenShannon),
        jensen_shannon_in(&rho, &sigma, LogBase::Bits)?,
        value(Quantifier::JensenShannon),
        BASE_TOL,
    );

    // Pinsker-type inequalities
    let d = value(Quantifier::TraceDistance);
    let h = binary_entropy(mu);
    if let Some(s) = rel {
        c.inequality(InequalityId::Pinsker, d * d, s / 2.0);
    }
    c.inequality(
        InequalityId::PinskerHolevo,
        d * d,
        h / (2.0 * m * (1.0 - m)) * value(Quantifier::HolevoSkew),
    );
    c.inequality(
        InequalityId::PinskerSkew,
        d * d,
        m.ln() * (1.0 - m).ln() / (2.0 * m * (1.0 - m) * h) * value(Quantifier::QuantumSkew),
    );
    c.inequality(InequalityId::HelstromAboveTraceDistance, d, value(Quantifier::HelstromSymmetrized));

    // triangle-like families and the appendix inequalities
    for family in [
        TriangleFamily::HolevoSkew,
        TriangleFamily::QuantumSkew,
        TriangleFamily::Helstrom,
        TriangleFamily::SqrtJensenShannon,
    ] {
        c.extend(check_triangle_like(&rho, &sigma, &tau, mu, family)?);
    }
    c.extend(check_appendix_a(&rho, &sigma, &tau, mu)?);
    let positive = |rng: &mut ChaCha8Rng| {
        if k % 2 == 0 {
            random_positive_diagonal(dim, rng)
        } else {
            random_positive(dim, rng)
        }
    };
    let (w, x, y) = (positive(rng), positive(rng), positive(rng));
    if w.trace().re > 0.0 {
        c.extend(check_audenaert(&w, &x, &y)?);
    }

    // exact identities
    let js = value(Quantifier::JensenShannon);
    c.equal(
        InequalityId::IdentityJensenShannonHolevo,
        js,
        holevo_skew(&rho, &sigma, SkewParam::HALF)?,
        IDENTITY_TOL,
    );
    c.equal(
        InequalityId::IdentityJensenShannonSkew,
        js,
        quantum_skew(&rho, &sigma, SkewParam::HALF)?,
        IDENTITY_TOL,
    );
    c.equal(
        InequalityId::IdentityJensenShannonHolevo,
        js,
        jensen_shannon(&rho, &sigma)?,
        IDENTITY_TOL,
    );
    c.equal(
        InequalityId::IdentityTraceDistanceHelstrom,
        d,
        helstrom(&rho, &sigma, SkewParam::HALF)?,
        IDENTITY_TOL,
    );
    let (k1, k2) = holevo_skew_dual(&rho, &sigma, mu)?;
    c.equal(InequalityId::HolevoDualPath, k1, k2, IDENTITY_TOL);
    c.equal(
        InequalityId::HelstromWeighting,
        trace_distance(&rho, &rho.mix(m, &sigma))?,
        (1.0 - m) * d,
        IDENTITY_TOL,
    );
    c.equal(
        InequalityId::HelstromWeighting,
        trace_distance(&sigma, &sigma.mix(1.0 - m, &rho))?,
        m * d,
        IDENTITY_TOL,
    );

    let phi = Phi::FourthRoot { coefficient: kappa_mu(mu) };
    let (p, q) = (rng.random::<f64>(), rng.random::<f64>());
    c.inequality(InequalityId::FourthRootSubadditivity, phi.apply(p + q), phi.apply(p) + phi.apply(q));
    Ok(())
}
