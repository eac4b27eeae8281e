use std::fmt;

use serde::{Serialize, Serializer};

use crate::divergences::Quantifier;

/// Which inequality a certificate instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InequalityId {
    /// Generic backflow bound with `phi o phi` on the environment term.
    GeneralBackflow(Quantifier),
    TightHolevo,
    /// The Holevo-skew bound at `mu = 1/2` applied to `J = K_(1/2)`.
    TightJensenShannon,
    TightSkew,
    TightHelstrom,
    TightSqrtJensenShannon,

    TriangleG,
    TriangleGSwapped,
    TriangleHolevoFirst,
    TriangleHolevoSecond,
    TriangleF,
    TriangleFSwapped,
    TriangleSkewFirst,
    TriangleSkewSecond,
    HelstromFirstArgument,
    HelstromSecondArgument,
    TriangleHelstromSymmetrized,
    TriangleSqrtJensenShannon,
    TriangleSqrtJensenShannonSwapped,
    /// `g_mu(D) <= kappa_mu K_mu^(1/4)`.
    GBelowFourthRoot,

    MixtureRelativeEntropyFirst,
    MixtureRelativeEntropySecond,
    TelescopicFirstLower,
    TelescopicFirstUpper,
    TelescopicSecondLower,
    TelescopicSecondUpper,

    Pinsker,
    PinskerHolevo,
    PinskerSkew,
    /// `D(sigma_mu, tau_mu)` lower bound for the symmetrized Helstrom norm.
    HelstromAboveTraceDistance,

    Contractivity(Quantifier),
    ContractivityRelativeEntropy,
    UnitaryInvariance(Quantifier),
    AncillaInvariance(Quantifier),
    Normalization(Quantifier),
    Identifiability(Quantifier),
    OrthogonalSaturation(Quantifier),
    SymmetryHolevo,
    SymmetryHelstrom,
    SymmetrySkew,
    BaseIndependence(Quantifier),
    HelstromWeighting,
    IdentityJensenShannonHolevo,
    IdentityJensenShannonSkew,
    IdentityTraceDistanceHelstrom,
    HolevoDualPath,
    FourthRootSubadditivity,
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use InequalityId::*;
        match self {
            GeneralBackflow(q) => write!(f, "general_backflow/{q}"),
            TightHolevo => f.write_str("tight_backflow/holevo_skew"),
            TightJensenShannon => f.write_str("tight_backflow/jensen_shannon"),
            TightSkew => f.write_str("tight_backflow/quantum_skew"),
            TightHelstrom => f.write_str("tight_backflow/helstrom"),
            TightSqrtJensenShannon => f.write_str("tight_backflow/sqrt_jensen_shannon"),
            TriangleG => f.write_str("triangle/g_mu"),
            TriangleGSwapped => f.write_str("triangle/g_mu_swapped"),
            TriangleHolevoFirst => f.write_str("triangle/holevo_first"),
            TriangleHolevoSecond => f.write_str("triangle/holevo_second"),
            TriangleF => f.write_str("triangle/f_mu"),
            TriangleFSwapped => f.write_str("triangle/f_mu_swapped"),
            TriangleSkewFirst => f.write_str("triangle/skew_first"),
            TriangleSkewSecond => f.write_str("triangle/skew_second"),
            HelstromFirstArgument => f.write_str("triangle/helstrom_first_argument"),
            HelstromSecondArgument => f.write_str("triangle/helstrom_second_argument"),
            TriangleHelstromSymmetrized => f.write_str("triangle/helstrom_symmetrized"),
            TriangleSqrtJensenShannon => f.write_str("triangle/sqrt_jensen_shannon"),
            TriangleSqrtJensenShannonSwapped => f.write_str("triangle/sqrt_jensen_shannon_swapped"),
            GBelowFourthRoot => f.write_str("triangle/g_below_fourth_root"),
            MixtureRelativeEntropyFirst => f.write_str("mixture_relative_entropy/first"),
            MixtureRelativeEntropySecond => f.write_str("mixture_relative_entropy/second"),
            TelescopicFirstLower => f.write_str("telescopic/first_lower"),
            TelescopicFirstUpper => f.write_str("telescopic/first_upper"),
            TelescopicSecondLower => f.write_str("telescopic/second_lower"),
            TelescopicSecondUpper => f.write_str("telescopic/second_upper"),
            Pinsker => f.write_str("pinsker/relative_entropy"),
            PinskerHolevo => f.write_str("pinsker/holevo_skew"),
            PinskerSkew => f.write_str("pinsker/quantum_skew"),
            HelstromAboveTraceDistance => f.write_str("helstrom_symmetrized_above_trace_distance"),
            Contractivity(q) => write!(f, "contractivity/{q}"),
            ContractivityRelativeEntropy => f.write_str("contractivity/relative_entropy"),
            UnitaryInvariance(q) => write!(f, "unitary_invariance/{q}"),
            AncillaInvariance(q) => write!(f, "ancilla_invariance/{q}"),
            Normalization(q) => write!(f, "normalization/{q}"),
            Identifiability(q) => write!(f, "identifiability/{q}"),
            OrthogonalSaturation(q) => write!(f, "orthogonal_saturation/{q}"),
            SymmetryHolevo => f.write_str("symmetry/holevo_skew"),
            SymmetryHelstrom => f.write_str("symmetry/helstrom"),
            SymmetrySkew => f.write_str("symmetry/quantum_skew"),
            BaseIndependence(q) => write!(f, "base_independence/{q}"),
            HelstromWeighting => f.write_str("identity/trace_distance_to_mixture"),
            IdentityJensenShannonHolevo => f.write_str("identity/jensen_shannon_holevo"),
            IdentityJensenShannonSkew => f.write_str("identity/jensen_shannon_skew"),
            IdentityTraceDistanceHelstrom => f.write_str("identity/trace_distance_helstrom"),
            HolevoDualPath => f.write_str("identity/holevo_dual_path"),
            FourthRootSubadditivity => f.write_str("phi/subadditivity"),
        }
    }
}

impl Serialize for InequalityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhsTerm {
    pub label: &'static str,
    pub value: f64,
}

/// One evaluated instance of `lhs <= sum(rhs_terms)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCertificate {
    pub inequality_id: InequalityId,
    pub lhs: f64,
    pub rhs_terms: Vec<RhsTerm>,
    pub rhs_total: f64,
    /// `rhs_total - lhs`
    pub slack: f64,
    pub tolerance: f64,
    pub satisfied: bool,
}

impl BoundCertificate {
    pub fn new(inequality_id: InequalityId, lhs: f64, rhs_terms: Vec<RhsTerm>, tolerance: f64) -> Self {
        let rhs_total: f64 = rhs_terms.iter().map(|t| t.value).sum();
        let slack = rhs_total - lhs;
        Self {
            inequality_id,
            lhs,
            rhs_terms,
            rhs_total,
            slack,
            tolerance,
            satisfied: slack >= -tolerance,
        }
    }

    pub fn single(inequality_id: InequalityId, lhs: f64, label: &'static str, rhs: f64, tolerance: f64) -> Self {
        Self::new(inequality_id, lhs, vec![RhsTerm { label, value: rhs }], tolerance)
    }

    /// Certificate for `|a - b| <= 0` at the given tolerance.
    pub fn equality(inequality_id: InequalityId, a: f64, b: f64, tolerance: f64) -> Self {
        Self::single(inequality_id, (a - b).abs(), "zero", 0.0, tolerance)
    }

    pub fn term(&self, label: &str) -> Option<f64> {
        self.rhs_terms.iter().find(|t| t.label == label).map(|t| t.value)
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: lhs={:.6e} rhs={:.6e} slack={:.3e}",
            if self.satisfied { "ok  " } else { "FAIL" },
            self.inequality_id,
            self.lhs,
            self.rhs_total,
            self.slack
        )
    }
}
