//! Both sides of the information-backflow inequalities, packaged as certificates.

mod backflow;
mod certificate;
mod inequalities;
mod scalar;

pub use backflow::{
    default_phi, general_backflow_bound, general_bound_from, snapshot_quantities, summed_revivals, tight_bound,
    tight_bound_from, QuantityTable, SnapshotPair, SnapshotQuantities, TightFamily, TERM_CORRELATIONS_RHO,
    TERM_CORRELATIONS_SIGMA, TERM_ENVIRONMENT,
};
pub use certificate::{BoundCertificate, InequalityId, RhsTerm};
pub use inequalities::{check_appendix_a, check_audenaert, check_triangle_like, TriangleFamily};
pub use scalar::{f_mu, g_mu, g_sqrt_coefficient, kappa_mu, varsigma_mu, Phi};
