//! Triangle-like inequalities and the relative-entropy bounds they are built from.

use serde::{Deserialize, Serialize};

use super::certificate::{BoundCertificate, InequalityId, RhsTerm};
use super::scalar::{f_mu, g_mu, kappa_mu, varsigma_mu, x_log_one_plus_c_over_x};
use crate::divergences::{
    helstrom, helstrom_symmetrized, holevo_skew, quantum_skew, relative_entropy_trace_free,
    sqrt_jensen_shannon, trace_distance, MixtureProfile, SkewParam,
};
use crate::error::{Error, Result};
use crate::qla::ComplexMatrix;
use crate::states::DensityMatrix;
use crate::tolerances::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleFamily {
    HolevoSkew,
    QuantumSkew,
    Helstrom,
    SqrtJensenShannon,
}

fn same_dims(states: &[&DensityMatrix]) -> Result<()> {
    let d = states[0].dim();
    if states.iter().any(|s| s.dim() != d) {
        return Err(Error::Dimension("states of different dimension".into()));
    }
    Ok(())
}

fn fourth_root(x: f64) -> f64 {
    x.max(0.0).sqrt().sqrt()
}

/// Evaluates the triangle-like inequalities of one family on the triple `(rho, sigma, tau)`,
/// in both argument orders.
pub fn check_triangle_like(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    tau: &DensityMatrix,
    mu: SkewParam,
    family: TriangleFamily,
) -> Result<Vec<BoundCertificate>> {
    same_dims(&[rho, sigma, tau])?;
    let tol = Tolerances::DEFAULT.violation;
    let single = BoundCertificate::single;
    let certs = match family {
        TriangleFamily::HolevoSkew => {
            let first = holevo_skew(rho, sigma, mu)? - holevo_skew(rho, tau, mu)?;
            let second = holevo_skew(sigma, rho, mu)? - holevo_skew(tau, rho, mu)?;
            let d = trace_distance(sigma, tau)?.min(1.0);
            let phi = kappa_mu(mu) * fourth_root(holevo_skew(sigma, tau, mu)?);
            let g = g_mu(d, mu)?;
            vec![
                single(InequalityId::TriangleG, first, "g_mu(D)", g, tol),
                single(InequalityId::TriangleGSwapped, second, "g_(1-mu)(D)", g_mu(d, mu.complement())?, tol),
                single(InequalityId::TriangleHolevoFirst, first, "kappa_mu K^(1/4)", phi, tol),
                single(InequalityId::TriangleHolevoSecond, second, "kappa_mu K^(1/4)", phi, tol),
                single(InequalityId::GBelowFourthRoot, g, "kappa_mu K^(1/4)", phi, tol),
            ]
        }
        TriangleFamily::QuantumSkew => {
            let first = quantum_skew(rho, sigma, mu)? - quantum_skew(rho, tau, mu)?;
            let second = quantum_skew(sigma, rho, mu)? - quantum_skew(tau, rho, mu)?;
            let d = trace_distance(sigma, tau)?.min(1.0);
            let phi = varsigma_mu(mu) * fourth_root(quantum_skew(sigma, tau, mu)?);
            vec![
                single(InequalityId::TriangleF, first, "f_mu(D)", f_mu(d, mu)?, tol),
                single(InequalityId::TriangleFSwapped, second, "f_(1-mu)(D)", f_mu(d, mu.complement())?, tol),
                single(InequalityId::TriangleSkewFirst, first, "varsigma_mu S^(1/4)", phi, tol),
                single(InequalityId::TriangleSkewSecond, second, "varsigma_mu S^(1/4)", phi, tol),
            ]
        }
        TriangleFamily::Helstrom => {
            let m = mu.value();
            let d = trace_distance(sigma, tau)?;
            vec![
                single(
                    InequalityId::HelstromFirstArgument,
                    helstrom(rho, sigma, mu)? - helstrom(rho, tau, mu)?,
                    "2(1-mu) D",
                    2.0 * (1.0 - m) * d,
                    tol,
                ),
                single(
                    InequalityId::HelstromSecondArgument,
                    helstrom(sigma, rho, mu)? - helstrom(tau, rho, mu)?,
                    "2 mu D",
                    2.0 * m * d,
                    tol,
                ),
                single(
                    InequalityId::TriangleHelstromSymmetrized,
                    helstrom_symmetrized(rho, sigma, mu)? - helstrom_symmetrized(rho, tau, mu)?,
                    "H_mu",
                    helstrom_symmetrized(sigma, tau, mu)?,
                    tol,
                ),
            ]
        }
        TriangleFamily::SqrtJensenShannon => {
            let bound = sqrt_jensen_shannon(sigma, tau)?;
            vec![
                single(
                    InequalityId::TriangleSqrtJensenShannon,
                    sqrt_jensen_shannon(rho, sigma)? - sqrt_jensen_shannon(rho, tau)?,
                    "sqrt J",
                    bound,
                    tol,
                ),
                single(
                    InequalityId::TriangleSqrtJensenShannonSwapped,
                    sqrt_jensen_shannon(sigma, rho)? - sqrt_jensen_shannon(tau, rho)?,
                    "sqrt J",
                    bound,
                    tol,
                ),
            ]
        }
    };
    Ok(certs)
}

/// Bounds on differences of relative entropies to mixtures sharing a common state:
///
/// `S(sigma, mu sigma + (1-mu) rho1) - S(sigma, mu sigma + (1-mu) rho2) <= ln(1 + (1-mu)/mu D)` and
/// `S(rho1, mu rho1 + (1-mu) sigma) - S(rho2, mu rho2 + (1-mu) sigma) <= D ln(1 + (1-mu)/(mu D))`,
/// with `D = D(rho1, rho2)`.
pub fn check_appendix_a(
    rho1: &DensityMatrix,
    rho2: &DensityMatrix,
    sigma: &DensityMatrix,
    mu: SkewParam,
) -> Result<[BoundCertificate; 2]> {
    same_dims(&[rho1, rho2, sigma])?;
    let tol = Tolerances::DEFAULT.violation;
    let m = mu.value();
    let ratio = (1.0 - m) / m;
    let d = trace_distance(rho1, rho2)?;

    let common_first = MixtureProfile::new(sigma, rho1, mu)?.rel_rho - MixtureProfile::new(sigma, rho2, mu)?.rel_rho;
    let varying_first = MixtureProfile::new(rho1, sigma, mu)?.rel_rho - MixtureProfile::new(rho2, sigma, mu)?.rel_rho;
    Ok([
        BoundCertificate::single(
            InequalityId::MixtureRelativeEntropyFirst,
            common_first,
            "ln(1 + (1-mu)/mu D)",
            (ratio * d).ln_1p(),
            tol,
        ),
        BoundCertificate::single(
            InequalityId::MixtureRelativeEntropySecond,
            varying_first,
            "D ln(1 + (1-mu)/(mu D))",
            x_log_one_plus_c_over_x(d, ratio),
            tol,
        ),
    ])
}

fn finite_relative_entropy(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    Ok(relative_entropy_trace_free(a, b)?.to_f64())
}

/// Telescoping bounds for positive operators `W, X, Y`:
///
/// `0 <= S(W, W+X) - S(W, W+X+Y) <= tr W ln(1 + tr Y / tr W)` and
/// `0 <= S(X, X+W) - S(X+Y, X+Y+W) <= tr Y ln(1 + tr W / tr Y)`.
///
/// `S(A, B)` here is `tr A (ln A - ln B)`. `W` must have positive trace; `tr Y = 0`
/// uses the continuous extension `0` of the second right-hand side.
pub fn check_audenaert(w: &ComplexMatrix, x: &ComplexMatrix, y: &ComplexMatrix) -> Result<Vec<BoundCertificate>> {
    if w.dim() != x.dim() || w.dim() != y.dim() {
        return Err(Error::Dimension("operators of different dimension".into()));
    }
    let tr_w = w.trace().re;
    let tr_y = y.trace().re;
    if !(tr_w > 0.0) {
        return Err(Error::ZeroTrace { name: "W" });
    }
    let tol = Tolerances::DEFAULT.violation;
    let wx = w + x;
    let wxy = &wx + y;
    let xy = x + y;
    let first = finite_relative_entropy(w, &wx)? - finite_relative_entropy(w, &wxy)?;
    let second = finite_relative_entropy(x, &wx)? - finite_relative_entropy(&xy, &wxy)?;
    let zero = |id, lhs| BoundCertificate::new(id, lhs, vec![RhsTerm { label: "zero", value: 0.0 }], tol);
    Ok(vec![
        zero(InequalityId::TelescopicFirstLower, -first),
        BoundCertificate::single(
            InequalityId::TelescopicFirstUpper,
            first,
            "tr W ln(1 + tr Y / tr W)",
            tr_w * (tr_y / tr_w).ln_1p(),
            tol,
        ),
        zero(InequalityId::TelescopicSecondLower, -second),
        BoundCertificate::single(
            InequalityId::TelescopicSecondUpper,
            second,
            "tr Y ln(1 + tr W / tr Y)",
            x_log_one_plus_c_over_x(tr_y, tr_w),
            tol,
        ),
    ])
}
