//! Scalar constants and concave functions that appear on the right-hand side of the bounds.

use crate::divergences::{binary_entropy, SkewParam};
use crate::error::{Error, Result};

/// `(8 mu (1 - mu) / h(mu)^3)^(1/4)` with `h` in nats.
pub fn kappa_mu(mu: SkewParam) -> f64 {
    let m = mu.value();
    let h = binary_entropy(mu);
    (8.0 * m * (1.0 - m) / (h * h * h)).powf(0.25)
}

/// `ln(1 / (mu (1 - mu))) * (mu (1 - mu) / (2 h(mu) ln^3(mu) ln^3(1 - mu)))^(1/4)`.
pub fn varsigma_mu(mu: SkewParam) -> f64 {
    let m = mu.value();
    let h = binary_entropy(mu);
    let l1 = m.ln();
    let l2 = (-m).ln_1p();
    let cubes = (l1 * l2).powi(3);
    -(m * (1.0 - m)).ln() * (m * (1.0 - m) / (2.0 * h * cubes)).powf(0.25)
}

/// `x ln(1 + c / x)`, continuously extended by `0` at `x = 0`.
pub(crate) fn x_log_one_plus_c_over_x(x: f64, c: f64) -> f64 {
    if x < 1e-300 {
        0.0
    } else {
        x * (c / x).ln_1p()
    }
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfUnitInterval { value: x })
    }
}

/// Triangle-like function for the Holevo skew divergence, evaluated at a trace distance.
pub fn g_mu(x: f64, mu: SkewParam) -> Result<f64> {
    check_unit(x)?;
    let m = mu.value();
    let h = binary_entropy(mu);
    Ok(m / h * ((1.0 - m) / m * x).ln_1p() + (1.0 - m) / h * x_log_one_plus_c_over_x(x, m / (1.0 - m)))
}

/// Triangle-like function for the quantum skew divergence, evaluated at a trace distance.
pub fn f_mu(x: f64, mu: SkewParam) -> Result<f64> {
    check_unit(x)?;
    let m = mu.value();
    let l1 = -m.ln();
    let l2 = -(-m).ln_1p();
    Ok(m / l1 * ((1.0 - m) / m * x).ln_1p() + (1.0 - m) / l2 * x_log_one_plus_c_over_x(x, m / (1.0 - m)))
}

/// Coefficient `sqrt(4 mu (1 - mu)) / h(mu)` of the square-root majorant of `g_mu`.
pub fn g_sqrt_coefficient(mu: SkewParam) -> f64 {
    let m = mu.value();
    (4.0 * m * (1.0 - m)).sqrt() / binary_entropy(mu)
}

/// Concave function `phi` of a triangle-like inequality: `phi(0) = 0`, nondecreasing, subadditive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Phi {
    /// `phi(x) = x`, the proper triangle inequality of a distance.
    Identity,
    /// `phi(x) = coefficient * x^(1/4)`.
    FourthRoot { coefficient: f64 },
}

impl Phi {
    pub fn apply(self, x: f64) -> f64 {
        let x = x.max(0.0);
        match self {
            Phi::Identity => x,
            Phi::FourthRoot { coefficient } => coefficient * x.sqrt().sqrt(),
        }
    }

    pub fn compose_twice(self, x: f64) -> f64 {
        self.apply(self.apply(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(m: f64) -> SkewParam {
        SkewParam::new(m).unwrap()
    }

    #[test]
    fn constants_at_one_half() {
        let ln2 = std::f64::consts::LN_2;
        let expected = (2.0 / ln2.powi(3)).powf(0.25);
        assert!((kappa_mu(SkewParam::HALF) - expected).abs() < 1e-14);
        assert!((varsigma_mu(SkewParam::HALF) - expected).abs() < 1e-14);
        assert!((expected - 1.565).abs() < 1e-3);
    }

    #[test]
    fn constants_are_symmetric() {
        for m in [0.1, 0.25, 0.4] {
            assert!((kappa_mu(mu(m)) - kappa_mu(mu(1.0 - m))).abs() < 1e-13);
            assert!((varsigma_mu(mu(m)) - varsigma_mu(mu(1.0 - m))).abs() < 1e-13);
        }
    }

    #[test]
    fn kappa_quarter_closed_form() {
        // h(1/4) = ln 4 - (3/4) ln 3
        let h = 4f64.ln() - 0.75 * 3f64.ln();
        let expected = (8.0 * 0.25 * 0.75 / h.powi(3)).powf(0.25);
        assert!((kappa_mu(mu(0.25)) - expected).abs() < 1e-14);
    }

    #[test]
    fn constants_are_minimal_at_one_half() {
        let k_half = kappa_mu(SkewParam::HALF);
        let s_half = varsigma_mu(SkewParam::HALF);
        for i in 1..100 {
            let m = mu(i as f64 / 100.0);
            assert!(kappa_mu(m) >= k_half - 1e-12);
            assert!(varsigma_mu(m) >= s_half - 1e-12);
        }
        assert!(varsigma_mu(mu(0.25)) >= s_half);
    }

    #[test]
    fn g_and_f_boundary_values() {
        assert_eq!(g_mu(0.0, mu(0.3)).unwrap(), 0.0);
        assert_eq!(f_mu(0.0, mu(0.3)).unwrap(), 0.0);
        assert!((g_mu(1.0, SkewParam::HALF).unwrap() - 1.0).abs() < 1e-15);
        assert!((f_mu(1.0, SkewParam::HALF).unwrap() - 1.0).abs() < 1e-15);
        assert!(g_mu(1.5, SkewParam::HALF).is_err());
        assert!(f_mu(-0.1, SkewParam::HALF).is_err());
    }

    #[test]
    fn f_is_nonnegative_and_increasing_on_grid() {
        for m in [0.1, 0.25, 0.5, 0.75] {
            let mut prev = 0.0;
            for i in 1..=10 {
                let v = f_mu(i as f64 / 10.0, mu(m)).unwrap();
                assert!(v >= 0.0 && v > prev, "mu={m} x={}", i as f64 / 10.0);
                prev = v;
            }
        }
    }

    #[test]
    fn g_is_below_its_square_root_majorant() {
        for m in [0.1, 0.25, 0.5, 0.9] {
            let c = g_sqrt_coefficient(mu(m));
            for i in 0..=100 {
                let x = i as f64 / 100.0;
                assert!(g_mu(x, mu(m)).unwrap() <= c * x.sqrt() + 1e-15);
            }
        }
    }

    #[test]
    fn phi_composition() {
        let phi = Phi::FourthRoot { coefficient: 2.0 };
        assert_eq!(phi.apply(0.0), 0.0);
        assert!((phi.apply(16.0) - 4.0).abs() < 1e-15);
        assert!((phi.compose_twice(16.0) - 2.0 * 4f64.powf(0.25)).abs() < 1e-15);
        assert_eq!(Phi::Identity.compose_twice(0.3), 0.3);
    }
}
