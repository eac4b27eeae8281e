use backflow::bounds::{
    check_appendix_a, check_audenaert, check_triangle_like, default_phi, f_mu, g_mu, g_sqrt_coefficient,
    general_backflow_bound, kappa_mu, summed_revivals, tight_bound, varsigma_mu, Phi, SnapshotPair, TightFamily,
    TriangleFamily, TERM_CORRELATIONS_RHO, TERM_CORRELATIONS_SIGMA, TERM_ENVIRONMENT,
};
use backflow::qla::Subsystems;
use backflow::random::{random_positive, random_state, random_unitary};
use backflow::{ComplexMatrix, DensityMatrix, Error, Quantifier, SkewParam};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MUS: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];

fn mu(m: f64) -> SkewParam {
    SkewParam::new(m).unwrap()
}

#[test]
fn constants_at_one_half() {
    let exact = (2.0 / std::f64::consts::LN_2.powi(3)).powf(0.25);
    assert!((kappa_mu(SkewParam::HALF) - exact).abs() < 1e-14);
    assert!((varsigma_mu(SkewParam::HALF) - exact).abs() < 1e-14);
    assert!((exact - 1.565).abs() < 1e-3);
}

#[test]
fn constants_are_symmetric() {
    for m in MUS {
        assert!((kappa_mu(mu(m)) - kappa_mu(mu(1.0 - m))).abs() < 1e-12);
        assert!((varsigma_mu(mu(m)) - varsigma_mu(mu(1.0 - m))).abs() < 1e-12);
    }
}

#[test]
fn triangle_functions_at_the_endpoints() {
    for m in MUS {
        assert_eq!(g_mu(0.0, mu(m)).unwrap(), 0.0);
        assert_eq!(f_mu(0.0, mu(m)).unwrap(), 0.0);
        assert!((g_mu(1.0, mu(m)).unwrap() - 1.0).abs() < 1e-12);
        assert!((f_mu(1.0, mu(m)).unwrap() - 1.0).abs() < 1e-12);
    }
    assert!(matches!(g_mu(1.5, SkewParam::HALF), Err(Error::OutOfUnitInterval { .. })));
    assert!(f_mu(-0.1, SkewParam::HALF).is_err());
}

#[test]
fn phi_composition() {
    let k = kappa_mu(SkewParam::HALF);
    let phi = Phi::FourthRoot { coefficient: k };
    for x in [0.0f64, 1e-6, 0.3, 1.0] {
        let expected = k.powf(1.25) * x.powf(1.0 / 16.0);
        assert!((phi.compose_twice(x) - expected).abs() < 1e-12);
    }
    assert_eq!(Phi::Identity.compose_twice(0.4), 0.4);
}

#[test]
fn default_phi_choices() {
    let m = mu(0.3);
    assert_eq!(default_phi(Quantifier::TraceDistance, m).unwrap(), Phi::Identity);
    assert_eq!(default_phi(Quantifier::SqrtJensenShannon, m).unwrap(), Phi::Identity);
    assert_eq!(
        default_phi(Quantifier::HolevoSkew, m).unwrap(),
        Phi::FourthRoot { coefficient: kappa_mu(m) }
    );
    assert_eq!(
        default_phi(Quantifier::QuantumSkew, m).unwrap(),
        Phi::FourthRoot { coefficient: varsigma_mu(m) }
    );
    assert!(default_phi(Quantifier::Helstrom, m).is_err());
    assert_eq!(default_phi(Quantifier::Helstrom, SkewParam::HALF).unwrap(), Phi::Identity);
}

#[test]
fn revivals() {
    assert!((summed_revivals(&[0.0, 1.0, 0.5, 0.7]).unwrap() - 1.2).abs() < 1e-15);
    assert_eq!(summed_revivals(&[1.0, 0.5, 0.1]).unwrap(), 0.0);
    assert!(summed_revivals(&[1.0]).is_err());
}

#[test]
fn telescoping_bounds_need_a_positive_w() {
    let zero = ComplexMatrix::zeros(2);
    let id = ComplexMatrix::identity(2);
    assert!(matches!(check_audenaert(&zero, &id, &id), Err(Error::ZeroTrace { name: "W" })));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let w = random_positive(2, &mut rng);
    let x = random_positive(2, &mut rng);
    for cert in check_audenaert(&w, &x, &zero).unwrap() {
        assert!(cert.satisfied);
        assert!(cert.lhs.abs() < 1e-10 && cert.rhs_total.abs() < 1e-12);
    }
}

#[test]
fn degenerate_triples_have_vanishing_left_sides() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let rho = random_state(3, &mut rng);
    let sigma = random_state(3, &mut rng);
    for family in [
        TriangleFamily::HolevoSkew,
        TriangleFamily::QuantumSkew,
        TriangleFamily::Helstrom,
        TriangleFamily::SqrtJensenShannon,
    ] {
        for cert in check_triangle_like(&rho, &sigma, &sigma, SkewParam::HALF, family).unwrap() {
            assert!(cert.lhs.abs() < 1e-10, "{}", cert.inequality_id);
            assert!(cert.satisfied);
        }
    }
    for cert in check_appendix_a(&rho, &rho, &sigma, mu(0.3)).unwrap() {
        assert!(cert.lhs.abs() < 1e-10);
        assert!(cert.rhs_total.abs() < 1e-12);
    }
}

fn snapshot(rho: DensityMatrix, sigma: DensityMatrix, s: usize, e: usize) -> SnapshotPair {
    SnapshotPair::new(rho, sigma, Subsystems::bipartite(s, e).unwrap()).unwrap()
}

#[test]
fn uncorrelated_snapshots_with_a_shared_environment() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let env = random_state(3, &mut rng);
    let rho = random_state(2, &mut rng).tensor(&env);
    let sigma = random_state(2, &mut rng).tensor(&env);
    let u = random_unitary(6, &mut rng);
    let at_s = snapshot(rho.clone(), sigma.clone(), 2, 3);
    let at_t = snapshot(rho.evolve(&u), sigma.evolve(&u), 2, 3);
    for family in [TightFamily::HolevoSkew, TightFamily::QuantumSkew, TightFamily::Helstrom, TightFamily::SqrtJensenShannon] {
        let cert = tight_bound(&at_s, &at_t, family, SkewParam::HALF).unwrap();
        assert!(cert.satisfied);
        // fourth and square roots amplify eigensolver noise on vanishing quantities
        let limit = match family {
            TightFamily::HolevoSkew | TightFamily::QuantumSkew => 1e-3,
            TightFamily::SqrtJensenShannon => 1e-6,
            _ => 1e-12,
        };
        assert!(cert.rhs_total.abs() < limit, "{family:?}: {}", cert.rhs_total);
        assert!(cert.term(TERM_ENVIRONMENT).is_some());
        assert!(cert.term(TERM_CORRELATIONS_RHO).is_some());
        assert!(cert.term(TERM_CORRELATIONS_SIGMA).is_some());
    }
}

#[test]
fn snapshots_must_share_a_structure() {
    let a = snapshot(DensityMatrix::maximally_mixed(6), DensityMatrix::maximally_mixed(6), 2, 3);
    let b = snapshot(DensityMatrix::maximally_mixed(6), DensityMatrix::maximally_mixed(6), 3, 2);
    assert!(tight_bound(&a, &b, TightFamily::HolevoSkew, SkewParam::HALF).is_err());
    let phi = Phi::Identity;
    assert!(general_backflow_bound(&a, &a, Quantifier::Helstrom, mu(0.3), phi).is_err());
}

const FAMILIES: [TightFamily; 5] = [
    TightFamily::HolevoSkew,
    TightFamily::QuantumSkew,
    TightFamily::Helstrom,
    TightFamily::SqrtJensenShannon,
    TightFamily::JensenShannon,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phi_is_subadditive(x in 0.0f64..1.0, y in 0.0f64..1.0, m in 0.05f64..0.95) {
        let phi = Phi::FourthRoot { coefficient: kappa_mu(mu(m)) };
        prop_assert!(phi.apply(x + y) <= phi.apply(x) + phi.apply(y) + 1e-15);
        prop_assert!(phi.apply(x.min(y)) <= phi.apply(x.max(y)));
    }

    #[test]
    fn g_below_its_square_root_majorant(x in 0.0f64..=1.0, m in 0.05f64..0.95) {
        let g = g_mu(x, mu(m)).unwrap();
        prop_assert!(g <= g_sqrt_coefficient(mu(m)) * x.sqrt() + 1e-12);
    }

    // any pair of joint states related by a common unitary obeys every bound
    #[test]
    fn bounds_hold_under_global_unitaries(seed in any::<u64>(), mi in 0usize..5, e in 2usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = mu(MUS[mi]);
        let rho = random_state(2 * e, &mut rng);
        let sigma = random_state(2 * e, &mut rng);
        let u = random_unitary(2 * e, &mut rng);
        let at_s = snapshot(rho.clone(), sigma.clone(), 2, e);
        let at_t = snapshot(rho.evolve(&u), sigma.evolve(&u), 2, e);
        for family in FAMILIES {
            if family == TightFamily::JensenShannon && m != SkewParam::HALF {
                continue;
            }
            let cert = tight_bound(&at_s, &at_t, family, m).unwrap();
            prop_assert!(cert.satisfied, "{family:?}: slack {}", cert.slack);
        }
        for q in [Quantifier::TraceDistance, Quantifier::HelstromSymmetrized, Quantifier::HolevoSkew,
                  Quantifier::QuantumSkew, Quantifier::SqrtJensenShannon] {
            let cert = general_backflow_bound(&at_s, &at_t, q, m, default_phi(q, m).unwrap()).unwrap();
            prop_assert!(cert.satisfied, "{q}: slack {}", cert.slack);
        }
    }

    #[test]
    fn tight_k_is_below_general_k(seed in any::<u64>(), mi in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = mu(MUS[mi]);
        let rho = random_state(4, &mut rng);
        let sigma = random_state(4, &mut rng);
        let u = random_unitary(4, &mut rng);
        let at_s = snapshot(rho.clone(), sigma.clone(), 2, 2);
        let at_t = snapshot(rho.evolve(&u), sigma.evolve(&u), 2, 2);
        let tight = tight_bound(&at_s, &at_t, TightFamily::HolevoSkew, m).unwrap();
        let general = general_backflow_bound(&at_s, &at_t, Quantifier::HolevoSkew, m, default_phi(Quantifier::HolevoSkew, m).unwrap()).unwrap();
        prop_assert!(tight.rhs_total <= general.rhs_total + 1e-12);
        prop_assert_eq!(tight.lhs, general.lhs);
    }
}
