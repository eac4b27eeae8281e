use backflow::divergences::{
    binary_entropy, helstrom, helstrom_symmetrized, holevo_chi, holevo_skew, holevo_skew_dual, holevo_skew_in,
    jensen_shannon, quantum_skew, quantum_skew_in, relative_entropy, sqrt_jensen_shannon, trace_distance,
    von_neumann_entropy,
};
use backflow::qla::{apply_function_on_spectrum, eigh};
use backflow::random::{random_kraus, random_orthogonal_pair, random_state, random_state_of_rank, random_unitary};
use backflow::{DensityMatrix, ExtendedReal, LogBase, Quantifier, SkewParam};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::LN_2;

fn mu(m: f64) -> SkewParam {
    SkewParam::new(m).unwrap()
}

fn h(x: f64) -> f64 {
    -x * x.ln() - (1.0 - x) * (1.0 - x).ln()
}

fn kl(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).filter(|(a, _)| **a > 0.0).map(|(a, b)| a * (a / b).ln()).sum()
}

// tr rho (ln rho - ln sigma) for full-rank states, through matrix logarithms
fn relative_entropy_oracle(rho: &DensityMatrix, sigma: &DensityMatrix) -> f64 {
    let ln_rho = apply_function_on_spectrum(rho.matrix(), f64::ln).unwrap();
    let ln_sigma = apply_function_on_spectrum(sigma.matrix(), f64::ln).unwrap();
    (rho.matrix().trace_product(&ln_rho) - rho.matrix().trace_product(&ln_sigma)).re
}

#[test]
fn chi_and_k_closed_forms() {
    let zero = DensityMatrix::basis(2, 0);
    let mm = DensityMatrix::maximally_mixed(2);
    let chi = h(0.25) - LN_2 / 2.0;
    assert!((holevo_chi(&zero, &mm, SkewParam::HALF).unwrap() - chi).abs() < 1e-14);
    let k = holevo_skew(&zero, &mm, SkewParam::HALF).unwrap();
    assert!((k - chi / LN_2).abs() < 1e-14);
    assert!((k - 0.3113).abs() < 1e-4);
}

#[test]
fn relative_entropy_of_commuting_states_is_classical() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let u = random_unitary(4, &mut rng);
    let p = [0.1, 0.2, 0.3, 0.4];
    let q = [0.4, 0.3, 0.2, 0.1];
    let rho = DensityMatrix::validate(backflow::ComplexMatrix::from_diagonal(&p).conjugate_by(&u)).unwrap();
    let sigma = DensityMatrix::validate(backflow::ComplexMatrix::from_diagonal(&q).conjugate_by(&u)).unwrap();
    let s = relative_entropy(&rho, &sigma).unwrap().to_f64();
    assert!((s - kl(&p, &q)).abs() < 1e-12);
}

#[test]
fn relative_entropy_matches_matrix_logarithm_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for dim in [2, 3, 4] {
        for _ in 0..20 {
            let rho = random_state(dim, &mut rng);
            let sigma = random_state(dim, &mut rng);
            let s = relative_entropy(&rho, &sigma).unwrap().to_f64();
            assert!((s - relative_entropy_oracle(&rho, &sigma)).abs() < 1e-10);
        }
    }
}

#[test]
fn relative_entropy_is_infinite_off_support() {
    let zero = DensityMatrix::basis(2, 0);
    let one = DensityMatrix::basis(2, 1);
    assert_eq!(relative_entropy(&zero, &one).unwrap(), ExtendedReal::Infinite);
    let s = relative_entropy(&zero, &DensityMatrix::maximally_mixed(2)).unwrap();
    assert!((s.to_f64() - LN_2).abs() < 1e-14);
}

#[test]
fn quantum_skew_matches_its_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for m in [0.1, 0.25, 0.6, 0.9] {
        let rho = random_state(3, &mut rng);
        let sigma = random_state(3, &mut rng);
        let first = rho.mix(m, &sigma);
        let second = sigma.mix(1.0 - m, &rho);
        let expected = m / (1.0 / m).ln() * relative_entropy_oracle(&rho, &first)
            + (1.0 - m) / (1.0 / (1.0 - m)).ln() * relative_entropy_oracle(&sigma, &second);
        assert!((quantum_skew(&rho, &sigma, mu(m)).unwrap() - expected).abs() < 1e-10);
    }
}

#[test]
fn holevo_chi_matches_entropy_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for m in [0.1, 0.5, 0.75] {
        let rho = random_state_of_rank(4, 2, &mut rng);
        let sigma = random_state(4, &mut rng);
        let mix = rho.mix(m, &sigma);
        let expected = von_neumann_entropy(&mix).unwrap()
            - m * von_neumann_entropy(&rho).unwrap()
            - (1.0 - m) * von_neumann_entropy(&sigma).unwrap();
        assert!((holevo_chi(&rho, &sigma, mu(m)).unwrap() - expected).abs() < 1e-10);
        let (a, b) = holevo_skew_dual(&rho, &sigma, mu(m)).unwrap();
        assert!((a - b).abs() < 1e-10);
        assert!((a - expected / binary_entropy(mu(m))).abs() < 1e-10);
    }
}

#[test]
fn orthogonal_supports_saturate() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for m in [0.1, 0.3, 0.5, 0.8] {
        let (rho, sigma) = random_orthogonal_pair(4, &mut rng);
        assert!((holevo_skew(&rho, &sigma, mu(m)).unwrap() - 1.0).abs() < 1e-10);
        assert!((quantum_skew(&rho, &sigma, mu(m)).unwrap() - 1.0).abs() < 1e-10);
        assert!((trace_distance(&rho, &sigma).unwrap() - 1.0).abs() < 1e-10);
        assert!((helstrom(&rho, &sigma, mu(m)).unwrap() - 1.0).abs() < 1e-10);
        assert!((jensen_shannon(&rho, &sigma).unwrap() - 1.0).abs() < 1e-10);
    }
}

#[test]
fn identical_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let rho = random_state(3, &mut rng);
    for m in [0.2, 0.5, 0.7] {
        assert!(holevo_skew(&rho, &rho, mu(m)).unwrap().abs() < 1e-12);
        assert!(quantum_skew(&rho, &rho, mu(m)).unwrap().abs() < 1e-12);
        let floor = (2.0 * m - 1.0).abs();
        assert!((helstrom(&rho, &rho, mu(m)).unwrap() - floor).abs() < 1e-12);
        assert!((helstrom_symmetrized(&rho, &rho, mu(m)).unwrap() - floor).abs() < 1e-12);
    }
    assert!(sqrt_jensen_shannon(&rho, &rho).unwrap() < 1e-6);
    assert!(trace_distance(&rho, &rho).unwrap() < 1e-14);
}

#[test]
fn skew_parameter_domain() {
    for bad in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
        assert!(SkewParam::new(bad).is_err());
    }
}

#[test]
fn dimension_mismatch_is_an_error() {
    let a = DensityMatrix::maximally_mixed(2);
    let b = DensityMatrix::maximally_mixed(3);
    assert!(trace_distance(&a, &b).is_err());
    assert!(holevo_skew(&a, &b, SkewParam::HALF).is_err());
}

#[test]
fn quantifier_names_round_trip() {
    for q in Quantifier::ALL {
        assert_eq!(Quantifier::from_name(q.name()), Some(q));
        assert_eq!(q.to_string(), q.name());
    }
    assert_eq!(Quantifier::from_name("fidelity"), None);
}

fn pair(seed: u64, dim: usize) -> (DensityMatrix, DensityMatrix, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = 1 + (seed as usize) % dim;
    let rho = random_state_of_rank(dim, r, &mut rng);
    let sigma = random_state(dim, &mut rng);
    (rho, sigma, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn half_skew_identities(seed in any::<u64>(), dim in 2usize..5) {
        let (rho, sigma, _) = pair(seed, dim);
        let j = jensen_shannon(&rho, &sigma).unwrap();
        prop_assert!((j - holevo_skew(&rho, &sigma, SkewParam::HALF).unwrap()).abs() < 1e-10);
        prop_assert!((j - quantum_skew(&rho, &sigma, SkewParam::HALF).unwrap()).abs() < 1e-10);
        prop_assert!((trace_distance(&rho, &sigma).unwrap() - helstrom(&rho, &sigma, SkewParam::HALF).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn skew_symmetries(seed in any::<u64>(), dim in 2usize..5, m in 0.05f64..0.95) {
        let (rho, sigma, _) = pair(seed, dim);
        let (a, b) = (mu(m), mu(m).complement());
        prop_assert!((holevo_skew(&rho, &sigma, a).unwrap() - holevo_skew(&sigma, &rho, b).unwrap()).abs() < 1e-10);
        prop_assert!((quantum_skew(&rho, &sigma, a).unwrap() - quantum_skew(&sigma, &rho, b).unwrap()).abs() < 1e-10);
        prop_assert!((helstrom(&rho, &sigma, a).unwrap() - helstrom(&sigma, &rho, b).unwrap()).abs() < 1e-10);
        prop_assert!((trace_distance(&rho, &sigma).unwrap() - trace_distance(&sigma, &rho).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn values_are_in_range(seed in any::<u64>(), dim in 2usize..5, m in 0.05f64..0.95) {
        let (rho, sigma, _) = pair(seed, dim);
        for q in Quantifier::ALL {
            let v = q.evaluate(&rho, &sigma, mu(m)).unwrap();
            prop_assert!((-1e-12..=1.0 + 1e-10).contains(&v), "{q} = {v}");
        }
    }

    #[test]
    fn contractive_under_channels(seed in any::<u64>(), dim in 2usize..4, m in 0.05f64..0.95) {
        let (rho, sigma, mut rng) = pair(seed, dim);
        let kraus = random_kraus(dim, 3, &mut rng);
        let (a, b) = (rho.apply_kraus(&kraus), sigma.apply_kraus(&kraus));
        for q in Quantifier::ALL {
            let before = q.evaluate(&rho, &sigma, mu(m)).unwrap();
            let after = q.evaluate(&a, &b, mu(m)).unwrap();
            prop_assert!(after <= before + 1e-9, "{q}: {after} > {before}");
        }
    }

    #[test]
    fn unitary_and_ancilla_invariance(seed in any::<u64>(), dim in 2usize..4, m in 0.05f64..0.95) {
        let (rho, sigma, mut rng) = pair(seed, dim);
        let u = random_unitary(dim, &mut rng);
        let tau = random_state(2, &mut rng);
        for q in Quantifier::ALL {
            let v = q.evaluate(&rho, &sigma, mu(m)).unwrap();
            let rotated = q.evaluate(&rho.evolve(&u), &sigma.evolve(&u), mu(m)).unwrap();
            let extended = q.evaluate(&rho.tensor(&tau), &sigma.tensor(&tau), mu(m)).unwrap();
            prop_assert!((v - rotated).abs() < 1e-9);
            prop_assert!((v - extended).abs() < 1e-9);
        }
    }

    #[test]
    fn pinsker_like(seed in any::<u64>(), dim in 2usize..5, m in 0.05f64..0.95) {
        let (rho, sigma, _) = pair(seed, dim);
        let d = trace_distance(&rho, &sigma).unwrap();
        let k = holevo_skew(&rho, &sigma, mu(m)).unwrap();
        let s = quantum_skew(&rho, &sigma, mu(m)).unwrap();
        let j = jensen_shannon(&rho, &sigma).unwrap();
        // squared trace distance, weighted as the skew quantities are
        let w = 2.0 * m * (1.0 - m) / binary_entropy(mu(m));
        prop_assert!(k >= w * d * d - 1e-9);
        prop_assert!(j >= d * d / (2.0 * LN_2) - 1e-9);
        let c = m.ln() * (1.0 - m).ln() / (2.0 * m * (1.0 - m) * binary_entropy(mu(m)));
        prop_assert!(d * d <= c * s + 1e-9);
        let full = random_state(rho.dim(), &mut ChaCha8Rng::seed_from_u64(seed ^ 1));
        let rel = relative_entropy(&full, &sigma).unwrap().to_f64();
        prop_assert!(trace_distance(&full, &sigma).unwrap().powi(2) <= rel / 2.0 + 1e-9);
    }

    #[test]
    fn normalized_quantities_do_not_depend_on_the_base(seed in any::<u64>(), m in 0.05f64..0.95) {
        let (rho, sigma, _) = pair(seed, 3);
        let nats = holevo_skew_in(&rho, &sigma, mu(m), LogBase::Nats).unwrap();
        let bits = holevo_skew_in(&rho, &sigma, mu(m), LogBase::Bits).unwrap();
        prop_assert!((nats - bits).abs() < 1e-12);
        let nats = quantum_skew_in(&rho, &sigma, mu(m), LogBase::Nats).unwrap();
        let bits = quantum_skew_in(&rho, &sigma, mu(m), LogBase::Bits).unwrap();
        prop_assert!((nats - bits).abs() < 1e-12);
    }

    #[test]
    fn sqrt_jensen_shannon_is_a_metric(seed in any::<u64>(), dim in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_state(dim, &mut rng);
        let b = random_state(dim, &mut rng);
        let c = random_state(dim, &mut rng);
        let ab = sqrt_jensen_shannon(&a, &b).unwrap();
        let ac = sqrt_jensen_shannon(&a, &c).unwrap();
        let cb = sqrt_jensen_shannon(&c, &b).unwrap();
        prop_assert!(ab <= ac + cb + 1e-9);
        prop_assert!((ab - sqrt_jensen_shannon(&b, &a).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn spectrum_of_states_is_a_distribution(seed in any::<u64>(), dim in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rho = random_state(dim, &mut rng);
        let s = eigh(rho.matrix()).unwrap();
        prop_assert!(s.eigenvalues.iter().all(|&x| x > -1e-12));
        prop_assert!((s.eigenvalues.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }
}
