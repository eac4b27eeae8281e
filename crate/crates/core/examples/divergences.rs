//! Every distinguishability quantifier on a few state pairs, including the
//! coincidences at `mu = 1/2`.

use backflow::divergences::{holevo_skew_dual, relative_entropy, support_orthogonal};
use backflow::random::{random_orthogonal_pair, random_state};
use backflow::{ComplexMatrix, DensityMatrix, Quantifier, SkewParam};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn table(label: &str, rho: &DensityMatrix, sigma: &DensityMatrix, mu: SkewParam) -> backflow::Result<()> {
    println!("{label} (mu = {})", mu.value());
    for q in Quantifier::ALL {
        println!("  {:<22} {:.12}", q.name(), q.evaluate(rho, sigma, mu)?);
    }
    Ok(())
}

fn main() -> backflow::Result<()> {
    let zero = DensityMatrix::basis(2, 0);
    let mixed = DensityMatrix::maximally_mixed(2);
    table("|0><0| vs 1/2", &zero, &mixed, SkewParam::HALF)?;

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let rho = random_state(3, &mut rng);
    let sigma = random_state(3, &mut rng);
    let quarter = SkewParam::new(0.25)?;
    table("random qutrits", &rho, &sigma, quarter)?;
    let (a, b) = holevo_skew_dual(&rho, &sigma, quarter)?;
    println!("  Holevo skew, two evaluation paths differ by {:.3e}", (a - b).abs());
    println!("  relative entropy S(rho, sigma) = {}", relative_entropy(&rho, &sigma)?);

    let (p, q) = random_orthogonal_pair(3, &mut rng);
    println!("orthogonal supports detected: {}", support_orthogonal(&p, &q)?);
    table("orthogonal pair", &p, &q, quarter)?;

    let singular = DensityMatrix::validate(ComplexMatrix::from_diagonal(&[1.0, 0.0]))?;
    println!("S(1/2, |0><0|) = {}", relative_entropy(&mixed, &singular)?);
    Ok(())
}
