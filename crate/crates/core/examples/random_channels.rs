//! Random CPTP maps from Kraus operators, and contractivity of every quantifier under them.

use backflow::random::{random_kraus, random_state};
use backflow::{Quantifier, SkewParam};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> backflow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mu = SkewParam::new(0.3)?;
    let rho = random_state(4, &mut rng);
    let sigma = random_state(4, &mut rng);
    for count in 1..=4 {
        let kraus = random_kraus(4, count, &mut rng);
        let (a, b) = (rho.apply_kraus(&kraus), sigma.apply_kraus(&kraus));
        println!("{count} Kraus operator(s)");
        for q in Quantifier::ALL {
            let before = q.evaluate(&rho, &sigma, mu)?;
            let after = q.evaluate(&a, &b, mu)?;
            println!("  {:<22} {before:.6} -> {after:.6}", q.name());
        }
    }
    Ok(())
}
