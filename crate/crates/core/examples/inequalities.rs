//! Certificates for the triangle-like, mixture and telescopic inequalities on random inputs.

use backflow::bounds::{check_appendix_a, check_audenaert, check_triangle_like, kappa_mu, varsigma_mu, TriangleFamily};
use backflow::random::{random_positive, random_state};
use backflow::SkewParam;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> backflow::Result<()> {
    println!("kappa(1/2) = {:.6}, varsigma(1/2) = {:.6}", kappa_mu(SkewParam::HALF), varsigma_mu(SkewParam::HALF));

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mu = SkewParam::new(0.25)?;
    let (rho, sigma, tau) = (random_state(3, &mut rng), random_state(3, &mut rng), random_state(3, &mut rng));
    for family in [
        TriangleFamily::HolevoSkew,
        TriangleFamily::QuantumSkew,
        TriangleFamily::Helstrom,
        TriangleFamily::SqrtJensenShannon,
    ] {
        for cert in check_triangle_like(&rho, &sigma, &tau, mu, family)? {
            println!("{cert}");
        }
    }
    for cert in check_appendix_a(&rho, &sigma, &tau, mu)? {
        println!("{cert}");
    }
    let (w, x, y) = (random_positive(4, &mut rng), random_positive(4, &mut rng), random_positive(4, &mut rng));
    for cert in check_audenaert(&w, &x, &y)? {
        println!("{cert}");
    }
    Ok(())
}
