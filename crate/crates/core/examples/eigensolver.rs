//! Diagonalize a random Hermitian matrix with the cyclic Jacobi solver and
//! check the reconstruction `V diag(lambda) V^dagger`.

use backflow::qla::eigh;
use backflow::random::ginibre;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> backflow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = ginibre(6, &mut rng);
    let h = (&g + &g.adjoint()).scale(0.5);

    let spectrum = eigh(&h)?;
    println!("eigenvalues:");
    for (k, l) in spectrum.eigenvalues.iter().enumerate() {
        println!("  {k}: {l:+.12}");
    }
    let err = spectrum.reconstruct().max_abs_diff(&h);
    println!("max |V L V^dagger - H| = {err:.3e}");

    let v = &spectrum.eigenvectors;
    let gram = v.adjoint().matmul(v);
    let id = backflow::ComplexMatrix::identity(6);
    println!("max |V^dagger V - 1| = {:.3e}", gram.max_abs_diff(&id));
    Ok(())
}
