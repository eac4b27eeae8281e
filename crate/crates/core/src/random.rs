//! Random states, unitaries and channels for the property harness.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::qla::ComplexMatrix;
use crate::states::DensityMatrix;

fn gaussian(rng: &mut impl Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn gaussian_vector(len: usize, rng: &mut impl Rng) -> Vec<C64> {
    (0..len).map(|_| gaussian(rng)).collect()
}

/// Square matrix with i.i.d. standard complex Gaussian entries.
pub fn ginibre(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| gaussian(rng))
}

/// Modified Gram-Schmidt, applied twice; returns orthonormal vectors.
fn orthonormalize(mut vectors: Vec<Vec<C64>>) -> Vec<Vec<C64>> {
    for k in 0..vectors.len() {
        for _ in 0..2 {
            for j in 0..k {
                let overlap: C64 = vectors[j].iter().zip(&vectors[k]).map(|(a, b)| a.conj() * b).sum();
                let (done, rest) = vectors.split_at_mut(k);
                for (x, y) in rest[0].iter_mut().zip(&done[j]) {
                    *x -= overlap * y;
                }
            }
        }
        let norm = vectors[k].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for x in vectors[k].iter_mut() {
            *x /= norm;
        }
    }
    vectors
}

/// Haar-distributed unitary (Gram-Schmidt on Gaussian columns).
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let columns = orthonormalize((0..dim).map(|_| gaussian_vector(dim, rng)).collect());
    ComplexMatrix::from_fn(dim, |i, j| columns[j][i])
}

/// Mixed state `G G^dagger / tr` from a `dim x rank` Gaussian `G`.
pub fn random_state_of_rank(dim: usize, rank: usize, rng: &mut impl Rng) -> DensityMatrix {
    let columns: Vec<Vec<C64>> = (0..rank).map(|_| gaussian_vector(dim, rng)).collect();
    let mut m = ComplexMatrix::zeros(dim);
    for c in &columns {
        m += &ComplexMatrix::outer(c);
    }
    let tr = m.trace().re;
    DensityMatrix::trusted(m.scale(1.0 / tr).hermitian_part())
}

/// Full-rank mixed state (Hilbert-Schmidt measure).
pub fn random_state(dim: usize, rng: &mut impl Rng) -> DensityMatrix {
    random_state_of_rank(dim, dim, rng)
}

pub fn random_pure_state(dim: usize, rng: &mut impl Rng) -> DensityMatrix {
    random_state_of_rank(dim, 1, rng)
}

/// Two states with orthogonal supports: random blocks on complementary
/// coordinate subspaces, then a common random unitary rotation.
pub fn random_orthogonal_pair(dim: usize, rng: &mut impl Rng) -> (DensityMatrix, DensityMatrix) {
    assert!(dim >= 2);
    let split = rng.random_range(1..dim);
    let embed = |block: &DensityMatrix, offset: usize| {
        let mut m = ComplexMatrix::zeros(dim);
        for i in 0..block.dim() {
            for j in 0..block.dim() {
                m[(offset + i, offset + j)] = block.matrix()[(i, j)];
            }
        }
        m
    };
    let a = random_state_of_rank(split, rng.random_range(1..=split), rng);
    let b = random_state_of_rank(dim - split, rng.random_range(1..=dim - split), rng);
    let u = random_unitary(dim, rng);
    (
        DensityMatrix::trusted(embed(&a, 0).conjugate_by(&u).hermitian_part()),
        DensityMatrix::trusted(embed(&b, split).conjugate_by(&u).hermitian_part()),
    )
}

/// Kraus operators of a random CPTP map: `count` stacked Gaussian blocks whose
/// columns are orthonormalized, so that `sum_i K_i^dagger K_i = 1`.
pub fn random_kraus(dim: usize, count: usize, rng: &mut impl Rng) -> Vec<ComplexMatrix> {
    let columns = orthonormalize((0..dim).map(|_| gaussian_vector(dim * count, rng)).collect());
    (0..count)
        .map(|block| ComplexMatrix::from_fn(dim, |i, j| columns[j][block * dim + i]))
        .collect()
}

/// Positive operator `G G^dagger` with a random overall scale in `[0.1, 2)`.
pub fn random_positive(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = ginibre(dim, rng);
    let scale = rng.random_range(0.1..2.0);
    g.matmul(&g.adjoint()).scale(scale / dim as f64).hermitian_part()
}

pub fn random_positive_diagonal(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let diag: Vec<f64> = (0..dim).map(|_| rng.random_range(0.0..2.0)).collect();
    ComplexMatrix::from_diagonal(&diag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = random_unitary(5, &mut rng);
        assert!(u.matmul(&u.adjoint()).max_abs_diff(&ComplexMatrix::identity(5)) < 1e-13);
    }

    #[test]
    fn kraus_sets_are_trace_preserving() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for count in 1..=4 {
            let kraus = random_kraus(3, count, &mut rng);
            let mut sum = ComplexMatrix::zeros(3);
            for k in &kraus {
                sum += &k.adjoint().matmul(k);
            }
            assert!(sum.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-13);
        }
    }

    #[test]
    fn generated_states_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for dim in 2..=4 {
            let rho = random_state(dim, &mut rng);
            assert!(DensityMatrix::validate(rho.matrix().clone()).is_ok());
            let kraus = random_kraus(dim, 3, &mut rng);
            let image = rho.apply_kraus(&kraus);
            assert!(DensityMatrix::validate(image.into_matrix()).is_ok());
        }
    }
}
