//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `H[p][q]` and then applies
//! the classical real plane rotation, so that `G^dagger H G` has a vanishing
//! `(p, q)` entry. Sweeps visit pivots in a fixed row-cyclic order, which makes
//! the result bit-reproducible for a given input.

use num_complex::Complex64 as C64;

use super::ComplexMatrix;
use crate::error::{Error, Result};
use crate::tolerances::Tolerances;

/// Eigenvalues in ascending order and the matching orthonormal eigenvectors
/// (stored as the columns of `eigenvectors`).
#[derive(Debug, Clone)]
pub struct HermitianSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianSpectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Column `k` of the eigenvector matrix.
    pub fn eigenvector(&self, k: usize) -> Vec<C64> {
        let v = &self.eigenvectors;
        (0..v.dim()).map(|i| v[(i, k)]).collect()
    }

    /// `V diag(values) V^dagger` for arbitrary real weights on the eigenbasis.
    pub fn synthesize(&self, values: &[f64]) -> ComplexMatrix {
        let n = self.dim();
        assert_eq!(values.len(), n);
        let v = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n);
        for (k, &f) in values.iter().enumerate() {
            if f == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = v[(i, k)] * f;
                if vik.re == 0.0 && vik.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += vik * v[(j, k)].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.synthesize(&self.eigenvalues)
    }

    /// `<v_k| A |v_k>` for every eigenvector, i.e. the diagonal of `A` in this eigenbasis.
    pub fn diagonal_of(&self, a: &ComplexMatrix) -> Vec<f64> {
        let n = self.dim();
        assert_eq!(a.dim(), n);
        (0..n)
            .map(|k| {
                let vk = self.eigenvector(k);
                let avk = a.apply_to_vector(&vk);
                vk.iter().zip(&avk).map(|(x, y)| x.conj() * y).sum::<C64>().re
            })
            .collect()
    }

    /// Projector onto the span of eigenvectors whose eigenvalue exceeds `threshold`.
    pub fn support_projector(&self, threshold: f64) -> ComplexMatrix {
        let weights: Vec<f64> = self
            .eigenvalues
            .iter()
            .map(|&l| if l > threshold { 1.0 } else { 0.0 })
            .collect();
        self.synthesize(&weights)
    }
}

pub fn eigh(h: &ComplexMatrix) -> Result<HermitianSpectrum> {
    eigh_with(h, &Tolerances::DEFAULT)
}

pub fn eigh_with(h: &ComplexMatrix, tol: &Tolerances) -> Result<HermitianSpectrum> {
    let defect = h.hermiticity_defect();
    if !(defect <= tol.structural) {
        return Err(Error::NotHermitian { defect });
    }
    let n = h.dim();
    let mut a = h.hermitian_part();
    // rows of `w` are the eigenvectors while iterating, transposed at the end
    let mut w = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm();
    if scale == 0.0 || n == 1 {
        return Ok(finish(a, w));
    }
    let target = tol.solver * scale;
    let negligible = 1e-3 * f64::EPSILON * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= target {
            break;
        }
        if sweeps == tol.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off,
            });
        }
        // early sweeps only touch the larger pivots
        let threshold = if sweeps < 3 {
            negligible.max(0.2 * off / (n * n) as f64)
        } else {
            negligible
        };
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut w, p, q, threshold);
            }
        }
        sweeps += 1;
    }
    Ok(finish(a, w))
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            sum += a[(i, j)].norm_sqr();
        }
    }
    (2.0 * sum).sqrt()
}

fn rotate(a: &mut ComplexMatrix, w: &mut ComplexMatrix, p: usize, q: usize, threshold: f64) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r <= threshold {
        return;
    }
    let n = a.dim();
    let phase = apq / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let s_phase = phase * s;
    let s_phase_conj = s_phase.conj();

    let d = a.as_mut_slice();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let row = &mut d[k * n..(k + 1) * n];
        let akp = row[p];
        let akq = row[q];
        let new_kp = akp * c - akq * s_phase_conj;
        let new_kq = akp * s_phase + akq * c;
        row[p] = new_kp;
        row[q] = new_kq;
        d[p * n + k] = new_kp.conj();
        d[q * n + k] = new_kq.conj();
    }
    d[p * n + p] = C64::new(app - t * r, 0.0);
    d[q * n + q] = C64::new(aqq + t * r, 0.0);
    d[p * n + q] = C64::new(0.0, 0.0);
    d[q * n + p] = C64::new(0.0, 0.0);

    let (head, tail) = w.as_mut_slice().split_at_mut(q * n);
    let row_p = &mut head[p * n..(p + 1) * n];
    let row_q = &mut tail[..n];
    for (vp, vq) in row_p.iter_mut().zip(row_q.iter_mut()) {
        let (x, y) = (*vp, *vq);
        *vp = x * c - y * s_phase_conj;
        *vq = x * s_phase + y * c;
    }
}

fn finish(a: ComplexMatrix, w: ComplexMatrix) -> HermitianSpectrum {
    let n = a.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |row, col| w[(order[col], row)]);
    HermitianSpectrum {
        eigenvalues,
        eigenvectors,
    }
}
