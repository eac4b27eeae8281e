use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// Ordered tensor-factor dimensions of a composite Hilbert space, e.g. `[d_S, d_E]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subsystems {
    dims: Vec<usize>,
}

impl Subsystems {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::Dimension(format!("invalid factor dimensions {dims:?}")));
        }
        Ok(Self { dims })
    }

    pub fn bipartite(system: usize, environment: usize) -> Result<Self> {
        Self::new(vec![system, environment])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn check(&self, m: &ComplexMatrix) -> Result<()> {
        if m.dim() != self.total_dim() {
            return Err(Error::Dimension(format!(
                "operator of dimension {} does not match factors {:?}",
                m.dim(),
                self.dims
            )));
        }
        Ok(())
    }
}

/// Kronecker product; entry `((i,k),(j,l))` equals `A[i][j] * B[k][l]`.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim(), b.dim());
    let mut out = ComplexMatrix::zeros(da * db);
    for i in 0..da {
        for j in 0..da {
            let aij = a[(i, j)];
            if aij.re == 0.0 && aij.im == 0.0 {
                continue;
            }
            for k in 0..db {
                for l in 0..db {
                    out[(i * db + k, j * db + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Traces out every factor except `keep` (an index into `subs.dims()`).
pub fn partial_trace(m: &ComplexMatrix, subs: &Subsystems, keep: usize) -> Result<ComplexMatrix> {
    subs.check(m)?;
    let dims = subs.dims();
    if keep >= dims.len() {
        return Err(Error::Dimension(format!(
            "factor {keep} out of range for {} factors",
            dims.len()
        )));
    }
    let left: usize = dims[..keep].iter().product();
    let kept = dims[keep];
    let right: usize = dims[keep + 1..].iter().product();
    let mut out = ComplexMatrix::zeros(kept);
    for a in 0..kept {
        for b in 0..kept {
            let mut acc = C64::new(0.0, 0.0);
            for l in 0..left {
                let row = (l * kept + a) * right;
                let col = (l * kept + b) * right;
                for r in 0..right {
                    acc += m[(row + r, col + r)];
                }
            }
            out[(a, b)] = acc;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_tensor_to_identity() {
        let id = tensor(&ComplexMatrix::identity(2), &ComplexMatrix::identity(3));
        assert_eq!(id, ComplexMatrix::identity(6));
    }

    #[test]
    fn diagonal_projectors_tensor() {
        let p = tensor(
            &ComplexMatrix::from_diagonal(&[1.0, 0.0]),
            &ComplexMatrix::from_diagonal(&[0.0, 1.0]),
        );
        assert_eq!(p, ComplexMatrix::from_diagonal(&[0.0, 1.0, 0.0, 0.0]));
    }

    #[test]
    fn bell_projector_reduces_to_maximally_mixed() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = [C64::new(s, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(s, 0.0)];
        let bell = ComplexMatrix::outer(&v);
        let subs = Subsystems::bipartite(2, 2).unwrap();
        for keep in 0..2 {
            let reduced = partial_trace(&bell, &subs, keep).unwrap();
            assert!(reduced.max_abs_diff(&ComplexMatrix::identity(2).scale(0.5)) < 1e-15);
        }
    }

    #[test]
    fn inconsistent_dimensions_are_rejected() {
        let subs = Subsystems::bipartite(2, 3).unwrap();
        assert!(partial_trace(&ComplexMatrix::identity(4), &subs, 0).is_err());
        assert!(partial_trace(&ComplexMatrix::identity(6), &subs, 2).is_err());
        assert!(Subsystems::new(vec![2, 0]).is_err());
    }

    #[test]
    fn three_factor_middle_trace() {
        let a = ComplexMatrix::from_diagonal(&[0.25, 0.75]);
        let b = ComplexMatrix::from_real_rows(&[&[0.5, 0.1, 0.0], &[0.1, 0.3, 0.0], &[0.0, 0.0, 0.2]]).unwrap();
        let c = ComplexMatrix::from_diagonal(&[0.6, 0.4]);
        let abc = tensor(&tensor(&a, &b), &c);
        let subs = Subsystems::new(vec![2, 3, 2]).unwrap();
        let reduced = partial_trace(&abc, &subs, 1).unwrap();
        assert!(reduced.max_abs_diff(&b) < 1e-15);
    }
}
