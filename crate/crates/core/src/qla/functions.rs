use super::{eigh, ComplexMatrix};
use crate::error::{Error, Result};

/// Sum of the absolute eigenvalues of a Hermitian operator.
pub fn trace_norm(t: &ComplexMatrix) -> Result<f64> {
    Ok(eigh(t)?.eigenvalues.iter().map(|l| l.abs()).sum())
}

/// Splits `T` into orthogonally supported positive parts with `T = T_plus - T_minus`.
pub fn jordan_parts(t: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let spec = eigh(t)?;
    let plus: Vec<f64> = spec.eigenvalues.iter().map(|&l| l.max(0.0)).collect();
    let minus: Vec<f64> = spec.eigenvalues.iter().map(|&l| (-l).max(0.0)).collect();
    Ok((spec.synthesize(&plus), spec.synthesize(&minus)))
}

/// `V f(diag(lambda)) V^dagger`. Fails on the first eigenvalue where `f` is not finite.
pub fn apply_function_on_spectrum(h: &ComplexMatrix, f: impl Fn(f64) -> f64) -> Result<ComplexMatrix> {
    let spec = eigh(h)?;
    let mut values = Vec::with_capacity(spec.dim());
    for &l in &spec.eigenvalues {
        let v = f(l);
        if !v.is_finite() {
            return Err(Error::UndefinedAtEigenvalue { eigenvalue: l });
        }
        values.push(v);
    }
    Ok(spec.synthesize(&values))
}
