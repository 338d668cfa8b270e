use super::eigen::jacobi;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Singular values in descending order, from the spectrum of `X^dagger X`.
pub fn singular_values(x: &ComplexMatrix) -> Result<Vec<f64>> {
    let gram = &x.adjoint() * x;
    let e = jacobi(&super::HermitianOperator::symmetrize(&gram).into_matrix())?;
    let mut s: Vec<f64> = e.values.iter().map(|&v| v.max(0.0).sqrt()).collect();
    s.reverse();
    Ok(s)
}

/// Schatten q-norm for `q >= 1`; pass `f64::INFINITY` for the spectral norm.
///
/// Hermitian inputs use `|eigenvalues|` directly instead of forming `X^dagger X`,
/// which keeps full relative accuracy for small singular values.
pub fn schatten_norm(x: &ComplexMatrix, q: f64) -> Result<f64> {
    if q.is_nan() || q < 1.0 {
        return Err(Error::InvalidParameter(format!("Schatten index must be >= 1, got {q}")));
    }
    let s = if x.hermiticity_defect() <= super::HERMITIAN_TOL * x.max_abs_entry().max(1.0) {
        let e = jacobi(&super::HermitianOperator::symmetrize(x).into_matrix())?;
        let mut s: Vec<f64> = e.values.iter().map(|v| v.abs()).collect();
        s.sort_by(|a, b| b.total_cmp(a));
        s
    } else {
        singular_values(x)?
    };
    if q.is_infinite() {
        return Ok(s.first().copied().unwrap_or(0.0));
    }
    let top = s.first().copied().unwrap_or(0.0);
    if top == 0.0 {
        return Ok(0.0);
    }
    // scale by the largest value so large q does not overflow
    let sum: f64 = s.iter().map(|v| (v / top).powf(q)).sum();
    Ok(top * sum.powf(1.0 / q))
}
