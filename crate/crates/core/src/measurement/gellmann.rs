//! Generalized Gell-Mann matrices normalized to `tr(F_a F_b) = delta_ab`.

use num_complex::Complex64;

use crate::operator::{ComplexMatrix, HermitianOperator};

/// The `d^2 - 1` traceless Hermitian basis operators, ordered as the
/// symmetric family, then the antisymmetric family (both in lexicographic
/// `(j, k)` order with `j < k`), then the diagonal family.
pub fn gell_mann_basis(d: usize) -> Vec<HermitianOperator> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut basis = Vec::with_capacity(d * d - 1);
    for j in 0..d {
        for k in (j + 1)..d {
            let mut m = ComplexMatrix::zeros(d);
            m[(j, k)] = Complex64::new(s, 0.0);
            m[(k, j)] = Complex64::new(s, 0.0);
            basis.push(HermitianOperator::symmetrize(&m));
        }
    }
    for j in 0..d {
        for k in (j + 1)..d {
            let mut m = ComplexMatrix::zeros(d);
            m[(j, k)] = Complex64::new(0.0, -s);
            m[(k, j)] = Complex64::new(0.0, s);
            basis.push(HermitianOperator::symmetrize(&m));
        }
    }
    for l in 1..d {
        let norm = ((l * (l + 1)) as f64).sqrt();
        let mut diag = vec![0.0; d];
        for v in diag.iter_mut().take(l) {
            *v = 1.0 / norm;
        }
        diag[l] = -(l as f64) / norm;
        basis.push(HermitianOperator::symmetrize(&ComplexMatrix::from_real_diagonal(&diag)));
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormal_and_traceless() {
        for d in 2..=6 {
            let b = gell_mann_basis(d);
            assert_eq!(b.len(), d * d - 1);
            for (i, x) in b.iter().enumerate() {
                assert!(x.trace().abs() < 1e-15);
                for (j, y) in b.iter().enumerate() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((x.trace_product(y) - expect).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn qubit_basis_is_scaled_pauli() {
        use crate::operator::matrix::pauli;
        let b = gell_mann_basis(2);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((b[0].matrix() - &pauli::x().scale(s)).max_abs_entry() < 1e-15);
        assert!((b[1].matrix() - &pauli::y().scale(s)).max_abs_entry() < 1e-15);
        assert!((b[2].matrix() - &pauli::z().scale(s)).max_abs_entry() < 1e-15);
    }
}
