use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::matrix::{inner, normalize, ComplexMatrix};
use super::{DensityOperator, HermitianOperator};
use crate::error::{Error, Result};
use crate::rng::stream_rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    /// Haar-random pure state.
    Pure,
    /// Hilbert-Schmidt random mixed state.
    Mixed,
}

pub(crate) fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub(crate) fn gaussian_vector(len: usize, rng: &mut impl Rng) -> Vec<Complex64> {
    (0..len).map(|_| gaussian_complex(rng)).collect()
}

pub fn random_pure(d: usize, rng: &mut impl Rng) -> Result<DensityOperator> {
    DensityOperator::pure(&gaussian_vector(d, rng))
}

pub fn random_mixed(d: usize, rng: &mut impl Rng) -> Result<DensityOperator> {
    let g = ComplexMatrix::from_fn(d, |_, _| gaussian_complex(rng));
    let w = &g * &g.adjoint();
    let tr = w.trace().re;
    DensityOperator::from_computed(&w.scale(1.0 / tr))
}

pub fn random_state(d: usize, kind: StateKind, rng: &mut impl Rng) -> Result<DensityOperator> {
    if d < 2 {
        return Err(Error::InvalidDimension(d, "states require dimension >= 2"));
    }
    match kind {
        StateKind::Pure => random_pure(d, rng),
        StateKind::Mixed => random_mixed(d, rng),
    }
}

/// Deterministic random state for a given seed.
pub fn sample_random_state(d: usize, kind: StateKind, seed: u64) -> Result<DensityOperator> {
    random_state(d, kind, &mut stream_rng(seed, 0))
}

/// Orthonormalizes `columns` in place by modified Gram-Schmidt.
pub(crate) fn gram_schmidt(columns: &mut [Vec<Complex64>]) {
    for k in 0..columns.len() {
        for j in 0..k {
            let (done, rest) = columns.split_at_mut(k);
            let proj = inner(&done[j], &rest[0]);
            for (x, y) in rest[0].iter_mut().zip(&done[j]) {
                *x -= proj * y;
            }
        }
        normalize(&mut columns[k]);
    }
}

/// Haar-random unitary: Gram-Schmidt on i.i.d. complex Gaussian columns.
pub fn random_unitary(d: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = (0..d).map(|_| gaussian_vector(d, rng)).collect();
    gram_schmidt(&mut cols);
    ComplexMatrix::from_columns(&cols)
}

pub fn random_hermitian(d: usize, rng: &mut impl Rng) -> HermitianOperator {
    let g = ComplexMatrix::from_fn(d, |_, _| gaussian_complex(rng));
    HermitianOperator::symmetrize(&g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::purity;

    #[test]
    fn pure_sample_has_unit_purity() {
        let rho = sample_random_state(2, StateKind::Pure, 1).unwrap();
        assert!((purity(&rho) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mixed_sample_is_valid() {
        for seed in 0..5 {
            let rho = sample_random_state(5, StateKind::Mixed, seed).unwrap();
            assert!(rho.eigenvalues().iter().all(|&v| v >= 0.0));
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_random_state(4, StateKind::Mixed, 99).unwrap();
        let b = sample_random_state(4, StateKind::Mixed, 99).unwrap();
        assert_eq!(a.matrix(), b.matrix());
    }

    #[test]
    fn rejects_dimension_one() {
        assert!(sample_random_state(1, StateKind::Pure, 0).is_err());
    }

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = stream_rng(5, 1);
        let u = random_unitary(6, &mut rng);
        let uu = &u.adjoint() * &u;
        assert!((&uu - &ComplexMatrix::identity(6)).max_abs_entry() < 1e-12);
    }
}
