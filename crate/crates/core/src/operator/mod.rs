//! Dense operators on a d-dimensional Hilbert space.

pub mod eigen;
pub mod matrix;
pub mod norm;
pub mod random;

use num_complex::Complex64;

pub use eigen::{eigendecompose, Eigendecomposition};
pub use matrix::{hs_inner, inner, ComplexMatrix};
pub use norm::{schatten_norm, singular_values};
pub use random::{random_unitary, sample_random_state, StateKind};

use crate::error::{Error, Result};

/// Hermiticity tolerance at construction.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues down to `-POSITIVITY_TOL` are clamped to zero.
pub const POSITIVITY_TOL: f64 = 1e-10;
/// Trace tolerance for density operators.
pub const TRACE_TOL: f64 = 1e-12;

/// A Hermitian operator, stored symmetrized as `(X + X^dagger) / 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator(ComplexMatrix);

impl HermitianOperator {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        let defect = m.hermiticity_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::NotHermitian(defect));
        }
        Ok(Self::symmetrize(&m))
    }

    /// Symmetrizes without checking; for results that are Hermitian analytically.
    pub(crate) fn symmetrize(m: &ComplexMatrix) -> Self {
        let d = m.dim();
        Self(ComplexMatrix::from_fn(d, |i, j| {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        }))
    }

    pub fn identity(dim: usize) -> Self {
        Self(ComplexMatrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    pub fn eigen(&self) -> Result<Eigendecomposition> {
        eigendecompose(self)
    }

    /// `tr(A B)`, real for Hermitian pairs.
    pub fn trace_product(&self, other: &HermitianOperator) -> f64 {
        self.0.trace_of_product(&other.0).re
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self(self.0.scale(factor))
    }
}

impl std::ops::Add for &HermitianOperator {
    type Output = HermitianOperator;
    fn add(self, rhs: &HermitianOperator) -> HermitianOperator {
        HermitianOperator(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub for &HermitianOperator {
    type Output = HermitianOperator;
    fn sub(self, rhs: &HermitianOperator) -> HermitianOperator {
        HermitianOperator(&self.0 - &rhs.0)
    }
}

/// A density operator: positive semidefinite with unit trace.
///
/// The spectrum is computed once at construction and kept alongside the
/// matrix, since almost every functional of a state needs it.
#[derive(Clone, Debug)]
pub struct DensityOperator {
    op: HermitianOperator,
    spectrum: Eigendecomposition,
}

impl DensityOperator {
    pub fn new(op: HermitianOperator) -> Result<Self> {
        let d = op.dim();
        if d < 2 {
            return Err(Error::InvalidDimension(d, "states require dimension >= 2"));
        }
        let tr = op.trace();
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidTrace { got: tr, expected: 1.0 });
        }
        let mut spectrum = op.eigen()?;
        let min = spectrum.min_value();
        if min < -POSITIVITY_TOL {
            return Err(Error::NotPositive(min));
        }
        if min < 0.0 {
            for v in spectrum.values.iter_mut() {
                *v = v.max(0.0);
            }
            let total: f64 = spectrum.values.iter().sum();
            for v in spectrum.values.iter_mut() {
                *v /= total;
            }
            let op = HermitianOperator::symmetrize(&spectrum.reconstruct());
            return Ok(Self { op, spectrum });
        }
        Ok(Self { op, spectrum })
    }

    pub fn from_matrix(m: ComplexMatrix) -> Result<Self> {
        Self::new(HermitianOperator::new(m)?)
    }

    /// Density operator of an internally computed result whose Hermiticity is
    /// exact analytically; trace and positivity are still enforced.
    pub(crate) fn from_computed(m: &ComplexMatrix) -> Result<Self> {
        Self::new(HermitianOperator::symmetrize(m))
    }

    /// The completely mixed state `I / d`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidDimension(dim, "states require dimension >= 2"));
        }
        let op = HermitianOperator(ComplexMatrix::identity(dim).scale(1.0 / dim as f64));
        let spectrum = Eigendecomposition {
            values: vec![1.0 / dim as f64; dim],
            vectors: ComplexMatrix::identity(dim),
        };
        Ok(Self { op, spectrum })
    }

    /// `|psi><psi| / <psi|psi>`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let n = matrix::vector_norm(psi);
        if psi.len() < 2 {
            return Err(Error::InvalidDimension(psi.len(), "states require dimension >= 2"));
        }
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidParameter("state vector has zero or non-finite norm".into()));
        }
        let unit: Vec<Complex64> = psi.iter().map(|z| z / n).collect();
        Self::from_computed(&ComplexMatrix::projector(&unit))
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.op
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.op.matrix()
    }

    pub fn spectrum(&self) -> &Eigendecomposition {
        &self.spectrum
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.spectrum.values
    }

    /// `tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        purity(self)
    }

    /// `U rho U^dagger`.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Result<Self> {
        u.check_same_dim(self.matrix())?;
        Self::from_computed(&(&(u * self.matrix()) * &u.adjoint()))
    }
}

/// Purity `tr(rho^2)`, computed as the Frobenius norm squared.
pub fn purity(rho: &DensityOperator) -> f64 {
    rho.matrix().frobenius_norm().powi(2)
}
