use crate::error::{Error, Result};
use crate::operator::{schatten_norm, ComplexMatrix, DensityOperator};

/// Trace-preservation tolerance on `|sum_i K_i^dagger K_i - I|`.
pub const TRACE_PRESERVING_TOL: f64 = 1e-10;
pub const UNITALITY_TOL: f64 = 1e-10;

/// A channel on `L(H_d)` in operator-sum form `rho -> sum_i K_i rho K_i^dagger`.
#[derive(Clone, Debug)]
pub struct KrausChannel {
    dim: usize,
    kraus: Vec<ComplexMatrix>,
}

impl KrausChannel {
    pub fn new(kraus: Vec<ComplexMatrix>) -> Result<Self> {
        let dim = kraus
            .first()
            .map(ComplexMatrix::dim)
            .ok_or_else(|| Error::InvalidParameter("a channel needs at least one Kraus operator".into()))?;
        if dim < 2 {
            return Err(Error::InvalidDimension(dim, "channels require dimension >= 2"));
        }
        if let Some(k) = kraus.iter().find(|k| k.dim() != dim) {
            return Err(Error::DimensionMismatch(dim, k.dim()));
        }
        let channel = Self { dim, kraus };
        let defect = channel.trace_preservation_defect();
        if defect > TRACE_PRESERVING_TOL {
            return Err(Error::NotTracePreserving(defect));
        }
        Ok(channel)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(vec![ComplexMatrix::identity(dim)])
    }

    pub fn unitary(u: ComplexMatrix) -> Result<Self> {
        Self::new(vec![u])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    /// `||sum_i K_i^dagger K_i - I||_inf`.
    pub fn trace_preservation_defect(&self) -> f64 {
        let s = self.sum_of(|k| &k.adjoint() * k);
        spectral_distance_to_identity(&s)
    }

    /// `||sum_i K_i K_i^dagger - I||_inf`.
    pub fn unitality_defect(&self) -> f64 {
        spectral_distance_to_identity(&self.apply_to_identity())
    }

    /// `Phi(I) = sum_i K_i K_i^dagger`.
    pub fn apply_to_identity(&self) -> ComplexMatrix {
        self.sum_of(|k| k * &k.adjoint())
    }

    fn sum_of(&self, f: impl Fn(&ComplexMatrix) -> ComplexMatrix) -> ComplexMatrix {
        self.kraus
            .iter()
            .fold(ComplexMatrix::zeros(self.dim), |acc, k| &acc + &f(k))
    }

    /// `Phi(X)` for an arbitrary operator `X`.
    pub fn apply_matrix(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        x.check_same_dim(&self.kraus[0])?;
        Ok(self.sum_of(|k| &(k * x) * &k.adjoint()))
    }

    /// Adjoint map `Phi^dagger(Y) = sum_i K_i^dagger Y K_i`.
    pub fn apply_adjoint(&self, y: &ComplexMatrix) -> Result<ComplexMatrix> {
        y.check_same_dim(&self.kraus[0])?;
        Ok(self.sum_of(|k| &(&k.adjoint() * y) * k))
    }

    /// The adjoint as a channel in its own right (Kraus operators `K_i^dagger`).
    /// Trace-preserving exactly when this channel is unital.
    pub fn adjoint(&self) -> Result<Self> {
        Self::new(self.kraus.iter().map(ComplexMatrix::adjoint).collect())
    }

    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        let out = self.apply_matrix(rho.matrix())?;
        DensityOperator::from_computed(&out)
    }

    pub fn is_unital(&self, tol: f64) -> bool {
        self.unitality_defect() <= tol
    }

    pub fn is_bistochastic(&self, tol: f64) -> bool {
        self.trace_preservation_defect() <= tol && self.is_unital(tol)
    }
}

fn spectral_distance_to_identity(m: &ComplexMatrix) -> f64 {
    let diff = m - &ComplexMatrix::identity(m.dim());
    schatten_norm(&diff, f64::INFINITY).unwrap_or(f64::INFINITY)
}
