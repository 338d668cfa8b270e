use crate::error::{Error, Result};
use crate::operator::{ComplexMatrix, HermitianOperator, POSITIVITY_TOL};

/// Completeness tolerance for a POVM: `|sum_j M_j - I| <= COMPLETENESS_TOL`.
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// A POVM: positive operators summing to the identity.
#[derive(Clone, Debug)]
pub struct Povm {
    dim: usize,
    elements: Vec<HermitianOperator>,
    label: String,
}

impl Povm {
    /// Builds a POVM, checking positivity and completeness.
    pub fn new(elements: Vec<HermitianOperator>, label: impl Into<String>) -> Result<Self> {
        let povm = Self::from_elements_unchecked(elements, label)?;
        let min = povm.min_eigenvalue()?;
        if min < -POSITIVITY_TOL {
            return Err(Error::NotPositive(min));
        }
        let defect = povm.completeness_defect();
        if defect > COMPLETENESS_TOL {
            return Err(Error::InvalidParameter(format!(
                "POVM elements do not sum to the identity (deviation {defect:e})"
            )));
        }
        Ok(povm)
    }

    /// Builds a POVM checking only shape (count and common dimension).
    ///
    /// Used when loading files, so that a defective measurement can still be
    /// handed to the validator and reported on.
    pub fn from_elements_unchecked(
        elements: Vec<HermitianOperator>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if elements.len() < 2 {
            return Err(Error::InvalidParameter("a POVM needs at least two elements".into()));
        }
        let dim = elements[0].dim();
        if let Some(bad) = elements.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch(dim, bad.dim()));
        }
        Ok(Self {
            dim,
            elements,
            label: label.into(),
        })
    }

    /// Rank-one projective measurement in the basis given by `vectors`.
    pub fn from_basis(vectors: &[Vec<num_complex::Complex64>], label: impl Into<String>) -> Result<Self> {
        let elements = vectors
            .iter()
            .map(|v| HermitianOperator::symmetrize(&ComplexMatrix::projector(v)))
            .collect();
        Self::new(elements, label)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[HermitianOperator] {
        &self.elements
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `max |sum_j M_j - I|` over entries.
    pub fn completeness_defect(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(self.dim);
        for e in &self.elements {
            sum = &sum + e.matrix();
        }
        (&sum - &ComplexMatrix::identity(self.dim)).max_abs_entry()
    }

    /// Smallest eigenvalue over all elements.
    pub fn min_eigenvalue(&self) -> Result<f64> {
        let mut min = f64::INFINITY;
        for e in &self.elements {
            min = min.min(e.eigen()?.min_value());
        }
        Ok(min)
    }

    /// Gram matrix `G_jk = tr(M_j M_k)`.
    pub fn gram(&self) -> Vec<Vec<f64>> {
        let n = self.len();
        let mut g = vec![vec![0.0; n]; n];
        for j in 0..n {
            for k in j..n {
                let v = self.elements[j].trace_product(&self.elements[k]);
                g[j][k] = v;
                g[k][j] = v;
            }
        }
        g
    }

    /// Dimension of the real span of the elements, from the Gram spectrum.
    pub fn span_rank(&self, tol: f64) -> Result<usize> {
        let g = self.gram();
        let n = g.len();
        let m = ComplexMatrix::from_fn(n, |i, j| num_complex::Complex64::new(g[i][j], 0.0));
        let e = crate::operator::eigen::jacobi(&m)?;
        Ok(e.values.iter().filter(|&&v| v > tol).count())
    }

    #[cfg(test)]
    pub(crate) fn scale_element(&mut self, index: usize, factor: f64) {
        self.elements[index] = self.elements[index].scale(factor);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::matrix::pauli;

    fn z_basis() -> Povm {
        let p0 = HermitianOperator::new(ComplexMatrix::from_real_diagonal(&[1.0, 0.0])).unwrap();
        let p1 = HermitianOperator::new(ComplexMatrix::from_real_diagonal(&[0.0, 1.0])).unwrap();
        Povm::new(vec![p0, p1], "z").unwrap()
    }

    #[test]
    fn projective_measurement_is_complete() {
        let p = z_basis();
        assert_eq!(p.len(), 2);
        assert_eq!(p.completeness_defect(), 0.0);
    }

    #[test]
    fn rejects_incomplete_and_negative() {
        let half = HermitianOperator::new(ComplexMatrix::identity(2).scale(0.4)).unwrap();
        assert!(Povm::new(vec![half.clone(), half], "bad").is_err());
        let a = HermitianOperator::new(&ComplexMatrix::identity(2) + &pauli::z().scale(1.5)).unwrap();
        let b = HermitianOperator::new(&ComplexMatrix::identity(2) - &pauli::z().scale(1.5)).unwrap();
        let halves = vec![a.scale(0.5), b.scale(0.5)];
        assert!(matches!(Povm::new(halves, "neg"), Err(Error::NotPositive(_))));
    }

    #[test]
    fn rejects_mixed_dimensions() {
        let a = HermitianOperator::identity(2);
        let b = HermitianOperator::identity(3);
        assert!(matches!(
            Povm::from_elements_unchecked(vec![a, b], "x"),
            Err(Error::DimensionMismatch(2, 3))
        ));
    }
}
