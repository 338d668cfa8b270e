use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measurement::Povm;
use crate::operator::DensityOperator;

/// Probabilities below `-NEGATIVE_CLAMP` are rejected; above it they are clamped at 0.
pub const NEGATIVE_CLAMP: f64 = 1e-12;
pub const NORMALIZATION_TOL: f64 = 1e-10;

/// Outcome probabilities, optionally distorted by a detection efficiency
/// `eta` with the extra no-click outcome.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutcomeDistribution {
    probs: Vec<f64>,
    eta: Option<f64>,
    noclick: f64,
}

impl OutcomeDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        let probs = clamp(probs)?;
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidParameter(format!(
                "probabilities sum to {total}, expected 1"
            )));
        }
        Ok(Self {
            probs,
            eta: None,
            noclick: 0.0,
        })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn eta(&self) -> Option<f64> {
        self.eta
    }

    /// Probability of the no-click outcome (zero without `eta`).
    pub fn noclick(&self) -> f64 {
        self.noclick
    }

    /// All outcome probabilities, with the no-click outcome last when present.
    pub fn outcomes(&self) -> impl Iterator<Item = f64> + '_ {
        self.probs
            .iter()
            .copied()
            .chain(self.eta.map(|_| self.noclick))
    }

    pub fn len(&self) -> usize {
        self.probs.len() + usize::from(self.eta.is_some())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn clamp(mut probs: Vec<f64>) -> Result<Vec<f64>> {
    for p in probs.iter_mut() {
        if !p.is_finite() || *p < -NEGATIVE_CLAMP {
            return Err(Error::InvalidParameter(format!("invalid probability {p}")));
        }
        *p = p.max(0.0);
    }
    Ok(probs)
}

/// `p_j = tr(M_j rho)`.
pub fn probabilities(povm: &Povm, rho: &DensityOperator) -> Result<OutcomeDistribution> {
    if povm.dim() != rho.dim() {
        return Err(Error::DimensionMismatch(povm.dim(), rho.dim()));
    }
    let probs = povm
        .elements()
        .iter()
        .map(|m| m.trace_product(rho.operator()))
        .collect();
    OutcomeDistribution::new(probs)
}

/// Detector inefficiency: `p_j -> eta p_j` plus a no-click outcome `1 - eta`.
pub fn distort(dist: &OutcomeDistribution, eta: f64) -> Result<OutcomeDistribution> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::InvalidParameter(format!("eta must lie in [0, 1], got {eta}")));
    }
    if dist.eta.is_some() {
        return Err(Error::InvalidParameter("distribution is already distorted".into()));
    }
    Ok(OutcomeDistribution {
        probs: dist.probs.iter().map(|p| eta * p).collect(),
        eta: Some(eta),
        noclick: 1.0 - eta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measurement::build_mub_set;
    use crate::operator::{ComplexMatrix, DensityOperator};

    #[test]
    fn computational_basis_on_ground_state() {
        let mub = build_mub_set(2).unwrap();
        let rho = DensityOperator::from_matrix(ComplexMatrix::from_real_diagonal(&[1.0, 0.0])).unwrap();
        let p = probabilities(&mub.povms[0], &rho).unwrap();
        assert_eq!(p.probs(), &[1.0, 0.0]);
    }

    #[test]
    fn mixed_input_gives_trace_over_d() {
        let mub = build_mub_set(3).unwrap();
        let rho = DensityOperator::maximally_mixed(3).unwrap();
        for povm in &mub.povms {
            let p = probabilities(povm, &rho).unwrap();
            for (pj, m) in p.probs().iter().zip(povm.elements()) {
                assert!((pj - m.trace() / 3.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn dimension_mismatch() {
        let mub = build_mub_set(2).unwrap();
        let rho = DensityOperator::maximally_mixed(3).unwrap();
        assert!(matches!(probabilities(&mub.povms[0], &rho), Err(Error::DimensionMismatch(2, 3))));
    }

    #[test]
    fn rejects_unnormalized_and_clamps_roundoff() {
        assert!(OutcomeDistribution::new(vec![0.5, 0.4]).is_err());
        assert!(OutcomeDistribution::new(vec![1.0 + 1e-3, -1e-3]).is_err());
        let d = OutcomeDistribution::new(vec![1.0 + 5e-13, -5e-13]).unwrap();
        assert_eq!(d.probs()[1], 0.0);
    }

    #[test]
    fn distortion_extremes() {
        let base = OutcomeDistribution::new(vec![0.25, 0.75]).unwrap();
        let one = distort(&base, 1.0).unwrap();
        assert_eq!(one.probs(), base.probs());
        assert_eq!(one.noclick(), 0.0);
        let zero = distort(&base, 0.0).unwrap();
        assert_eq!(zero.probs(), &[0.0, 0.0]);
        assert_eq!(zero.noclick(), 1.0);
        assert!(distort(&base, 1.2).is_err());
        assert!(distort(&one, 0.5).is_err());
    }
}
