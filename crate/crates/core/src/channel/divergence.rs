//! Tsallis divergences and the purity excess.

use serde::Serialize;

use super::{KrausChannel, UNITALITY_TOL};
use crate::error::{Error, Result};
use crate::operator::{inner, DensityOperator};

/// Eigenvalues of `sigma` at or below this value are outside its support.
pub const SUPPORT_CUT: f64 = 1e-10;

/// Tsallis divergence `D_alpha(rho || sigma)` for `alpha` in `(0, 2]`.
///
/// `alpha = 1` is the quantum relative entropy. Returns `f64::INFINITY` when
/// `alpha >= 1` and the support of `rho` is not contained in that of `sigma`.
pub fn tsallis_divergence(rho: &DensityOperator, sigma: &DensityOperator, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(Error::InvalidParameter(format!("alpha must lie in (0, 2], got {alpha}")));
    }
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(rho.dim(), sigma.dim()));
    }
    let r = rho.spectrum();
    let s = sigma.spectrum();
    let d = rho.dim();

    // overlap[i][j] = |<u_i|v_j>|^2 between the two eigenbases
    let overlap: Vec<Vec<f64>> = (0..d)
        .map(|i| {
            let u = r.vector(i);
            (0..d).map(|j| inner(&u, &s.vector(j)).norm_sqr()).collect()
        })
        .collect();

    if alpha >= 1.0 {
        // weight of rho on the kernel of sigma
        let leak: f64 = (0..d)
            .filter(|&j| s.values[j] <= SUPPORT_CUT)
            .map(|j| (0..d).map(|i| r.values[i].max(0.0) * overlap[i][j]).sum::<f64>())
            .sum();
        if leak > SUPPORT_CUT {
            return Ok(f64::INFINITY);
        }
    }

    let support: Vec<usize> = (0..d).filter(|&j| s.values[j] > SUPPORT_CUT).collect();
    if alpha == 1.0 {
        let entropy_term: f64 = r
            .values
            .iter()
            .filter(|&&l| l > 0.0)
            .map(|&l| l * l.ln())
            .sum();
        let cross: f64 = (0..d)
            .filter(|&i| r.values[i] > 0.0)
            .map(|i| {
                support
                    .iter()
                    .map(|&j| r.values[i] * overlap[i][j] * s.values[j].ln())
                    .sum::<f64>()
            })
            .sum();
        return Ok(entropy_term - cross);
    }

    let mut tr = 0.0;
    for i in 0..d {
        let li = r.values[i];
        if li <= 0.0 {
            continue;
        }
        let la = li.powf(alpha);
        for &j in &support {
            tr += la * s.values[j].powf(1.0 - alpha) * overlap[i][j];
        }
    }
    Ok((tr - 1.0) / (alpha - 1.0))
}

/// `tr(rho^2) - 1/d`.
pub fn purity_excess(rho: &DensityOperator) -> f64 {
    rho.purity() - 1.0 / rho.dim() as f64
}

#[derive(Clone, Debug, Serialize)]
pub struct DivergenceStep {
    pub alpha: f64,
    pub before: f64,
    pub after: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonotonicityReport {
    /// Purity excess of the input.
    pub before: f64,
    /// Purity excess of the output.
    pub after: f64,
    pub holds: bool,
    pub divergences: Vec<DivergenceStep>,
}

pub const PURITY_SLACK: f64 = 1e-12;
pub const DIVERGENCE_SLACK: f64 = 1e-10;
pub const MONOTONICITY_ALPHAS: [f64; 4] = [0.5, 1.0, 1.5, 2.0];

/// Checks that a bistochastic channel does not increase the purity excess
/// nor `D_alpha(. || I/d)` for the standard alpha grid.
pub fn monotonicity_check(phi: &KrausChannel, rho: &DensityOperator) -> Result<MonotonicityReport> {
    if !phi.is_bistochastic(UNITALITY_TOL) {
        return Err(Error::NotBistochastic);
    }
    let out = phi.apply(rho)?;
    let mixed = DensityOperator::maximally_mixed(rho.dim())?;
    let before = purity_excess(rho);
    let after = purity_excess(&out);
    let mut divergences = Vec::with_capacity(MONOTONICITY_ALPHAS.len());
    for alpha in MONOTONICITY_ALPHAS {
        let b = tsallis_divergence(rho, &mixed, alpha)?;
        let a = tsallis_divergence(&out, &mixed, alpha)?;
        divergences.push(DivergenceStep {
            alpha,
            before: b,
            after: a,
            holds: a <= b + DIVERGENCE_SLACK,
        });
    }
    let holds = after <= before + PURITY_SLACK && divergences.iter().all(|s| s.holds);
    Ok(MonotonicityReport {
        before,
        after,
        holds,
        divergences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::sample::{depolarizing, sample_channel, ChannelKind};
    use crate::operator::{sample_random_state, ComplexMatrix, StateKind};

    #[test]
    fn d2_against_mixed_is_d_purity_minus_one() {
        for d in 2..6 {
            let rho = sample_random_state(d, StateKind::Mixed, d as u64).unwrap();
            let mixed = DensityOperator::maximally_mixed(d).unwrap();
            let d2 = tsallis_divergence(&rho, &mixed, 2.0).unwrap();
            assert!((d2 - (d as f64 * rho.purity() - 1.0)).abs() < 1e-12);
            assert!((purity_excess(&rho) - d2 / d as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn self_divergence_vanishes() {
        let rho = sample_random_state(4, StateKind::Mixed, 1).unwrap();
        for alpha in [0.3, 0.5, 1.0, 1.5, 2.0] {
            assert!(tsallis_divergence(&rho, &rho, alpha).unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn support_violation_is_infinite() {
        let a = DensityOperator::from_matrix(ComplexMatrix::from_real_diagonal(&[1.0, 0.0])).unwrap();
        let b = DensityOperator::from_matrix(ComplexMatrix::from_real_diagonal(&[0.0, 1.0])).unwrap();
        assert_eq!(tsallis_divergence(&a, &b, 2.0).unwrap(), f64::INFINITY);
        assert_eq!(tsallis_divergence(&a, &b, 1.0).unwrap(), f64::INFINITY);
        // below one the first branch applies unconditionally: (0 - 1)/(alpha - 1)
        assert!((tsallis_divergence(&a, &b, 0.5).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_alpha_out_of_range() {
        let rho = DensityOperator::maximally_mixed(2).unwrap();
        assert!(tsallis_divergence(&rho, &rho, 0.0).is_err());
        assert!(tsallis_divergence(&rho, &rho, 2.5).is_err());
    }

    #[test]
    fn relative_entropy_of_diagonal_states() {
        let p = [0.7, 0.2, 0.1];
        let q = [0.3, 0.3, 0.4];
        let a = DensityOperator::from_matrix(ComplexMatrix::from_real_diagonal(&p)).unwrap();
        let b = DensityOperator::from_matrix(ComplexMatrix::from_real_diagonal(&q)).unwrap();
        let kl: f64 = p.iter().zip(q).map(|(x, y)| x * (x / y).ln()).sum();
        assert!((tsallis_divergence(&a, &b, 1.0).unwrap() - kl).abs() < 1e-12);
        let ts: f64 = p.iter().zip(q).map(|(x, y)| x * x / y).sum::<f64>() - 1.0;
        assert!((tsallis_divergence(&a, &b, 2.0).unwrap() - ts).abs() < 1e-12);
    }

    #[test]
    fn unitary_channel_preserves_excess() {
        let phi = sample_channel(3, ChannelKind::Unitary, 3).unwrap();
        let rho = sample_random_state(3, StateKind::Mixed, 8).unwrap();
        let r = monotonicity_check(&phi, &rho).unwrap();
        assert!((r.after - r.before).abs() < 1e-12);
        assert!(r.holds);
    }

    #[test]
    fn depolarizing_scales_excess_by_lambda_squared() {
        for lambda in [0.0, 0.3, 0.5, 0.9] {
            let phi = depolarizing(3, lambda).unwrap();
            let rho = sample_random_state(3, StateKind::Pure, 2).unwrap();
            let r = monotonicity_check(&phi, &rho).unwrap();
            assert!((r.after - lambda * lambda * r.before).abs() < 1e-10);
        }
    }

    #[test]
    fn non_bistochastic_rejected() {
        let phi = sample_channel(2, ChannelKind::Contraction { target: 0 }, 0).unwrap();
        let rho = DensityOperator::maximally_mixed(2).unwrap();
        assert!(matches!(monotonicity_check(&phi, &rho), Err(Error::NotBistochastic)));
    }
}
