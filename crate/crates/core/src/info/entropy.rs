//! Classical entropies of outcome distributions (natural logarithm).

use super::OutcomeDistribution;
use crate::error::{Error, Result};

/// Shannon entropy `-sum p ln p` with `0 ln 0 = 0`.
pub fn shannon_entropy(dist: &OutcomeDistribution) -> f64 {
    dist.outcomes()
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln())
        .sum()
}

/// Tsallis entropy `(sum p^alpha - 1) / (1 - alpha)`; `alpha = 1` gives Shannon.
pub fn tsallis_entropy(dist: &OutcomeDistribution, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if alpha == 1.0 {
        return Ok(shannon_entropy(dist));
    }
    let s: f64 = dist.outcomes().filter(|&p| p > 0.0).map(|p| p.powf(alpha)).sum();
    Ok((s - 1.0) / (1.0 - alpha))
}

/// Binary Tsallis entropy `h_alpha(eta)` of the pair `(eta, 1 - eta)`.
pub fn binary_tsallis(eta: f64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let pow = |x: f64| if x > 0.0 { x.powf(alpha) } else { 0.0 };
    if alpha == 1.0 {
        let h = |x: f64| if x > 0.0 { -x * x.ln() } else { 0.0 };
        return Ok(h(eta) + h(1.0 - eta));
    }
    Ok((pow(eta) + pow(1.0 - eta) - 1.0) / (1.0 - alpha))
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!("alpha must be positive, got {alpha}")));
    }
    Ok(())
}
