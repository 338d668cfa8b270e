//! The non-unitality operator `Gamma = Phi(I/d) - I/d` and the map-norm bound.

use serde::Serialize;

use super::KrausChannel;
use crate::error::{Error, Result};
use crate::operator::{schatten_norm, DensityOperator, HermitianOperator, POSITIVITY_TOL};

/// Slack allowed on `||Phi|| <= 1 + sqrt(d(d-1)) ||Gamma||_2`.
pub const BOUND_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct NonUnitalityReport {
    #[serde(skip)]
    pub gamma: HermitianOperator,
    /// `||Gamma||_2` from its entries.
    pub hs_norm: f64,
    /// `sqrt(tr(Phi(rho_*)^2) - 1/d)`, the same quantity through the purity.
    pub hs_norm_from_purity: f64,
    /// `||Phi|| = d ||Phi(rho_*)||_inf` (the channel is positive).
    pub map_norm: f64,
    /// `1 + sqrt(d(d-1)) ||Gamma||_2`.
    pub bound: f64,
}

impl NonUnitalityReport {
    pub fn bound_holds(&self) -> bool {
        self.map_norm <= self.bound + BOUND_SLACK
    }
}

pub fn non_unitality(phi: &KrausChannel) -> Result<NonUnitalityReport> {
    let defect = phi.trace_preservation_defect();
    if defect > super::TRACE_PRESERVING_TOL {
        return Err(Error::NotTracePreserving(defect));
    }
    let d = phi.dim();
    let df = d as f64;
    let mixed = DensityOperator::maximally_mixed(d)?;
    let image = phi.apply(&mixed)?;
    let gamma = image.operator() - mixed.operator();
    let hs_norm = schatten_norm(gamma.matrix(), 2.0)?;
    let hs_norm_from_purity = (image.purity() - 1.0 / df).max(0.0).sqrt();
    let map_norm = df * image.spectrum().max_value();
    Ok(NonUnitalityReport {
        gamma,
        hs_norm,
        hs_norm_from_purity,
        map_norm,
        bound: map_norm_bound(d, hs_norm),
    })
}

/// `1 + sqrt(d(d-1)) * hs_norm`.
pub fn map_norm_bound(d: usize, hs_norm: f64) -> f64 {
    let df = d as f64;
    1.0 + (df * (df - 1.0)).sqrt() * hs_norm
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct NormLemma {
    /// `||X||_inf`.
    pub spectral: f64,
    /// `(||X||_1 + sqrt(d-1) sqrt(d ||X||_2^2 - ||X||_1^2)) / d`.
    pub bound: f64,
    pub holds: bool,
}

/// Spectral norm of a positive semidefinite operator bounded through its
/// trace and Hilbert-Schmidt norms.
pub fn norm_bound_lemma(x: &HermitianOperator) -> Result<NormLemma> {
    let min = x.eigen()?.min_value();
    if min < -POSITIVITY_TOL {
        return Err(Error::NotPositive(min));
    }
    let df = x.dim() as f64;
    let n1 = schatten_norm(x.matrix(), 1.0)?;
    let n2 = schatten_norm(x.matrix(), 2.0)?;
    let spectral = schatten_norm(x.matrix(), f64::INFINITY)?;
    let bound = (n1 + (df - 1.0).sqrt() * (df * n2 * n2 - n1 * n1).max(0.0).sqrt()) / df;
    Ok(NormLemma {
        spectral,
        bound,
        holds: spectral <= bound + BOUND_SLACK * bound.max(1.0),
    })
}
