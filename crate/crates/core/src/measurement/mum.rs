//! Mutually unbiased measurements and general SIC-POVMs built from an
//! orthonormal traceless operator basis.

use super::gellmann::gell_mann_basis;
use super::{MeasurementScheme, Povm, TParam, Variant};
use crate::error::{Error, Result};
use crate::operator::{HermitianOperator, POSITIVITY_TOL};

/// Traceless directions `F_b^(j)` of the MUM construction, `d + 1` groups of `d`.
///
/// The Gell-Mann basis is cut into `d + 1` contiguous blocks `{F_{b,j}}` of
/// size `d - 1`. With `F_b = sum_j F_{b,j}`:
/// `F_b^(j) = F_b - (d + sqrt d) F_{b,j}` for `j < d` and `F_b^(d) = (1 + sqrt d) F_b`.
pub fn mum_directions(d: usize) -> Vec<Vec<HermitianOperator>> {
    let basis = gell_mann_basis(d);
    let sd = (d as f64).sqrt();
    basis
        .chunks(d - 1)
        .map(|group| {
            let total = sum(group, d);
            let mut dirs: Vec<HermitianOperator> = group
                .iter()
                .map(|f| &total - &f.scale(d as f64 + sd))
                .collect();
            dirs.push(total.scale(1.0 + sd));
            dirs
        })
        .collect()
}

/// Traceless directions `G_k` of the general SIC construction (`d^2` of them).
///
/// With `F = sum_k F_k` over the full basis: `G_k = F - d (d + 1) F_k` for
/// `k < d^2` and `G_{d^2} = (d + 1) F`.
pub fn general_sic_directions(d: usize) -> Vec<HermitianOperator> {
    let basis = gell_mann_basis(d);
    let total = sum(&basis, d);
    let c = (d * (d + 1)) as f64;
    let mut dirs: Vec<HermitianOperator> = basis.iter().map(|f| &total - &f.scale(c)).collect();
    dirs.push(total.scale((d + 1) as f64));
    dirs
}

fn sum(ops: &[HermitianOperator], d: usize) -> HermitianOperator {
    let zero = HermitianOperator::identity(d).scale(0.0);
    ops.iter().fold(zero, |acc, f| &acc + f)
}

/// Largest `t` with `offset * I + t * G >= 0` for every direction `G`.
fn max_feasible_t<'a>(dirs: impl Iterator<Item = &'a HermitianOperator>, offset: f64) -> Result<f64> {
    let mut worst = 0.0f64;
    for g in dirs {
        worst = worst.max(-g.eigen()?.min_value());
    }
    Ok(offset / worst)
}

fn resolve_t(t: TParam, t_max: f64) -> Result<f64> {
    match t {
        TParam::Max => Ok(t_max),
        TParam::Value(v) if !v.is_finite() || v <= 0.0 => Err(Error::InvalidParameter(format!(
            "t must be positive (t = 0 gives the trivial measurement), got {v}"
        ))),
        TParam::Value(v) if v > t_max * (1.0 + 1e-12) => Err(Error::OutOfRange {
            name: "t",
            value: v,
            max: t_max,
        }),
        TParam::Value(v) => Ok(v),
    }
}

/// Maximal feasible `t` for the MUM construction in dimension `d`.
pub fn mum_t_max(d: usize) -> Result<f64> {
    check_dim(d)?;
    let dirs = mum_directions(d);
    max_feasible_t(dirs.iter().flatten(), 1.0 / d as f64)
}

/// Maximal feasible `t` for the general SIC construction in dimension `d`.
pub fn general_sic_t_max(d: usize) -> Result<f64> {
    check_dim(d)?;
    max_feasible_t(general_sic_directions(d).iter(), 1.0 / (d * d) as f64)
}

fn check_dim(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidDimension(d, "measurements require dimension >= 2"));
    }
    Ok(())
}

/// `kappa = 1/d + t^2 (d - 1)(1 + sqrt d)^2`.
pub fn mum_kappa(d: usize, t: f64) -> f64 {
    let df = d as f64;
    1.0 / df + t * t * (df - 1.0) * (1.0 + df.sqrt()).powi(2)
}

/// `a = 1/d^3 + t^2 (d + 1)^3 (d - 1)`.
pub fn general_sic_a(d: usize, t: f64) -> f64 {
    let df = d as f64;
    1.0 / df.powi(3) + t * t * (df + 1.0).powi(3) * (df - 1.0)
}

/// `b = (1 - a d) / (d (d^2 - 1))`.
pub fn general_sic_b(d: usize, a: f64) -> f64 {
    let df = d as f64;
    (1.0 - a * df) / (df * (df * df - 1.0))
}

/// Complete set of `d + 1` MUMs with elements `I/d + t F_b^(j)`.
pub fn build_mum_set(d: usize, t: TParam) -> Result<MeasurementScheme> {
    check_dim(d)?;
    let dirs = mum_directions(d);
    let t_max = max_feasible_t(dirs.iter().flatten(), 1.0 / d as f64)?;
    let t = resolve_t(t, t_max)?;
    let identity = HermitianOperator::identity(d).scale(1.0 / d as f64);
    let povms = dirs
        .iter()
        .enumerate()
        .map(|(b, group)| {
            let elements = group.iter().map(|f| &identity + &f.scale(t)).collect();
            checked_povm(elements, format!("mum-{b}"))
        })
        .collect::<Result<Vec<_>>>()?;
    MeasurementScheme::new(Variant::MumSet, povms, Some(mum_kappa(d, t)), None)
}

/// General SIC-POVM with elements `I/d^2 + t G_k`.
pub fn build_general_sic(d: usize, t: TParam) -> Result<MeasurementScheme> {
    check_dim(d)?;
    let dirs = general_sic_directions(d);
    let t_max = max_feasible_t(dirs.iter(), 1.0 / (d * d) as f64)?;
    let t = resolve_t(t, t_max)?;
    let identity = HermitianOperator::identity(d).scale(1.0 / (d * d) as f64);
    let elements = dirs.iter().map(|g| &identity + &g.scale(t)).collect();
    let povm = checked_povm(elements, "gsic".to_string())?;
    MeasurementScheme::new(Variant::GeneralSic, vec![povm], None, Some(general_sic_a(d, t)))
}

fn checked_povm(elements: Vec<HermitianOperator>, label: String) -> Result<Povm> {
    let povm = Povm::new(elements, label)?;
    debug_assert!(povm.min_eigenvalue()? >= -POSITIVITY_TOL);
    Ok(povm)
}
