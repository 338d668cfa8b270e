//! Finite-shot estimation of a black-box channel's non-unitality.
//!
//! The maximally mixed state is sent through the box, the output is measured
//! with a structured scheme, and the coincidence sum is inverted through the
//! scheme's closed form to estimate `tr(Phi(I/d)^2)`.

use rand::Rng;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;
use serde::Serialize;

use crate::channel::{map_norm_bound, KrausChannel};
use crate::error::{Error, Result};
use crate::info::{distort, probabilities};
use crate::measurement::{MeasurementScheme, Povm, Variant};
use crate::operator::DensityOperator;
use crate::rng::{derive_seed, stream_rng};

pub use crate::io::{load_shots, save_shots};

pub const BOOTSTRAP_RESAMPLES: usize = 200;
/// Inverted purity outside `[1/d, 1]` by more than this many standard errors
/// marks the report inconsistent.
pub const CONSISTENCY_SIGMAS: f64 = 5.0;

const BOOTSTRAP_STREAM: u64 = 0xB007;

/// An opaque channel: the probe only ever calls `apply`.
pub trait BlackBox {
    fn dim(&self) -> usize;
    fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator>;
}

impl BlackBox for KrausChannel {
    fn dim(&self) -> usize {
        KrausChannel::dim(self)
    }

    fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        KrausChannel::apply(self, rho)
    }
}

/// Multinomial sample of `n` draws from `probs` via sequential binomials.
pub fn multinomial(probs: &[f64], n: u64, rng: &mut impl Rng) -> Vec<u64> {
    let mut counts = vec![0u64; probs.len()];
    let mut remaining = n;
    let mut mass: f64 = probs.iter().map(|p| p.max(0.0)).sum();
    for (j, &p) in probs.iter().enumerate() {
        if remaining == 0 {
            break;
        }
        let p = p.max(0.0);
        if j + 1 == probs.len() || mass <= p {
            counts[j] = remaining;
            break;
        }
        let q = (p / mass).clamp(0.0, 1.0);
        let k = Binomial::new(remaining, q).expect("probability in [0, 1]").sample(rng);
        counts[j] = k;
        remaining -= k;
        mass -= p;
    }
    counts
}

/// Outcome counts of `n` measurements of `povm` on `rho`. With `eta`, the
/// no-click count is appended last.
pub fn simulate_shots(povm: &Povm, rho: &DensityOperator, n: u64, seed: u64, eta: Option<f64>) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::InvalidParameter("at least one shot is required".into()));
    }
    let mut dist = probabilities(povm, rho)?;
    if let Some(eta) = eta {
        dist = distort(&dist, eta)?;
    }
    let probs: Vec<f64> = dist.outcomes().collect();
    Ok(multinomial(&probs, n, &mut stream_rng(seed, 0)))
}

/// Unbiased collision estimator `sum n_j (n_j - 1) / (N (N - 1))` of `sum p_j^2`.
pub fn estimate_coincidence(counts: &[u64]) -> Result<f64> {
    let n: u64 = counts.iter().sum();
    if n < 2 {
        return Err(Error::InvalidParameter(format!("collision estimate needs N >= 2, got {n}")));
    }
    let pairs: f64 = counts.iter().map(|&c| c as f64 * (c as f64 - 1.0)).sum();
    Ok(pairs / (n as f64 * (n as f64 - 1.0)))
}

/// Raw measurement record of a probe run.
#[derive(Clone, Debug)]
pub struct ShotRecord {
    pub scheme: MeasurementScheme,
    /// Shots per POVM.
    pub shots: u64,
    pub seed: u64,
    pub eta: Option<f64>,
    /// One row per POVM; the no-click count is the last entry when `eta` is set.
    pub counts: Vec<Vec<u64>>,
}

impl ShotRecord {
    pub fn new(
        scheme: MeasurementScheme,
        shots: u64,
        seed: u64,
        eta: Option<f64>,
        counts: Vec<Vec<u64>>,
    ) -> Result<Self> {
        if let Some(eta) = eta {
            if !(0.0..=1.0).contains(&eta) {
                return Err(Error::InvalidParameter(format!("eta must lie in [0, 1], got {eta}")));
            }
        }
        if counts.len() != scheme.povms.len() {
            return Err(Error::Parse(format!(
                "{} count rows for a scheme with {} POVMs",
                counts.len(),
                scheme.povms.len()
            )));
        }
        let extra = usize::from(eta.is_some());
        for (b, (row, povm)) in counts.iter().zip(&scheme.povms).enumerate() {
            if row.len() != povm.len() + extra {
                return Err(Error::Parse(format!(
                    "row {b} has {} counts, expected {}",
                    row.len(),
                    povm.len() + extra
                )));
            }
            let total: u64 = row.iter().sum();
            if total != shots {
                return Err(Error::Parse(format!("row {b} sums to {total}, expected N = {shots}")));
            }
        }
        Ok(Self {
            scheme,
            shots,
            seed,
            eta,
            counts,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct ProbeErrors {
    pub coincidence_sum: f64,
    pub purity: f64,
    pub purity_excess: f64,
    pub gamma_hs_norm: f64,
    pub map_norm_bound: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub variant: Variant,
    pub d: usize,
    pub shots: u64,
    pub eta: Option<f64>,
    pub coincidence_sum_estimate: f64,
    /// Estimate of `tr(Phi(I/d)^2)`.
    pub purity_estimate: f64,
    /// `purity_estimate - 1/d`, not clamped.
    pub purity_excess: f64,
    /// `sqrt(max(0, purity_excess))`.
    pub gamma_hs_norm_estimate: f64,
    pub map_norm_bound_estimate: f64,
    /// Bootstrap standard errors.
    pub standard_error: ProbeErrors,
    pub consistent: bool,
}

struct Point {
    coincidence_sum: f64,
    purity: f64,
    excess: f64,
    gamma: f64,
    bound: f64,
}

fn point_estimate(scheme: &MeasurementScheme, counts: &[Vec<u64>], eta: Option<f64>) -> Result<Point> {
    let d = scheme.dim;
    let raw: f64 = counts
        .iter()
        .map(|row| estimate_coincidence(row))
        .sum::<Result<f64>>()?;
    // with inefficiency: C_eta = eta^2 C + (1 - eta)^2 per POVM
    let coincidence_sum = match eta {
        Some(eta) if eta <= 0.0 => {
            return Err(Error::InvalidParameter("eta = 0 carries no information".into()))
        }
        Some(eta) => (raw - counts.len() as f64 * (1.0 - eta).powi(2)) / (eta * eta),
        None => raw,
    };
    let (offset, slope) = scheme.coincidence_coefficients();
    if !(slope > 0.0) {
        return Err(Error::InvalidParameter(
            "scheme closed form is not invertible (zero purity coefficient)".into(),
        ));
    }
    let purity = (coincidence_sum - offset) / slope;
    let excess = purity - 1.0 / d as f64;
    let gamma = excess.max(0.0).sqrt();
    Ok(Point {
        coincidence_sum,
        purity,
        excess,
        gamma,
        bound: map_norm_bound(d, gamma),
    })
}

fn std_dev(xs: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
}

/// Report from recorded counts. Deterministic given the record.
pub fn report_from_shots(record: &ShotRecord) -> Result<ProbeReport> {
    let scheme = &record.scheme;
    let point = point_estimate(scheme, &record.counts, record.eta)?;
    let n = record.shots;
    let boot_seed = derive_seed(record.seed, BOOTSTRAP_STREAM);
    let resamples: Vec<Point> = (0..BOOTSTRAP_RESAMPLES)
        .into_par_iter()
        .map(|r| {
            let mut rng = stream_rng(derive_seed(boot_seed, r as u64), 0);
            let counts: Vec<Vec<u64>> = record
                .counts
                .iter()
                .map(|row| {
                    let freqs: Vec<f64> = row.iter().map(|&c| c as f64 / n as f64).collect();
                    multinomial(&freqs, n, &mut rng)
                })
                .collect();
            point_estimate(scheme, &counts, record.eta)
        })
        .collect::<Result<_>>()?;
    let collect = |f: fn(&Point) -> f64| std_dev(&resamples.iter().map(f).collect::<Vec<_>>());
    let standard_error = ProbeErrors {
        coincidence_sum: collect(|p| p.coincidence_sum),
        purity: collect(|p| p.purity),
        purity_excess: collect(|p| p.excess),
        gamma_hs_norm: collect(|p| p.gamma),
        map_norm_bound: collect(|p| p.bound),
    };
    let d = scheme.dim as f64;
    let slack = CONSISTENCY_SIGMAS * standard_error.purity + 1e-12;
    let consistent = point.purity >= 1.0 / d - slack && point.purity <= 1.0 + slack;
    Ok(ProbeReport {
        variant: scheme.variant,
        d: scheme.dim,
        shots: n,
        eta: record.eta,
        coincidence_sum_estimate: point.coincidence_sum,
        purity_estimate: point.purity,
        purity_excess: point.excess,
        gamma_hs_norm_estimate: point.gamma,
        map_norm_bound_estimate: point.bound,
        standard_error,
        consistent,
    })
}

/// Sends `I/d` through the box, measures every POVM of the scheme `shots`
/// times and estimates the non-unitality.
pub fn probe_channel(
    black_box: &dyn BlackBox,
    scheme: &MeasurementScheme,
    shots: u64,
    seed: u64,
    eta: Option<f64>,
) -> Result<(ProbeReport, ShotRecord)> {
    if black_box.dim() != scheme.dim {
        return Err(Error::DimensionMismatch(scheme.dim, black_box.dim()));
    }
    if shots < 2 {
        return Err(Error::InvalidParameter(format!("probe needs at least 2 shots per POVM, got {shots}")));
    }
    let output = black_box.apply(&DensityOperator::maximally_mixed(scheme.dim)?)?;
    let counts = scheme
        .povms
        .iter()
        .enumerate()
        .map(|(b, povm)| simulate_shots(povm, &output, shots, derive_seed(seed, b as u64), eta))
        .collect::<Result<Vec<_>>>()?;
    let record = ShotRecord::new(scheme.clone(), shots, seed, eta, counts)?;
    Ok((report_from_shots(&record)?, record))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measurement::{build_mub_set, build_sic_povm};

    #[test]
    fn collision_estimator_small_cases() {
        assert_eq!(estimate_coincidence(&[2, 0]).unwrap(), 1.0);
        assert_eq!(estimate_coincidence(&[1, 1]).unwrap(), 0.0);
        assert!(estimate_coincidence(&[1, 0]).is_err());
    }

    #[test]
    fn multinomial_conserves_total() {
        let mut rng = stream_rng(1, 0);
        let c = multinomial(&[0.2, 0.0, 0.5, 0.3], 1000, &mut rng);
        assert_eq!(c.iter().sum::<u64>(), 1000);
        assert_eq!(c[1], 0);
        assert_eq!(multinomial(&[0.0, 1.0, 0.0], 77, &mut rng), vec![0, 77, 0]);
    }

    #[test]
    fn point_mass_and_zero_efficiency() {
        let s = build_mub_set(2).unwrap();
        let zero = DensityOperator::pure(&[1.0.into(), 0.0.into()]).unwrap();
        let c = simulate_shots(&s.povms[0], &zero, 500, 3, None).unwrap();
        assert_eq!(c.iter().max(), Some(&500));
        let c = simulate_shots(&s.povms[1], &zero, 500, 3, Some(0.0)).unwrap();
        assert_eq!(c, vec![0, 0, 500]);
    }

    #[test]
    fn record_rejects_bad_sums() {
        let s = build_sic_povm(2).unwrap();
        assert!(ShotRecord::new(s.clone(), 10, 0, None, vec![vec![3, 3, 3, 1]]).is_ok());
        assert!(ShotRecord::new(s.clone(), 10, 0, None, vec![vec![3, 3, 3, 2]]).is_err());
        assert!(ShotRecord::new(s, 10, 0, Some(0.5), vec![vec![3, 3, 3, 1]]).is_err());
    }

    #[test]
    fn report_is_deterministic() {
        let s = build_mub_set(3).unwrap();
        let phi = crate::channel::contraction(3, 0).unwrap();
        let (a, rec) = probe_channel(&phi, &s, 10_000, 5, None).unwrap();
        let b = report_from_shots(&rec).unwrap();
        assert_eq!(a.purity_estimate, b.purity_estimate);
        assert_eq!(a.standard_error.purity, b.standard_error.purity);
    }
}
