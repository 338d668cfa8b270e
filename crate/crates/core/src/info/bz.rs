//! Index of coincidence, Brukner-Zeilinger uncertainty and information, and
//! scheme totals with their purity-only closed forms.

use serde::Serialize;

use super::{distort, probabilities, shannon_entropy, OutcomeDistribution};
use crate::error::{Error, Result};
use crate::measurement::{mub_vectors, MeasurementScheme, Povm, Variant, VALIDATION_TOL};
use crate::operator::DensityOperator;

/// Sum of squared probabilities, including the no-click outcome when present.
pub fn index_of_coincidence(dist: &OutcomeDistribution) -> f64 {
    index_of_coincidence_with(dist, true)
}

pub fn index_of_coincidence_with(dist: &OutcomeDistribution, include_noclick: bool) -> f64 {
    let detected: f64 = dist.probs().iter().map(|p| p * p).sum();
    if include_noclick {
        detected + dist.noclick().powi(2)
    } else {
        detected
    }
}

/// `U_BZ = 1 - C`.
pub fn bz_uncertainty(dist: &OutcomeDistribution) -> f64 {
    1.0 - index_of_coincidence(dist)
}

/// Original uniform-reference form `sum_j (p_j - 1/n)^2`, for inefficiency-free
/// statistics only.
pub fn bz_information_uniform(dist: &OutcomeDistribution) -> Result<f64> {
    if dist.eta().is_some() {
        return Err(Error::InvalidParameter(
            "uniform-reference information is undefined with a no-click outcome".into(),
        ));
    }
    let n = dist.probs().len() as f64;
    Ok(dist.probs().iter().map(|p| (p - 1.0 / n).powi(2)).sum())
}

/// `I_BZ(A|rho) = C(A|rho) - C(A|rho_*)`.
pub fn bz_information(povm: &Povm, rho: &DensityOperator) -> Result<f64> {
    let mixed = DensityOperator::maximally_mixed(povm.dim())?;
    Ok(index_of_coincidence(&probabilities(povm, rho)?)
        - index_of_coincidence(&probabilities(povm, &mixed)?))
}

/// Information from distorted statistics: both `rho` and the reference
/// `rho_*` pass through the same efficiency `eta`.
pub fn bz_information_eta(povm: &Povm, rho: &DensityOperator, eta: f64) -> Result<f64> {
    let mixed = DensityOperator::maximally_mixed(povm.dim())?;
    let actual = distort(&probabilities(povm, rho)?, eta)?;
    let reference = distort(&probabilities(povm, &mixed)?, eta)?;
    Ok(index_of_coincidence(&actual) - index_of_coincidence(&reference))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SchemeTotal {
    pub measured: f64,
    pub predicted: f64,
}

impl SchemeTotal {
    pub fn deviation(&self) -> f64 {
        (self.measured - self.predicted).abs()
    }
}

fn check_dim(s: &MeasurementScheme, rho: &DensityOperator) -> Result<()> {
    if s.dim != rho.dim() {
        return Err(Error::DimensionMismatch(s.dim, rho.dim()));
    }
    Ok(())
}

/// Per-POVM indices of coincidence.
pub fn coincidences(s: &MeasurementScheme, rho: &DensityOperator) -> Result<Vec<f64>> {
    check_dim(s, rho)?;
    s.povms
        .iter()
        .map(|p| Ok(index_of_coincidence(&probabilities(p, rho)?)))
        .collect()
}

/// `sum_POVMs C(P|rho)`.
pub fn coincidence_sum(s: &MeasurementScheme, rho: &DensityOperator) -> Result<f64> {
    Ok(coincidences(s, rho)?.iter().sum())
}

/// Purity-only closed form of the coincidence sum.
pub fn coincidence_sum_closed_form(s: &MeasurementScheme, purity: f64) -> f64 {
    let (offset, slope) = s.coincidence_coefficients();
    offset + slope * purity
}

/// Total information: measured sum of `I_BZ` against the variant's closed form
/// `coefficient * (tr rho^2 - 1/d)`.
pub fn scheme_total(s: &MeasurementScheme, rho: &DensityOperator) -> Result<SchemeTotal> {
    check_dim(s, rho)?;
    let measured = s
        .povms
        .iter()
        .map(|p| bz_information(p, rho))
        .sum::<Result<f64>>()?;
    Ok(SchemeTotal {
        measured,
        predicted: predicted_total(s, rho),
    })
}

/// As [`scheme_total`] on distorted statistics; the prediction scales by `eta^2`.
pub fn scheme_total_eta(s: &MeasurementScheme, rho: &DensityOperator, eta: f64) -> Result<SchemeTotal> {
    check_dim(s, rho)?;
    let measured = s
        .povms
        .iter()
        .map(|p| bz_information_eta(p, rho, eta))
        .sum::<Result<f64>>()?;
    Ok(SchemeTotal {
        measured,
        predicted: eta * eta * predicted_total(s, rho),
    })
}

fn predicted_total(s: &MeasurementScheme, rho: &DensityOperator) -> f64 {
    s.total_information_coefficient() * (rho.purity() - 1.0 / s.dim as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PartialBound {
    pub sum: f64,
    pub bound: f64,
    pub holds: bool,
}

const BOUND_SLACK: f64 = 1e-10;

/// `sum_{L bases} C <= (L - 1)/d + tr rho^2` for a pairwise unbiased subset.
pub fn partial_mub_bound_check(bases: &[Povm], rho: &DensityOperator) -> Result<PartialBound> {
    let d = rho.dim();
    check_subset(bases, d)?;
    for b in bases {
        if b.len() != d {
            return Err(Error::InvalidParameter("each basis must have d outcomes".into()));
        }
        for e in b.elements() {
            let defect = (&(e.matrix() * e.matrix()) - e.matrix()).max_abs_entry();
            if defect > VALIDATION_TOL {
                return Err(Error::InvalidParameter("basis elements must be rank-one projectors".into()));
            }
        }
    }
    cross_unbiased(bases, 1.0 / d as f64)?;
    let l = bases.len() as f64;
    bound(bases, rho, (l - 1.0) / d as f64 + rho.purity())
}

/// MUM analogue: `sum_{L} C <= (L - 1)/d + (1 - kappa + (kappa d - 1) tr rho^2)/(d - 1)`.
pub fn partial_mum_bound_check(povms: &[Povm], kappa: f64, rho: &DensityOperator) -> Result<PartialBound> {
    let d = rho.dim();
    check_subset(povms, d)?;
    cross_unbiased(povms, 1.0 / d as f64)?;
    let df = d as f64;
    let l = povms.len() as f64;
    let rhs = (l - 1.0) / df + (1.0 - kappa + (kappa * df - 1.0) * rho.purity()) / (df - 1.0);
    bound(povms, rho, rhs)
}

fn check_subset(povms: &[Povm], d: usize) -> Result<()> {
    if povms.is_empty() || povms.len() > d + 1 {
        return Err(Error::InvalidParameter(format!(
            "expected between 1 and {} measurements, got {}",
            d + 1,
            povms.len()
        )));
    }
    if let Some(p) = povms.iter().find(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch(d, p.dim()));
    }
    Ok(())
}

fn cross_unbiased(povms: &[Povm], target: f64) -> Result<()> {
    let mut worst = 0.0f64;
    for (r, p) in povms.iter().enumerate() {
        for q in povms.iter().skip(r + 1) {
            for x in p.elements() {
                for y in q.elements() {
                    worst = worst.max((x.trace_product(y) - target).abs());
                }
            }
        }
    }
    if worst > VALIDATION_TOL {
        return Err(Error::NotUnbiased(worst));
    }
    Ok(())
}

fn bound(povms: &[Povm], rho: &DensityOperator, rhs: f64) -> Result<PartialBound> {
    let sum = povms
        .iter()
        .map(|p| Ok(index_of_coincidence(&probabilities(p, rho)?)))
        .sum::<Result<f64>>()?;
    Ok(PartialBound {
        sum,
        bound: rhs,
        holds: sum <= rhs + BOUND_SLACK,
    })
}

/// Two equally pure qubit states whose Shannon-entropy sums over the three
/// Pauli bases differ while their BZ totals agree.
#[derive(Clone, Debug)]
pub struct NonInvarianceWitness {
    pub state_a: DensityOperator,
    pub state_b: DensityOperator,
    pub shannon_a: f64,
    pub shannon_b: f64,
    pub total_a: f64,
    pub total_b: f64,
}

/// Sum of Shannon entropies over the bases of a scheme.
pub fn shannon_sum(s: &MeasurementScheme, rho: &DensityOperator) -> Result<f64> {
    check_dim(s, rho)?;
    s.povms
        .iter()
        .map(|p| Ok(shannon_entropy(&probabilities(p, rho)?)))
        .sum()
}

/// Compares `|0>` with the pure state of Bloch vector `(1, 1, 1)/sqrt 3`.
pub fn shannon_noninvariance_witness() -> Result<NonInvarianceWitness> {
    let mubs = crate::measurement::build_mub_set(2)?;
    debug_assert_eq!(mubs.variant, Variant::MubSet);
    let zero = &mub_vectors(2)?[0][0];
    let state_a = DensityOperator::pure(zero)?;
    let fiducial = crate::measurement::sic::embedded_fiducial(2).expect("qubit fiducial");
    let state_b = DensityOperator::pure(&fiducial)?;
    Ok(NonInvarianceWitness {
        shannon_a: shannon_sum(&mubs, &state_a)?,
        shannon_b: shannon_sum(&mubs, &state_b)?,
        total_a: scheme_total(&mubs, &state_a)?.measured,
        total_b: scheme_total(&mubs, &state_b)?.measured,
        state_a,
        state_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measurement::{build_mub_set, build_sic_povm};
    use crate::operator::{sample_random_state, ComplexMatrix, StateKind};

    fn ground(d: usize) -> DensityOperator {
        let mut diag = vec![0.0; d];
        diag[0] = 1.0;
        DensityOperator::from_matrix(ComplexMatrix::from_real_diagonal(&diag)).unwrap()
    }

    #[test]
    fn coincidence_examples() {
        let u = OutcomeDistribution::new(vec![0.25; 4]).unwrap();
        assert!((index_of_coincidence(&u) - 0.25).abs() < 1e-15);
        let point = OutcomeDistribution::new(vec![0.0, 1.0]).unwrap();
        assert_eq!(index_of_coincidence(&point), 1.0);
        let p = OutcomeDistribution::new(vec![0.5, 0.3, 0.2]).unwrap();
        // direct summation 0.25 + 0.09 + 0.04
        assert!((index_of_coincidence(&p) - 0.38).abs() < 1e-15);
        assert!((bz_uncertainty(&p) - 0.62).abs() < 1e-15);
    }

    #[test]
    fn noclick_inclusion_flag() {
        let p = distort(&OutcomeDistribution::new(vec![0.5, 0.5]).unwrap(), 0.5).unwrap();
        assert!((index_of_coincidence_with(&p, true) - 0.375).abs() < 1e-15);
        assert!((index_of_coincidence_with(&p, false) - 0.125).abs() < 1e-15);
    }

    #[test]
    fn information_of_mixed_state_is_zero() {
        let s = build_sic_povm(3).unwrap();
        let rho = DensityOperator::maximally_mixed(3).unwrap();
        assert!(bz_information(&s.povms[0], &rho).unwrap().abs() < 1e-15);
    }

    #[test]
    fn sigma_z_basis_on_ground_state() {
        let s = build_mub_set(2).unwrap();
        let i = bz_information(&s.povms[0], &ground(2)).unwrap();
        assert!((i - 0.5).abs() < 1e-15);
        let dist = probabilities(&s.povms[0], &ground(2)).unwrap();
        assert!((bz_information_uniform(&dist).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn qubit_sic_pure_state() {
        let s = build_sic_povm(2).unwrap();
        let c = index_of_coincidence(&probabilities(&s.povms[0], &ground(2)).unwrap());
        assert!((c - 1.0 / 3.0).abs() < 1e-12);
        let i = bz_information(&s.povms[0], &ground(2)).unwrap();
        assert!((i - 1.0 / 12.0).abs() < 1e-12);
    }

    #[test]
    fn mixed_state_totals_vanish() {
        for s in [build_mub_set(3).unwrap(), build_sic_povm(3).unwrap()] {
            let t = scheme_total(&s, &DensityOperator::maximally_mixed(3).unwrap()).unwrap();
            assert!(t.measured.abs() < 1e-14 && t.predicted.abs() < 1e-14);
        }
    }

    #[test]
    fn mub_coincidence_brute_force() {
        let s = build_mub_set(5).unwrap();
        let rho = sample_random_state(5, StateKind::Mixed, 4).unwrap();
        let mut brute = 0.0;
        let mut outcomes = 0;
        for p in &s.povms {
            for m in p.elements() {
                let pj = m.trace_product(rho.operator());
                brute += pj * pj;
                outcomes += 1;
            }
        }
        assert_eq!(outcomes, 30);
        assert!((brute - (1.0 + rho.purity())).abs() < 1e-9);
        assert!((coincidence_sum(&s, &rho).unwrap() - brute).abs() < 1e-12);
    }

    #[test]
    fn mixed_qutrit_mub_sum() {
        let s = build_mub_set(3).unwrap();
        let c = coincidence_sum(&s, &DensityOperator::maximally_mixed(3).unwrap()).unwrap();
        assert!((c - (1.0 + 1.0 / 3.0)).abs() < 1e-14);
    }

    #[test]
    fn partial_bounds() {
        let s = build_mub_set(3).unwrap();
        let rho = sample_random_state(3, StateKind::Pure, 5).unwrap();
        let full = partial_mub_bound_check(&s.povms, &rho).unwrap();
        assert!((full.sum - full.bound).abs() < 1e-9);
        let one = partial_mub_bound_check(&s.povms[..1], &rho).unwrap();
        assert!(one.holds && one.sum <= rho.purity() + 1e-10);
    }

    #[test]
    fn partial_bound_rejects_biased_bases() {
        let s = build_mub_set(3).unwrap();
        let rho = DensityOperator::maximally_mixed(3).unwrap();
        let same = vec![s.povms[0].clone(), s.povms[0].clone()];
        assert!(matches!(partial_mub_bound_check(&same, &rho), Err(Error::NotUnbiased(_))));
    }

    #[test]
    fn witness_values() {
        let w = shannon_noninvariance_witness().unwrap();
        // 0 + ln 2 + ln 2
        assert!((w.shannon_a - 2.0 * std::f64::consts::LN_2).abs() < 1e-12);
        // three binary entropies of 1/2 + 1/(2 sqrt 3)
        let p = 0.5 + 0.5 / 3f64.sqrt();
        let oracle = 3.0 * (-p * p.ln() - (1.0 - p) * (1.0 - p).ln());
        assert!((w.shannon_b - oracle).abs() < 1e-12);
        assert!((w.shannon_b - 1.547_120_209_390_663).abs() < 1e-12);
        assert!((w.shannon_b - w.shannon_a).abs() > 0.1);
        assert!((w.total_a - 0.5).abs() < 1e-12 && (w.total_a - w.total_b).abs() < 1e-10);
    }
}
