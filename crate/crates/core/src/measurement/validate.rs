//! Structural validation of measurement schemes against their defining
//! trace and overlap conditions.

use serde::Serialize;

use super::{MeasurementScheme, Povm, Variant};
use crate::operator::POSITIVITY_TOL;

/// Pass threshold for every check.
pub const VALIDATION_TOL: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// Maximal absolute deviation observed for this condition.
    pub deviation: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub variant: Variant,
    pub d: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl ValidationReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn max_deviation(&self) -> f64 {
        self.checks.iter().map(|c| c.deviation).fold(0.0, f64::max)
    }
}

struct Checklist(Vec<Check>);

impl Checklist {
    fn push(&mut self, name: &str, deviation: f64) {
        let deviation = if deviation.is_nan() { f64::INFINITY } else { deviation };
        self.0.push(Check {
            name: name.to_string(),
            deviation,
            passed: deviation <= VALIDATION_TOL,
        });
    }
}

/// Distance of `x` outside `(lo, hi]`; zero inside. The open lower end is
/// reported as violated when `x <= lo`.
fn interval_deviation(x: f64, lo: f64, hi: f64) -> f64 {
    if x <= lo {
        (lo - x).max(2.0 * VALIDATION_TOL)
    } else if x > hi + VALIDATION_TOL {
        x - hi
    } else {
        0.0
    }
}

fn max_over<T>(items: impl IntoIterator<Item = T>, f: impl Fn(T) -> f64) -> f64 {
    items.into_iter().map(f).fold(0.0, f64::max)
}

/// Runs the per-variant checklist; never fails, only reports.
pub fn validate_scheme(s: &MeasurementScheme) -> ValidationReport {
    let d = s.dim;
    let df = d as f64;
    let mut checks = Checklist(Vec::new());

    checks.push(
        "povm_count",
        (s.povms.len() as f64 - s.variant.povm_count(d) as f64).abs(),
    );
    checks.push("completeness", max_over(&s.povms, Povm::completeness_defect));
    let min_eig = s
        .povms
        .iter()
        .map(|p| p.min_eigenvalue().unwrap_or(f64::NEG_INFINITY))
        .fold(f64::INFINITY, f64::min);
    let positivity = if min_eig >= -POSITIVITY_TOL { 0.0 } else { -min_eig };
    checks.push("positivity", positivity);

    let elements = || s.povms.iter().flat_map(|p| p.elements());

    match s.variant {
        Variant::MubSet => {
            checks.push("element_count", max_over(&s.povms, |p| (p.len() as f64 - df).abs()));
            checks.push("unit_trace", max_over(elements(), |e| (e.trace() - 1.0).abs()));
            checks.push(
                "rank_one_projector",
                max_over(elements(), |e| {
                    let sq = e.matrix() * e.matrix();
                    (&sq - e.matrix()).max_abs_entry()
                }),
            );
            checks.push("cross_overlap", cross_overlap_deviation(s, 1.0 / df));
        }
        Variant::SicPovm => {
            checks.push("element_count", max_over(&s.povms, |p| (p.len() as f64 - df * df).abs()));
            checks.push("element_trace", max_over(elements(), |e| (e.trace() - 1.0 / df).abs()));
            checks.push(
                "rank_one",
                max_over(elements(), |e| {
                    let sq = e.matrix() * e.matrix();
                    (&sq - &e.matrix().scale(1.0 / df)).max_abs_entry()
                }),
            );
            // |<phi_j|phi_k>|^2 = d^2 tr(N_j N_k) = 1/(d+1)
            let overlap = max_over(&s.povms, |p| {
                let g = p.gram();
                let mut worst = 0.0f64;
                for j in 0..g.len() {
                    for k in 0..g.len() {
                        if j != k {
                            worst = worst.max((df * df * g[j][k] - 1.0 / (df + 1.0)).abs());
                        }
                    }
                }
                worst
            });
            checks.push("pairwise_overlap", overlap);
        }
        Variant::MumSet => {
            let kappa = s.kappa.unwrap_or(f64::NAN);
            checks.push("element_count", max_over(&s.povms, |p| (p.len() as f64 - df).abs()));
            checks.push("unit_trace", max_over(elements(), |e| (e.trace() - 1.0).abs()));
            checks.push("cross_overlap", cross_overlap_deviation(s, 1.0 / df));
            let recomputed = recomputed_self_product(s);
            checks.push("kappa_consistency", (recomputed - kappa).abs());
            let within = max_over(&s.povms, |p| {
                let g = p.gram();
                let mut worst = 0.0f64;
                for j in 0..g.len() {
                    for k in 0..g.len() {
                        let expect = if j == k { kappa } else { (1.0 - kappa) / (df - 1.0) };
                        worst = worst.max((g[j][k] - expect).abs());
                    }
                }
                worst
            });
            checks.push("within_overlap", within);
            checks.push("kappa_range", interval_deviation(kappa, 1.0 / df, 1.0));
        }
        Variant::GeneralSic => {
            let a = s.a_param.unwrap_or(f64::NAN);
            let b = (1.0 - a * df) / (df * (df * df - 1.0));
            checks.push("element_count", max_over(&s.povms, |p| (p.len() as f64 - df * df).abs()));
            checks.push("element_trace", max_over(elements(), |e| (e.trace() - 1.0 / df).abs()));
            let recomputed = recomputed_self_product(s);
            checks.push("a_consistency", (recomputed - a).abs());
            let (self_dev, cross_dev) = s.povms.iter().fold((0.0f64, 0.0f64), |acc, p| {
                let g = p.gram();
                let mut sd = acc.0;
                let mut cd = acc.1;
                for j in 0..g.len() {
                    for k in 0..g.len() {
                        if j == k {
                            sd = sd.max((g[j][k] - a).abs());
                        } else {
                            cd = cd.max((g[j][k] - b).abs());
                        }
                    }
                }
                (sd, cd)
            });
            checks.push("self_product", self_dev);
            checks.push("cross_product", cross_dev);
            checks.push("a_range", interval_deviation(a, 1.0 / df.powi(3), 1.0 / (df * df)));
        }
    }

    let passed = checks.0.iter().all(|c| c.passed);
    ValidationReport {
        variant: s.variant,
        d,
        checks: checks.0,
        passed,
    }
}

/// Mean of `tr(M_j^2)` over all elements: the kappa (or a) read back from
/// the Gram matrices.
pub fn recomputed_self_product(s: &MeasurementScheme) -> f64 {
    let mut total = 0.0;
    let mut count = 0usize;
    for p in &s.povms {
        for e in p.elements() {
            total += e.trace_product(e);
            count += 1;
        }
    }
    total / count as f64
}

/// `max |tr(P_j Q_k) - target|` over element pairs from different POVMs.
fn cross_overlap_deviation(s: &MeasurementScheme, target: f64) -> f64 {
    let mut worst = 0.0f64;
    for (r, p) in s.povms.iter().enumerate() {
        for q in s.povms.iter().skip(r + 1) {
            for x in p.elements() {
                for y in q.elements() {
                    worst = worst.max((x.trace_product(y) - target).abs());
                }
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measurement::{build_general_sic, build_mub_set, build_mum_set, build_sic_povm, TParam};

    #[test]
    fn built_schemes_pass() {
        for s in [
            build_mub_set(5).unwrap(),
            build_sic_povm(2).unwrap(),
            build_sic_povm(3).unwrap(),
            build_mum_set(4, TParam::Max).unwrap(),
            build_general_sic(4, TParam::Max).unwrap(),
        ] {
            let r = validate_scheme(&s);
            assert!(r.passed, "{:?}", r);
        }
    }

    #[test]
    fn scaled_element_breaks_completeness() {
        let mut s = build_mub_set(3).unwrap();
        s.povms[1].scale_element(0, 1.01);
        let r = validate_scheme(&s);
        assert!(!r.passed);
        let c = r.check("completeness").unwrap();
        assert!(!c.passed);
        let norm = s.povms[1].elements()[0].matrix().max_abs_entry() / 1.01;
        assert!((c.deviation - 0.01 * norm).abs() < 1e-12);
    }

    #[test]
    fn wrong_kappa_is_caught() {
        let mut s = build_mum_set(3, TParam::Max).unwrap();
        s.kappa = Some(s.kappa.unwrap() - 1e-3);
        let r = validate_scheme(&s);
        assert!(!r.check("kappa_consistency").unwrap().passed);
    }

    #[test]
    fn interval_open_lower_end() {
        assert!(interval_deviation(0.5, 0.5, 1.0) > VALIDATION_TOL);
        assert_eq!(interval_deviation(0.75, 0.5, 1.0), 0.0);
        assert_eq!(interval_deviation(1.0, 0.5, 1.0), 0.0);
        assert!(interval_deviation(1.1, 0.5, 1.0) > VALIDATION_TOL);
    }
}
