use bzinfo::channel::{depolarizing, sample_channel, ChannelKind};
use bzinfo::info::probabilities;
use bzinfo::measurement::{build_mub_set, build_sic_povm};
use bzinfo::operator::{sample_random_state, DensityOperator, StateKind};
use bzinfo::probe::{
    estimate_coincidence, load_shots, multinomial, probe_channel, report_from_shots, save_shots, simulate_shots,
    BlackBox, ShotRecord,
};
use bzinfo::rng::{derive_seed, stream_rng};

#[test]
fn frequencies_within_five_sigma() {
    let s = build_sic_povm(2).unwrap();
    let rho = sample_random_state(2, StateKind::Pure, 11).unwrap();
    let n = 1_000_000u64;
    let counts = simulate_shots(&s.povms[0], &rho, n, 3, None).unwrap();
    let p = probabilities(&s.povms[0], &rho).unwrap();
    for (&c, &pj) in counts.iter().zip(p.probs()) {
        let sigma = (n as f64 * pj * (1.0 - pj)).sqrt();
        assert!((c as f64 - n as f64 * pj).abs() <= 5.0 * sigma.max(1.0), "{c} vs {}", n as f64 * pj);
    }
}

#[test]
fn simulation_is_deterministic_per_seed() {
    let s = build_mub_set(3).unwrap();
    let rho = sample_random_state(3, StateKind::Mixed, 1).unwrap();
    let a = simulate_shots(&s.povms[2], &rho, 5000, 9, Some(0.8)).unwrap();
    let b = simulate_shots(&s.povms[2], &rho, 5000, 9, Some(0.8)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.len(), 4);
    assert_eq!(a.iter().sum::<u64>(), 5000);
}

#[test]
fn collision_estimator_replications() {
    let p = [0.5, 0.3, 0.2];
    let exact = 0.38;
    let estimates: Vec<f64> = (0..100)
        .map(|r| estimate_coincidence(&multinomial(&p, 100_000, &mut stream_rng(derive_seed(5, r), 0))).unwrap())
        .collect();
    let mean = estimates.iter().sum::<f64>() / 100.0;
    let sd = (estimates.iter().map(|e| (e - mean).powi(2)).sum::<f64>() / 99.0).sqrt();
    assert!(estimates.iter().all(|e| (e - exact).abs() < 0.01));
    assert!((mean - exact).abs() <= 2.0 * sd / 10.0 + 1e-12);
}

#[test]
fn collision_estimator_is_unbiased() {
    // small N makes the plug-in bias (1 - C)/N visible; the collision estimator has none
    for (k, p) in [vec![0.5, 0.3, 0.2], vec![0.9, 0.05, 0.05], vec![0.25; 4]].iter().enumerate() {
        let exact: f64 = p.iter().map(|x| x * x).sum();
        let reps = 20_000;
        let n = 20;
        let est: Vec<f64> = (0..reps)
            .map(|r| estimate_coincidence(&multinomial(p, n, &mut stream_rng(derive_seed(k as u64, r), 0))).unwrap())
            .collect();
        let mean = est.iter().sum::<f64>() / reps as f64;
        let sd = (est.iter().map(|e| (e - mean).powi(2)).sum::<f64>() / (reps as f64 - 1.0)).sqrt();
        let stderr = sd / (reps as f64).sqrt();
        assert!((mean - exact).abs() <= 4.0 * stderr, "{mean} vs {exact} ({stderr})");
    }
}

#[test]
fn depolarizing_half_on_qubit_sic() {
    let phi = depolarizing(2, 0.5).unwrap();
    let s = build_sic_povm(2).unwrap();
    let (r, _) = probe_channel(&phi, &s, 1_000_000, 21, None).unwrap();
    assert!((r.purity_estimate - 0.5).abs() <= 3.0 * r.standard_error.purity);
    assert!(r.consistent);
}

#[test]
fn efficiency_correction_recovers_truth() {
    let phi = sample_channel(3, ChannelKind::Generic { env_dim: 2 }, 4).unwrap();
    let truth = phi.apply(&DensityOperator::maximally_mixed(3).unwrap()).unwrap().purity();
    let s = build_mub_set(3).unwrap();
    let (r, _) = probe_channel(&phi, &s, 1_000_000, 8, Some(0.8)).unwrap();
    assert!((r.purity_estimate - truth).abs() <= 3.0 * r.standard_error.purity, "{} vs {truth}", r.purity_estimate);
}

#[test]
fn shots_round_trip_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shots.json");
    let phi = sample_channel(2, ChannelKind::Generic { env_dim: 2 }, 1).unwrap();
    let s = build_sic_povm(2).unwrap();
    let (inline, record) = probe_channel(&phi, &s, 10_000, 2, Some(0.9)).unwrap();
    save_shots(&path, &record).unwrap();
    let loaded = load_shots(&path).unwrap();
    assert_eq!(loaded.counts, record.counts);
    assert_eq!((loaded.shots, loaded.seed, loaded.eta), (record.shots, record.seed, record.eta));
    let again = report_from_shots(&loaded).unwrap();
    assert_eq!(again.purity_estimate, inline.purity_estimate);
    assert_eq!(again.standard_error.purity, inline.standard_error.purity);
}

#[test]
fn tampered_counts_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shots.json");
    let s = build_sic_povm(2).unwrap();
    let record = ShotRecord::new(s, 4, 0, None, vec![vec![1, 1, 1, 1]]).unwrap();
    save_shots(&path, &record).unwrap();
    let text = std::fs::read_to_string(&path).unwrap().replace("\"N\": 4", "\"N\": 5");
    std::fs::write(&path, text).unwrap();
    assert!(load_shots(&path).is_err());
}

/// A box that only exposes `apply`; the probe cannot see Kraus operators.
struct Opaque(bzinfo::channel::KrausChannel);

impl BlackBox for Opaque {
    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn apply(&self, rho: &DensityOperator) -> bzinfo::Result<DensityOperator> {
        self.0.apply(rho)
    }
}

#[test]
fn bistochastic_box_estimate_is_near_zero() {
    let phi = Opaque(sample_channel(3, ChannelKind::Bistochastic { unitaries: 3 }, 6).unwrap());
    let s = build_mub_set(3).unwrap();
    let (r, _) = probe_channel(&phi, &s, 1_000_000, 6, None).unwrap();
    assert!(r.purity_excess.abs() <= 3.0 * r.standard_error.purity_excess);
    assert!(r.consistent);
}

#[test]
fn wrong_dimension_rejected() {
    let phi = depolarizing(2, 0.5).unwrap();
    let s = build_mub_set(3).unwrap();
    assert!(probe_channel(&phi, &s, 100, 0, None).is_err());
}
