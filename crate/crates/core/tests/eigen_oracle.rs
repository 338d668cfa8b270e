//! Jacobi eigenvalues against nalgebra's Hermitian solver.

use bzinfo::operator::random::random_hermitian;
use bzinfo::operator::{eigendecompose, sample_random_state, StateKind};
use bzinfo::rng::stream_rng;
use nalgebra::DMatrix;

fn oracle_eigenvalues(m: &bzinfo::operator::ComplexMatrix) -> Vec<f64> {
    let d = m.dim();
    let na = DMatrix::from_fn(d, d, |i, j| m[(i, j)]);
    let mut values: Vec<f64> = na.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

#[test]
fn random_hermitian_spectra_agree() {
    let mut rng = stream_rng(2024, 0);
    for d in 2..=16 {
        for _ in 0..5 {
            let h = random_hermitian(d, &mut rng);
            let ours = eigendecompose(&h).unwrap().values;
            let theirs = oracle_eigenvalues(h.matrix());
            for (a, b) in ours.iter().zip(&theirs) {
                assert!((a - b).abs() < 1e-10, "d = {d}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn density_spectra_agree() {
    for seed in 0..20 {
        let rho = sample_random_state(2 + (seed as usize % 7), StateKind::Mixed, seed).unwrap();
        let theirs = oracle_eigenvalues(rho.matrix());
        for (a, b) in rho.eigenvalues().iter().zip(&theirs) {
            assert!((a - b).abs() < 1e-10);
        }
    }
}
