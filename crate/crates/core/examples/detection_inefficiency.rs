//! Finite detection efficiency scales the BZ total by eta^2.

use bzinfo::info::{binary_tsallis, distort, probabilities, scheme_total, scheme_total_eta, tsallis_entropy};
use bzinfo::measurement::build_sic_povm;
use bzinfo::operator::{sample_random_state, StateKind};

fn main() -> bzinfo::Result<()> {
    let sic = build_sic_povm(3)?;
    let rho = sample_random_state(3, StateKind::Pure, 9)?;
    let ideal = scheme_total(&sic, &rho)?.measured;
    for eta in [1.0, 0.9, 0.75, 0.5, 0.25] {
        let lossy = scheme_total_eta(&sic, &rho, eta)?.measured;
        println!("eta = {eta:.2}: total {lossy:.12}, eta^2 x ideal {:.12}", eta * eta * ideal);
    }
    let dist = probabilities(&sic.povms[0], &rho)?;
    let eta = 0.8;
    let out = distort(&dist, eta)?;
    for alpha in [0.5, 2.0, 3.0] {
        let lhs = tsallis_entropy(&out, alpha)?;
        let rhs = eta.powf(alpha) * tsallis_entropy(&dist, alpha)? + binary_tsallis(eta, alpha)?;
        println!("alpha = {alpha}: S(distorted) = {lhs:.12}, eta^alpha S + S_2(eta) = {rhs:.12}");
    }
    Ok(())
}
