//! Numerical search for a Weyl-Heisenberg covariant SIC fiducial.

use bzinfo::info::coincidence_sum;
use bzinfo::measurement::{sic_from_fiducial, validate_scheme, SicSearch};
use bzinfo::operator::{sample_random_state, StateKind};

fn main() -> bzinfo::Result<()> {
    let d: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let search = SicSearch::new(d, 7, 20_000).restarts(8).run()?;
    println!(
        "d = {d}: potential {:.15} (target {:.15}), success = {}, best restart {}",
        search.potential, search.target, search.success, search.best_restart
    );
    if !search.success {
        return Ok(());
    }
    let sic = sic_from_fiducial(&search.fiducial)?;
    println!("validation passed = {}", validate_scheme(&sic).passed);
    let rho = sample_random_state(d, StateKind::Mixed, 3)?;
    let expected = (rho.purity() + 1.0) / (d * (d + 1)) as f64;
    println!("sum C = {:.15}, (purity + 1)/(d(d+1)) = {expected:.15}", coincidence_sum(&sic, &rho)?);
    Ok(())
}
