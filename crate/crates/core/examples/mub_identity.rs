//! Coincidence sum over a complete MUB set equals `1 + tr rho^2`.

use bzinfo::info::{coincidence_sum, scheme_total};
use bzinfo::measurement::{build_mub_set, validate_scheme};
use bzinfo::operator::{sample_random_state, StateKind};

fn main() -> bzinfo::Result<()> {
    for d in [2, 3, 5, 7] {
        let mubs = build_mub_set(d)?;
        let report = validate_scheme(&mubs);
        println!("d = {d}: {} bases, valid = {}, max deviation {:.1e}", mubs.povms.len(), report.passed, report.max_deviation());
        for (seed, kind) in [(1, StateKind::Pure), (2, StateKind::Mixed)] {
            let rho = sample_random_state(d, kind, seed)?;
            let total = scheme_total(&mubs, &rho)?;
            println!(
                "  {kind:?}: sum C = {:.12}, 1 + purity = {:.12}, BZ total = {:.12} (predicted {:.12})",
                coincidence_sum(&mubs, &rho)?,
                1.0 + rho.purity(),
                total.measured,
                total.predicted
            );
        }
    }
    Ok(())
}
