//! Bistochastic channels never increase the purity excess or D_alpha(rho || I/d).

use bzinfo::channel::{monotonicity_check, sample_channel, ChannelKind};
use bzinfo::operator::{sample_random_state, StateKind};

fn main() -> bzinfo::Result<()> {
    let phi = sample_channel(3, ChannelKind::Bistochastic { unitaries: 4 }, 21)?;
    let rho = sample_random_state(3, StateKind::Pure, 22)?;
    let report = monotonicity_check(&phi, &rho)?;
    println!("purity excess {:.6} -> {:.6}", report.before, report.after);
    for step in &report.divergences {
        println!("D_{:<3} {:.6} -> {:.6} holds = {}", step.alpha, step.before, step.after, step.holds);
    }
    let generic = sample_channel(3, ChannelKind::Generic { env_dim: 2 }, 23)?;
    match monotonicity_check(&generic, &rho) {
        Ok(_) => println!("generic channel accepted"),
        Err(e) => println!("generic channel rejected: {e}"),
    }
    Ok(())
}
