//! Estimating non-unitality of an opaque channel from simulated counts.

use bzinfo::channel::{contraction, non_unitality, sample_channel, ChannelKind};
use bzinfo::measurement::build_mub_set;
use bzinfo::probe::probe_channel;

fn main() -> bzinfo::Result<()> {
    let mubs = build_mub_set(3)?;
    let boxes = [
        ("contraction", contraction(3, 0)?),
        ("generic", sample_channel(3, ChannelKind::Generic { env_dim: 2 }, 5)?),
        ("bistochastic", sample_channel(3, ChannelKind::Bistochastic { unitaries: 3 }, 6)?),
    ];
    for (name, phi) in &boxes {
        let exact = non_unitality(phi)?.hs_norm;
        for shots in [10_000, 1_000_000] {
            let (report, _) = probe_channel(phi, &mubs, shots, 42, None)?;
            println!(
                "{name:<12} N = {shots:>7}: |Gamma| est {:.6} +- {:.1e} (exact {exact:.6}), purity excess {:.2e}, consistent = {}",
                report.gamma_hs_norm_estimate, report.standard_error.gamma_hs_norm, report.purity_excess, report.consistent
            );
        }
    }
    let (lossy, _) = probe_channel(&boxes[0].1, &mubs, 1_000_000, 43, Some(0.8))?;
    println!("contraction with eta = 0.8: |Gamma| est {:.6}", lossy.gamma_hs_norm_estimate);
    Ok(())
}
