//! Non-unitality vector norm and the map-norm bound.

use bzinfo::channel::{contraction, non_unitality, sample_channel, ChannelKind};

fn main() -> bzinfo::Result<()> {
    let d = 3;
    let channels = [
        ("bistochastic", sample_channel(d, ChannelKind::Bistochastic { unitaries: 3 }, 1)?),
        ("generic", sample_channel(d, ChannelKind::Generic { env_dim: 2 }, 2)?),
        ("depolarizing", sample_channel(d, ChannelKind::Depolarizing { lambda: 0.3 }, 0)?),
        ("contraction", contraction(d, 0)?),
    ];
    for (name, phi) in &channels {
        let r = non_unitality(phi)?;
        println!(
            "{name:<13} |Gamma| = {:.9}, map norm = {:.9} <= bound {:.9}: {}",
            r.hs_norm,
            r.map_norm,
            r.bound,
            r.bound_holds()
        );
    }
    Ok(())
}
