//! Parameter families: MUMs with efficiency kappa and general SIC-POVMs with parameter a.

use bzinfo::info::{coincidence_sum, coincidence_sum_closed_form};
use bzinfo::measurement::{build_general_sic, build_mum_set, general_sic_t_max, mum_t_max, TParam};
use bzinfo::operator::{sample_random_state, StateKind};

fn main() -> bzinfo::Result<()> {
    for d in 2..=5 {
        let rho = sample_random_state(d, StateKind::Mixed, d as u64)?;
        let (mum_max, gsic_max) = (mum_t_max(d)?, general_sic_t_max(d)?);
        for frac in [0.5, 1.0] {
            let mum = build_mum_set(d, TParam::Value(frac * mum_max))?;
            let gsic = build_general_sic(d, TParam::Value(frac * gsic_max))?;
            println!(
                "d = {d}, t = {frac} t_max: kappa = {:.6}, sum C = {:.12} vs {:.12}; a = {:.6}, sum C = {:.12} vs {:.12}",
                mum.kappa.unwrap_or(f64::NAN),
                coincidence_sum(&mum, &rho)?,
                coincidence_sum_closed_form(&mum, rho.purity()),
                gsic.a_param.unwrap_or(f64::NAN),
                coincidence_sum(&gsic, &rho)?,
                coincidence_sum_closed_form(&gsic, rho.purity()),
            );
        }
    }
    Ok(())
}
