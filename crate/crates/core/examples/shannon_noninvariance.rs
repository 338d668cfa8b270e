//! Two equally pure qubit states: equal BZ totals, different Shannon sums.

use bzinfo::info::shannon_noninvariance_witness;

fn main() -> bzinfo::Result<()> {
    let w = shannon_noninvariance_witness()?;
    println!("state |0>:                 Shannon sum {:.9} nats, BZ total {:.12}", w.shannon_a, w.total_a);
    println!("Bloch (1,1,1)/sqrt 3 state: Shannon sum {:.9} nats, BZ total {:.12}", w.shannon_b, w.total_b);
    println!("Shannon gap {:.6} nats", (w.shannon_a - w.shannon_b).abs());
    Ok(())
}
