//! Seeded samplers for test channels.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};

use super::KrausChannel;
use crate::error::{Error, Result};
use crate::measurement::sic::displace;
use crate::operator::random::{gaussian_vector, gram_schmidt, random_unitary};
use crate::operator::ComplexMatrix;
use crate::rng::stream_rng;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChannelKind {
    /// Mixture of `unitaries` Haar-random unitaries with Dirichlet(1) weights.
    Bistochastic { unitaries: usize },
    /// Haar-random Stinespring isometry with environment dimension `env_dim`.
    Generic { env_dim: usize },
    /// `rho -> lambda rho + (1 - lambda) I/d`.
    Depolarizing { lambda: f64 },
    /// Complete contraction onto the basis state `target`.
    Contraction { target: usize },
    /// A single Haar-random unitary.
    Unitary,
}

pub fn sample_channel(d: usize, kind: ChannelKind, seed: u64) -> Result<KrausChannel> {
    if d < 2 {
        return Err(Error::InvalidDimension(d, "channels require dimension >= 2"));
    }
    let mut rng = stream_rng(seed, 0);
    match kind {
        ChannelKind::Bistochastic { unitaries } => random_mixed_unitary(d, unitaries, &mut rng),
        ChannelKind::Generic { env_dim } => random_stinespring(d, env_dim, &mut rng),
        ChannelKind::Depolarizing { lambda } => depolarizing(d, lambda),
        ChannelKind::Contraction { target } => contraction(d, target),
        ChannelKind::Unitary => KrausChannel::unitary(random_unitary(d, &mut rng)),
    }
}

pub fn random_mixed_unitary(d: usize, count: usize, rng: &mut impl Rng) -> Result<KrausChannel> {
    if count < 2 {
        return Err(Error::InvalidParameter("a random mixture needs at least two unitaries".into()));
    }
    let raw: Vec<f64> = (0..count).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let total: f64 = raw.iter().sum();
    let kraus = raw
        .iter()
        .map(|w| random_unitary(d, rng).scale((w / total).sqrt()))
        .collect();
    KrausChannel::new(kraus)
}

/// Kraus operators `K_e[i][j] = V[e d + i][j]` of a random isometry `V: C^d -> C^{d d_E}`.
pub fn random_stinespring(d: usize, env_dim: usize, rng: &mut impl Rng) -> Result<KrausChannel> {
    if env_dim < 1 {
        return Err(Error::InvalidParameter("environment dimension must be >= 1".into()));
    }
    let mut columns: Vec<Vec<Complex64>> = (0..d).map(|_| gaussian_vector(d * env_dim, rng)).collect();
    gram_schmidt(&mut columns);
    let kraus = (0..env_dim)
        .map(|e| ComplexMatrix::from_fn(d, |i, j| columns[j][e * d + i]))
        .collect();
    KrausChannel::new(kraus)
}

/// Weyl-Heisenberg twirl realization: `sqrt(lambda) I` and `sqrt((1-lambda)/d^2) D_pq`.
pub fn depolarizing(d: usize, lambda: f64) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidParameter(format!("lambda must lie in [0, 1], got {lambda}")));
    }
    let mut kraus = Vec::with_capacity(d * d + 1);
    if lambda > 0.0 {
        kraus.push(ComplexMatrix::identity(d).scale(lambda.sqrt()));
    }
    if lambda < 1.0 {
        let w = ((1.0 - lambda) / (d * d) as f64).sqrt();
        for p in 0..d {
            for q in 0..d {
                // columns D_pq |j>
                let cols: Vec<Vec<Complex64>> = (0..d)
                    .map(|j| {
                        let mut e = vec![Complex64::new(0.0, 0.0); d];
                        e[j] = Complex64::new(1.0, 0.0);
                        displace(&e, p, q)
                    })
                    .collect();
                kraus.push(ComplexMatrix::from_columns(&cols).scale(w));
            }
        }
    }
    KrausChannel::new(kraus)
}

/// Kraus operators `|target><i|`: every input is mapped to `|target><target|`.
pub fn contraction(d: usize, target: usize) -> Result<KrausChannel> {
    if target >= d {
        return Err(Error::InvalidParameter(format!(
            "contraction target {target} out of range for d = {d}"
        )));
    }
    let kraus = (0..d)
        .map(|i| {
            let mut k = ComplexMatrix::zeros(d);
            k[(target, i)] = Complex64::new(1.0, 0.0);
            k
        })
        .collect();
    KrausChannel::new(kraus)
}
