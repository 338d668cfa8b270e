//! Kraus channels, divergences, bistochastic monotonicity and non-unitality.

pub mod divergence;
pub mod kraus;
pub mod nonunital;
pub mod sample;

pub use divergence::{monotonicity_check, purity_excess, tsallis_divergence, MonotonicityReport};
pub use kraus::{KrausChannel, TRACE_PRESERVING_TOL, UNITALITY_TOL};
pub use nonunital::{map_norm_bound, non_unitality, norm_bound_lemma, NonUnitalityReport, NormLemma};
pub use sample::{contraction, depolarizing, sample_channel, ChannelKind};
