//! Measurement statistics and Brukner-Zeilinger information functionals.

pub mod bz;
pub mod distribution;
pub mod entropy;

pub use bz::{
    bz_information, bz_information_eta, bz_information_uniform, bz_uncertainty, coincidence_sum,
    coincidence_sum_closed_form, coincidences, index_of_coincidence, index_of_coincidence_with,
    partial_mub_bound_check, partial_mum_bound_check, scheme_total, scheme_total_eta,
    shannon_noninvariance_witness, shannon_sum, NonInvarianceWitness, PartialBound, SchemeTotal,
};
pub use distribution::{distort, probabilities, OutcomeDistribution};
pub use entropy::{binary_tsallis, shannon_entropy, tsallis_entropy};
