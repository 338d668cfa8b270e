//! Invariant information measures for structured quantum measurements.
//!
//! The crate builds four measurement families in dimension `d` (complete
//! MUB sets, SIC-POVMs, complete MUM sets and general SIC-POVMs), evaluates
//! the Brukner-Zeilinger information they extract from a state, including
//! under detector inefficiency, and characterizes channels through
//! bistochastic monotonicity and the non-unitality operator.
//!
//! Modules:
//!
//! - [`operator`]: dense Hermitian and density operators, Jacobi eigensolver,
//!   Schatten norms, random states.
//! - [`measurement`]: POVMs, the four scheme builders, the structural validator.
//! - [`info`]: outcome statistics, coincidence indices, entropies, scheme totals.
//! - [`channel`]: Kraus channels, Tsallis divergences, non-unitality reports.
//! - [`probe`]: finite-shot estimation of a black-box channel's non-unitality.
//! - [`io`]: the JSON file formats.
//! - [`cli`]: the command-line front end.

pub mod channel;
pub mod cli;
pub mod error;
pub mod info;
pub mod io;
pub mod measurement;
pub mod operator;
pub mod probe;
pub mod rng;

pub use error::{Error, Result};
