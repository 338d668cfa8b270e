//! The four measurement families and their structural validator.

pub mod gellmann;
pub mod mub;
pub mod mum;
pub mod povm;
pub mod scheme;
pub mod sic;
pub mod validate;

pub use gellmann::gell_mann_basis;
pub use mub::{build_mub_set, mub_vectors};
pub use mum::{build_general_sic, build_mum_set, general_sic_t_max, mum_t_max};
pub use povm::Povm;
pub use scheme::{MeasurementScheme, TParam, Variant};
pub use sic::{build_sic_povm, optimize_sic_fiducial, sic_from_fiducial, FiducialSearch, SicSearch};
pub use validate::{validate_scheme, Check, ValidationReport, VALIDATION_TOL};
