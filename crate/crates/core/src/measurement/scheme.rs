use std::fmt;

use serde::{Deserialize, Serialize};

use super::Povm;
use crate::error::{Error, Result};

/// The four structured measurement families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Complete set of `d + 1` mutually unbiased bases.
    MubSet,
    /// Rank-one symmetric informationally complete POVM.
    SicPovm,
    /// Complete set of `d + 1` mutually unbiased measurements.
    MumSet,
    /// General SIC-POVM of parameter `a`.
    GeneralSic,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::MubSet,
        Variant::SicPovm,
        Variant::MumSet,
        Variant::GeneralSic,
    ];

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            Variant::MubSet => "mub",
            Variant::SicPovm => "sic",
            Variant::MumSet => "mum",
            Variant::GeneralSic => "gsic",
        }
    }

    pub fn from_short_name(name: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.short_name() == name)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown scheme variant '{name}'")))
    }

    /// Number of POVMs in a complete scheme of dimension `d`.
    pub fn povm_count(self, d: usize) -> usize {
        match self {
            Variant::MubSet | Variant::MumSet => d + 1,
            Variant::SicPovm | Variant::GeneralSic => 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// Free parameter of the MUM and general-SIC constructions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TParam {
    Value(f64),
    /// Largest value keeping every element positive semidefinite.
    Max,
}

impl std::str::FromStr for TParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("max") {
            return Ok(TParam::Max);
        }
        s.parse::<f64>()
            .map(TParam::Value)
            .map_err(|_| Error::InvalidParameter(format!("t must be a number or 'max', got '{s}'")))
    }
}

/// A measurement scheme: one of the four families with its POVMs.
#[derive(Clone, Debug)]
pub struct MeasurementScheme {
    pub variant: Variant,
    pub dim: usize,
    pub povms: Vec<Povm>,
    /// Efficiency parameter (MUM sets only).
    pub kappa: Option<f64>,
    /// Self-product parameter `a` (general SIC-POVMs only).
    pub a_param: Option<f64>,
}

impl MeasurementScheme {
    pub fn new(
        variant: Variant,
        povms: Vec<Povm>,
        kappa: Option<f64>,
        a_param: Option<f64>,
    ) -> Result<Self> {
        let dim = povms
            .first()
            .map(Povm::dim)
            .ok_or_else(|| Error::InvalidParameter("scheme has no POVMs".into()))?;
        if let Some(p) = povms.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch(dim, p.dim()));
        }
        match variant {
            Variant::MumSet if kappa.is_none() => {
                return Err(Error::InvalidParameter("MUM set requires kappa".into()))
            }
            Variant::GeneralSic if a_param.is_none() => {
                return Err(Error::InvalidParameter("general SIC-POVM requires a".into()))
            }
            _ => {}
        }
        Ok(Self {
            variant,
            dim,
            povms,
            kappa,
            a_param,
        })
    }

    /// Closed form of the coincidence sum as `offset + slope * tr(rho^2)`.
    pub fn coincidence_coefficients(&self) -> (f64, f64) {
        let d = self.dim as f64;
        match self.variant {
            Variant::MubSet => (1.0, 1.0),
            Variant::SicPovm => {
                let c = 1.0 / (d * (d + 1.0));
                (c, c)
            }
            Variant::MumSet => {
                let k = self.kappa.unwrap_or(1.0);
                (1.0 + (1.0 - k) / (d - 1.0), (k * d - 1.0) / (d - 1.0))
            }
            Variant::GeneralSic => {
                let a = self.a_param.unwrap_or(1.0 / (d * d));
                (
                    (1.0 - a * d) / (d * d - 1.0),
                    (a * d.powi(3) - 1.0) / (d * (d * d - 1.0)),
                )
            }
        }
    }

    /// Coefficient multiplying `tr(rho^2) - 1/d` in the total information.
    pub fn total_information_coefficient(&self) -> f64 {
        self.coincidence_coefficients().1
    }
}
