//! JSON file formats.
//!
//! - matrix: `{"d": 2, "entries": [[re, im], ...]}` with `d * d` entries, row-major
//! - scheme: `{"variant": "MubSet", "d": 3, "kappa": k?, "a": a?, "povms": [[matrix, ...], ...]}`
//! - channel: `{"d": 3, "kraus": [matrix, ...]}`
//! - shots: `{"scheme": scheme, "N": n, "seed": s, "eta": e?, "counts": [[n_j, ...], ...]}`
//!
//! Schemes are loaded without the positivity and completeness checks so that
//! a defective file still reaches the validator.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::channel::KrausChannel;
use crate::error::{Error, Result};
use crate::measurement::{MeasurementScheme, Povm, Variant};
use crate::operator::{ComplexMatrix, DensityOperator, HermitianOperator};
use crate::probe::ShotRecord;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub d: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self {
            d: m.dim(),
            entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.d == 0 {
            return Err(Error::Parse("matrix dimension must be positive".into()));
        }
        if self.entries.len() != self.d * self.d {
            return Err(Error::Parse(format!(
                "matrix with d = {} needs {} entries, found {}",
                self.d,
                self.d * self.d,
                self.entries.len()
            )));
        }
        if self.entries.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Parse("matrix entries must be finite".into()));
        }
        let data = self.entries.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
        ComplexMatrix::from_entries(self.d, data)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchemeJson {
    pub variant: Variant,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    pub povms: Vec<Vec<MatrixJson>>,
}

impl SchemeJson {
    pub fn from_scheme(s: &MeasurementScheme) -> Self {
        Self {
            variant: s.variant,
            d: s.dim,
            kappa: s.kappa,
            a: s.a_param,
            povms: s
                .povms
                .iter()
                .map(|p| p.elements().iter().map(|e| MatrixJson::from_matrix(e.matrix())).collect())
                .collect(),
        }
    }

    pub fn to_scheme(&self) -> Result<MeasurementScheme> {
        let mut povms = Vec::with_capacity(self.povms.len());
        for (b, elements) in self.povms.iter().enumerate() {
            let ops = elements
                .iter()
                .map(|m| {
                    let m = m.to_matrix()?;
                    if m.dim() != self.d {
                        return Err(Error::DimensionMismatch(self.d, m.dim()));
                    }
                    HermitianOperator::new(m)
                })
                .collect::<Result<Vec<_>>>()?;
            povms.push(Povm::from_elements_unchecked(ops, format!("{}-{b}", self.variant.short_name()))?);
        }
        MeasurementScheme::new(self.variant, povms, self.kappa, self.a)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChannelJson {
    pub d: usize,
    pub kraus: Vec<MatrixJson>,
}

impl ChannelJson {
    pub fn from_channel(c: &KrausChannel) -> Self {
        Self {
            d: c.dim(),
            kraus: c.kraus().iter().map(MatrixJson::from_matrix).collect(),
        }
    }

    pub fn to_channel(&self) -> Result<KrausChannel> {
        let kraus = self
            .kraus
            .iter()
            .map(|m| {
                let m = m.to_matrix()?;
                if m.dim() != self.d {
                    return Err(Error::DimensionMismatch(self.d, m.dim()));
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        KrausChannel::new(kraus)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ShotRecordJson {
    pub scheme: SchemeJson,
    #[serde(rename = "N")]
    pub n: u64,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    pub counts: Vec<Vec<u64>>,
}

impl ShotRecordJson {
    pub fn from_record(r: &ShotRecord) -> Self {
        Self {
            scheme: SchemeJson::from_scheme(&r.scheme),
            n: r.shots,
            seed: r.seed,
            eta: r.eta,
            counts: r.counts.clone(),
        }
    }

    pub fn to_record(&self) -> Result<ShotRecord> {
        ShotRecord::new(self.scheme.to_scheme()?, self.n, self.seed, self.eta, self.counts.clone())
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

pub fn matrix_from_str(text: &str) -> Result<ComplexMatrix> {
    serde_json::from_str::<MatrixJson>(text)?.to_matrix()
}

pub fn matrix_to_string(m: &ComplexMatrix) -> Result<String> {
    Ok(serde_json::to_string(&MatrixJson::from_matrix(m))?)
}

pub fn load_state(path: impl AsRef<Path>) -> Result<DensityOperator> {
    DensityOperator::from_matrix(read_json::<MatrixJson>(path.as_ref())?.to_matrix()?)
}

pub fn save_state(path: impl AsRef<Path>, rho: &DensityOperator) -> Result<()> {
    write_json(path.as_ref(), &MatrixJson::from_matrix(rho.matrix()))
}

pub fn load_scheme(path: impl AsRef<Path>) -> Result<MeasurementScheme> {
    read_json::<SchemeJson>(path.as_ref())?.to_scheme()
}

pub fn save_scheme(path: impl AsRef<Path>, s: &MeasurementScheme) -> Result<()> {
    write_json(path.as_ref(), &SchemeJson::from_scheme(s))
}

pub fn load_channel(path: impl AsRef<Path>) -> Result<KrausChannel> {
    read_json::<ChannelJson>(path.as_ref())?.to_channel()
}

pub fn save_channel(path: impl AsRef<Path>, c: &KrausChannel) -> Result<()> {
    write_json(path.as_ref(), &ChannelJson::from_channel(c))
}

pub fn load_shots(path: impl AsRef<Path>) -> Result<ShotRecord> {
    read_json::<ShotRecordJson>(path.as_ref())?.to_record()
}

pub fn save_shots(path: impl AsRef<Path>, r: &ShotRecord) -> Result<()> {
    write_json(path.as_ref(), &ShotRecordJson::from_record(r))
}
