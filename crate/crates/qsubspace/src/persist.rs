//! Versioned JSON model files.
//!
//! Layout (format 1):
//!
//! ```json
//! {
//!   "format": 1,
//!   "mode": "nonseparable",
//!   "tie_policy": { "kind": "lowest_index" },
//!   "bank": [ { "qMin": -2, "qMax": 4, "dim": 8 } ],
//!   "classes": [
//!     { "label": "1", "representation": { "type": "flat1d", "amplitudes": [0.0, 0.7] } }
//!   ],
//!   "stored_elements": [ [ [1], [2] ], [ [4] ] ]
//! }
//! ```
//!
//! Flat and separable representations store dense amplitude arrays;
//! product states store `[index, amplitude]` pairs for their nonzero
//! entries plus the total dimension. `stored_elements` appears only for
//! models fitted for nearest-neighbor use. Loading re-validates every
//! invariant through the same constructors the fit path uses, so a
//! hand-edited file cannot smuggle in an inconsistent model.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classify::{ClassifierModel, TiePolicy};
use crate::error::{Error, Result};
use crate::quantize::{Quantizer, QuantizerBank};
use crate::represent::{ClassRepresentation, Mode, Representation};
use crate::statevec::StateVector;

/// The file format version this build reads and writes.
pub const MODEL_FORMAT: u32 = 1;

#[derive(Serialize, Deserialize)]
struct ModelFile {
    format: u32,
    mode: Mode,
    tie_policy: TiePolicyDto,
    bank: Vec<QuantizerDto>,
    classes: Vec<ClassDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    stored_elements: Option<Vec<Vec<Vec<usize>>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum TiePolicyDto {
    LowestIndex,
    Random { seed: u64 },
}

impl From<TiePolicy> for TiePolicyDto {
    fn from(p: TiePolicy) -> Self {
        match p {
            TiePolicy::LowestIndex => TiePolicyDto::LowestIndex,
            TiePolicy::Random { seed } => TiePolicyDto::Random { seed },
        }
    }
}

impl From<TiePolicyDto> for TiePolicy {
    fn from(p: TiePolicyDto) -> Self {
        match p {
            TiePolicyDto::LowestIndex => TiePolicy::LowestIndex,
            TiePolicyDto::Random { seed } => TiePolicy::Random { seed },
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QuantizerDto {
    #[serde(rename = "qMin")]
    q_min: i64,
    #[serde(rename = "qMax")]
    q_max: i64,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct ClassDto {
    label: String,
    representation: ReprDto,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum ReprDto {
    Flat1D { amplitudes: Vec<f64> },
    Separable { components: Vec<Vec<f64>> },
    NonSeparable { dim: usize, entries: Vec<(usize, f64)> },
}

/// Serializes a model as pretty-printed format-1 JSON.
pub fn save_model(model: &ClassifierModel, mut out: impl Write) -> Result<()> {
    let file = ModelFile {
        format: MODEL_FORMAT,
        mode: model.mode(),
        tie_policy: model.tie_policy().into(),
        bank: model
            .bank()
            .quantizers()
            .iter()
            .map(|q| QuantizerDto { q_min: q.q_min(), q_max: q.q_max(), dim: q.dim() })
            .collect(),
        classes: model
            .representations()
            .iter()
            .map(|rep| ClassDto {
                label: rep.label().to_string(),
                representation: repr_to_dto(rep.repr()),
            })
            .collect(),
        stored_elements: model.stored_elements().cloned(),
    };
    serde_json::to_writer_pretty(&mut out, &file)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn save_model_to_path(model: &ClassifierModel, path: impl AsRef<Path>) -> Result<()> {
    save_model(model, BufWriter::new(File::create(path)?))
}

/// Reads and fully re-validates a format-1 model file.
pub fn load_model(input: impl Read) -> Result<ClassifierModel> {
    let file: ModelFile = serde_json::from_reader(input)?;
    if file.format != MODEL_FORMAT {
        return Err(Error::UnsupportedFormat(file.format));
    }
    let mut quantizers = Vec::with_capacity(file.bank.len());
    for dto in &file.bank {
        let q = Quantizer::new(dto.q_min, dto.q_max)?;
        if q.dim() != dto.dim {
            return Err(Error::InvalidModel(format!(
                "quantizer [{}, {}] implies dim {}, file says {}",
                dto.q_min,
                dto.q_max,
                q.dim(),
                dto.dim
            )));
        }
        quantizers.push(q);
    }
    let bank = QuantizerBank::from_quantizers(quantizers)?;
    let feature_dims = bank.dims();
    let reps = file
        .classes
        .into_iter()
        .map(|class| {
            let repr = repr_from_dto(class.representation, &feature_dims)?;
            ClassRepresentation::from_parts(class.label, repr)
        })
        .collect::<Result<Vec<_>>>()?;
    ClassifierModel::from_parts(file.mode, bank, reps, file.tie_policy.into(), file.stored_elements)
}

pub fn load_model_from_path(path: impl AsRef<Path>) -> Result<ClassifierModel> {
    load_model(BufReader::new(File::open(path)?))
}

fn repr_to_dto(repr: &Representation) -> ReprDto {
    match repr {
        Representation::Flat1D { ket } => ReprDto::Flat1D { amplitudes: ket.amplitudes().to_vec() },
        Representation::Separable { components } => ReprDto::Separable {
            components: components.iter().map(|c| c.amplitudes().to_vec()).collect(),
        },
        Representation::NonSeparable { product, .. } => ReprDto::NonSeparable {
            dim: product.dim(),
            entries: product
                .amplitudes()
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0.0)
                .map(|(i, &a)| (i, a))
                .collect(),
        },
    }
}

fn repr_from_dto(dto: ReprDto, feature_dims: &[usize]) -> Result<Representation> {
    match dto {
        ReprDto::Flat1D { amplitudes } => {
            Ok(Representation::Flat1D { ket: StateVector::from_amplitudes(amplitudes)? })
        }
        ReprDto::Separable { components } => Ok(Representation::Separable {
            components: components
                .into_iter()
                .map(StateVector::from_amplitudes)
                .collect::<Result<Vec<_>>>()?,
        }),
        ReprDto::NonSeparable { dim, entries } => {
            if dim == 0 {
                return Err(Error::InvalidModel("product state has dim 0".into()));
            }
            let mut amplitudes = vec![0.0; dim];
            let mut filled = vec![false; dim];
            for (index, amplitude) in entries {
                if index >= dim {
                    return Err(Error::InvalidModel(format!(
                        "product entry index {index} out of range for dim {dim}"
                    )));
                }
                if filled[index] {
                    return Err(Error::InvalidModel(format!("duplicate product entry {index}")));
                }
                filled[index] = true;
                amplitudes[index] = amplitude;
            }
            Ok(Representation::NonSeparable {
                product: StateVector::from_amplitudes(amplitudes)?,
                feature_dims: feature_dims.to_vec(),
            })
        }
    }
}
