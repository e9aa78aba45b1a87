//! Class representatives over quantized features, in three shapes.
//!
//! * [`Mode::Flat1D`]: one ket in a single feature's space, the
//!   normalized superposition of the class elements' kets.
//! * [`Mode::Separable`]: one such ket per feature, features treated
//!   independently.
//! * [`Mode::NonSeparable`]: one ket in the full tensor-product space,
//!   the normalized sum of each element's Kronecker chain. This shape can
//!   carry cross-feature correlation that the separable one cannot; its
//!   [`schmidt_rank`](ClassRepresentation::schmidt_rank) tells the two
//!   apart for bipartite data.
//!
//! Scoring is overlap against the representative: absolute scalar product
//! for the flat and product-space shapes, root-sum-square of per-feature
//! overlaps for the separable one.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantize::QuantizerBank;
use crate::statevec::{inner, kron_chain, superpose, StateVector};

/// Singular values at or below this threshold count as zero when ranking
/// a reshaped product state.
pub const SCHMIDT_SV_TOL: f64 = 1e-10;

/// Representation shape; also the classifier's fit mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Flat1D,
    Separable,
    NonSeparable,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Flat1D => "flat1d",
            Mode::Separable => "separable",
            Mode::NonSeparable => "nonseparable",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "flat1d" => Ok(Mode::Flat1D),
            "separable" => Ok(Mode::Separable),
            "nonseparable" => Ok(Mode::NonSeparable),
            other => Err(Error::InvalidConfig(format!(
                "unknown mode '{other}' (expected flat1d, separable, or nonseparable)"
            ))),
        }
    }
}

/// How separable components are scaled after summing element kets.
///
/// [`ComponentScaling::UnitNorm`] divides by the sum's norm, so every
/// component is a unit vector regardless of duplicate elements.
/// [`ComponentScaling::InverseSqrtCount`] divides by √k for a k-element
/// class instead; the two agree exactly when no two class elements share
/// a quantized ket, and the latter leaves components non-unit otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComponentScaling {
    #[default]
    UnitNorm,
    InverseSqrtCount,
}

/// The mode-specific payload of a class representative.
#[derive(Debug, Clone, PartialEq)]
pub enum Representation {
    Flat1D { ket: StateVector },
    Separable { components: Vec<StateVector> },
    NonSeparable { product: StateVector, feature_dims: Vec<usize> },
}

/// A fitted class representative: label plus mode-specific state.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassRepresentation {
    label: String,
    repr: Representation,
}

impl ClassRepresentation {
    /// Rebuilds from stored parts, checking the shape invariants: every
    /// contained vector normalized within [`crate::statevec::NORM_TOL`], separable
    /// component lists nonempty, product dimension consistent with the
    /// per-feature dimensions.
    pub fn from_parts(label: String, repr: Representation) -> Result<Self> {
        if label.is_empty() {
            return Err(Error::InvalidModel("class label must be nonempty".into()));
        }
        let check_norm = |v: &StateVector, what: &str| -> Result<()> {
            if !v.is_normalized() {
                return Err(Error::InvalidModel(format!(
                    "{what} for class '{label}' is not normalized (norm² = {})",
                    v.norm_sq()
                )));
            }
            Ok(())
        };
        match &repr {
            Representation::Flat1D { ket } => check_norm(ket, "flat ket")?,
            Representation::Separable { components } => {
                if components.is_empty() {
                    return Err(Error::InvalidModel(format!(
                        "separable representation for class '{label}' has no components"
                    )));
                }
                for c in components {
                    check_norm(c, "separable component")?;
                }
            }
            Representation::NonSeparable { product, feature_dims } => {
                check_norm(product, "product state")?;
                let expected: u128 =
                    feature_dims.iter().fold(1u128, |acc, &d| acc.saturating_mul(d as u128));
                if feature_dims.is_empty() || expected != product.dim() as u128 {
                    return Err(Error::InvalidModel(format!(
                        "product dim {} does not match feature dims {:?}",
                        product.dim(),
                        feature_dims
                    )));
                }
            }
        }
        Ok(Self { label, repr })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn mode(&self) -> Mode {
        match self.repr {
            Representation::Flat1D { .. } => Mode::Flat1D,
            Representation::Separable { .. } => Mode::Separable,
            Representation::NonSeparable { .. } => Mode::NonSeparable,
        }
    }

    pub fn repr(&self) -> &Representation {
        &self.repr
    }

    /// Feature count this representation expects.
    pub fn p(&self) -> usize {
        match &self.repr {
            Representation::Flat1D { .. } => 1,
            Representation::Separable { components } => components.len(),
            Representation::NonSeparable { feature_dims, .. } => feature_dims.len(),
        }
    }

    /// Rank of the product state reshaped across the bipartite cut after
    /// feature `cut - 1`: rank 1 means the state factorizes into a plain
    /// product, higher rank means genuine cross-feature structure. Only
    /// the two-feature case with `cut = 1` is supported.
    pub fn schmidt_rank(&self, cut: usize) -> Result<usize> {
        let Representation::NonSeparable { product, feature_dims } = &self.repr else {
            return Err(Error::ModeMismatch(format!(
                "schmidt rank needs a nonseparable representation, found {}",
                self.mode()
            )));
        };
        if feature_dims.len() != 2 {
            return Err(Error::InvalidCut(format!(
                "schmidt rank supports exactly 2 features, found {}",
                feature_dims.len()
            )));
        }
        if cut != 1 {
            return Err(Error::InvalidCut(format!("cut must be 1, found {cut}")));
        }
        schmidt_rank_of(product.amplitudes(), feature_dims[0])
    }
}

/// Superposition of the quantized kets of a single-feature class.
pub fn represent_flat_1d(
    bank: &QuantizerBank,
    label: &str,
    class_values: &[f64],
) -> Result<ClassRepresentation> {
    if bank.p() != 1 {
        return Err(Error::DimMismatch { expected: 1, got: bank.p() });
    }
    if class_values.is_empty() {
        return Err(Error::EmptyInput("class needs at least one element"));
    }
    let q = bank.quantizers()[0];
    let kets = class_values.iter().map(|&v| q.ket_of(v)).collect::<Result<Vec<_>>>()?;
    let ket = superpose(&kets)?;
    Ok(ClassRepresentation { label: label.to_string(), repr: Representation::Flat1D { ket } })
}

/// Per-feature superpositions of the class elements' kets, unit-norm
/// components.
pub fn represent_separable<V: AsRef<[f64]>>(
    bank: &QuantizerBank,
    label: &str,
    class_vectors: &[V],
) -> Result<ClassRepresentation> {
    represent_separable_with(bank, label, class_vectors, ComponentScaling::UnitNorm)
}

/// [`represent_separable`] with an explicit component scaling rule.
pub fn represent_separable_with<V: AsRef<[f64]>>(
    bank: &QuantizerBank,
    label: &str,
    class_vectors: &[V],
    scaling: ComponentScaling,
) -> Result<ClassRepresentation> {
    let element_kets = element_kets(bank, class_vectors)?;
    let k = element_kets.len();
    let mut components = Vec::with_capacity(bank.p());
    for j in 0..bank.p() {
        let feature_kets: Vec<StateVector> =
            element_kets.iter().map(|kets| kets[j].clone()).collect();
        let component = match scaling {
            ComponentScaling::UnitNorm => superpose(&feature_kets)?,
            ComponentScaling::InverseSqrtCount => {
                let mut sum = vec![0.0; feature_kets[0].dim()];
                for ket in &feature_kets {
                    for (acc, a) in sum.iter_mut().zip(ket.amplitudes()) {
                        *acc += a;
                    }
                }
                let scale = (k as f64).sqrt();
                for a in &mut sum {
                    *a /= scale;
                }
                StateVector::from_amplitudes(sum)?
            }
        };
        components.push(component);
    }
    Ok(ClassRepresentation {
        label: label.to_string(),
        repr: Representation::Separable { components },
    })
}

/// Normalized sum of the class elements' Kronecker chains, one ket in
/// the full product space.
pub fn represent_nonseparable<V: AsRef<[f64]>>(
    bank: &QuantizerBank,
    label: &str,
    class_vectors: &[V],
) -> Result<ClassRepresentation> {
    let element_kets = element_kets(bank, class_vectors)?;
    let chains = element_kets.iter().map(|kets| kron_chain(kets)).collect::<Result<Vec<_>>>()?;
    let product = superpose(&chains)?;
    Ok(ClassRepresentation {
        label: label.to_string(),
        repr: Representation::NonSeparable { product, feature_dims: bank.dims() },
    })
}

fn element_kets<V: AsRef<[f64]>>(
    bank: &QuantizerBank,
    class_vectors: &[V],
) -> Result<Vec<Vec<StateVector>>> {
    if class_vectors.is_empty() {
        return Err(Error::EmptyInput("class needs at least one element"));
    }
    class_vectors
        .iter()
        .enumerate()
        .map(|(row, v)| {
            let v = v.as_ref();
            if v.len() != bank.p() {
                return Err(Error::RaggedRow { row, expected: bank.p(), got: v.len() });
            }
            bank.kets_of(v)
        })
        .collect()
}

/// `|⟨x|μ⟩|` for a flat single-feature representative; in `[0, 1]`.
pub fn score_flat(rep: &ClassRepresentation, x_ket: &StateVector) -> Result<f64> {
    let Representation::Flat1D { ket } = &rep.repr else {
        return Err(Error::ModeMismatch(format!(
            "flat score needs a flat1d representation, found {}",
            rep.mode()
        )));
    };
    Ok(inner(x_ket, ket)?.abs())
}

/// Root-sum-square of per-feature overlaps; in `[0, √p]`.
pub fn score_separable(rep: &ClassRepresentation, x_kets: &[StateVector]) -> Result<f64> {
    let Representation::Separable { components } = &rep.repr else {
        return Err(Error::ModeMismatch(format!(
            "separable score needs a separable representation, found {}",
            rep.mode()
        )));
    };
    if x_kets.len() != components.len() {
        return Err(Error::DimMismatch { expected: components.len(), got: x_kets.len() });
    }
    let mut sum = 0.0;
    for (x, c) in x_kets.iter().zip(components) {
        let overlap = inner(x, c)?;
        sum += overlap * overlap;
    }
    Ok(sum.sqrt())
}

/// `|⟨x₁⊗…⊗x_p|μ⟩|` against the product-space representative; in `[0, 1]`.
pub fn score_nonseparable(rep: &ClassRepresentation, x_kets: &[StateVector]) -> Result<f64> {
    let Representation::NonSeparable { product, feature_dims } = &rep.repr else {
        return Err(Error::ModeMismatch(format!(
            "nonseparable score needs a nonseparable representation, found {}",
            rep.mode()
        )));
    };
    if x_kets.len() != feature_dims.len() {
        return Err(Error::DimMismatch { expected: feature_dims.len(), got: x_kets.len() });
    }
    for (x, &d) in x_kets.iter().zip(feature_dims) {
        if x.dim() != d {
            return Err(Error::DimMismatch { expected: d, got: x.dim() });
        }
    }
    let chain = kron_chain(x_kets)?;
    Ok(inner(&chain, product)?.abs())
}

/// Rank of `amplitudes` reshaped as a `left_dim × (len / left_dim)`
/// matrix, counting singular values above [`SCHMIDT_SV_TOL`].
pub fn schmidt_rank_of(amplitudes: &[f64], left_dim: usize) -> Result<usize> {
    if left_dim == 0 || amplitudes.is_empty() || !amplitudes.len().is_multiple_of(left_dim) {
        return Err(Error::InvalidCut(format!(
            "cannot reshape {} amplitudes into {} rows",
            amplitudes.len(),
            left_dim
        )));
    }
    let right_dim = amplitudes.len() / left_dim;
    let m = DMatrix::from_row_iterator(left_dim, right_dim, amplitudes.iter().copied());
    let singulars = m.singular_values();
    Ok(singulars.iter().filter(|&&s| s > SCHMIDT_SV_TOL).count())
}
