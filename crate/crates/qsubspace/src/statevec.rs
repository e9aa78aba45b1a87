//! Dense real-amplitude state vectors over finite bases.
//!
//! Four primitives carry the whole crate: basis kets, scalar products,
//! Kronecker products, and normalized superpositions. Amplitudes are real;
//! every construction here superposes basis kets with nonnegative weights,
//! so complex phases never arise and a plain `f64` vector suffices.
//!
//! Kronecker layout: the left factor is the most significant digit of the
//! product index, so `kron(a, b)` puts `aᵢ·bⱼ` at position `i·dim(b) + j`.

use crate::error::{Error, Result};

/// Absolute tolerance on `|Σ aᵢ² − 1|` for a vector to count as normalized.
pub const NORM_TOL: f64 = 1e-12;

/// A dense real-amplitude vector over a finite basis.
///
/// Values are immutable after construction; all operations on them are
/// pure functions, so sharing across threads needs no synchronization.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<f64>,
}

impl StateVector {
    /// Wraps raw amplitudes. Entries must be finite and nonempty.
    pub fn from_amplitudes(amplitudes: Vec<f64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::EmptyInput("state vector needs at least one amplitude"));
        }
        if let Some(&bad) = amplitudes.iter().find(|a| !a.is_finite()) {
            return Err(Error::NonFinite(bad));
        }
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    /// Σ aᵢ².
    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// `|Σ aᵢ² − 1| ≤ NORM_TOL`.
    pub fn is_normalized(&self) -> bool {
        (self.norm_sq() - 1.0).abs() <= NORM_TOL
    }
}

/// Basis ket `|index⟩` in a `dim`-dimensional space: amplitude 1 at
/// `index`, 0 elsewhere.
pub fn basis_ket(index: usize, dim: usize) -> Result<StateVector> {
    if dim == 0 {
        return Err(Error::EmptyInput("basis dimension must be at least 1"));
    }
    if index >= dim {
        return Err(Error::BasisIndexOutOfRange { index, dim });
    }
    let mut amplitudes = vec![0.0; dim];
    amplitudes[index] = 1.0;
    Ok(StateVector { amplitudes })
}

/// Scalar product `Σ aᵢbᵢ` of two vectors of equal dimension.
pub fn inner(a: &StateVector, b: &StateVector) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch { expected: a.dim(), got: b.dim() });
    }
    Ok(a.amplitudes.iter().zip(&b.amplitudes).map(|(x, y)| x * y).sum())
}

/// Kronecker product. The result has dimension `dim(a)·dim(b)` with
/// `aᵢ·bⱼ` at position `i·dim(b) + j`.
pub fn kron(a: &StateVector, b: &StateVector) -> Result<StateVector> {
    kron_capped(a, b, crate::max_product_dim())
}

pub(crate) fn kron_capped(a: &StateVector, b: &StateVector, cap: usize) -> Result<StateVector> {
    let dim = a
        .dim()
        .checked_mul(b.dim())
        .filter(|&d| d <= cap)
        .ok_or(Error::ProductTooLarge { dim: a.dim().saturating_mul(b.dim()), cap })?;
    let mut amplitudes = Vec::with_capacity(dim);
    for &x in &a.amplitudes {
        for &y in &b.amplitudes {
            amplitudes.push(x * y);
        }
    }
    Ok(StateVector { amplitudes })
}

/// Left fold of [`kron`] over one ket per feature, so feature 0 ends up
/// most significant in the product index.
pub fn kron_chain(kets: &[StateVector]) -> Result<StateVector> {
    let (first, rest) =
        kets.split_first().ok_or(Error::EmptyInput("kron chain needs at least one vector"))?;
    let mut acc = first.clone();
    for k in rest {
        acc = kron(&acc, k)?;
    }
    Ok(acc)
}

/// Componentwise sum of the inputs, scaled to unit norm. Repeated kets
/// accumulate multiplicity as amplitude before normalization.
pub fn superpose(vectors: &[StateVector]) -> Result<StateVector> {
    let first = vectors.first().ok_or(Error::EmptyInput("superpose needs at least one vector"))?;
    let dim = first.dim();
    let mut sum = vec![0.0; dim];
    for v in vectors {
        if v.dim() != dim {
            return Err(Error::DimMismatch { expected: dim, got: v.dim() });
        }
        for (acc, a) in sum.iter_mut().zip(&v.amplitudes) {
            *acc += a;
        }
    }
    let norm = sum.iter().map(|a| a * a).sum::<f64>().sqrt();
    if norm < f64::MIN_POSITIVE {
        return Err(Error::ZeroSuperposition);
    }
    for a in &mut sum {
        *a /= norm;
    }
    Ok(StateVector { amplitudes: sum })
}
