//! Pattern classification on quantized basis-state encodings.
//!
//! The pipeline is short: real-valued features are binned to basis indices
//! by per-feature [`Quantizer`]s, every learning element becomes a basis
//! ket, and each class is summarized as a normalized superposition of its
//! elements' kets. An unknown pattern is then assigned to the class whose
//! representative has the largest overlap with the pattern's own ket.
//!
//! Multi-feature patterns can be represented two ways, and comparing them
//! is the point of the [`experiment`] harness:
//!
//! * **separable**: one superposed ket per feature, living in a space of
//!   dimension `Σ dⱼ`; cross-feature correlation is invisible.
//! * **non-separable**: a superposition of Kronecker products over all
//!   features, living in dimension `Π dⱼ`; correlated features produce a
//!   state that does not factor (see [`represent::schmidt_rank_of`]).
//!
//! Single-feature data uses the flat 1-D representation, which all modes
//! reduce to when `p = 1`.
//!
//! The `examples/` directory holds one runnable walkthrough per
//! capability; start with `flat_1d_classifier` and
//! `separable_vs_entangled`. A thin `qsubspace` binary wraps fitting,
//! batch classification, and the Monte-Carlo benchmark for shell use.

pub mod classify;
pub mod dataset;
pub mod error;
pub mod experiment;
pub mod persist;
pub mod quantize;
pub mod represent;
pub mod statevec;

pub use classify::{ClassifierModel, FitOptions, Prediction, TiePolicy};
pub use dataset::{DataRow, Dataset};
pub use error::{Error, Result};
pub use experiment::{ExperimentConfig, ExperimentReport};
pub use quantize::{Quantizer, QuantizerBank};
pub use represent::{ClassRepresentation, Mode};
pub use statevec::StateVector;

/// Default cap on any state-space dimension, product spaces included.
pub const DEFAULT_MAX_PRODUCT_DIM: usize = 1 << 24;

/// Cap on state-space dimensions. `QSUBSPACE_MAX_PRODUCT_DIM` overrides the
/// default; an unset or unparsable value falls back to
/// [`DEFAULT_MAX_PRODUCT_DIM`]. Read once per process.
pub fn max_product_dim() -> usize {
    use std::sync::OnceLock;
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("QSUBSPACE_MAX_PRODUCT_DIM")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&v| v >= 2)
            .unwrap_or(DEFAULT_MAX_PRODUCT_DIM)
    })
}

// Standard splitmix64 finalizer; used wherever a value must be mixed into a
// reproducible stream seed.
pub(crate) fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}
