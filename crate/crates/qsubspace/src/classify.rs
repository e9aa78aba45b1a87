//! Fit, score, decide: the decision layer over class representatives.
//!
//! [`ClassifierModel::fit`] pools a labeled dataset into a quantizer
//! bank, builds one representative per class in the requested mode, and
//! [`ClassifierModel::predict`] assigns the class with the largest
//! overlap score. Equal scores are legal (disjoint supports score 0
//! everywhere) so predictions carry an explicit tie flag and the model a
//! deterministic tie policy.
//!
//! [`ClassifierModel::predict_knn`] is the instance-based variant: it
//! keeps every learning element's quantized indices and votes over the k
//! nearest under the overlap-derived distance `1 − |⟨a|b⟩|`.

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::quantize::QuantizerBank;
use crate::represent::{
    represent_flat_1d, represent_nonseparable, represent_separable, score_flat, score_nonseparable,
    score_separable, ClassRepresentation, Mode, Representation,
};
use crate::statevec::{basis_ket, StateVector};

/// Scores within this distance of the maximum count as tied.
pub const TIE_TOL: f64 = 1e-12;

/// How a tied argmax picks the winning class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    /// First class (dataset first-appearance order) among the tied.
    #[default]
    LowestIndex,
    /// Seed-keyed pick among the tied; still a pure function of the
    /// pattern's quantized indices, so equal-cell inputs agree.
    Random { seed: u64 },
}

/// Knobs for [`ClassifierModel::fit`].
#[derive(Debug, Clone, Copy, Default)]
pub struct FitOptions {
    pub tie_policy: TiePolicy,
    /// Keep every learning element's quantized indices in the model so
    /// [`ClassifierModel::predict_knn`] can vote over them.
    pub store_elements: bool,
}

/// The outcome of classifying one pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub label: String,
    /// One score per class, in the model's class order.
    pub scores: Vec<f64>,
    /// Whether at least two classes attained the top score within
    /// [`TIE_TOL`].
    pub tie: bool,
}

/// A fitted classifier: quantizer bank plus one representative per class.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierModel {
    mode: Mode,
    bank: QuantizerBank,
    reps: Vec<ClassRepresentation>,
    tie_policy: TiePolicy,
    stored_elements: Option<Vec<Vec<Vec<usize>>>>,
}

impl ClassifierModel {
    /// Fits on a labeled dataset: quantizers from pooled columns, one
    /// representation per class in `mode`. Classes keep their dataset
    /// first-appearance order. Needs at least two classes; `Flat1D`
    /// additionally needs exactly one feature.
    pub fn fit(data: &Dataset, mode: Mode, options: FitOptions) -> Result<Self> {
        let bank = QuantizerBank::fit(data)?;
        let groups = data.by_class();
        if groups.len() < 2 {
            return Err(Error::NotEnoughClasses(groups.len()));
        }
        if mode == Mode::Flat1D && data.p() != 1 {
            return Err(Error::DimMismatch { expected: 1, got: data.p() });
        }
        let mut reps = Vec::with_capacity(groups.len());
        for (label, vectors) in &groups {
            let rep = match mode {
                Mode::Flat1D => {
                    let values: Vec<f64> = vectors.iter().map(|v| v[0]).collect();
                    represent_flat_1d(&bank, label, &values)?
                }
                Mode::Separable => represent_separable(&bank, label, vectors)?,
                Mode::NonSeparable => represent_nonseparable(&bank, label, vectors)?,
            };
            reps.push(rep);
        }
        let stored_elements = if options.store_elements {
            let stored = groups
                .iter()
                .map(|(_, vectors)| {
                    vectors.iter().map(|v| bank.indices_of(v)).collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Some(stored)
        } else {
            None
        };
        Ok(Self { mode, bank, reps, tie_policy: options.tie_policy, stored_elements })
    }

    /// Rebuilds a model from stored parts, checking mode agreement,
    /// label uniqueness, and dimension consistency against the bank.
    pub fn from_parts(
        mode: Mode,
        bank: QuantizerBank,
        reps: Vec<ClassRepresentation>,
        tie_policy: TiePolicy,
        stored_elements: Option<Vec<Vec<Vec<usize>>>>,
    ) -> Result<Self> {
        if reps.len() < 2 {
            return Err(Error::NotEnoughClasses(reps.len()));
        }
        for (i, rep) in reps.iter().enumerate() {
            if rep.mode() != mode {
                return Err(Error::ModeMismatch(format!(
                    "model mode is {mode} but class '{}' is {}",
                    rep.label(),
                    rep.mode()
                )));
            }
            if reps[..i].iter().any(|other| other.label() == rep.label()) {
                return Err(Error::InvalidModel(format!(
                    "duplicate class label '{}'",
                    rep.label()
                )));
            }
            check_rep_dims(rep, &bank)?;
        }
        if let Some(stored) = &stored_elements {
            if stored.len() != reps.len() {
                return Err(Error::InvalidModel(format!(
                    "stored elements cover {} classes, model has {}",
                    stored.len(),
                    reps.len()
                )));
            }
            let dims = bank.dims();
            for class in stored {
                for element in class {
                    if element.len() != dims.len() {
                        return Err(Error::InvalidModel(format!(
                            "stored element has {} indices, expected {}",
                            element.len(),
                            dims.len()
                        )));
                    }
                    for (&idx, &dim) in element.iter().zip(&dims) {
                        if idx >= dim {
                            return Err(Error::InvalidModel(format!(
                                "stored element index {idx} out of range for dim {dim}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self { mode, bank, reps, tie_policy, stored_elements })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn bank(&self) -> &QuantizerBank {
        &self.bank
    }

    pub fn representations(&self) -> &[ClassRepresentation] {
        &self.reps
    }

    pub fn tie_policy(&self) -> TiePolicy {
        self.tie_policy
    }

    pub fn stored_elements(&self) -> Option<&Vec<Vec<Vec<usize>>>> {
        self.stored_elements.as_ref()
    }

    pub fn class_labels(&self) -> Vec<&str> {
        self.reps.iter().map(|r| r.label()).collect()
    }

    /// Feature count the model expects.
    pub fn p(&self) -> usize {
        self.bank.p()
    }

    /// Scores `x` against every class and picks the argmax, breaking
    /// ties per the model's policy.
    pub fn predict(&self, x: &[f64]) -> Result<Prediction> {
        let indices = self.bank.indices_of(x)?;
        let kets = indices
            .iter()
            .zip(self.bank.dims())
            .map(|(&idx, dim)| basis_ket(idx, dim))
            .collect::<Result<Vec<StateVector>>>()?;
        let scores = self
            .reps
            .iter()
            .map(|rep| match self.mode {
                Mode::Flat1D => score_flat(rep, &kets[0]),
                Mode::Separable => score_separable(rep, &kets),
                Mode::NonSeparable => score_nonseparable(rep, &kets),
            })
            .collect::<Result<Vec<f64>>>()?;
        let max = scores.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let tied: Vec<usize> = (0..scores.len()).filter(|&i| scores[i] >= max - TIE_TOL).collect();
        let winner = match (self.tie_policy, tied.len()) {
            (_, 1) => tied[0],
            (TiePolicy::LowestIndex, _) => tied[0],
            (TiePolicy::Random { seed }, n) => {
                let mut h = seed;
                for &idx in &indices {
                    h = crate::splitmix64(h ^ idx as u64);
                }
                tied[(h % n as u64) as usize]
            }
        };
        Ok(Prediction { label: self.reps[winner].label().to_string(), tie: tied.len() > 1, scores })
    }

    /// Majority vote over the `k` stored learning elements nearest to
    /// `x` under the distance `1 − |⟨element|x⟩|` on single-element
    /// representations. Distance ties are ordered by (class, element)
    /// position; vote ties fall to the earliest class. The returned
    /// scores are the per-class vote counts.
    pub fn predict_knn(&self, x: &[f64], k: usize) -> Result<Prediction> {
        let stored = self.stored_elements.as_ref().ok_or(Error::NoStoredElements)?;
        let total: usize = stored.iter().map(|class| class.len()).sum();
        if k == 0 || k > total {
            return Err(Error::KOutOfRange { k, total });
        }
        let indices = self.bank.indices_of(x)?;
        let mut candidates: Vec<(f64, usize, usize)> = Vec::with_capacity(total);
        for (class_idx, class) in stored.iter().enumerate() {
            for (elem_idx, element) in class.iter().enumerate() {
                let d = self.element_distance(element, &indices);
                candidates.push((d, class_idx, elem_idx));
            }
        }
        candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        let mut votes = vec![0usize; self.reps.len()];
        for &(_, class_idx, _) in &candidates[..k] {
            votes[class_idx] += 1;
        }
        let top = *votes.iter().max().expect("at least two classes");
        let winner = votes.iter().position(|&v| v == top).expect("max exists");
        let tie = votes.iter().filter(|&&v| v == top).count() > 1;
        Ok(Prediction {
            label: self.reps[winner].label().to_string(),
            scores: votes.iter().map(|&v| v as f64).collect(),
            tie,
        })
    }

    /// `1 − |⟨element|x⟩|` between quantized index tuples. Basis kets
    /// overlap 0 or 1 per feature, so the flat and product-space shapes
    /// give an all-or-nothing distance while the separable tuple grades
    /// by the fraction of matching features.
    fn element_distance(&self, element: &[usize], x_indices: &[usize]) -> f64 {
        let matches = element.iter().zip(x_indices).filter(|(a, b)| a == b).count();
        match self.mode {
            Mode::Separable => 1.0 - matches as f64 / element.len() as f64,
            Mode::Flat1D | Mode::NonSeparable => {
                if matches == element.len() {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }
}

fn check_rep_dims(rep: &ClassRepresentation, bank: &QuantizerBank) -> Result<()> {
    let dims = bank.dims();
    match rep.repr() {
        Representation::Flat1D { ket } => {
            if dims.len() != 1 {
                return Err(Error::DimMismatch { expected: 1, got: dims.len() });
            }
            if ket.dim() != dims[0] {
                return Err(Error::DimMismatch { expected: dims[0], got: ket.dim() });
            }
        }
        Representation::Separable { components } => {
            if components.len() != dims.len() {
                return Err(Error::DimMismatch { expected: dims.len(), got: components.len() });
            }
            for (c, &d) in components.iter().zip(&dims) {
                if c.dim() != d {
                    return Err(Error::DimMismatch { expected: d, got: c.dim() });
                }
            }
        }
        Representation::NonSeparable { feature_dims, .. } => {
            if *feature_dims != dims {
                return Err(Error::InvalidModel(format!(
                    "representation feature dims {feature_dims:?} do not match bank dims {dims:?}"
                )));
            }
        }
    }
    Ok(())
}
