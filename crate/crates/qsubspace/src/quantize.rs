//! Nearest-integer quantization of real features onto basis kets.
//!
//! A [`Quantizer`] fitted on pooled learning values covers the integers
//! `q_min..=q_max` with interior basis indices and reserves index 0 for
//! inputs rounding below the range and index `dim - 1` for inputs
//! rounding above it, so every real number lands somewhere. `q_max` sits
//! one above the rounded maximum, leaving headroom so the top observed
//! value keeps a distinct interior index; [`Quantizer::fit_tight`] drops
//! that headroom for comparison runs.
//!
//! A [`QuantizerBank`] holds one quantizer per feature, always fitted on
//! values pooled across every class.

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::statevec::{basis_ket, StateVector};

/// Nearest integer, halves rounding to even.
pub fn nint(c: f64) -> Result<i64> {
    if !c.is_finite() {
        return Err(Error::NonFinite(c));
    }
    let r = c.round_ties_even();
    if r.abs() > (1i64 << 62) as f64 {
        return Err(Error::OutOfRange(c));
    }
    Ok(r as i64)
}

/// Maps reals to basis indices `0..dim` with sentinel indices at both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quantizer {
    q_min: i64,
    q_max: i64,
    dim: usize,
}

impl Quantizer {
    /// Builds directly from the integer range; `dim` is derived as
    /// `(q_max - q_min) + 2`.
    pub fn new(q_min: i64, q_max: i64) -> Result<Self> {
        if q_max < q_min {
            return Err(Error::InvalidQuantizerRange { q_min, q_max });
        }
        let span = (q_max as i128 - q_min as i128) as u128;
        let dim = span + 2;
        let cap = crate::max_product_dim();
        if dim > cap as u128 {
            return Err(Error::QuantizerTooLarge { dim, cap });
        }
        Ok(Self { q_min, q_max, dim: dim as usize })
    }

    /// Fits on pooled values: `q_min = nint(min)`, `q_max = nint(max) + 1`.
    pub fn fit(values: &[f64]) -> Result<Self> {
        let (min, max) = min_max(values)?;
        let q_min = nint(min)?;
        let q_max = nint(max)?.checked_add(1).ok_or(Error::OutOfRange(max))?;
        Self::new(q_min, q_max)
    }

    /// Fit variant without the +1 headroom: `q_max = nint(max)`, so the
    /// top observed integer shares index `dim - 1` with the above-range
    /// sentinel. Kept for comparison; [`Quantizer::fit`] is the default.
    pub fn fit_tight(values: &[f64]) -> Result<Self> {
        let (min, max) = min_max(values)?;
        Self::new(nint(min)?, nint(max)?)
    }

    pub fn q_min(&self) -> i64 {
        self.q_min
    }

    pub fn q_max(&self) -> i64 {
        self.q_max
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis index for `x`: `nint(x) - q_min + 1`, clamped to the low
    /// sentinel 0 when `x` rounds below `q_min` and to `dim - 1` when it
    /// rounds above `q_max`. Rounding decides the range test, so every
    /// value that fitted the quantizer stays off the sentinels: the
    /// minimum rounds to `q_min` (index 1) and the headroom above
    /// `q_max` keeps the maximum at `dim - 2`.
    pub fn index_of(&self, x: f64) -> Result<usize> {
        let r = nint(x)?;
        if r < self.q_min {
            return Ok(0);
        }
        if r > self.q_max {
            return Ok(self.dim - 1);
        }
        Ok((r - self.q_min + 1) as usize)
    }

    /// `|index_of(x)⟩` in this quantizer's `dim`-dimensional space.
    pub fn ket_of(&self, x: f64) -> Result<StateVector> {
        basis_ket(self.index_of(x)?, self.dim)
    }
}

fn min_max(values: &[f64]) -> Result<(f64, f64)> {
    let first =
        *values.first().ok_or(Error::EmptyInput("quantizer fit needs at least one value"))?;
    if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite(bad));
    }
    let mut min = first;
    let mut max = first;
    for &v in &values[1..] {
        min = min.min(v);
        max = max.max(v);
    }
    Ok((min, max))
}

/// One [`Quantizer`] per feature, in feature order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantizerBank {
    quantizers: Vec<Quantizer>,
}

impl QuantizerBank {
    /// Fits quantizer `j` on column `j` pooled across all classes.
    pub fn fit(data: &Dataset) -> Result<Self> {
        let quantizers =
            (0..data.p()).map(|j| Quantizer::fit(&data.column(j)?)).collect::<Result<Vec<_>>>()?;
        Ok(Self { quantizers })
    }

    pub fn from_quantizers(quantizers: Vec<Quantizer>) -> Result<Self> {
        if quantizers.is_empty() {
            return Err(Error::EmptyInput("quantizer bank needs at least one quantizer"));
        }
        Ok(Self { quantizers })
    }

    /// Feature count.
    pub fn p(&self) -> usize {
        self.quantizers.len()
    }

    pub fn quantizers(&self) -> &[Quantizer] {
        &self.quantizers
    }

    pub fn dims(&self) -> Vec<usize> {
        self.quantizers.iter().map(|q| q.dim()).collect()
    }

    /// Π_j dim_j, uncapped; the dimension a full product space would have.
    pub fn product_dim(&self) -> u128 {
        self.quantizers.iter().fold(1u128, |acc, q| acc.saturating_mul(q.dim() as u128))
    }

    /// Per-feature basis indices of one pattern.
    pub fn indices_of(&self, pattern: &[f64]) -> Result<Vec<usize>> {
        if pattern.len() != self.p() {
            return Err(Error::DimMismatch { expected: self.p(), got: pattern.len() });
        }
        self.quantizers.iter().zip(pattern).map(|(q, &x)| q.index_of(x)).collect()
    }

    /// Per-feature basis kets of one pattern.
    pub fn kets_of(&self, pattern: &[f64]) -> Result<Vec<StateVector>> {
        if pattern.len() != self.p() {
            return Err(Error::DimMismatch { expected: self.p(), got: pattern.len() });
        }
        self.quantizers.iter().zip(pattern).map(|(q, &x)| q.ket_of(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::DataRow;

    const CLASS_ONE: [f64; 4] = [-2.24697, -1.17115, -0.882941, -1.9828];
    const CLASS_TWO: [f64; 4] = [0.836746, 1.70144, 3.05605, -0.0344292];

    fn pooled_quantizer() -> Quantizer {
        let mut values = CLASS_ONE.to_vec();
        values.extend_from_slice(&CLASS_TWO);
        Quantizer::fit(&values).unwrap()
    }

    #[test]
    fn nint_rounds_to_nearest() {
        assert_eq!(nint(-2.24697).unwrap(), -2);
        assert_eq!(nint(3.05605).unwrap(), 3);
        assert_eq!(nint(1.2).unwrap(), 1);
        assert_eq!(nint(-1.7).unwrap(), -2);
    }

    #[test]
    fn nint_halves_round_to_even() {
        assert_eq!(nint(0.5).unwrap(), 0);
        assert_eq!(nint(1.5).unwrap(), 2);
        assert_eq!(nint(2.5).unwrap(), 2);
        assert_eq!(nint(-0.5).unwrap(), 0);
        assert_eq!(nint(-2.5).unwrap(), -2);
    }

    #[test]
    fn nint_rejects_non_finite() {
        assert!(nint(f64::NAN).is_err());
        assert!(nint(f64::INFINITY).is_err());
    }

    #[test]
    fn fit_pooled_two_class_sample() {
        let q = pooled_quantizer();
        assert_eq!((q.q_min(), q.q_max(), q.dim()), (-2, 4, 8));
    }

    #[test]
    fn fit_single_point() {
        let q = Quantizer::fit(&[0.0]).unwrap();
        assert_eq!((q.q_min(), q.q_max(), q.dim()), (0, 1, 3));
    }

    #[test]
    fn fit_values_rounding_to_same_integer() {
        let q = Quantizer::fit(&[-0.4, 0.4]).unwrap();
        assert_eq!((q.q_min(), q.q_max(), q.dim()), (0, 1, 3));
    }

    #[test]
    fn fit_rejects_bad_input() {
        assert!(matches!(Quantizer::fit(&[]), Err(Error::EmptyInput(_))));
        assert!(matches!(Quantizer::fit(&[1.0, f64::NAN]), Err(Error::NonFinite(_))));
    }

    #[test]
    fn fit_tight_drops_headroom() {
        let mut values = CLASS_ONE.to_vec();
        values.extend_from_slice(&CLASS_TWO);
        let q = Quantizer::fit_tight(&values).unwrap();
        assert_eq!((q.q_min(), q.q_max(), q.dim()), (-2, 3, 7));
        let constant = Quantizer::fit_tight(&[0.0]).unwrap();
        assert_eq!((constant.q_min(), constant.q_max(), constant.dim()), (0, 0, 2));
    }

    #[test]
    fn new_rejects_inverted_range() {
        assert!(matches!(
            Quantizer::new(3, 2),
            Err(Error::InvalidQuantizerRange { q_min: 3, q_max: 2 })
        ));
    }

    #[test]
    fn index_interior_values() {
        let q = pooled_quantizer();
        assert_eq!(q.index_of(-0.0344292).unwrap(), 3);
        assert_eq!(q.index_of(0.836746).unwrap(), 4);
        assert_eq!(q.index_of(1.70144).unwrap(), 5);
        assert_eq!(q.index_of(3.05605).unwrap(), 6);
        assert_eq!(q.index_of(-2.24697).unwrap(), 1);
        assert_eq!(q.index_of(-1.17115).unwrap(), 2);
    }

    #[test]
    fn index_sentinels() {
        let q = pooled_quantizer();
        assert_eq!(q.index_of(-4.0).unwrap(), 0);
        assert_eq!(q.index_of(100.0).unwrap(), 7);
    }

    #[test]
    fn index_top_of_range_is_interior() {
        // 4 is not above q_max = 4, so it takes the top interior slot
        // rather than the sentinel.
        let q = pooled_quantizer();
        assert_eq!(q.index_of(4.0).unwrap(), 7);
        assert_eq!(q.index_of(4.0000001).unwrap(), 7);
    }

    #[test]
    fn index_boundary_follows_rounding() {
        // Everything rounding to q_min stays interior; the sentinel
        // starts where rounding first falls below it.
        let q = pooled_quantizer();
        assert_eq!(q.index_of(-2.3).unwrap(), 1);
        assert_eq!(q.index_of(-2.5).unwrap(), 1);
        assert_eq!(q.index_of(-2.51).unwrap(), 0);
        assert_eq!(q.index_of(-2.0).unwrap(), 1);
        assert_eq!(q.index_of(4.4).unwrap(), 7);
        assert_eq!(q.index_of(4.51).unwrap(), 7);
    }

    #[test]
    fn index_monotone_nondecreasing() {
        let q = pooled_quantizer();
        let mut last = 0;
        let mut x = -6.0;
        while x <= 6.0 {
            let idx = q.index_of(x).unwrap();
            assert!(idx >= last, "index dropped at x={x}");
            last = idx;
            x += 0.01;
        }
    }

    #[test]
    fn fitted_values_map_interior() {
        let q = pooled_quantizer();
        for &v in CLASS_ONE.iter().chain(&CLASS_TWO) {
            let idx = q.index_of(v).unwrap();
            assert!(idx >= 1 && idx <= q.dim() - 2, "fitted value {v} hit a sentinel");
        }
    }

    #[test]
    fn ket_of_matches_index() {
        let q = pooled_quantizer();
        let ket = q.ket_of(0.836746).unwrap();
        assert_eq!(ket, basis_ket(4, 8).unwrap());
        let small = Quantizer::fit(&[0.0]).unwrap();
        assert_eq!(small.ket_of(0.2).unwrap(), basis_ket(1, 3).unwrap());
    }

    #[test]
    fn refit_is_deterministic() {
        let a = pooled_quantizer();
        let b = pooled_quantizer();
        assert_eq!(a, b);
    }

    fn dataset_1d(values: &[f64]) -> Dataset {
        let rows =
            values.iter().map(|&v| DataRow { features: vec![v], label: "c".into() }).collect();
        Dataset::new(rows).unwrap()
    }

    #[test]
    fn bank_fit_single_feature() {
        let mut values = CLASS_ONE.to_vec();
        values.extend_from_slice(&CLASS_TWO);
        let bank = QuantizerBank::fit(&dataset_1d(&values)).unwrap();
        assert_eq!(bank.p(), 1);
        let q = bank.quantizers()[0];
        assert_eq!((q.q_min(), q.q_max(), q.dim()), (-2, 4, 8));
    }

    #[test]
    fn bank_fit_pools_across_classes() {
        let rows = vec![
            DataRow { features: vec![0.1, 5.0], label: "a".into() },
            DataRow { features: vec![0.9, 7.0], label: "b".into() },
        ];
        let bank = QuantizerBank::fit(&Dataset::new(rows).unwrap()).unwrap();
        let q0 = bank.quantizers()[0];
        let q1 = bank.quantizers()[1];
        assert_eq!((q0.q_min(), q0.q_max()), (0, 2));
        assert_eq!((q1.q_min(), q1.q_max()), (5, 8));
        assert_eq!(bank.dims(), vec![4, 5]);
        assert_eq!(bank.product_dim(), 20);
    }

    #[test]
    fn bank_constant_feature_dim_three() {
        let rows = vec![
            DataRow { features: vec![1.0, 2.0], label: "a".into() },
            DataRow { features: vec![1.0, 3.0], label: "b".into() },
        ];
        let bank = QuantizerBank::fit(&Dataset::new(rows).unwrap()).unwrap();
        assert_eq!(bank.quantizers()[0].dim(), 3);
    }

    #[test]
    fn bank_checks_pattern_width() {
        let bank = QuantizerBank::fit(&dataset_1d(&[0.0, 1.0])).unwrap();
        assert!(matches!(
            bank.indices_of(&[0.0, 1.0]),
            Err(Error::DimMismatch { expected: 1, got: 2 })
        ));
        assert_eq!(bank.indices_of(&[0.6]).unwrap(), vec![2]);
        let kets = bank.kets_of(&[0.6]).unwrap();
        assert_eq!(kets[0], basis_ket(2, 4).unwrap());
    }
}
