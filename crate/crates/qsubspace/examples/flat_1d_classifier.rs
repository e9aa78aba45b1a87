//! End-to-end single-feature classification.
//!
//! Two classes of scalar samples (drawn around -2 and +2) are each
//! summarized as a normalized superposition of their quantized kets.
//! A new value is assigned to the class whose representative overlaps
//! its own ket most strongly; when both overlaps vanish the result is
//! flagged as a tie and falls to the first class.
//!
//! Run with `cargo run --example flat_1d_classifier`.

use qsubspace::represent::Representation;
use qsubspace::{ClassifierModel, DataRow, Dataset, FitOptions, Mode, Result};

fn main() -> Result<()> {
    let class_1 = [-2.24697, -1.17115, -0.882941, -1.9828];
    let class_2 = [0.836746, 1.70144, 3.05605, -0.0344292];

    let mut rows = Vec::new();
    for &v in &class_1 {
        rows.push(DataRow { features: vec![v], label: "1".into() });
    }
    for &v in &class_2 {
        rows.push(DataRow { features: vec![v], label: "2".into() });
    }
    let data = Dataset::new(rows)?;

    let model = ClassifierModel::fit(&data, Mode::Flat1D, FitOptions::default())?;
    let q = model.bank().quantizers()[0];
    println!("pooled quantizer: range [{}, {}], dim {}", q.q_min(), q.q_max(), q.dim());

    for rep in model.representations() {
        if let Representation::Flat1D { ket } = rep.repr() {
            let amps: Vec<String> = ket.amplitudes().iter().map(|a| format!("{a:.4}")).collect();
            println!("class {} representative: [{}]", rep.label(), amps.join(", "));
        }
    }

    println!("\n{:>4}  {:>6}  {:>8}  {:>8}  tie", "x", "class", "score 1", "score 2");
    for x in -4..=4 {
        let p = model.predict(&[x as f64])?;
        println!("{x:>4}  {:>6}  {:>8.4}  {:>8.4}  {}", p.label, p.scores[0], p.scores[1], p.tie);
    }

    // -4 and -3 round below every learning value and 4 reaches the slot
    // shared with the high sentinel, so no class claims them: both
    // scores are zero and the tie flag marks the call as arbitrary.
    let p = model.predict(&[4.0])?;
    assert!(p.tie && p.label == "1");

    Ok(())
}
