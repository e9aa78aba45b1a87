//! Voting over stored learning elements instead of class superpositions.
//!
//! With `store_elements` enabled the fitted model keeps every learning
//! element's quantized indices, and `predict_knn` classifies by letting
//! the k nearest stored elements vote. Distance is overlap-based: 0 for
//! an exact cell match, 1 for none, and for multi-feature separable
//! models the fraction of disagreeing features.
//!
//! Run with `cargo run --example nearest_neighbors`.

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

    let options = FitOptions { store_elements: true, ..FitOptions::default() };
    let model = ClassifierModel::fit(&data, Mode::Flat1D, options)?;
    println!(
        "stored elements per class: {:?}",
        model.stored_elements().map(|s| s.iter().map(Vec::len).collect::<Vec<_>>())
    );

    // x = 0 quantizes into the cell holding -0.0344292, a class-2
    // element, so the single nearest neighbor settles it.
    println!("\n{:>4}  {:>3}  {:>6}  votes", "x", "k", "class");
    for (x, k) in [(0.0, 1), (0.0, 3), (-2.0, 1), (-2.0, 3)] {
        let p = model.predict_knn(&[x], k)?;
        println!("{x:>4}  {k:>3}  {:>6}  {:?}", p.label, p.scores);
    }

    // With k equal to the whole learning set the votes just count class
    // sizes; equal counts tie and fall to the first class.
    let p = model.predict_knn(&[10.0], 8)?;
    println!(
        "\nall eight elements voting on a far-away point: {} (votes {:?}, tie {})",
        p.label, p.scores, p.tie
    );

    // A two-feature separable model grades distance per feature: a
    // pattern matching one of two coordinates sits at distance 1/2.
    let rows2 = vec![
        DataRow { features: vec![0.0, 0.0], label: "a".into() },
        DataRow { features: vec![5.0, 5.0], label: "b".into() },
        DataRow { features: vec![5.0, 0.0], label: "b".into() },
    ];
    let model2 = ClassifierModel::fit(&Dataset::new(rows2)?, Mode::Separable, options)?;
    let p = model2.predict_knn(&[0.0, 5.0], 1)?;
    println!("\ntwo-feature probe (0,5): nearest element gives class {}", p.label);

    Ok(())
}
