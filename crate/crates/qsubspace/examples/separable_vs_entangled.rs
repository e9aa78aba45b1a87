//! The two multi-feature representations, side by side.
//!
//! A two-element class whose points sit at opposite corners of feature
//! space makes the difference stark. The separable representation keeps
//! one superposition per feature and forgets that the coordinates moved
//! together; its product expansion covers all four corners evenly. The
//! non-separable representation superposes whole feature tuples and
//! keeps the correlation, which shows up as Schmidt rank 2.
//!
//! Run with `cargo run --example separable_vs_entangled`.

use qsubspace::represent::{
    represent_nonseparable, represent_separable, schmidt_rank_of, score_nonseparable,
    score_separable, Representation,
};
use qsubspace::statevec::kron;
use qsubspace::{Quantizer, QuantizerBank, Result};

fn main() -> Result<()> {
    // One quantizer per feature, each with two interior cells for the
    // clusters near 0 and 1 (dim 4 after the two sentinels).
    let q = Quantizer::fit(&[0.1, 0.9])?;
    let bank = QuantizerBank::from_quantizers(vec![q, q])?;
    println!("per-feature dims {:?}, product dim {}", bank.dims(), bank.product_dim());

    // Both elements move diagonally: (low, low) and (high, high).
    let class: Vec<Vec<f64>> = vec![vec![0.1, 0.1], vec![0.9, 0.9]];
    println!(
        "class elements quantize to {:?} and {:?}",
        bank.indices_of(&class[0])?,
        bank.indices_of(&class[1])?
    );

    let sep = represent_separable(&bank, "diag", &class)?;
    if let Representation::Separable { components } = sep.repr() {
        for (j, c) in components.iter().enumerate() {
            let amps: Vec<String> = c.amplitudes().iter().map(|a| format!("{a:.4}")).collect();
            println!("\nseparable component {j}: [{}]", amps.join(", "));
        }
        // Expanding the per-feature components into the product space
        // gives a state that factors by construction: rank 1.
        let expansion = kron(&components[0], &components[1])?;
        let rank = schmidt_rank_of(expansion.amplitudes(), components[0].dim())?;
        let amps: Vec<String> = expansion.amplitudes().iter().map(|a| format!("{a:.2}")).collect();
        println!("product expansion [{}], schmidt rank {rank}", amps.join(", "));
    }

    let ent = represent_nonseparable(&bank, "diag", &class)?;
    if let Representation::NonSeparable { product, .. } = ent.repr() {
        let amps: Vec<String> = product.amplitudes().iter().map(|a| format!("{a:.4}")).collect();
        println!("\nnon-separable representative: [{}]", amps.join(", "));
    }
    println!("schmidt rank across the feature cut: {}", ent.schmidt_rank(1)?);

    // The off-diagonal corner (low, high) never appeared in the class.
    // The separable score still likes it; the entangled score does not.
    for pattern in [[0.1, 0.1], [0.1, 0.9]] {
        let kets = bank.kets_of(&pattern)?;
        println!(
            "\npattern {pattern:?}: separable score {:.4}, non-separable score {:.4}",
            score_separable(&sep, &kets)?,
            score_nonseparable(&ent, &kets)?
        );
    }

    Ok(())
}
