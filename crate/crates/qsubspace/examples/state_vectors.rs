//! Tour of the state-vector primitives: basis kets, inner products,
//! superpositions, and Kronecker products.
//!
//! Everything else in the crate is built from these four operations, so
//! this example walks through them with small hand-checkable numbers.
//!
//! Run with `cargo run --example state_vectors`.

use qsubspace::statevec::{basis_ket, inner, kron, kron_chain, superpose};
use qsubspace::{Result, StateVector};

fn show(name: &str, v: &StateVector) {
    let entries: Vec<String> = v.amplitudes().iter().map(|a| format!("{a:.4}")).collect();
    println!("  {name} = [{}]  (dim {}, norm {:.6})", entries.join(", "), v.dim(), v.norm());
}

fn main() -> Result<()> {
    println!("basis kets");
    let e0 = basis_ket(0, 4)?;
    let e2 = basis_ket(2, 4)?;
    show("|0>", &e0);
    show("|2>", &e2);
    println!("  <0|2> = {}", inner(&e0, &e2)?);
    println!("  <2|2> = {}", inner(&e2, &e2)?);

    println!("\nsuperpositions");
    // Summing kets and normalizing weights each basis index by how often
    // it appears: |2> shows up twice, so its amplitude doubles.
    let s = superpose(&[e0.clone(), e2.clone(), e2.clone()])?;
    show("normalize(|0> + |2> + |2>)", &s);
    println!("  overlap with |2>: {:.6}", inner(&s, &e2)?.abs());

    println!("\nkronecker products");
    let a = basis_ket(1, 2)?;
    let b = basis_ket(0, 3)?;
    let ab = kron(&a, &b)?;
    // The left factor is most significant: index 1 in dim 2 paired with
    // index 0 in dim 3 lands at 1*3 + 0 = 3 in dim 6.
    show("|1>_2 (x) |0>_3", &ab);

    let uniform2 = StateVector::from_amplitudes(vec![0.5_f64.sqrt(); 2])?;
    let pair = kron(&uniform2, &uniform2)?;
    show("uniform (x) uniform", &pair);

    println!("\nchained products");
    let chain = kron_chain(&[basis_ket(1, 2)?, basis_ket(1, 2)?, basis_ket(1, 2)?])?;
    show("|1>(x)|1>(x)|1>", &chain);
    println!("  a three-factor chain of dim-2 kets lives in dim {}", chain.dim());

    println!("\nentangled vs product");
    // |00> + |11> does not factor into a product of two kets, while
    // |00> + |01> + |10> + |11> is exactly uniform (x) uniform above.
    let bell = superpose(&[
        kron(&basis_ket(0, 2)?, &basis_ket(0, 2)?)?,
        kron(&basis_ket(1, 2)?, &basis_ket(1, 2)?)?,
    ])?;
    show("normalize(|00> + |11>)", &bell);
    println!("  overlap with the product state: {:.6}", inner(&bell, &pair)?.abs());

    Ok(())
}
