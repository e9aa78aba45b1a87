//! How real-valued features become basis-state indices.
//!
//! A fitted [`qsubspace::Quantizer`] rounds a value to its nearest
//! integer and maps that integer to a basis index, with index 0 and the
//! top index reserved as sentinels for values rounding outside the
//! learning range. This example fits one on a small sample and sweeps
//! inputs across the whole line so the cell layout is visible.
//!
//! Run with `cargo run --example quantization`.

use qsubspace::quantize::nint;
use qsubspace::{Quantizer, Result};

fn main() -> Result<()> {
    let sample = [-2.24697, -1.17115, -0.882941, -1.9828, 0.836746, 1.70144, 3.05605, -0.0344292];
    let q = Quantizer::fit(&sample)?;
    println!("fitted on {} values spanning [{:.3}, {:.3}]", sample.len(), -2.24697, 3.05605);
    println!(
        "  rounded range [{}, {}], one slot of headroom, dim {}",
        q.q_min(),
        q.q_max(),
        q.dim()
    );
    println!("  index 0 and index {} are the out-of-range sentinels\n", q.dim() - 1);

    println!("{:>8}  {:>5}  {:>5}  note", "x", "nint", "index");
    for x in [-3.6, -2.51, -2.5, -2.24697, -1.17115, 0.4999, 0.5, 1.5, 3.05605, 4.49, 4.51, 7.0] {
        let r = nint(x)?;
        let idx = q.index_of(x)?;
        let note = if idx == 0 {
            "below range, low sentinel"
        } else if idx == q.dim() - 1 {
            "top slot (shared with the high sentinel)"
        } else {
            ""
        };
        println!("{x:>8}  {r:>5}  {idx:>5}  {note}");
    }

    println!(
        "\nties round to even: nint(0.5) = {}, nint(1.5) = {}, nint(-2.5) = {}",
        nint(0.5)?,
        nint(1.5)?,
        nint(-2.5)?
    );

    // Every learning value lands strictly inside the sentinels, so the
    // fitted data never collides with the out-of-range markers.
    let indices: Vec<usize> = sample.iter().map(|&v| q.index_of(v)).collect::<Result<_>>()?;
    println!("\nlearning-sample indices: {indices:?}");
    assert!(indices.iter().all(|&i| i > 0 && i < q.dim() - 1));

    let ket = q.ket_of(-0.882941)?;
    println!(
        "ket_of(-0.882941) puts amplitude 1 at index {}",
        ket.amplitudes().iter().position(|&a| a == 1.0).unwrap()
    );

    Ok(())
}
