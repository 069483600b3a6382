//! Field-size lower bounds and how they compare with q >= k + 1.
//!
//! cargo run --example field_size_bounds -- 40,7,3

use mr_minors::bounds::{threshold_report, BoundsReport};
use mr_minors::LrcShape;

fn main() -> mr_minors::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "40,7,3".into());
    let s: LrcShape = arg.parse()?;
    print!("{}", BoundsReport::new(s).to_key_value());

    println!("\nwhere the minor bound beats k + 1 (k = 7, r = 3):");
    for n in (12..=40).step_by(4) {
        let t = threshold_report(LrcShape::new(n, 7, 3)?);
        println!(
            "  n={n:>2} rate={:<5} minor bound {:>2} vs {} -> {}",
            t.rate.to_string(),
            t.q_unconditional,
            t.q_gopalan,
            if t.improves { "better" } else { "no gain" }
        );
    }
    Ok(())
}
