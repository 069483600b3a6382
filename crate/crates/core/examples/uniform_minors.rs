//! Constructive uniform minors and their verification.
//!
//! cargo run --example uniform_minors -- 12,7,3

use mr_minors::bounds::{eq3_size, largest_uniform_size};
use mr_minors::witness::{all_witnesses, verify_witness};
use mr_minors::{MinorWitness, MrMatroid, MrParams};

fn main() -> mr_minors::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "12,7,3".into());
    let p: MrParams = arg.parse()?;
    let m = MrMatroid::new(p.clone());
    for (tag, w) in all_witnesses(&m)? {
        println!("{tag}: {w}");
        if tag == "eq3" && w.boundary_case {
            println!("     formula size {}", eq3_size(&p, w.target_rank)?);
        }
    }
    println!("largest uniform minor: {}", largest_uniform_size(&p));

    // witness lines round-trip and re-verify from scratch
    let line = all_witnesses(&m)?[0].1.to_string();
    let parsed: MinorWitness = line.parse()?;
    println!("re-verified {line:?}: {}", verify_witness(&m, &parsed)?);
    Ok(())
}
