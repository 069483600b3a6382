//! Exhaustive search for the largest uniform minors, compared with the formulas.
//!
//! cargo run --release --example oracle_search -- 8,4,3

use mr_minors::bounds::{formula_sizes, largest_uniform_size};
use mr_minors::witness::oracle_max_uniform_all;
use mr_minors::{MrMatroid, MrParams};

fn main() -> mr_minors::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "8,4,3".into());
    let p: MrParams = arg.parse()?;
    let m = MrMatroid::new(p.clone());
    let formulas = formula_sizes(&p);
    println!("rank  formula  oracle  witness");
    for (kp, (size, w)) in oracle_max_uniform_all(&m)? {
        let f = formulas.get(&kp).map_or("-".to_string(), usize::to_string);
        println!("{kp:>4}  {f:>7}  {size:>6}  {w}");
    }
    println!("theorem: {}", largest_uniform_size(&p));
    Ok(())
}
