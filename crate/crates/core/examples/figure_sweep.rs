//! Minor sizes as n grows with k = 7, r = 3, as CSV on stdout.
//!
//! cargo run --example figure_sweep > sweep.csv

use mr_minors::sweep::{sweep, to_csv};

fn main() -> mr_minors::Result<()> {
    let rows = sweep(7, 3, 8, 60)?;
    print!("{}", to_csv(&rows, "cargo run --example figure_sweep"));
    let cross = rows.iter().find(|r| r.eq3.is_some_and(|(_, s)| s > r.eq1));
    if let Some(r) = cross {
        eprintln!(
            "small-rank minors overtake the puncturing minor at n = {}",
            r.n
        );
    }
    Ok(())
}
