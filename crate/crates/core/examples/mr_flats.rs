//! The (n, k, r)-MR matroid: closed-form rank, flats, and custom repair sets.
//!
//! cargo run --example mr_flats -- 8,4,3

use mr_minors::matroid::{check_axioms, flats};
use mr_minors::{Matroid, MrMatroid, MrParams, Subset};

fn main() -> mr_minors::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "8,4,3".into());
    let p: MrParams = arg.parse()?;
    let m = MrMatroid::new(p.clone());
    println!(
        "{p}: g={} h={} repair sets {:?}",
        p.g(),
        p.h(),
        p.repair_sets()
    );

    let s = Subset::from_indices([0, 1, 2, 3, 4]);
    println!(
        "rank {s:?} = {} (direct sum form {})",
        m.rank(s),
        m.rank_direct_sum(s)
    );

    let closed = m.flats()?;
    println!(
        "{} flats; closure scan agrees: {}",
        closed.len(),
        flats(&m)? == closed
    );
    if p.n() <= 14 {
        println!("axioms pass: {}", check_axioms(&m)?.passed());
    }
    let mut by_rank = std::collections::BTreeMap::<usize, usize>::new();
    for f in &closed {
        *by_rank.entry(m.rank(*f)).or_default() += 1;
    }
    println!("flats per rank: {by_rank:?}");

    let interleaved: MrParams = "8,4,3:0,2,4,6;1,3,5,7".parse()?;
    println!(
        "{interleaved}: {} flats",
        MrMatroid::new(interleaved.clone()).flats()?.len()
    );
    Ok(())
}
