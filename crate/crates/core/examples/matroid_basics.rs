//! Rank oracles, axioms, closure, flats and minors on small matroids.
//!
//! cargo run --example matroid_basics

use mr_minors::matroid::{check_axioms, closure, contract, delete, flats, is_uniform, minor};
use mr_minors::{Matroid, Subset, TableMatroid};

fn main() -> mr_minors::Result<()> {
    let u = TableMatroid::uniform(5, 2)?;
    println!("U(5,2): axioms pass = {}", check_axioms(&u)?.passed());
    println!("U(5,2): is_uniform = {:?}", is_uniform(&u)?);

    // a rank-2 matroid with a parallel pair {0,1} and a loop 4
    let m = TableMatroid::from_fn(5, |s| {
        let s = s - Subset::singleton(4);
        let classes = [
            Subset::from_indices([0, 1]),
            Subset::singleton(2),
            Subset::singleton(3),
        ];
        classes.iter().filter(|c| !c.is_disjoint(s)).count().min(2)
    })?;
    println!("custom: axioms pass = {}", check_axioms(&m)?.passed());
    println!("cl({{0}}) = {:?}", closure(&m, Subset::singleton(0)));
    for f in flats(&m)? {
        println!("  flat {f:?} rank {}", m.rank(f));
    }

    let x = Subset::from_indices([1, 4]);
    let del = delete(&m, x)?;
    println!(
        "M \\ {x:?}: ground {:?}, uniform {:?}",
        del.ground(),
        is_uniform(&del)?
    );
    let con = contract(&m, Subset::singleton(2))?;
    println!("M / {{2}}: rank {}", con.full_rank());
    let both = minor(&m, Subset::EMPTY, x)?;
    println!(
        "minor ranks agree: {}",
        both.rank(Subset::from_indices([0, 2])) == 2
    );
    Ok(())
}
