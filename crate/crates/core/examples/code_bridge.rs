//! From generator matrices to matroids: search an MR code, certify it, and cut MDS
//! codes out of it by shortening and puncturing.
//!
//! cargo run --release --example code_bridge -- 8,4,3 13

use mr_minors::code::{code_to_matroid, is_mds_code, is_mr_lrc, minor_code, search_mr_code};
use mr_minors::field::FieldSpec;
use mr_minors::matroid::tabulate;
use mr_minors::witness::all_witnesses;
use mr_minors::{MrMatroid, MrParams};

fn main() -> mr_minors::Result<()> {
    let mut args = std::env::args().skip(1);
    let p: MrParams = args.next().unwrap_or_else(|| "8,4,3".into()).parse()?;
    let field: FieldSpec = args.next().unwrap_or_else(|| "13".into()).parse()?;

    let Some(hit) = search_mr_code(&p, &field, 100_000, 7)? else {
        println!(
            "no MR code for {p} over GF({}) in 100000 trials",
            field.order()
        );
        return Ok(());
    };
    let g = hit.matrix;
    println!("found at trial {}:\n{g}", hit.trial);
    println!("MR certified: {}", is_mr_lrc(&g, &p)?);

    let mr = MrMatroid::new(p);
    println!(
        "matroid equals the MR matroid: {}",
        tabulate(&code_to_matroid(&g))? == tabulate(&mr)?
    );
    for (tag, w) in all_witnesses(&mr)? {
        let c = minor_code(&g, w.contract_flat, w.delete_set)?;
        println!(
            "{tag}: [{}, {}] code, MDS = {}",
            c.n(),
            c.k(),
            is_mds_code(&c)?
        );
    }
    Ok(())
}
