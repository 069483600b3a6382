//! GF(p^m) arithmetic and matrix rank.
//!
//! cargo run --example finite_fields

use mr_minors::field::{FieldSpec, Gf};

fn main() -> mr_minors::Result<()> {
    let gf4 = Gf::new("2^2 modulus=7".parse()?);
    // elements 0, 1, x, x+1 are 0, 1, 2, 3
    println!(
        "GF(4): x*x = {}, x+1 inverse = {}",
        gf4.mul(2, 2),
        gf4.inv(3)?
    );

    let gf9 = Gf::new(FieldSpec::new(3, 2, Some(10))?);
    println!("GF(9) via x^2+1: (x+2)*(2x+1) = {}", gf9.mul(5, 7));

    let gf13 = Gf::new(FieldSpec::prime(13)?);
    let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 12]];
    println!("rank over GF(13): {}", gf13.rank_of(&rows));

    for bad in ["6", "2^2 modulus=5", "5^2"] {
        match bad.parse::<FieldSpec>() {
            Ok(spec) => println!("{bad}: accepted as {spec}"),
            Err(e) => println!("{bad}: {e}"),
        }
    }
    Ok(())
}
