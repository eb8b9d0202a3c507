//! Products and skew Schur functions through the Littlewood–Richardson rule.
//!
//! Run with `cargo run --example littlewood_richardson`.

use deligne_ring::symfunc::{lr_expand, omega, schur, skew_schur};
use deligne_ring::Partition;

fn main() -> deligne_ring::Result<()> {
    let a: Partition = "2,1".parse()?;
    let b: Partition = "2,1".parse()?;
    println!("s{a:?} * s{b:?} =");
    for (nu, c) in lr_expand(&a, &b) {
        println!("  {c} * s{nu:?}");
    }

    let outer: Partition = "3,2,1".parse()?;
    let inner: Partition = "2,1".parse()?;
    println!("s{outer:?}/{inner:?} = {}", skew_schur(&outer, &inner));

    let f = schur(&"3,1".parse()?);
    println!("omega({f}) = {}", omega(&f));
    Ok(())
}
