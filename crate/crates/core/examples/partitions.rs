//! Partition basics: parsing, conjugation, enumeration and tableaux.
//!
//! Run with `cargo run --example partitions`.

use deligne_ring::partition::{enumerate_ssyt, partitions_in_rectangle, partitions_of, SkewShape};
use deligne_ring::Partition;

fn main() -> deligne_ring::Result<()> {
    let lambda: Partition = "4,2,1".parse()?;
    println!("lambda = {lambda:?}, |lambda| = {}, length {}", lambda.size(), lambda.len());
    println!("conjugate = {:?}", lambda.conjugate());

    for n in 0..=6 {
        println!("p({n}) = {}", partitions_of(n).len());
    }

    let boxed: Vec<String> = partitions_in_rectangle(2, 2).iter().map(|p| format!("{p:?}")).collect();
    println!("inside a 2x2 box: {}", boxed.join(" "));

    let shape = SkewShape::new("3,2".parse()?, "1".parse()?)?;
    let tableaux = enumerate_ssyt(&shape, 2);
    println!("semistandard fillings of (3,2)/(1) with entries <= 2: {}", tableaux.len());
    for t in &tableaux {
        println!("  {:?}", t.rows);
    }

    // Malformed input is rejected rather than silently sorted.
    if let Err(e) = "1,2".parse::<Partition>() {
        println!("parse error: {e}");
    }
    Ok(())
}
