//! The class S_{λ,μ} of the indecomposable X_{λ,μ} as an alternating sum of
//! products of skew Schur functions.
//!
//! Run with `cargo run --example class_formula -- 2,1 1`.

use deligne_ring::bisym::omega_xy;
use deligne_ring::deligne::tau_term;
use deligne_ring::partition::partitions_up_to;
use deligne_ring::{s_class, Partition};

fn main() -> deligne_ring::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lambda: Partition = args.first().map(String::as_str).unwrap_or("2,1").parse()?;
    let mu: Partition = args.get(1).map(String::as_str).unwrap_or("1").parse()?;

    let total = s_class(&lambda, &mu);
    println!("S[{lambda};{mu}] = {total}");

    println!("contributions by tau:");
    for tau in partitions_up_to(lambda.size()) {
        if lambda.contains(&tau) && mu.contains(&tau.conjugate()) {
            println!("  tau = {tau:?}: {}", tau_term(&lambda, &mu, &tau));
        }
    }

    let dual = s_class(&lambda.conjugate(), &mu.conjugate());
    println!("omega_xy maps it to S[{};{}]: {}", lambda.conjugate(), mu.conjugate(), omega_xy(&total) == dual);
    Ok(())
}
