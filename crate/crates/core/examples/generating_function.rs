//! Truncated check of the generating function for the classes S_{λ,μ} and
//! of the Cauchy identities it is built from.
//!
//! Run with `cargo run --release --example generating_function -- 6`.

use deligne_ring::genfun::{compare_genfun, verify_cauchy, verify_dual_cauchy, TruncationSpec};
use deligne_ring::partition::partitions_up_to;

fn main() -> deligne_ring::Result<()> {
    let degree: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let t = TruncationSpec::new(2, 2, 3, 3, degree)?;
    let report = compare_genfun(&t);
    println!("a=2 b=2 nx=3 ny=3 degree={degree}");
    println!("pairs summed: {}, monomials compared: {}", report.pairs, report.terms);
    match &report.first_difference {
        None => println!("PASS"),
        Some((mono, l, r)) => println!("FAIL at {mono}: {l} vs {r}"),
    }

    let small = TruncationSpec::new(2, 2, 2, 2, 4)?;
    for tau in partitions_up_to(2) {
        println!("Cauchy identity for tau = {tau:?}: {}", verify_cauchy(&tau, &small));
    }
    println!("dual Cauchy identity: {}", verify_dual_cauchy(&small));
    Ok(())
}
