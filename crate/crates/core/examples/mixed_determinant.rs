//! The mixed Jacobi–Trudi determinant and its Laplace expansion over coset
//! patterns of crosses and circles.
//!
//! Run with `cargo run --example mixed_determinant`.

use deligne_ring::deligne::{
    coset_sign, cross_statistic, mixed_jacobi_trudi_complete, mixed_matrix, permutation_sign, MixedEntry,
};
use deligne_ring::{coset_patterns, coset_tau, mixed_jacobi_trudi, s_class, CosetPattern, Partition};

fn main() -> deligne_ring::Result<()> {
    let lambda: Partition = "2,1".parse()?;
    let mu: Partition = "1,1".parse()?;

    println!("matrix for lambda = {lambda:?}, mu = {mu:?}:");
    for row in mixed_matrix(&lambda, &mu) {
        let cells: Vec<String> = row
            .iter()
            .map(|e| match e {
                MixedEntry::X(k) => format!("h{k}(x)"),
                MixedEntry::Y(k) => format!("h{k}(y)"),
            })
            .collect();
        println!("  [{}]", cells.join(", "));
    }

    println!("patterns with {} crosses and {} circles:", mu.len(), lambda.len());
    for p in coset_patterns(mu.len(), lambda.len()) {
        let (tau, sign) = coset_tau(&p);
        println!("  {p}  tau = {tau:?}  sign = {sign:+}");
    }

    let worked: CosetPattern = "××∘×∘∘×∘".parse()?;
    let (tau, _) = coset_tau(&worked);
    println!("{worked}: tau = {tau:?}, crosses see {:?}", cross_statistic(&worked));
    println!(
        "sign by |tau| = {}, by inversions = {}",
        coset_sign(&worked),
        permutation_sign(&worked)
    );

    println!("expansion in h: {}", mixed_jacobi_trudi_complete(&lambda, &mu));
    let det = mixed_jacobi_trudi(&lambda, &mu);
    println!("determinant:    {det}");
    println!("equals the tau-sum: {}", det == s_class(&lambda, &mu));
    Ok(())
}
