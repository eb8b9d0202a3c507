//! Tensor products of indecomposables: expand S_a · S_b back in the basis of
//! classes.
//!
//! Run with `cargo run --example structure_constants -- "1;1" "1;1"`.

use deligne_ring::bisym::multiply;
use deligne_ring::deligne::s_basis_to_bisym;
use deligne_ring::{expand_in_s_basis, s_class, tensor_structure_constants, PairKey, Partition};

fn pair(text: &str) -> deligne_ring::Result<PairKey> {
    let (l, m) = text.split_once(';').unwrap_or((text, ""));
    Ok(PairKey::new(l.parse()?, m.parse()?))
}

fn main() -> deligne_ring::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = pair(args.first().map(String::as_str).unwrap_or("1;1"))?;
    let b = pair(args.get(1).map(String::as_str).unwrap_or("1;1"))?;

    let c = tensor_structure_constants(&a, &b);
    println!("X[{};{}] ⊗ X[{};{}] = {c}", a.lambda, a.mu, b.lambda, b.mu);

    // Reassembling the expansion gives back the product.
    let product = multiply(&s_class(&a.lambda, &a.mu), &s_class(&b.lambda, &b.mu));
    println!("reassembles to the product: {}", s_basis_to_bisym(&c) == product);

    let v: Partition = "1".parse()?;
    let plain = deligne_ring::bisym::tensor(
        &deligne_ring::symfunc::schur(&v),
        &deligne_ring::symfunc::schur(&v),
    );
    println!("s[1](x)s[1](y) = {}", expand_in_s_basis(&plain));
    Ok(())
}
