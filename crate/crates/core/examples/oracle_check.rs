//! Cross-checks symmetric-function arithmetic against explicit polynomials in
//! finitely many variables.
//!
//! Run with `cargo run --example oracle_check`.

use deligne_ring::oracle::{bialternant_schur, expand_bisym, schur_poly, Alphabet};
use deligne_ring::symfunc::{multiply, schur};
use deligne_ring::{s_class, Partition};

fn main() -> deligne_ring::Result<()> {
    let p: Partition = "2,1".parse()?;
    let by_tableaux = schur_poly(&p, Alphabet::X, 3);
    let by_ratio = bialternant_schur(&p, 3)?;
    println!("s(2,1)(x1,x2,x3) = {by_tableaux}");
    println!("tableaux and bialternant agree: {}", by_tableaux == by_ratio);

    let q: Partition = "1,1".parse()?;
    let product = multiply(&schur(&p), &schur(&q));
    let mut expanded = deligne_ring::oracle::MultiPoly::zero();
    for (nu, c) in product.terms() {
        expanded = expanded.add(&schur_poly(nu, Alphabet::X, 3).scale(c));
    }
    let direct = schur_poly(&p, Alphabet::X, 3).mul(&schur_poly(&q, Alphabet::X, 3));
    println!("LR product matches the polynomial product: {}", expanded == direct);

    let class = s_class(&"1".parse()?, &"1".parse()?);
    println!("S[1;1] in two x and two y variables: {}", expand_bisym(&class, 2, 2));
    Ok(())
}
