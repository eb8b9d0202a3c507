//! Schur functions as determinants in complete or elementary symmetric
//! functions.
//!
//! Run with `cargo run --example jacobi_trudi`.

use deligne_ring::symfunc::{jacobi_trudi, jacobi_trudi_generators, Generators};
use deligne_ring::Partition;

fn main() -> deligne_ring::Result<()> {
    for text in ["2,1", "3,1,1", "2,2"] {
        let p: Partition = text.parse()?;
        let h = jacobi_trudi_generators(&p, Generators::Complete);
        println!("s{p:?} as a polynomial in h:");
        for (multiset, c) in h.terms() {
            println!("  {c} * h{multiset:?}");
        }
        println!("  back in the Schur basis: {}", jacobi_trudi(&p, Generators::Complete));
        println!("  via e: {}", jacobi_trudi(&p, Generators::Elementary));
    }
    Ok(())
}
