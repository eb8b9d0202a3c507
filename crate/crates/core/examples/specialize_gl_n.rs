//! Specializing classes to characters of GL_n.
//!
//! Run with `cargo run --example specialize_gl_n`.

use deligne_ring::specialize::{check_detshift, rational_schur_char, signature_of, specialize_to_gl_n};
use deligne_ring::{s_class, Partition};

fn main() -> deligne_ring::Result<()> {
    let lambda: Partition = "1".parse()?;
    let mu: Partition = "1".parse()?;
    for n in 2..=3 {
        let sig = signature_of(&lambda, &mu, n)?;
        let ch = specialize_to_gl_n(&s_class(&lambda, &mu), n);
        println!("n = {n}, signature {:?}", sig.entries());
        println!("  {ch}");
        println!("  matches the irreducible character: {}", ch == rational_schur_char(&sig));
    }

    // Below the stable range the signature is undefined.
    if let Err(e) = signature_of(&"1,1".parse()?, &mu, 2) {
        println!("n = 2 for ((1,1),(1)): {e}");
    }

    for n in 0..=3 {
        let ok: Vec<bool> = (0..=n).map(|i| check_detshift(i, n)).collect::<Result<_, _>>()?;
        println!("exterior powers of the dual, n = {n}: {ok:?}");
    }
    Ok(())
}
