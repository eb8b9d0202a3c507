//! Exact computations in the Grothendieck ring of the Deligne category
//! `Rep(GL_t)`.
//!
//! The ring is modelled as `Λ(x) ⊗ Λ(y)`, two copies of the ring of symmetric
//! functions. The class of the indecomposable object `X_{λ,μ}` is
//!
//! ```text
//! S_{λ,μ} = Σ_τ (−1)^{|τ|} s_{λ/τ}(x) s_{μ/τ′}(y)
//! ```
//!
//! and is also the value of a mixed Jacobi–Trudi determinant whose top rows
//! hold complete symmetric functions in `y` and whose bottom rows hold
//! complete symmetric functions in `x`.
//!
//! ```
//! use deligne_ring::{mixed_jacobi_trudi, s_class, Partition};
//!
//! let l: Partition = "2,1".parse().unwrap();
//! let m: Partition = "1".parse().unwrap();
//! assert_eq!(s_class(&l, &m), mixed_jacobi_trudi(&l, &m));
//! ```

pub mod bisym;
pub mod cli;
pub mod deligne;
pub mod error;
pub mod genfun;
pub mod oracle;
pub mod partition;
pub mod ring;
pub mod specialize;
pub mod symfunc;
pub mod verify;

pub use bisym::{BiSymFunc, PairKey};
pub use deligne::{
    coset_patterns, coset_tau, expand_in_s_basis, mixed_jacobi_trudi, s_class,
    tensor_structure_constants, CosetPattern, PairExpansion,
};
pub use error::{Error, Result};
pub use partition::Partition;
pub use symfunc::SymFunc;
