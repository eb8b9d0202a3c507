//! Truncated checks of the generating function for the classes `S_{λ,μ}`:
//!
//! ```text
//! Σ_{λ,μ} s_λ(α) s_μ(β) S_{λ,μ}(x, y)
//!     = Π 1/(1 − x_i α_j) · Π 1/(1 − y_i β_j) · Π (1 − α_i β_j)
//! ```
//!
//! and of the Cauchy-type identities it is assembled from. Both sides are
//! expanded as polynomials in finitely many variables per alphabet and cut off
//! at a total degree `D` in the `α ∪ β` variables.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::deligne::{s_class, ClassCache};
use crate::error::{Error, Result};
use crate::oracle::{expand_bisym, schur_poly, skew_schur_poly, Alphabet, Layout, MultiPoly};
use crate::partition::{partitions_up_to, partitions_with_max_len, Partition};
use crate::bisym::{omega_xy, PairKey};

const COEFF_ALPHABETS: [Alphabet; 2] = [Alphabet::Alpha, Alphabet::Beta];

/// Largest supported `α ∪ β` degree.
pub const MAX_DEGREE: usize = 8;

/// Variable counts per alphabet and the `α ∪ β` degree cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationSpec {
    /// Variables in `α`.
    pub a: usize,
    /// Variables in `β`.
    pub b: usize,
    pub nx: usize,
    pub ny: usize,
    /// Maximum total degree in `α` and `β` jointly.
    pub degree: usize,
}

impl TruncationSpec {
    pub fn new(a: usize, b: usize, nx: usize, ny: usize, degree: usize) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::InvalidTruncation(format!(
                "degree {degree} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        Ok(TruncationSpec { a, b, nx, ny, degree })
    }

    fn layout(&self) -> Layout {
        Layout::new()
            .with(Alphabet::Alpha, self.a)
            .with(Alphabet::Beta, self.b)
            .with(Alphabet::X, self.nx)
            .with(Alphabet::Y, self.ny)
    }
}

/// Pairs `(λ, μ)` with `ℓ(λ) ≤ a`, `ℓ(μ) ≤ b` and `|λ| + |μ| ≤ D`: exactly
/// those whose `s_λ(α) s_μ(β)` survives the truncation.
pub fn lhs_pairs(t: &TruncationSpec) -> Vec<PairKey> {
    let mut out = Vec::new();
    for dl in 0..=t.degree {
        for l in partitions_with_max_len(dl, t.a) {
            for dm in 0..=t.degree - dl {
                for m in partitions_with_max_len(dm, t.b) {
                    out.push(PairKey::new(l.clone(), m));
                }
            }
        }
    }
    out.sort();
    out
}

/// `Σ s_λ(α) s_μ(β) S_{λ,μ}(x, y)` over [`lhs_pairs`].
pub fn genfun_lhs(t: &TruncationSpec) -> MultiPoly {
    lhs_with(t, |k, _| s_class(&k.lambda, &k.mu))
}

/// The left side rebuilt from `ω_xy(S_{λ′,μ′})` in place of `S_{λ,μ}`.
pub fn genfun_lhs_via_omega(t: &TruncationSpec) -> MultiPoly {
    lhs_with(t, |k, cache| {
        let dual = PairKey::new(k.lambda.conjugate(), k.mu.conjugate());
        omega_xy(cache.get(&dual))
    })
}

fn lhs_with(
    t: &TruncationSpec,
    class: impl Fn(&PairKey, &mut ClassCache) -> crate::bisym::BiSymFunc,
) -> MultiPoly {
    let mut cache = ClassCache::new();
    let mut alpha: HashMap<Partition, MultiPoly> = HashMap::new();
    let mut beta: HashMap<Partition, MultiPoly> = HashMap::new();
    let mut out = MultiPoly::zero().widen(t.layout());
    for key in lhs_pairs(t) {
        let sa = alpha
            .entry(key.lambda.clone())
            .or_insert_with(|| schur_poly(&key.lambda, Alphabet::Alpha, t.a))
            .clone();
        let sb = beta
            .entry(key.mu.clone())
            .or_insert_with(|| schur_poly(&key.mu, Alphabet::Beta, t.b));
        let coeff = sa.mul(sb);
        let class = expand_bisym(&class(&key, &mut cache), t.nx, t.ny);
        out = out.add(&coeff.mul(&class));
    }
    out
}

/// `Σ_{k ≤ D} (u v)^k`, the truncated expansion of `1/(1 − u v)`.
fn geometric(u: &MultiPoly, v: &MultiPoly, max: usize) -> MultiPoly {
    let uv = u.mul(v);
    let mut term = MultiPoly::one();
    let mut out = MultiPoly::one();
    for _ in 0..max {
        term = term.mul(&uv);
        out = out.add(&term);
    }
    out
}

/// `Π_{i,j} 1/(1 − z_i w_j)` for `z` in `z_alphabet` and `w` in the
/// coefficient alphabet `w_alphabet`, truncated to `w`-degree ≤ `max`.
fn cauchy_kernel(
    z_alphabet: Alphabet,
    nz: usize,
    w_alphabet: Alphabet,
    nw: usize,
    max: usize,
    acc: MultiPoly,
) -> MultiPoly {
    let mut acc = acc;
    for i in 0..nz {
        for j in 0..nw {
            let z = MultiPoly::var(z_alphabet, i, nz);
            let w = MultiPoly::var(w_alphabet, j, nw);
            acc = acc.mul_truncated(&geometric(&z, &w, max), &COEFF_ALPHABETS, max);
        }
    }
    acc
}

/// `Π 1/(1 − x_i α_j) · Π 1/(1 − y_i β_j) · Π (1 − α_i β_j)`, truncated after
/// every factor.
pub fn genfun_rhs(t: &TruncationSpec) -> MultiPoly {
    let d = t.degree;
    let mut acc = MultiPoly::one().widen(t.layout());
    acc = cauchy_kernel(Alphabet::X, t.nx, Alphabet::Alpha, t.a, d, acc);
    acc = cauchy_kernel(Alphabet::Y, t.ny, Alphabet::Beta, t.b, d, acc);
    dual_cauchy_product(t.a, t.b, d, acc)
}

fn dual_cauchy_product(a: usize, b: usize, d: usize, acc: MultiPoly) -> MultiPoly {
    let mut acc = acc;
    for i in 0..a {
        for j in 0..b {
            let ab = MultiPoly::var(Alphabet::Alpha, i, a).mul(&MultiPoly::var(Alphabet::Beta, j, b));
            acc = acc.mul_truncated(&MultiPoly::one().sub(&ab), &COEFF_ALPHABETS, d);
        }
    }
    acc
}

/// Both sides of `Σ_λ s_λ(α) s_{λ/τ}(x) = s_τ(α) Π 1/(1 − x_i α_j)`, in `a`
/// α-variables and `nx` x-variables, truncated to α-degree ≤ D.
pub fn cauchy_sides(tau: &Partition, t: &TruncationSpec) -> (MultiPoly, MultiPoly) {
    cauchy_sides_in(tau, Alphabet::Alpha, t.a, Alphabet::X, t.nx, t.degree)
}

/// The `β`/`y` form with `τ′`: `Σ_μ s_μ(β) s_{μ/τ′}(y) = s_{τ′}(β) Π 1/(1 − y_i β_j)`.
pub fn cauchy_sides_dual(tau: &Partition, t: &TruncationSpec) -> (MultiPoly, MultiPoly) {
    cauchy_sides_in(&tau.conjugate(), Alphabet::Beta, t.b, Alphabet::Y, t.ny, t.degree)
}

fn cauchy_sides_in(
    tau: &Partition,
    coeff: Alphabet,
    ncoeff: usize,
    var: Alphabet,
    nvar: usize,
    d: usize,
) -> (MultiPoly, MultiPoly) {
    let mut lhs = MultiPoly::zero();
    for l in partitions_up_to(d) {
        if l.len() > ncoeff || !l.contains(tau) {
            continue;
        }
        let term = schur_poly(&l, coeff, ncoeff).mul(&skew_schur_poly(&l, tau, var, nvar));
        lhs = lhs.add(&term);
    }
    let kernel = cauchy_kernel(var, nvar, coeff, ncoeff, d, MultiPoly::one());
    let rhs = schur_poly(tau, coeff, ncoeff).mul_truncated(&kernel, &[coeff], d);
    (lhs, rhs)
}

/// Checks the generalized Cauchy identity for `τ` in both its `α/x` form and
/// its `β/y` form with `τ′`.
pub fn verify_cauchy(tau: &Partition, t: &TruncationSpec) -> bool {
    let (l1, r1) = cauchy_sides(tau, t);
    let (l2, r2) = cauchy_sides_dual(tau, t);
    l1 == r1 && l2 == r2
}

/// Both sides of `Σ_τ (−1)^{|τ|} s_τ(α) s_{τ′}(β) = Π (1 − α_i β_j)`,
/// truncated to `α ∪ β` degree ≤ D.
pub fn dual_cauchy_sides(t: &TruncationSpec) -> (MultiPoly, MultiPoly) {
    let mut lhs = MultiPoly::zero();
    for tau in partitions_up_to(t.degree / 2) {
        if tau.len() > t.a || tau.first() > t.b {
            continue;
        }
        let sign = if tau.size() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let term = schur_poly(&tau, Alphabet::Alpha, t.a)
            .mul(&schur_poly(&tau.conjugate(), Alphabet::Beta, t.b))
            .scale(&sign);
        lhs = lhs.add(&term);
    }
    let rhs = dual_cauchy_product(t.a, t.b, t.degree, MultiPoly::one());
    (lhs, rhs)
}

pub fn verify_dual_cauchy(t: &TruncationSpec) -> bool {
    let (l, r) = dual_cauchy_sides(t);
    l == r
}

/// The right side assembled as `Σ_τ (−1)^{|τ|} A_τ B_τ`, where `A_τ` and `B_τ`
/// are the left sides of the two Cauchy identities for `τ`. Equal to
/// [`genfun_rhs`] after truncation.
pub fn genfun_by_tau(t: &TruncationSpec) -> MultiPoly {
    let mut out = MultiPoly::zero().widen(t.layout());
    for tau in partitions_up_to(t.degree / 2) {
        if tau.len() > t.a || tau.first() > t.b {
            continue;
        }
        let (a_tau, _) = cauchy_sides(&tau, t);
        let (b_tau, _) = cauchy_sides_dual(&tau, t);
        let sign = if tau.size() % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out = out.add(&a_tau.mul_truncated(&b_tau, &COEFF_ALPHABETS, t.degree).scale(&sign));
    }
    out
}

/// Outcome of comparing the two sides of the generating function.
#[derive(Clone, Debug)]
pub struct GenfunReport {
    pub truncation: TruncationSpec,
    pub pairs: usize,
    pub terms: usize,
    /// The first monomial (in display order) where the sides differ, with the
    /// left and right coefficients.
    pub first_difference: Option<(String, BigInt, BigInt)>,
}

impl GenfunReport {
    pub fn passed(&self) -> bool {
        self.first_difference.is_none()
    }
}

pub fn compare_genfun(t: &TruncationSpec) -> GenfunReport {
    let lhs = genfun_lhs(t);
    let rhs = genfun_rhs(t);
    let diff = lhs.sub(&rhs);
    let first_difference = diff.terms().iter().next_back().map(|(k, _)| {
        let layout = diff.layout();
        let shown = MultiPoly::from_term(layout, k.clone(), BigInt::one()).to_string();
        let get = |p: &MultiPoly| p.widen(layout).terms().get(k).cloned().unwrap_or_default();
        (shown, get(&lhs), get(&rhs))
    });
    GenfunReport {
        truncation: *t,
        pairs: lhs_pairs(t).len(),
        terms: rhs.len(),
        first_difference,
    }
}
