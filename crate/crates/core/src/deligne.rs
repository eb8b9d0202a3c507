//! Classes of indecomposable objects of Rep(GL_t) in Λ⊗Λ.
//!
//! The class `S_{λ,μ}` of the indecomposable `X_{λ,μ}` is computed two ways:
//!
//! * [`s_class`]: the alternating sum `Σ_τ (−1)^{|τ|} s_{λ/τ}(x) s_{μ/τ′}(y)`
//!   over skew Schur functions;
//! * [`mixed_jacobi_trudi`]: a determinant of complete symmetric functions
//!   whose top `ℓ(μ)` rows use `h_k(y)` and bottom `ℓ(λ)` rows use `h_k(x)`,
//!   evaluated by Laplace expansion along the two row blocks.
//!
//! The Laplace expansion is indexed by [`CosetPattern`]s: words in `×` and `∘`
//! recording which columns the top block takes. Each pattern determines a
//! partition `τ` and the expansion sign `(−1)^{|τ|}`.
//!
//! Since `S_{λ,μ} = s_λ(x) s_μ(y) + (lower degree)`, the classes form a
//! unitriangular basis of Λ⊗Λ; [`expand_in_s_basis`] inverts the change of
//! basis and [`tensor_structure_constants`] uses it to decompose tensor
//! products of indecomposables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bisym::{tensor, write_pair_terms, BiSymFunc, PairKey, PairTerm};
use crate::error::{Error, Result};
use crate::partition::{partitions_in_rectangle, Partition};
use crate::ring::{determinant, ProductPoly};
use crate::symfunc::{complete_to_schur, skew_schur, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// `×`: a column taken by the `y` block.
    Cross,
    /// `∘`: a column taken by the `x` block.
    Circle,
}

/// A word with `m` crosses and `n` circles. The cross positions are the images
/// `g(1) < … < g(m)` of the minimal-length representative `g` of a coset
/// `g(S_m × S_n)` in `S_{m+n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CosetPattern {
    symbols: Vec<Symbol>,
}

impl CosetPattern {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        CosetPattern { symbols }
    }

    /// Parses a pattern and checks that it has `crosses` crosses and `circles`
    /// circles.
    pub fn with_counts(s: &str, crosses: usize, circles: usize) -> Result<Self> {
        let p: CosetPattern = s.parse()?;
        if p.crosses() != crosses || p.circles() != circles {
            return Err(Error::InvalidPattern {
                pattern: s.to_string(),
                reason: format!(
                    "expected {crosses} crosses and {circles} circles, found {} and {}",
                    p.crosses(),
                    p.circles()
                ),
            });
        }
        Ok(p)
    }

    /// The pattern whose crosses sit at the given (0-based) positions.
    pub fn from_cross_positions(len: usize, crosses: &[usize]) -> Self {
        let mut symbols = vec![Symbol::Circle; len];
        for &c in crosses {
            symbols[c] = Symbol::Cross;
        }
        CosetPattern { symbols }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn crosses(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == Symbol::Cross).count()
    }

    pub fn circles(&self) -> usize {
        self.len() - self.crosses()
    }

    /// 0-based positions of the crosses, increasing.
    pub fn cross_positions(&self) -> Vec<usize> {
        self.positions(Symbol::Cross)
    }

    pub fn circle_positions(&self) -> Vec<usize> {
        self.positions(Symbol::Circle)
    }

    fn positions(&self, sym: Symbol) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.symbols[i] == sym).collect()
    }
}

impl FromStr for CosetPattern {
    type Err = Error;

    /// Accepts `×`/`∘` as well as ASCII `x`/`o`.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '×' | 'x' | 'X' => Ok(Symbol::Cross),
                '∘' | 'o' | 'O' => Ok(Symbol::Circle),
                other => Err(Error::InvalidPattern {
                    pattern: s.to_string(),
                    reason: format!("unexpected symbol {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(CosetPattern::new)
    }
}

impl fmt::Display for CosetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            f.write_str(match s {
                Symbol::Cross => "×",
                Symbol::Circle => "∘",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CosetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CosetPattern({self})")
    }
}

/// All patterns with `crosses` crosses and `circles` circles, in
/// lexicographic order of cross positions. There are `C(m+n, m)` of them.
pub fn coset_patterns(crosses: usize, circles: usize) -> Vec<CosetPattern> {
    fn rec(len: usize, start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<CosetPattern>) {
        if left == 0 {
            out.push(CosetPattern::from_cross_positions(len, cur));
            return;
        }
        for pos in start..=len - left {
            cur.push(pos);
            rec(len, pos + 1, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(crosses + circles, 0, crosses, &mut Vec::new(), &mut out);
    out
}

/// `τ` has one part equal to `i` for every circle with exactly `i` crosses
/// to its right; the sign is `(−1)^{|τ|}`.
pub fn coset_tau(p: &CosetPattern) -> (Partition, i8) {
    let mut crosses_right = 0;
    let mut parts = Vec::with_capacity(p.circles());
    for s in p.symbols.iter().rev() {
        match s {
            Symbol::Cross => crosses_right += 1,
            Symbol::Circle => parts.push(crosses_right),
        }
    }
    let tau = Partition::from_multiset(parts);
    let sign = if tau.size().is_multiple_of(2) { 1 } else { -1 };
    (tau, sign)
}

/// The statistic on crosses: one part per cross, equal to the number of
/// circles to its left. Always the conjugate of the `τ` from [`coset_tau`].
pub fn cross_statistic(p: &CosetPattern) -> Partition {
    let mut circles_left = 0;
    let mut parts = Vec::with_capacity(p.crosses());
    for s in &p.symbols {
        match s {
            Symbol::Circle => circles_left += 1,
            Symbol::Cross => parts.push(circles_left),
        }
    }
    Partition::from_multiset(parts)
}

/// The expansion sign used by [`mixed_jacobi_trudi`].
pub type SignRule = fn(&CosetPattern) -> i8;

/// `(−1)^{|τ|}` with `τ` from [`coset_tau`].
pub fn coset_sign(p: &CosetPattern) -> i8 {
    coset_tau(p).1
}

/// Sign of the permutation `g` with `g(1..=m)` the cross positions and
/// `g(m+1..)` the circle positions, by counting inversions of `g` directly.
pub fn permutation_sign(p: &CosetPattern) -> i8 {
    let g: Vec<usize> = p
        .cross_positions()
        .into_iter()
        .chain(p.circle_positions())
        .collect();
    let inversions = (0..g.len())
        .flat_map(|i| (i + 1..g.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| g[i] > g[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `S_{λ,μ} = Σ_τ (−1)^{|τ|} s_{λ/τ}(x) s_{μ/τ′}(y)`, summed over `τ ⊆ λ`
/// with `τ′ ⊆ μ` (all other terms vanish).
pub fn s_class(lambda: &Partition, mu: &Partition) -> BiSymFunc {
    let taus = partitions_in_rectangle(lambda.len(), mu.len())
        .into_iter()
        .filter(|t| lambda.contains(t) && mu.contains(&t.conjugate()));
    tau_sum(lambda, mu, taus)
}

/// The same sum taken over every `τ` in the `ℓ(λ) × ℓ(μ)` box, without
/// filtering by containment. Equal to [`s_class`]; kept to check that the
/// dropped terms really vanish.
pub fn s_class_over_rectangle(lambda: &Partition, mu: &Partition) -> BiSymFunc {
    tau_sum(lambda, mu, partitions_in_rectangle(lambda.len(), mu.len()))
}

fn tau_sum(
    lambda: &Partition,
    mu: &Partition,
    taus: impl IntoIterator<Item = Partition>,
) -> BiSymFunc {
    let mut out = BiSymFunc::zero();
    for tau in taus {
        let term = tau_term(lambda, mu, &tau);
        out = out.add(&term);
    }
    out
}

/// A single summand `(−1)^{|τ|} s_{λ/τ}(x) s_{μ/τ′}(y)`.
pub fn tau_term(lambda: &Partition, mu: &Partition, tau: &Partition) -> BiSymFunc {
    let x_part = skew_schur(lambda, tau);
    if x_part.is_zero() {
        return BiSymFunc::zero();
    }
    let y_part = skew_schur(mu, &tau.conjugate());
    let sign = if tau.size().is_multiple_of(2) { 1 } else { -1 };
    tensor(&x_part, &y_part).scale(&BigInt::from(sign))
}

/// One entry `h_k(x)` or `h_k(y)` of the mixed matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedEntry {
    X(i64),
    Y(i64),
}

/// The `(ℓ(μ)+ℓ(λ))`-square matrix whose determinant is `S_{λ,μ}`.
///
/// With `m = ℓ(μ)` and 1-based indices, row `i ≤ m` holds
/// `h_{μ_{m+1−i} + i − j}(y)` (decreasing along the row) and row `m + k`
/// holds `h_{λ_k − k + j − m}(x)` (increasing along the row).
pub fn mixed_matrix(lambda: &Partition, mu: &Partition) -> Vec<Vec<MixedEntry>> {
    let m = mu.len();
    let n = lambda.len();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..m {
        let base = mu[m - 1 - i] as i64 + i as i64;
        rows.push((0..size).map(|j| MixedEntry::Y(base - j as i64)).collect());
    }
    for k in 0..n {
        let base = lambda[k] as i64 - k as i64 - m as i64;
        rows.push((0..size).map(|j| MixedEntry::X(base + j as i64)).collect());
    }
    rows
}

/// The two minors of one Laplace term: the `y` block on the cross columns
/// and the `x` block on the circle columns, each as a polynomial in `h_k`.
pub fn pattern_minors(
    matrix: &[Vec<MixedEntry>],
    crosses: usize,
    pattern: &CosetPattern,
) -> (ProductPoly, ProductPoly) {
    let entry = |e: MixedEntry| match e {
        MixedEntry::X(d) | MixedEntry::Y(d) => ProductPoly::generator(d),
    };
    let pick = |rows: std::ops::Range<usize>, cols: &[usize]| -> Vec<Vec<ProductPoly>> {
        rows.map(|r| cols.iter().map(|&c| entry(matrix[r][c])).collect())
            .collect()
    };
    let top = determinant(&pick(0..crosses, &pattern.cross_positions()));
    let bottom = determinant(&pick(crosses..matrix.len(), &pattern.circle_positions()));
    (top, bottom)
}

/// Which basis a [`PairExpansion`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairBasis {
    /// Classes `S_{λ,μ}` of indecomposables.
    Indecomposable,
    /// Products `h_α(x) h_β(y)` of complete symmetric functions.
    Complete,
}

impl PairBasis {
    fn tag(self) -> &'static str {
        match self {
            PairBasis::Indecomposable => "S",
            PairBasis::Complete => "h",
        }
    }
}

/// An element of Λ⊗Λ written in a basis other than Schur⊗Schur, keyed by
/// pairs of partitions.
#[derive(Clone, PartialEq, Eq)]
pub struct PairExpansion {
    basis: PairBasis,
    coeffs: BTreeMap<PairKey, BigInt>,
}

impl PairExpansion {
    pub fn new(basis: PairBasis) -> Self {
        PairExpansion { basis, coeffs: BTreeMap::new() }
    }

    pub fn basis(&self) -> PairBasis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<PairKey, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition, mu: &Partition) -> BigInt {
        self.coeffs
            .get(&PairKey::new(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add_term(&mut self, key: PairKey, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// Whether this is the single basis vector at `(λ, μ)`.
    pub fn is_unit_vector(&self, lambda: &Partition, mu: &Partition) -> bool {
        self.coeffs.len() == 1 && self.coeff(lambda, mu).is_one()
    }

    fn leading_first(&self) -> Vec<(&PairKey, &BigInt)> {
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        terms
    }
}

impl fmt::Debug for PairExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PairExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.leading_first();
        match self.basis {
            PairBasis::Indecomposable => {
                if terms.is_empty() {
                    return f.write_str("0");
                }
                for (i, (k, c)) in terms.iter().enumerate() {
                    crate::symfunc::write_signed_coeff(f, i == 0, c)?;
                    write!(f, "S[{};{}]", k.lambda, k.mu)?;
                }
                Ok(())
            }
            PairBasis::Complete => write_pair_terms(f, &terms, "h"),
        }
    }
}

impl Serialize for PairExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Tagged {
            basis: &'static str,
            terms: Vec<PairTerm>,
        }
        Tagged {
            basis: self.basis.tag(),
            terms: self
                .leading_first()
                .into_iter()
                .map(|(k, c)| PairTerm::from_entry(k, c))
                .collect(),
        }
        .serialize(s)
    }
}

/// The determinant of [`mixed_matrix`] as a polynomial in `h_k(x)`, `h_k(y)`,
/// by Laplace expansion over coset patterns with the given sign rule.
pub fn mixed_jacobi_trudi_complete_with(
    lambda: &Partition,
    mu: &Partition,
    sign_rule: SignRule,
) -> PairExpansion {
    let matrix = mixed_matrix(lambda, mu);
    let mut out = PairExpansion::new(PairBasis::Complete);
    for pattern in coset_patterns(mu.len(), lambda.len()) {
        let (top, bottom) = pattern_minors(&matrix, mu.len(), &pattern);
        if top.is_zero() || bottom.is_zero() {
            continue;
        }
        let sign = BigInt::from(sign_rule(&pattern));
        for (beta, cy) in top.terms() {
            for (alpha, cx) in bottom.terms() {
                out.add_term(PairKey::new(alpha.clone(), beta.clone()), &sign * cx * cy);
            }
        }
    }
    out
}

/// [`mixed_jacobi_trudi_complete_with`] using [`coset_sign`].
pub fn mixed_jacobi_trudi_complete(lambda: &Partition, mu: &Partition) -> PairExpansion {
    mixed_jacobi_trudi_complete_with(lambda, mu, coset_sign)
}

/// Rewrites `Σ c h_α(x) h_β(y)` in the Schur⊗Schur basis.
pub fn complete_to_bisym(f: &PairExpansion) -> BiSymFunc {
    assert_eq!(f.basis, PairBasis::Complete, "expected an h-basis expansion");
    let mut cache: HashMap<Partition, SymFunc> = HashMap::new();
    let mut expand = |p: &Partition| {
        cache
            .entry(p.clone())
            .or_insert_with(|| complete_to_schur(p))
            .clone()
    };
    let mut out = BiSymFunc::zero();
    for (k, c) in &f.coeffs {
        let term = tensor(&expand(&k.lambda), &expand(&k.mu)).scale(c);
        out = out.add(&term);
    }
    out
}

/// `S_{λ,μ}` evaluated from the mixed determinant, in the Schur⊗Schur basis.
pub fn mixed_jacobi_trudi(lambda: &Partition, mu: &Partition) -> BiSymFunc {
    complete_to_bisym(&mixed_jacobi_trudi_complete(lambda, mu))
}

/// [`mixed_jacobi_trudi`] with an alternative sign rule.
pub fn mixed_jacobi_trudi_with(lambda: &Partition, mu: &Partition, sign_rule: SignRule) -> BiSymFunc {
    complete_to_bisym(&mixed_jacobi_trudi_complete_with(lambda, mu, sign_rule))
}

/// Memoizes [`s_class`].
#[derive(Default)]
pub struct ClassCache {
    classes: HashMap<PairKey, BiSymFunc>,
}

impl ClassCache {
    pub fn new() -> Self {
        ClassCache::default()
    }

    pub fn get(&mut self, key: &PairKey) -> &BiSymFunc {
        self.classes
            .entry(key.clone())
            .or_insert_with(|| s_class(&key.lambda, &key.mu))
    }
}

/// Coefficients `a_{λ,μ}` with `f = Σ a_{λ,μ} S_{λ,μ}`.
///
/// Repeatedly takes a top-degree term `c s_λ(x)s_μ(y)` and subtracts
/// `c S_{λ,μ}`, whose other terms all have lower degree.
pub fn expand_in_s_basis(f: &BiSymFunc) -> PairExpansion {
    expand_in_s_basis_cached(f, &mut ClassCache::new())
}

pub fn expand_in_s_basis_cached(f: &BiSymFunc, cache: &mut ClassCache) -> PairExpansion {
    let mut remainder = f.clone();
    let mut out = PairExpansion::new(PairBasis::Indecomposable);
    while let Some((key, c)) = remainder.terms().iter().next_back() {
        let (key, c) = (key.clone(), c.clone());
        let class = cache.get(&key);
        remainder = remainder.sub(&class.scale(&c));
        out.add_term(key, c);
    }
    out
}

/// Multiplicities of `X_{κ,σ}` in `X_a ⊗ X_b` for generic `t`.
pub fn tensor_structure_constants(a: &PairKey, b: &PairKey) -> PairExpansion {
    let mut cache = ClassCache::new();
    let product = cache.get(a).clone().mul(cache.get(b));
    expand_in_s_basis_cached(&product, &mut cache)
}

/// Converts an expansion in the classes `S_{λ,μ}` back to Schur⊗Schur.
pub fn s_basis_to_bisym(f: &PairExpansion) -> BiSymFunc {
    assert_eq!(f.basis, PairBasis::Indecomposable, "expected an S-basis expansion");
    let mut cache = ClassCache::new();
    f.coeffs
        .iter()
        .fold(BiSymFunc::zero(), |acc, (k, c)| acc.add(&cache.get(k).scale(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisym::omega_xy;
    use crate::partition::partitions_up_to;
    use crate::symfunc::schur;

    fn p(parts: &[usize]) -> Partition {
        Partition::try_from(parts).unwrap()
    }

    fn b(l: &[usize], m: &[usize]) -> BiSymFunc {
        BiSymFunc::basis(p(l), p(m))
    }

    fn key(l: &[usize], m: &[usize]) -> PairKey {
        PairKey::new(p(l), p(m))
    }

    #[test]
    fn worked_pattern() {
        let pat: CosetPattern = "××∘×∘∘×∘".parse().unwrap();
        assert_eq!(coset_tau(&pat), (p(&[2, 1, 1]), 1));
        assert_eq!(cross_statistic(&pat), p(&[3, 1]));
        assert_eq!("xxoxooxo".parse::<CosetPattern>().unwrap(), pat);
    }

    #[test]
    fn small_patterns() {
        let id = CosetPattern::with_counts("××∘∘", 2, 2).unwrap();
        assert_eq!(coset_tau(&id), (Partition::empty(), 1));
        let swap: CosetPattern = "∘×".parse().unwrap();
        assert_eq!(coset_tau(&swap), (p(&[1]), -1));
    }

    #[test]
    fn malformed_patterns() {
        assert!(CosetPattern::with_counts("××∘", 2, 2).is_err());
        assert!(CosetPattern::with_counts("×∘∘∘", 2, 2).is_err());
        assert!("×a∘".parse::<CosetPattern>().is_err());
    }

    #[test]
    fn patterns_biject_with_rectangle() {
        for m in 0..=4 {
            for n in 0..=4 {
                let mut taus: Vec<Partition> = coset_patterns(m, n)
                    .iter()
                    .map(|pat| coset_tau(pat).0)
                    .collect();
                taus.sort();
                assert_eq!(taus, partitions_in_rectangle(n, m));
            }
        }
    }

    #[test]
    fn s_class_examples() {
        assert_eq!(s_class(&Partition::empty(), &Partition::empty()), BiSymFunc::one());
        for l in partitions_up_to(4) {
            assert_eq!(s_class(&l, &Partition::empty()), BiSymFunc::basis(l.clone(), Partition::empty()));
            assert_eq!(s_class(&Partition::empty(), &l), BiSymFunc::basis(Partition::empty(), l.clone()));
        }
        assert_eq!(s_class(&p(&[1]), &p(&[1])), b(&[1], &[1]).sub(&BiSymFunc::one()));
    }

    #[test]
    fn s_class_two_one_with_one() {
        // τ ∈ {∅, (1)}: s_{21}(x)s_1(y) − s_{21/1}(x) = s_{21}s_1 − s_2 − s_{11}.
        let expected = b(&[2, 1], &[1]).sub(&b(&[2], &[])).sub(&b(&[1, 1], &[]));
        assert_eq!(s_class(&p(&[2, 1]), &p(&[1])), expected);
    }

    #[test]
    fn mixed_matrix_small() {
        use MixedEntry::*;
        assert_eq!(
            mixed_matrix(&p(&[1]), &p(&[1])),
            vec![vec![Y(1), Y(0)], vec![X(0), X(1)]]
        );
    }

    #[test]
    fn mixed_determinant_examples() {
        assert_eq!(
            mixed_jacobi_trudi(&p(&[1]), &p(&[1])),
            b(&[1], &[1]).sub(&BiSymFunc::one())
        );
        for m in partitions_up_to(4) {
            assert_eq!(mixed_jacobi_trudi(&Partition::empty(), &m), b(&[], m.parts()));
        }
        assert_eq!(
            mixed_jacobi_trudi(&p(&[2, 1]), &p(&[1])),
            s_class(&p(&[2, 1]), &p(&[1]))
        );
    }

    #[test]
    fn h_expansion_of_two_by_two() {
        // det [[h1(y), 1], [1, h1(x)]] = h1(x)h1(y) − 1
        let h = mixed_jacobi_trudi_complete(&p(&[1]), &p(&[1]));
        assert_eq!(h.terms().len(), 2);
        assert_eq!(h.coeff(&p(&[1]), &p(&[1])), BigInt::from(1));
        assert_eq!(h.coeff(&Partition::empty(), &Partition::empty()), BigInt::from(-1));
    }

    #[test]
    fn coset_sign_is_laplace_sign() {
        for len in 0..=8 {
            for m in 0..=len {
                for pat in coset_patterns(m, len - m) {
                    assert_eq!(coset_sign(&pat), permutation_sign(&pat), "{pat}");
                    assert_eq!(cross_statistic(&pat), coset_tau(&pat).0.conjugate(), "{pat}");
                }
            }
        }
    }

    #[test]
    fn minors_are_skew_schur_functions() {
        // Each Laplace term is s_{μ/τ′}(y) · s_{λ/τ}(x).
        for l in partitions_up_to(3) {
            for m in partitions_up_to(3) {
                let matrix = mixed_matrix(&l, &m);
                for pat in coset_patterns(m.len(), l.len()) {
                    let (tau, _) = coset_tau(&pat);
                    let (top, bottom) = pattern_minors(&matrix, m.len(), &pat);
                    let top = crate::symfunc::product_poly_to_schur(&top, crate::symfunc::Generators::Complete);
                    let bottom =
                        crate::symfunc::product_poly_to_schur(&bottom, crate::symfunc::Generators::Complete);
                    assert_eq!(top, skew_schur(&m, &tau.conjugate()), "top {l:?} {m:?} {pat}");
                    assert_eq!(bottom, skew_schur(&l, &tau), "bottom {l:?} {m:?} {pat}");
                }
            }
        }
    }

    #[test]
    fn determinant_matches_sum_small() {
        for l in partitions_up_to(3) {
            for m in partitions_up_to(3) {
                assert_eq!(mixed_jacobi_trudi(&l, &m), s_class(&l, &m), "{l:?} {m:?}");
            }
        }
    }

    #[test]
    fn rectangle_sum_agrees() {
        for l in partitions_up_to(4) {
            for m in partitions_up_to(4) {
                assert_eq!(s_class_over_rectangle(&l, &m), s_class(&l, &m));
                for tau in partitions_in_rectangle(l.len(), m.len()) {
                    if !(l.contains(&tau) && m.contains(&tau.conjugate())) {
                        assert!(tau_term(&l, &m, &tau).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn omega_duality_small() {
        for l in partitions_up_to(3) {
            for m in partitions_up_to(3) {
                assert_eq!(omega_xy(&s_class(&l, &m)), s_class(&l.conjugate(), &m.conjugate()));
            }
        }
    }

    #[test]
    fn leading_term() {
        for l in partitions_up_to(3) {
            for m in partitions_up_to(3) {
                let rest = s_class(&l, &m).sub(&BiSymFunc::basis(l.clone(), m.clone()));
                assert!(rest.degree().is_none_or(|d| d < l.size() + m.size()));
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let f = s_class(&p(&[1]), &p(&[1]));
        assert!(expand_in_s_basis(&f).is_unit_vector(&p(&[1]), &p(&[1])));

        let e = expand_in_s_basis(&b(&[1], &[1]));
        assert_eq!(e.terms().len(), 2);
        assert_eq!(e.coeff(&p(&[1]), &p(&[1])), BigInt::one());
        assert_eq!(e.coeff(&Partition::empty(), &Partition::empty()), BigInt::one());

        assert!(expand_in_s_basis(&BiSymFunc::one()).is_unit_vector(&Partition::empty(), &Partition::empty()));
        assert!(expand_in_s_basis(&BiSymFunc::zero()).terms().is_empty());
    }

    #[test]
    fn expansion_round_trip() {
        let f = b(&[2, 1], &[1]).sub(&b(&[], &[3]).scale(&BigInt::from(5))).add(&BiSymFunc::one());
        assert_eq!(s_basis_to_bisym(&expand_in_s_basis(&f)), f);
    }

    #[test]
    fn structure_constant_examples() {
        let v_dual = tensor_structure_constants(&key(&[1], &[]), &key(&[], &[1]));
        assert_eq!(v_dual.terms().len(), 2);
        assert_eq!(v_dual.coeff(&p(&[1]), &p(&[1])), BigInt::one());
        assert_eq!(v_dual.coeff(&Partition::empty(), &Partition::empty()), BigInt::one());

        let vv = tensor_structure_constants(&key(&[1], &[]), &key(&[1], &[]));
        assert_eq!(vv.terms().len(), 2);
        assert_eq!(vv.coeff(&p(&[2]), &Partition::empty()), BigInt::one());
        assert_eq!(vv.coeff(&p(&[1, 1]), &Partition::empty()), BigInt::one());

        for a in [key(&[2, 1], &[1]), key(&[], &[]), key(&[1], &[2])] {
            let unit = tensor_structure_constants(&key(&[], &[]), &a);
            assert!(unit.is_unit_vector(&a.lambda, &a.mu));
        }
    }

    #[test]
    fn adjoint_squared() {
        // X_{1,1} ⊗ X_{1,1} for generic t: the classical decomposition of
        // gl ⊗ gl, which has 7 summands counting the two copies of X_{1,1}.
        let c = tensor_structure_constants(&key(&[1], &[1]), &key(&[1], &[1]));
        assert_eq!(c.coeff(&p(&[1]), &p(&[1])), BigInt::from(2));
        assert_eq!(c.coeff(&Partition::empty(), &Partition::empty()), BigInt::one());
        for (l, m) in [(&[2][..], &[2][..]), (&[2], &[1, 1]), (&[1, 1], &[2]), (&[1, 1], &[1, 1])] {
            assert_eq!(c.coeff(&p(l), &p(m)), BigInt::one());
        }
        assert_eq!(c.terms().len(), 6);
    }

    #[test]
    fn json_tagging() {
        let e = expand_in_s_basis(&b(&[1], &[1]));
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"basis":"S","terms":[{"lambda":[1],"mu":[1],"coeff":"1"},{"lambda":[],"mu":[],"coeff":"1"}]}"#
        );
        assert_eq!(e.to_string(), "S[1;1] + S[;]");
    }

    #[test]
    fn schur_unit() {
        assert_eq!(tensor(&schur(&p(&[1])), &SymFunc::one()), b(&[1], &[]));
    }
}
