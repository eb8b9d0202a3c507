//! Λ⊗Λ: symmetric functions in two independent alphabets `x` and `y`.
//!
//! A term `(λ, μ)` stands for `s_λ(x) s_μ(y)`. The two alphabets are never
//! identified with each other here; inverting `y = x⁻¹` happens only when
//! specializing to a fixed rank.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;

use crate::symfunc::{self, parse_coeff, write_signed_coeff, SymFunc};

/// Index of a basis element `s_λ(x) s_μ(y)`, ordered by degree `|λ| + |μ|`,
/// then `λ`, then `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairKey {
    pub lambda: Partition,
    pub mu: Partition,
}

impl PairKey {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        PairKey { lambda, mu }
    }

    pub fn degree(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lambda.cmp(&other.lambda))
            .then_with(|| self.mu.cmp(&other.mu))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiSymFunc {
    coeffs: BTreeMap<PairKey, BigInt>,
}

impl BiSymFunc {
    pub fn zero() -> Self {
        BiSymFunc::default()
    }

    pub fn one() -> Self {
        BiSymFunc::basis(Partition::empty(), Partition::empty())
    }

    /// `s_λ(x) s_μ(y)`.
    pub fn basis(lambda: Partition, mu: Partition) -> Self {
        BiSymFunc {
            coeffs: BTreeMap::from([(PairKey::new(lambda, mu), BigInt::one())]),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (PairKey, BigInt)>>(terms: I) -> Self {
        let mut f = BiSymFunc::zero();
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
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

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Filtration degree: the largest `|λ| + |μ|` among the terms.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().map(PairKey::degree)
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

    pub fn add(&self, other: &BiSymFunc) -> BiSymFunc {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &BiSymFunc) -> BiSymFunc {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> BiSymFunc {
        if k.is_zero() {
            return BiSymFunc::zero();
        }
        BiSymFunc {
            coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &BiSymFunc) -> BiSymFunc {
        multiply(self, other)
    }

    /// Terms in the serialization order: descending degree, then `λ`, then `μ`
    /// ascending within a degree. Leading terms come first.
    pub fn terms_leading_first(&self) -> Vec<(&PairKey, &BigInt)> {
        let mut by_degree: BTreeMap<std::cmp::Reverse<usize>, Vec<(&PairKey, &BigInt)>> =
            BTreeMap::new();
        for (k, c) in &self.coeffs {
            by_degree.entry(std::cmp::Reverse(k.degree())).or_default().push((k, c));
        }
        by_degree.into_values().flatten().collect()
    }
}

/// `a(x) · b(y)`.
pub fn tensor(a: &SymFunc, b: &SymFunc) -> BiSymFunc {
    let mut out = BiSymFunc::zero();
    for (l, ca) in a.terms() {
        for (m, cb) in b.terms() {
            out.add_term(PairKey::new(l.clone(), m.clone()), ca * cb);
        }
    }
    out
}

/// Product in Λ⊗Λ: independent Littlewood–Richardson products in each
/// alphabet.
pub fn multiply(a: &BiSymFunc, b: &BiSymFunc) -> BiSymFunc {
    let mut out = BiSymFunc::zero();
    for (ka, ca) in &a.coeffs {
        for (kb, cb) in &b.coeffs {
            let c = ca * cb;
            let xs = symfunc::lr_expand(&ka.lambda, &kb.lambda);
            let ys = symfunc::lr_expand(&ka.mu, &kb.mu);
            for (l, nx) in &xs {
                for (m, ny) in &ys {
                    out.add_term(
                        PairKey::new(l.clone(), m.clone()),
                        &c * BigInt::from(nx * ny),
                    );
                }
            }
        }
    }
    out
}

/// ω applied in both alphabets: transposes both partitions of every term.
pub fn omega_xy(f: &BiSymFunc) -> BiSymFunc {
    BiSymFunc {
        coeffs: f
            .coeffs
            .iter()
            .map(|(k, c)| (PairKey::new(k.lambda.conjugate(), k.mu.conjugate()), c.clone()))
            .collect(),
    }
}

/// `e_i(x)`, the class of the `i`-th exterior power of the tautological object.
pub fn e_x(i: usize) -> BiSymFunc {
    BiSymFunc::basis(Partition::column(i), Partition::empty())
}

/// `e_i(y)`, the class of the `i`-th exterior power of its dual.
pub fn e_y(i: usize) -> BiSymFunc {
    BiSymFunc::basis(Partition::empty(), Partition::column(i))
}

/// `h_i(x)`.
pub fn h_x(i: usize) -> BiSymFunc {
    BiSymFunc::basis(Partition::row(i), Partition::empty())
}

/// `h_i(y)`.
pub fn h_y(i: usize) -> BiSymFunc {
    BiSymFunc::basis(Partition::empty(), Partition::row(i))
}

/// Whether the given elements are linearly independent over ℚ, decided by
/// exact fraction-free (Bareiss) elimination on their coordinate vectors.
pub fn linearly_independent(elements: &[BiSymFunc]) -> bool {
    let mut columns: BTreeMap<&PairKey, usize> = BTreeMap::new();
    for f in elements {
        for k in f.coeffs.keys() {
            let next = columns.len();
            columns.entry(k).or_insert(next);
        }
    }
    let mut rows: Vec<Vec<BigInt>> = elements
        .iter()
        .map(|f| {
            let mut row = vec![BigInt::zero(); columns.len()];
            for (k, c) in &f.coeffs {
                row[columns[k]] = c.clone();
            }
            row
        })
        .collect();
    rank(&mut rows) == elements.len()
}

fn rank(rows: &mut [Vec<BigInt>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..ncols {
        let Some(pivot_row) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot_row);
        let pivot = rows[r][col].clone();
        let (top, below) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in below {
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (&pivot * &*x - &factor * p) / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

impl crate::ring::CommRing for BiSymFunc {
    fn zero() -> Self {
        BiSymFunc::zero()
    }
    fn one() -> Self {
        BiSymFunc::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        BiSymFunc::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        multiply(self, other)
    }
    fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Debug for BiSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_pair_terms(f, &self.terms_leading_first(), "s")
    }
}

/// Human-readable form `c*s[λ](x)s[μ](y)`; the constant term prints as a bare
/// coefficient.
pub(crate) fn write_pair_terms(
    f: &mut impl fmt::Write,
    terms: &[(&PairKey, &BigInt)],
    symbol: &str,
) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, (k, c)) in terms.iter().enumerate() {
        if k.lambda.is_empty() && k.mu.is_empty() && symbol == "s" {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            write!(f, "{}", c.abs())?;
            continue;
        }
        write_signed_coeff(f, i == 0, c)?;
        let mut wrote = false;
        if !k.lambda.is_empty() || symbol != "s" {
            write!(f, "{symbol}[{}](x)", k.lambda)?;
            wrote = true;
        }
        if !k.mu.is_empty() || !wrote {
            write!(f, "{symbol}[{}](y)", k.mu)?;
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
pub(crate) struct PairTerm {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub coeff: String,
}

impl PairTerm {
    pub(crate) fn from_entry(k: &PairKey, c: &BigInt) -> Self {
        PairTerm {
            lambda: k.lambda.parts().to_vec(),
            mu: k.mu.parts().to_vec(),
            coeff: c.to_string(),
        }
    }
}

impl BiSymFunc {
    pub(crate) fn json_terms(&self) -> Vec<PairTerm> {
        self.terms_leading_first()
            .into_iter()
            .map(|(k, c)| PairTerm::from_entry(k, c))
            .collect()
    }
}

impl Serialize for BiSymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiSymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<PairTerm>::deserialize(d)?;
        let mut f = BiSymFunc::zero();
        for t in terms {
            let l = Partition::new(t.lambda).map_err(serde::de::Error::custom)?;
            let m = Partition::new(t.mu).map_err(serde::de::Error::custom)?;
            let c = parse_coeff(&t.coeff).map_err(serde::de::Error::custom)?;
            f.add_term(PairKey::new(l, m), c);
        }
        Ok(f)
    }
}
