//! The ring Λ of symmetric functions over ℤ, stored in the Schur basis.
//!
//! Products use the Littlewood–Richardson rule (horizontal strips with a
//! lattice condition). Skew Schur functions are expanded by a separate
//! enumeration of lattice skew tableaux, and the Pieri rules give a third,
//! independent route used by the h/e conversions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ring::{determinant, ProductPoly};

/// A finite ℤ-combination of Schur functions. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    coeffs: BTreeMap<Partition, BigInt>,
}

/// Which family of generators a product expansion or determinant uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generators {
    /// Complete homogeneous `h_k`.
    Complete,
    /// Elementary `e_k`.
    Elementary,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        schur(&Partition::empty())
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, BigInt)>>(terms: I) -> Self {
        let mut f = SymFunc::zero();
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest `|λ|` among the terms; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    pub fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(p.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> SymFunc {
        if k.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        }
    }

    /// Bilinear extension of the Littlewood–Richardson product.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        multiply(self, other)
    }
}

/// The basis element `s_p`.
pub fn schur(p: &Partition) -> SymFunc {
    SymFunc {
        coeffs: BTreeMap::from([(p.clone(), BigInt::one())]),
    }
}

/// `a · b` in the Schur basis.
pub fn multiply(a: &SymFunc, b: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (la, ca) in &a.coeffs {
        for (mu, cb) in &b.coeffs {
            let c = ca * cb;
            // The LR enumeration is cheaper when the content is the smaller one.
            let (base, content) = if la.size() >= mu.size() { (la, mu) } else { (mu, la) };
            for (nu, n) in lr_expand(base, content) {
                out.add_term(nu, &c * BigInt::from(n));
            }
        }
    }
    out
}

/// Littlewood–Richardson coefficients `c^ν_{λμ}` for all `ν`, counted as
/// semistandard fillings of `ν/λ` with content `μ` whose reading word (rows top
/// to bottom, each right to left) is a lattice word.
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let shape = lambda.parts().to_vec();
    lr_letters(0, &shape, &[], mu.parts(), &mut out);
    out
}

// Adds the letter `k + 1` as a horizontal strip of `content[k]` boxes. The
// lattice condition for letter k+1 against letter k reads: for every row r,
// #(k+1 in rows ≤ r) ≤ #(k in rows < r).
fn lr_letters(
    k: usize,
    shape: &[usize],
    prev_counts: &[usize],
    content: &[usize],
    out: &mut BTreeMap<Partition, u64>,
) {
    if k == content.len() {
        let nu = Partition::new(shape.to_vec()).expect("LR strips keep shapes partitions");
        *out.entry(nu).or_default() += 1;
        return;
    }
    let rows = shape.len() + 1;
    let mut added = vec![0usize; rows];
    lr_strip_rows(k, 0, content[k], 0, shape, prev_counts, content, &mut added, out);
}

#[allow(clippy::too_many_arguments)]
fn lr_strip_rows(
    k: usize,
    r: usize,
    remaining: usize,
    placed_above: usize,
    shape: &[usize],
    prev_counts: &[usize],
    content: &[usize],
    added: &mut Vec<usize>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        let mut next = shape.to_vec();
        next.resize(added.len(), 0);
        for (row, a) in next.iter_mut().zip(added.iter()) {
            *row += a;
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        let counts: Vec<usize> = added.clone();
        lr_letters(k + 1, &next, &counts, content, out);
        return;
    }
    if r == added.len() {
        return;
    }
    let old = |i: usize| shape.get(i).copied().unwrap_or(0);
    let strip_room = if r == 0 { remaining } else { old(r - 1) - old(r) };
    let lattice_room = if k == 0 {
        remaining
    } else {
        let prev_above: usize = prev_counts.iter().take(r).sum();
        prev_above.saturating_sub(placed_above)
    };
    let max_here = remaining.min(strip_room).min(lattice_room);
    for a in (0..=max_here).rev() {
        added[r] = a;
        lr_strip_rows(
            k,
            r + 1,
            remaining - a,
            placed_above + a,
            shape,
            prev_counts,
            content,
            added,
            out,
        );
    }
    added[r] = 0;
}

/// Multiplies by `e_i`: adds `i` boxes, no two in the same row.
pub fn pieri_column(f: &SymFunc, i: usize) -> SymFunc {
    pieri(f, i, true)
}

/// Multiplies by `h_i`: adds `i` boxes, no two in the same column.
pub fn pieri_row(f: &SymFunc, i: usize) -> SymFunc {
    pieri(f, i, false)
}

fn pieri(f: &SymFunc, i: usize, vertical: bool) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lambda, c) in &f.coeffs {
        let strips = if vertical {
            vertical_strips(lambda, i)
        } else {
            horizontal_strips(lambda, i)
        };
        for nu in strips {
            out.add_term(nu, c.clone());
        }
    }
    out
}

/// All `ν ⊇ λ` with `ν/λ` a horizontal strip of `i` boxes.
pub fn horizontal_strips(lambda: &Partition, i: usize) -> Vec<Partition> {
    fn rec(lambda: &Partition, r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if r > lambda.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip is a partition"));
            }
            return;
        }
        let room = if r == 0 { left } else { lambda[r - 1] - lambda[r] };
        for a in 0..=room.min(left) {
            cur.push(lambda[r] + a);
            rec(lambda, r + 1, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, i, &mut Vec::new(), &mut out);
    out
}

/// All `ν ⊇ λ` with `ν/λ` a vertical strip of `i` boxes.
pub fn vertical_strips(lambda: &Partition, i: usize) -> Vec<Partition> {
    horizontal_strips(&lambda.conjugate(), i)
        .into_iter()
        .map(|p| p.conjugate())
        .collect()
}

/// Schur expansion of `h_{m_1} ⋯ h_{m_k}` by iterated row Pieri.
pub fn complete_to_schur(m: &Partition) -> SymFunc {
    m.parts()
        .iter()
        .fold(SymFunc::one(), |acc, &part| pieri_row(&acc, part))
}

/// Schur expansion of `e_{m_1} ⋯ e_{m_k}` by iterated column Pieri.
pub fn elementary_to_schur(m: &Partition) -> SymFunc {
    m.parts()
        .iter()
        .fold(SymFunc::one(), |acc, &part| pieri_column(&acc, part))
}

/// Converts a polynomial in `h_k` (or `e_k`) to the Schur basis.
pub fn product_poly_to_schur(poly: &ProductPoly, gens: Generators) -> SymFunc {
    let mut out = SymFunc::zero();
    for (m, c) in poly.terms() {
        let expanded = match gens {
            Generators::Complete => complete_to_schur(m),
            Generators::Elementary => elementary_to_schur(m),
        };
        out = out.add(&expanded.scale(c));
    }
    out
}

/// Schur expansion of `s_{outer/inner}`; zero if `inner ⊄ outer`.
///
/// Enumerates semistandard fillings of the skew shape with lattice reading
/// word; the content of each is a partition `ν` and contributes `s_ν`.
pub fn skew_schur(outer: &Partition, inner: &Partition) -> SymFunc {
    if !outer.contains(inner) {
        return SymFunc::zero();
    }
    let rows: Vec<Vec<usize>> = (0..outer.len())
        .map(|r| vec![0; outer[r] - inner[r]])
        .collect();
    let mut filler = SkewFiller {
        inner,
        rows,
        counts: vec![0; outer.len() + 1],
        out: HashMap::new(),
    };
    filler.fill(0, outer[0].saturating_sub(inner[0]));
    SymFunc::from_terms(
        filler
            .out
            .into_iter()
            .map(|(p, n)| (p, BigInt::from(n))),
    )
}

struct SkewFiller<'a> {
    inner: &'a Partition,
    rows: Vec<Vec<usize>>,
    // counts[e] = occurrences of letter e so far (index 0 unused).
    counts: Vec<usize>,
    out: HashMap<Partition, u64>,
}

impl SkewFiller<'_> {
    // Fills row `r` right to left; `k` cells of the row are still empty.
    fn fill(&mut self, r: usize, k: usize) {
        if r == self.rows.len() {
            let content: Vec<usize> = self.counts[1..].to_vec();
            let nu = Partition::new(content).expect("lattice words have partition content");
            *self.out.entry(nu).or_default() += 1;
            return;
        }
        if k == 0 {
            let next = r + 1;
            let len = if next < self.rows.len() { self.rows[next].len() } else { 0 };
            self.fill(next, len);
            return;
        }
        let idx = k - 1;
        let col = self.inner[r] + idx;
        let hi_row = if idx + 1 < self.rows[r].len() {
            self.rows[r][idx + 1]
        } else {
            usize::MAX
        };
        let mut lo = 1;
        if r > 0 && col >= self.inner[r - 1] {
            lo = self.rows[r - 1][col - self.inner[r - 1]] + 1;
        }
        let used = self.counts.iter().rposition(|&c| c > 0).unwrap_or(0);
        let hi = hi_row.min(used + 1).min(self.counts.len() - 1);
        for e in lo..=hi {
            if e >= 2 && self.counts[e] + 1 > self.counts[e - 1] {
                continue;
            }
            self.rows[r][idx] = e;
            self.counts[e] += 1;
            self.fill(r, k - 1);
            self.counts[e] -= 1;
        }
    }
}

/// The involution ω: `s_λ ↦ s_{λ′}`.
pub fn omega(f: &SymFunc) -> SymFunc {
    SymFunc {
        coeffs: f
            .coeffs
            .iter()
            .map(|(p, c)| (p.conjugate(), c.clone()))
            .collect(),
    }
}

/// Evaluates the Jacobi–Trudi determinant for `s_p` in the chosen generators
/// and expands it in the Schur basis:
/// `det(h_{p_i − i + j})` or `det(e_{p′_i − i + j})`.
pub fn jacobi_trudi(p: &Partition, gens: Generators) -> SymFunc {
    product_poly_to_schur(&jacobi_trudi_generators(p, gens), gens)
}

/// The Jacobi–Trudi determinant left as a polynomial in the generators.
pub fn jacobi_trudi_generators(p: &Partition, gens: Generators) -> ProductPoly {
    let rows = match gens {
        Generators::Complete => p.clone(),
        Generators::Elementary => p.conjugate(),
    };
    let n = rows.len();
    let matrix: Vec<Vec<ProductPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| ProductPoly::generator(rows[i] as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&matrix)
}

impl crate::ring::CommRing for SymFunc {
    fn zero() -> Self {
        SymFunc::zero()
    }
    fn one() -> Self {
        SymFunc::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        SymFunc::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        multiply(self, other)
    }
    fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            write_signed_coeff(f, i == 0, c)?;
            write!(f, "s[{p}]")?;
        }
        Ok(())
    }
}

/// Writes ` + ` / ` - ` separators and the coefficient magnitude when it is
/// not 1, followed by `*`.
pub(crate) fn write_signed_coeff(f: &mut impl fmt::Write, first: bool, c: &BigInt) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let mag = c.abs();
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct SymTerm {
    partition: Vec<usize>,
    coeff: String,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<SymTerm> = self
            .coeffs
            .iter()
            .map(|(p, c)| SymTerm {
                partition: p.parts().to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<SymTerm>::deserialize(d)?;
        let mut f = SymFunc::zero();
        for t in terms {
            let p = Partition::new(t.partition).map_err(serde::de::Error::custom)?;
            let c = parse_coeff(&t.coeff).map_err(serde::de::Error::custom)?;
            f.add_term(p, c);
        }
        Ok(f)
    }
}

pub(crate) fn parse_coeff(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("coefficient {s:?} is not a decimal integer")))
}
