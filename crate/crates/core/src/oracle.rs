//! Brute-force ground truth: symmetric functions expanded into honest
//! polynomials in finitely many variables.
//!
//! Nothing in here uses the Schur-basis machinery of [`crate::symfunc`]; Schur
//! polynomials come straight from semistandard tableaux or from a ratio of
//! alternants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bisym::BiSymFunc;
use crate::error::{Error, Result};
use crate::partition::{enumerate_ssyt, Partition, SkewShape};
use crate::ring::determinant;

/// The four alphabets that appear in the generating-function identity.
/// Variables print as `a1, b1, x1, y1, …`, and this is also their order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    Alpha,
    Beta,
    X,
    Y,
}

impl Alphabet {
    pub const ALL: [Alphabet; 4] = [Alphabet::Alpha, Alphabet::Beta, Alphabet::X, Alphabet::Y];

    fn index(self) -> usize {
        self as usize
    }

    fn name(self) -> &'static str {
        match self {
            Alphabet::Alpha => "a",
            Alphabet::Beta => "b",
            Alphabet::X => "x",
            Alphabet::Y => "y",
        }
    }
}

/// Variable budget per alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Layout {
    counts: [usize; 4],
}

impl Layout {
    pub fn new() -> Self {
        Layout::default()
    }

    pub fn with(mut self, alphabet: Alphabet, nvars: usize) -> Self {
        self.counts[alphabet.index()] = nvars;
        self
    }

    pub fn count(&self, alphabet: Alphabet) -> usize {
        self.counts[alphabet.index()]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    fn offset(&self, alphabet: Alphabet) -> usize {
        self.counts[..alphabet.index()].iter().sum()
    }

    fn join(&self, other: &Layout) -> Layout {
        let mut counts = [0; 4];
        for (i, c) in counts.iter_mut().enumerate() {
            *c = self.counts[i].max(other.counts[i]);
        }
        Layout { counts }
    }
}

pub type Exponents = Vec<u16>;

/// A polynomial with integer coefficients in the variables of a [`Layout`].
/// Operands with different layouts are first widened to a common one, so the
/// zero and unit polynomials live in the empty layout.
#[derive(Clone, Default)]
pub struct MultiPoly {
    layout: Layout,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    /// The variable `alphabet_{index+1}` in a layout with `nvars` variables of
    /// that alphabet.
    pub fn var(alphabet: Alphabet, index: usize, nvars: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        MultiPoly::monomial(Layout::new().with(alphabet, nvars), alphabet, &{
            let mut e = vec![0; nvars];
            e[index] = 1;
            e
        })
    }

    /// A monomial in one alphabet, embedded in `layout`.
    pub fn monomial(layout: Layout, alphabet: Alphabet, exps: &[u16]) -> Self {
        assert!(exps.len() <= layout.count(alphabet));
        let mut key = vec![0; layout.total()];
        let off = layout.offset(alphabet);
        key[off..off + exps.len()].copy_from_slice(exps);
        let mut p = MultiPoly { layout, terms: BTreeMap::new() };
        p.add_term(key, BigInt::one());
        p
    }

    /// A single term `c · x^key` in `layout`.
    pub fn from_term(layout: Layout, key: Exponents, c: BigInt) -> Self {
        assert_eq!(key.len(), layout.total(), "exponent vector does not match layout");
        let mut p = MultiPoly { layout, terms: BTreeMap::new() };
        p.add_term(key, c);
        p
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Re-embeds into a layout with at least as many variables per alphabet.
    pub fn widen(&self, layout: Layout) -> MultiPoly {
        if layout == self.layout {
            return self.clone();
        }
        let target = self.layout.join(&layout);
        let mut out = MultiPoly { layout: target, terms: BTreeMap::new() };
        for (k, c) in &self.terms {
            let mut key = vec![0; target.total()];
            for a in Alphabet::ALL {
                let (src, dst, n) = (self.layout.offset(a), target.offset(a), self.layout.count(a));
                key[dst..dst + n].copy_from_slice(&k[src..src + n]);
            }
            out.terms.insert(key, c.clone());
        }
        out
    }

    fn aligned(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let layout = self.layout.join(&other.layout);
        (self.widen(layout), other.widen(layout))
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned(other);
        for (k, c) in b.terms {
            a.add_term(k, c);
        }
        a
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly { layout: self.layout, terms: BTreeMap::new() };
        }
        MultiPoly {
            layout: self.layout,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.mul_truncated(other, &[], usize::MAX)
    }

    /// Product with every term whose total degree in `alphabets` exceeds
    /// `max_degree` dropped.
    pub fn mul_truncated(&self, other: &MultiPoly, alphabets: &[Alphabet], max_degree: usize) -> MultiPoly {
        let (a, b) = self.aligned(other);
        let layout = a.layout;
        let ranges: Vec<_> = alphabets
            .iter()
            .map(|&al| layout.offset(al)..layout.offset(al) + layout.count(al))
            .collect();
        let degree = |k: &[u16]| -> usize {
            ranges.iter().map(|r| k[r.clone()].iter().map(|&e| e as usize).sum::<usize>()).sum()
        };
        let a_terms: Vec<_> = a.terms.iter().map(|(k, c)| (k, c, degree(k))).collect();
        let b_terms: Vec<_> = b.terms.iter().map(|(k, c)| (k, c, degree(k))).collect();
        let mut acc: HashMap<Exponents, BigInt> = HashMap::new();
        for (ka, ca, da) in &a_terms {
            for (kb, cb, db) in &b_terms {
                if da + db > max_degree {
                    continue;
                }
                let key: Exponents = ka.iter().zip(kb.iter()).map(|(x, y)| x + y).collect();
                *acc.entry(key).or_default() += *ca * *cb;
            }
        }
        MultiPoly {
            layout,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Drops every term of total degree above `max_degree` in `alphabets`.
    pub fn truncate(&self, alphabets: &[Alphabet], max_degree: usize) -> MultiPoly {
        self.mul_truncated(&MultiPoly::one(), alphabets, max_degree)
    }

    /// Sets one variable to zero (keeping the layout).
    pub fn set_zero(&self, alphabet: Alphabet, index: usize) -> MultiPoly {
        let pos = self.layout.offset(alphabet) + index;
        MultiPoly {
            layout: self.layout,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k[pos] == 0)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// The coefficient of a monomial in the given alphabets, as a polynomial
    /// in the remaining ones. `exps` lists exponents per alphabet, padded with
    /// zeros to the layout's variable count.
    pub fn coefficient(&self, exps: &[(Alphabet, &[u16])]) -> MultiPoly {
        let layout = self.layout;
        let mut out = MultiPoly { layout, terms: BTreeMap::new() };
        'terms: for (k, c) in &self.terms {
            let mut rest = k.clone();
            for &(al, e) in exps {
                let off = layout.offset(al);
                for i in 0..layout.count(al) {
                    let want = e.get(i).copied().unwrap_or(0);
                    if k[off + i] != want {
                        continue 'terms;
                    }
                    rest[off + i] = 0;
                }
            }
            out.add_term(rest, c.clone());
        }
        out
    }

    /// Exact quotient by long division in lexicographic order (variables in
    /// layout order). Fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        let (mut rem, d) = self.aligned(divisor);
        let Some((d_lead, d_coeff)) = d.terms.iter().next_back() else {
            return Err(Error::NonzeroRemainder);
        };
        let (d_lead, d_coeff) = (d_lead.clone(), d_coeff.clone());
        let mut quotient = MultiPoly { layout: rem.layout, terms: BTreeMap::new() };
        while let Some((lead, c)) = rem.terms.iter().next_back() {
            if lead.iter().zip(&d_lead).any(|(a, b)| a < b) || !(c % &d_coeff).is_zero() {
                return Err(Error::NonzeroRemainder);
            }
            let q_exp: Exponents = lead.iter().zip(&d_lead).map(|(a, b)| a - b).collect();
            let q = MultiPoly {
                layout: rem.layout,
                terms: BTreeMap::from([(q_exp, c / &d_coeff)]),
            };
            rem = rem.sub(&q.mul(&d));
            quotient = quotient.add(&q);
        }
        Ok(quotient)
    }

    /// The polynomial is unchanged by every permutation of the variables of
    /// `alphabet`.
    pub fn is_symmetric_in(&self, alphabet: Alphabet) -> bool {
        let n = self.layout.count(alphabet);
        let off = self.layout.offset(alphabet);
        // Adjacent transpositions generate the symmetric group.
        (0..n.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(k, c)| {
                let mut swapped = k.clone();
                swapped.swap(off + i, off + i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl crate::ring::CommRing for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    /// Terms from the lexicographically largest exponent down, e.g.
    /// `x1^2 + x1*x2 - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let mut vars = Vec::new();
            for a in Alphabet::ALL {
                let off = self.layout.offset(a);
                for j in 0..self.layout.count(a) {
                    match k[off + j] {
                        0 => {}
                        1 => vars.push(format!("{}{}", a.name(), j + 1)),
                        e => vars.push(format!("{}{}^{e}", a.name(), j + 1)),
                    }
                }
            }
            let sep = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mag = c.abs();
            if vars.is_empty() {
                write!(f, "{sep}{mag}")?;
            } else if mag.is_one() {
                write!(f, "{sep}{}", vars.join("*"))?;
            } else {
                write!(f, "{sep}{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `s_p` in `nvars` variables of `alphabet`, summed over semistandard
/// tableaux. Zero when `ℓ(p) > nvars`.
pub fn schur_poly(p: &Partition, alphabet: Alphabet, nvars: usize) -> MultiPoly {
    skew_schur_poly(p, &Partition::empty(), alphabet, nvars)
}

/// `s_{outer/inner}` in `nvars` variables; zero if `inner ⊄ outer`.
pub fn skew_schur_poly(outer: &Partition, inner: &Partition, alphabet: Alphabet, nvars: usize) -> MultiPoly {
    let layout = Layout::new().with(alphabet, nvars);
    let mut out = MultiPoly { layout, terms: BTreeMap::new() };
    let Ok(shape) = SkewShape::new(outer.clone(), inner.clone()) else {
        return out;
    };
    let off = layout.offset(alphabet);
    for t in enumerate_ssyt(&shape, nvars) {
        let mut key = vec![0; layout.total()];
        for (i, c) in t.content(nvars).into_iter().enumerate() {
            key[off + i] = c as u16;
        }
        out.add_term(key, BigInt::one());
    }
    out
}

/// Replaces each `s_λ(x) s_μ(y)` by the product of Schur polynomials in `nx`
/// and `ny` variables.
pub fn expand_bisym(f: &BiSymFunc, nx: usize, ny: usize) -> MultiPoly {
    let mut xs: HashMap<&Partition, MultiPoly> = HashMap::new();
    let mut ys: HashMap<&Partition, MultiPoly> = HashMap::new();
    let layout = Layout::new().with(Alphabet::X, nx).with(Alphabet::Y, ny);
    let mut out = MultiPoly { layout, terms: BTreeMap::new() };
    for (k, c) in f.terms() {
        let px = xs.entry(&k.lambda).or_insert_with(|| schur_poly(&k.lambda, Alphabet::X, nx));
        if px.is_zero() {
            continue;
        }
        let px = px.clone();
        let py = ys.entry(&k.mu).or_insert_with(|| schur_poly(&k.mu, Alphabet::Y, ny));
        out = out.add(&px.mul(py).scale(c));
    }
    out
}

/// `s_p(x_1..x_n)` as `det(x_i^{p_j + n − j}) / det(x_i^{n − j})`, by exact
/// division by the Vandermonde determinant.
pub fn bialternant_schur(p: &Partition, nvars: usize) -> Result<MultiPoly> {
    if p.len() > nvars {
        return Err(Error::RankTooSmall { n: nvars, required: p.len() });
    }
    let alternant = |shift: &dyn Fn(usize) -> usize| -> MultiPoly {
        let layout = Layout::new().with(Alphabet::X, nvars);
        let matrix: Vec<Vec<MultiPoly>> = (0..nvars)
            .map(|i| {
                (0..nvars)
                    .map(|j| {
                        let mut e = vec![0u16; nvars];
                        e[i] = shift(j) as u16;
                        MultiPoly::monomial(layout, Alphabet::X, &e)
                    })
                    .collect()
            })
            .collect();
        determinant(&matrix)
    };
    if nvars == 0 {
        return Ok(MultiPoly::one());
    }
    let numerator = alternant(&|j| p[j] + nvars - 1 - j);
    let vandermonde = alternant(&|j| nvars - 1 - j);
    numerator.div_exact(&vandermonde)
}
