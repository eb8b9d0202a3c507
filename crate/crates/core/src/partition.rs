//! Integer partitions, skew shapes and the enumeration primitives built on them.
//!
//! Every enumeration in this crate is returned in the canonical order: by size,
//! then reverse-lexicographically by parts, so `(3) < (2,1) < (1,1,1)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are never
/// stored; indexing past the last part yields `0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are not
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                input: format!("{parts:?}"),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary nonnegative entries into a partition (used for
    /// multisets of generator indices).
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_multiset(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, `0` for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Cell-wise containment `inner ⊆ self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(i, o)| i <= o)
    }

    /// Whether the diagram fits in a box with `rows` rows and `cols` columns.
    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"2,1,1"`, `"[2,1,1]"`, `""` and `"[]"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidPartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim();
        let body = body
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad("parts must be nonnegative integers")))
            .collect::<Result<Vec<_>>>()?;
        if parts.iter().rev().skip_while(|&&p| p == 0).any(|&p| p == 0) {
            return Err(bad("zero part before a positive part"));
        }
        Partition::new(parts).map_err(|_| bad("parts must be weakly decreasing"))
    }
}

impl TryFrom<&[usize]> for Partition {
    type Error = Error;

    fn try_from(parts: &[usize]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidPartition {
                input: format!("{outer:?}/{inner:?}"),
                reason: "inner partition not contained in outer".into(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Column range `inner[r]..outer[r]` of row `r`.
    fn row_cells(&self, r: usize) -> std::ops::Range<usize> {
        self.inner[r]..self.outer[r]
    }
}

/// All partitions of `n` in canonical order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(n, n, usize::MAX, &mut current, &mut out);
    out
}

/// All partitions of size at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

// Emits parts in lexicographically decreasing order, which is the canonical
// order within a fixed size.
fn partitions_rec(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if current.len() == max_len {
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        partitions_rec(remaining - part, part, max_len, current, out);
        current.pop();
    }
}

/// All partitions of `n` with at most `max_len` parts.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_rec(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// Every partition whose diagram fits in a `rows × cols` box, canonical order.
/// There are `C(rows + cols, rows)` of them.
pub fn partitions_in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=rows * cols {
        let mut level = Vec::new();
        partitions_rec(n, cols, rows, &mut Vec::new(), &mut level);
        out.extend(level);
    }
    out
}

/// A semistandard filling of a skew shape. `rows[r]` holds the entries of the
/// cells `inner[r]..outer[r]` of row `r`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Number of occurrences of each entry `1..=max_entry`.
    pub fn content(&self, max_entry: usize) -> Vec<usize> {
        let mut c = vec![0; max_entry];
        for &e in self.rows.iter().flatten() {
            c[e - 1] += 1;
        }
        c
    }
}

/// All semistandard tableaux of `shape` with entries in `1..=max_entry`: rows
/// weakly increase, columns strictly increase. Cells are filled row by row,
/// left to right, smallest entries first.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> Vec<Tableau> {
    let rows: Vec<Vec<usize>> = (0..shape.outer.len())
        .map(|r| vec![0; shape.row_cells(r).len()])
        .collect();
    let mut state = Tableau { rows };
    let mut out = Vec::new();
    if max_entry == 0 && shape.size() > 0 {
        return out;
    }
    fill_ssyt(shape, max_entry, 0, 0, &mut state, &mut out);
    out
}

fn fill_ssyt(
    shape: &SkewShape,
    max_entry: usize,
    r: usize,
    k: usize,
    state: &mut Tableau,
    out: &mut Vec<Tableau>,
) {
    if r == state.rows.len() {
        out.push(state.clone());
        return;
    }
    if k == state.rows[r].len() {
        fill_ssyt(shape, max_entry, r + 1, 0, state, out);
        return;
    }
    let col = shape.inner[r] + k;
    let mut lo = if k > 0 { state.rows[r][k - 1] } else { 1 };
    // The cell above is part of the skew shape iff col >= inner[r-1].
    if r > 0 && col >= shape.inner[r - 1] {
        lo = lo.max(state.rows[r - 1][col - shape.inner[r - 1]] + 1);
    }
    for e in lo..=max_entry {
        state.rows[r][k] = e;
        fill_ssyt(shape, max_entry, r, k + 1, state, out);
    }
}
