//! Commutative-ring plumbing shared by the symbolic determinants.

use std::collections::BTreeMap;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// The operations a determinant needs. Implementations are exact.
pub trait CommRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl CommRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        Neg::neg(self.clone())
    }
}

/// Determinant of a square matrix by cofactor expansion, memoized over column
/// subsets: `O(n 2^n)` ring multiplications, zero entries skipped.
pub fn determinant<R: CommRing>(matrix: &[Vec<R>]) -> R {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(n < usize::BITS as usize, "matrix too large");
    if n == 0 {
        return R::one();
    }
    // dp[mask] = det of rows 0..|mask| restricted to the columns in mask.
    let mut dp: Vec<Option<R>> = vec![None; 1 << n];
    dp[0] = Some(R::one());
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = R::zero();
        for col in 0..n {
            if mask & (1 << col) == 0 || matrix[row][col].is_zero() {
                continue;
            }
            let Some(minor) = dp[mask & !(1 << col)].as_ref() else {
                continue;
            };
            if minor.is_zero() {
                continue;
            }
            let term = minor.mul(&matrix[row][col]);
            let larger = (mask >> (col + 1)).count_ones();
            acc = if larger % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        dp[mask] = Some(acc);
    }
    dp.pop().flatten().unwrap_or_else(R::zero)
}

/// An integer combination of products `g_{k_1} g_{k_2} ⋯` of a single family of
/// algebraically independent generators `g_1, g_2, …` (with `g_0 = 1`).
///
/// Monomials are keyed by the multiset of indices, stored as a partition. Used
/// with `g = h` or `g = e` to keep Jacobi–Trudi determinants in the
/// generators before converting to the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ProductPoly {
    terms: BTreeMap<Partition, BigInt>,
}

impl ProductPoly {
    /// The generator `g_d`; `g_0 = 1` and `g_d = 0` for negative `d`.
    pub fn generator(d: i64) -> Self {
        match d {
            d if d < 0 => ProductPoly::default(),
            0 => <Self as CommRing>::one(),
            d => ProductPoly {
                terms: BTreeMap::from([(Partition::row(d as usize), <BigInt as One>::one())]),
            },
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, key: Partition, c: BigInt) {
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += c;
        if Zero::is_zero(entry) {
            self.terms.remove(&key);
        }
    }
}

impl CommRing for ProductPoly {
    fn zero() -> Self {
        ProductPoly::default()
    }
    fn one() -> Self {
        ProductPoly {
            terms: BTreeMap::from([(Partition::empty(), <BigInt as One>::one())]),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(k.clone(), c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = ProductPoly::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.insert_add(Partition::from_multiset(parts), ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        ProductPoly {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}
