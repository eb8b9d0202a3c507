//! Specialization to characters of `GL_n`: `x ↦ (x_1, …, x_n)` and
//! `y ↦ (x_1⁻¹, …, x_n⁻¹)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bisym::BiSymFunc;
use crate::error::{Error, Result};
use crate::oracle::{schur_poly, Alphabet, MultiPoly};
use crate::partition::Partition;

/// Integer Laurent polynomial in `x_1, …, x_n`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        LaurentPoly::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exps: Vec<i32>, c: BigInt) -> Self {
        let mut p = LaurentPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// `(x_1 ⋯ x_n)^k`, the character of `det^k`.
    pub fn det_power(nvars: usize, k: i32) -> Self {
        LaurentPoly::monomial(vec![k; nvars], BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<i32>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// The `x` alphabet of a polynomial, with every exponent multiplied by
    /// `sign` (`-1` inverts the variables).
    pub fn from_poly(p: &MultiPoly, alphabet: Alphabet, nvars: usize, sign: i32) -> Self {
        let p = p.widen(crate::oracle::Layout::new().with(alphabet, nvars));
        let layout = p.layout();
        let off: usize = Alphabet::ALL
            .iter()
            .take_while(|&&a| a != alphabet)
            .map(|&a| layout.count(a))
            .sum();
        let mut out = LaurentPoly::zero(nvars);
        for (k, c) in p.terms() {
            let others = k.iter().enumerate().any(|(i, &e)| e != 0 && !(off..off + nvars).contains(&i));
            assert!(!others, "polynomial involves variables outside the {alphabet:?} alphabet");
            let exps = k[off..off + nvars].iter().map(|&e| sign * e as i32).collect();
            out.add_term(exps, c.clone());
        }
        out
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut acc: HashMap<Vec<i32>, BigInt> = HashMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                *acc.entry(key).or_default() += ca * cb;
            }
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Invariant under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(k, c)| {
                let mut swapped = k.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in increasing exponent order, each written with every exponent
    /// explicit: `x1^1*x2^-1 + x1^0*x2^0 + x1^-1*x2^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            f.write_str(sep)?;
            let mag = c.abs();
            if !mag.is_one() || k.is_empty() {
                write!(f, "{mag}")?;
                if !k.is_empty() {
                    f.write_str("*")?;
                }
            }
            let vars: Vec<String> = k.iter().enumerate().map(|(j, e)| format!("x{}^{e}", j + 1)).collect();
            f.write_str(&vars.join("*"))?;
        }
        Ok(())
    }
}

/// A highest weight of a rational `GL_n` representation: a weakly decreasing
/// integer vector, negative entries allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature(Vec<i64>);

impl Signature {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("signature {entries:?} is not weakly decreasing")));
        }
        Ok(Signature(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `(λ_1, …, λ_r, 0, …, 0, −μ_s, …, −μ_1)` of length `n`.
pub fn signature_of(lambda: &Partition, mu: &Partition, n: usize) -> Result<Signature> {
    let required = lambda.len() + mu.len();
    if n < required {
        return Err(Error::RankTooSmall { n, required });
    }
    let mut v: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    v.resize(n - mu.len(), 0);
    v.extend(mu.parts().iter().rev().map(|&p| -(p as i64)));
    Signature::new(v)
}

/// The character of the irreducible with highest weight `s`, obtained by
/// shifting by `det^q` with `q = max(0, −s_n)` to a polynomial weight.
pub fn rational_schur_char(s: &Signature) -> LaurentPoly {
    let q = s.0.last().map_or(0, |&last| (-last).max(0));
    rational_schur_char_with_shift(s, q as u32)
}

/// As [`rational_schur_char`] but with an explicit shift `q`; any `q` making
/// every entry nonnegative gives the same character.
pub fn rational_schur_char_with_shift(s: &Signature, q: u32) -> LaurentPoly {
    let n = s.len();
    let shifted: Vec<usize> = s
        .0
        .iter()
        .map(|&e| usize::try_from(e + q as i64).expect("shift must make the weight nonnegative"))
        .collect();
    let rho = Partition::new(shifted).expect("shifted signature is weakly decreasing");
    let poly = LaurentPoly::from_poly(&schur_poly(&rho, Alphabet::X, n), Alphabet::X, n, 1);
    poly.mul(&LaurentPoly::det_power(n, -(q as i32)))
}

/// The image under the rank-`n` specialization: each `s_λ(x) s_μ(y)` becomes
/// `s_λ(x_1..x_n) · s_μ(x_1⁻¹..x_n⁻¹)`.
pub fn specialize_to_gl_n(f: &BiSymFunc, n: usize) -> LaurentPoly {
    let mut xs: HashMap<&Partition, LaurentPoly> = HashMap::new();
    let mut ys: HashMap<&Partition, LaurentPoly> = HashMap::new();
    let mut out = LaurentPoly::zero(n);
    for (k, c) in f.terms() {
        let px = xs
            .entry(&k.lambda)
            .or_insert_with(|| LaurentPoly::from_poly(&schur_poly(&k.lambda, Alphabet::X, n), Alphabet::X, n, 1))
            .clone();
        if px.is_zero() {
            continue;
        }
        let py = ys
            .entry(&k.mu)
            .or_insert_with(|| LaurentPoly::from_poly(&schur_poly(&k.mu, Alphabet::X, n), Alphabet::X, n, -1));
        out = out.add(&px.mul(py).scale(c));
    }
    out
}

/// Checks `Λ^i(V*) = Λ^{n−i}(V) ⊗ det(V)*` on characters: `e_i` of the
/// inverted variables equals `e_{n−i}(x) · (x_1 ⋯ x_n)⁻¹`.
pub fn check_detshift(i: usize, n: usize) -> Result<bool> {
    if i > n {
        return Err(Error::RankTooSmall { n, required: i });
    }
    let e = |k: usize, sign: i32| {
        LaurentPoly::from_poly(&schur_poly(&Partition::column(k), Alphabet::X, n), Alphabet::X, n, sign)
    };
    let lhs = e(i, -1);
    let rhs = e(n - i, 1).mul(&LaurentPoly::det_power(n, -1));
    Ok(lhs == rhs)
}
