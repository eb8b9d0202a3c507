//! Self-checking suites exposed through `deligne verify`.
//!
//! Each suite enumerates a finite family of cases, checks an exact identity
//! on every one, and reports the number of cases and any failures in
//! enumeration order.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bisym::omega_xy;
use crate::deligne::{mixed_jacobi_trudi_with, s_class, SignRule};
use crate::genfun::{compare_genfun, verify_cauchy, verify_dual_cauchy, TruncationSpec};
use crate::error::Result;
use crate::partition::{partitions_up_to, Partition};
use crate::specialize::{check_detshift, rational_schur_char, signature_of, specialize_to_gl_n};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Free-form lines shown under the verdict (truncation used, etc.).
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str, cases: usize, failures: Vec<String>) -> Self {
        SuiteReport { suite: suite.to_string(), cases, failures, notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        for n in &self.notes {
            writeln!(f, "{n}")?;
        }
        if self.passed() {
            writeln!(f, "PASS ({} cases)", self.cases)
        } else {
            writeln!(f, "FAIL ({} of {} cases)", self.failures.len(), self.cases)?;
            for line in self.failures.iter().take(10) {
                writeln!(f, "  {line}")?;
            }
            Ok(())
        }
    }
}

fn pairs_up_to(max_size: usize) -> Vec<(Partition, Partition)> {
    let ps = partitions_up_to(max_size);
    ps.iter()
        .flat_map(|l| ps.iter().map(move |m| (l.clone(), m.clone())))
        .collect()
}

fn collect_failures<T: Sync>(cases: &[T], check: impl Fn(&T) -> Option<String> + Sync + Send) -> Vec<String> {
    cases.par_iter().filter_map(check).collect()
}

/// Determinant and τ-sum agree for all `|λ|, |μ| ≤ max_size`.
pub fn detsum(max_size: usize, sign_rule: SignRule) -> SuiteReport {
    let cases = pairs_up_to(max_size);
    let failures = collect_failures(&cases, |(l, m)| {
        (mixed_jacobi_trudi_with(l, m, sign_rule) != s_class(l, m))
            .then(|| format!("lambda=({l}) mu=({m}): determinant differs from the tau-sum"))
    });
    SuiteReport::new("detsum", cases.len(), failures)
}

/// `ω_xy(S_{λ,μ}) = S_{λ′,μ′}` for all `|λ|, |μ| ≤ max_size`.
pub fn omega(max_size: usize) -> SuiteReport {
    let cases = pairs_up_to(max_size);
    let failures = collect_failures(&cases, |(l, m)| {
        (omega_xy(&s_class(l, m)) != s_class(&l.conjugate(), &m.conjugate()))
            .then(|| format!("lambda=({l}) mu=({m}): omega image differs"))
    });
    SuiteReport::new("omega", cases.len(), failures)
}

/// The generating function at `a = b = 2`, `nx = ny = 3` and the given
/// degree.
pub fn genfun(degree: usize) -> Result<SuiteReport> {
    let t = TruncationSpec::new(2, 2, 3, 3, degree)?;
    let report = compare_genfun(&t);
    let failures = report
        .first_difference
        .iter()
        .map(|(mono, l, r)| format!("first differing monomial {mono}: lhs {l}, rhs {r}"))
        .collect();
    let mut out = SuiteReport::new("genfun", 1, failures);
    out.notes.push(format!(
        "truncation: a={} b={} nx={} ny={} degree={}",
        t.a, t.b, t.nx, t.ny, t.degree
    ));
    out.notes.push(format!("pairs summed: {}", report.pairs));
    out.notes.push(format!("monomials compared: {}", report.terms));
    Ok(out)
}

/// The Cauchy identity for every `|τ| ≤ max_tau` at `a = nx = 2`, and the dual
/// Cauchy identity at `a = b = 2`.
pub fn cauchy(max_tau: usize, degree: usize, dual_degree: usize) -> Result<SuiteReport> {
    let t = TruncationSpec::new(2, 2, 2, 2, degree)?;
    let dual = TruncationSpec::new(2, 2, 1, 1, dual_degree)?;
    let taus = partitions_up_to(max_tau);
    let mut failures = collect_failures(&taus, |tau| {
        (!verify_cauchy(tau, &t)).then(|| format!("tau=({tau}): Cauchy identity fails"))
    });
    if !verify_dual_cauchy(&dual) {
        failures.push("dual Cauchy identity fails".to_string());
    }
    let mut out = SuiteReport::new("cauchy", taus.len() + 1, failures);
    out.notes.push(format!("degree {degree}, dual degree {dual_degree}"));
    Ok(out)
}

/// `Λ^i(V*) = Λ^{n−i}V ⊗ det*` on characters, `0 ≤ i ≤ n ≤ max_n`.
pub fn detshift(max_n: usize) -> SuiteReport {
    let cases: Vec<(usize, usize)> = (0..=max_n).flat_map(|n| (0..=n).map(move |i| (i, n))).collect();
    let failures = collect_failures(&cases, |&(i, n)| {
        (check_detshift(i, n) != Ok(true)).then(|| format!("i={i} n={n}"))
    });
    SuiteReport::new("detshift", cases.len(), failures)
}

/// Specializing `S_{λ,μ}` to `GL_n` gives the irreducible character of
/// signature `(λ, 0, …, 0, −μ^rev)`, for `|λ|, |μ| ≤ max_size` and
/// `ℓ(λ) + ℓ(μ) ≤ n ≤ max_n`.
pub fn f_n(max_size: usize, max_n: usize) -> SuiteReport {
    let cases: Vec<(Partition, Partition, usize)> = pairs_up_to(max_size)
        .into_iter()
        .flat_map(|(l, m)| {
            let lo = l.len() + m.len();
            (lo..=max_n).map(move |n| (l.clone(), m.clone(), n))
        })
        .collect();
    let failures = collect_failures(&cases, |(l, m, n)| {
        let sig = signature_of(l, m, *n).expect("n is in the stable range");
        let ch = specialize_to_gl_n(&s_class(l, m), *n);
        (ch != rational_schur_char(&sig) || !ch.is_symmetric())
            .then(|| format!("lambda=({l}) mu=({m}) n={n}"))
    });
    SuiteReport::new("f_n", cases.len(), failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deligne::{coset_sign, CosetPattern};

    #[test]
    fn quick_suites_pass() {
        assert!(detsum(2, coset_sign).passed());
        assert!(omega(2).passed());
        assert!(detshift(3).passed());
        assert!(f_n(2, 3).passed());
    }

    fn flipped(p: &CosetPattern) -> i8 {
        // Mutant: wrong sign for one specific pattern.
        if p.to_string() == "∘×" {
            -coset_sign(p)
        } else {
            coset_sign(p)
        }
    }

    #[test]
    fn detsum_catches_a_sign_mutation() {
        let r = detsum(2, flipped);
        assert!(!r.passed());
        assert!(r.to_string().contains("FAIL"));
    }

    #[test]
    fn report_text() {
        let r = detshift(1);
        assert_eq!(r.to_string(), "suite: detshift\nPASS (3 cases)\n");
    }
}
