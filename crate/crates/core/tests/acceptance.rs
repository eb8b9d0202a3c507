//! Acceptance gate. Each criterion runs at full size, is timed against its
//! budget, and prints one PASS/FAIL line. Exits nonzero if any criterion
//! fails.
//!
//! Run with `cargo test --test acceptance`.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use deligne_ring::bisym::{e_x, e_y, linearly_independent, multiply as bimul, omega_xy, BiSymFunc};
use deligne_ring::deligne::{coset_sign, cross_statistic, Symbol};
use deligne_ring::genfun::{compare_genfun, verify_cauchy, verify_dual_cauchy, TruncationSpec};
use deligne_ring::oracle::{bialternant_schur, schur_poly, Alphabet, MultiPoly};
use deligne_ring::partition::{partitions_of, partitions_up_to};
use deligne_ring::specialize::{
    check_detshift, rational_schur_char, signature_of, specialize_to_gl_n, LaurentPoly,
};
use deligne_ring::symfunc::multiply;
use deligne_ring::symfunc::schur;
use deligne_ring::{
    coset_tau, expand_in_s_basis, mixed_jacobi_trudi, s_class, CosetPattern, PairKey, Partition,
};

type Outcome = Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn pairs(max_size: usize) -> Vec<(Partition, Partition)> {
    let ps = partitions_up_to(max_size);
    ps.iter()
        .flat_map(|l| ps.iter().map(move |m| (l.clone(), m.clone())))
        .collect()
}

fn first_failure<T: Sync + std::fmt::Debug>(cases: &[T], ok: impl Fn(&T) -> bool + Sync + Send) -> Option<String> {
    cases.par_iter().find_first(|c| !ok(c)).map(|c| format!("{c:?}"))
}

fn determinant_equals_sum() -> Outcome {
    let cases = pairs(5);
    match first_failure(&cases, |(l, m)| mixed_jacobi_trudi(l, m) == s_class(l, m)) {
        None => Ok(format!("{} pairs", cases.len())),
        Some(c) => Err(format!("determinant differs at {c}")),
    }
}

fn generating_function() -> Outcome {
    let t = TruncationSpec::new(2, 2, 3, 3, 6).map_err(|e| e.to_string())?;
    let r = compare_genfun(&t);
    match r.first_difference {
        None => Ok(format!("{} pairs, {} monomials", r.pairs, r.terms)),
        Some((mono, l, rhs)) => Err(format!("coefficient of {mono}: lhs {l}, rhs {rhs}")),
    }
}

fn omega_duality() -> Outcome {
    let cases = pairs(5);
    let ok = |(l, m): &(Partition, Partition)| {
        omega_xy(&s_class(l, m)) == s_class(&l.conjugate(), &m.conjugate())
    };
    match first_failure(&cases, ok) {
        None => Ok(format!("{} pairs", cases.len())),
        Some(c) => Err(format!("omega image differs at {c}")),
    }
}

/// The Weyl character by the ratio of alternants, shifted by a power of the
/// determinant to a polynomial weight.
fn weyl_character(sig: &[i64]) -> LaurentPoly {
    let n = sig.len();
    let q = sig.iter().copied().min().unwrap_or(0).min(0).unsigned_abs() as i64;
    let shifted = Partition::new(sig.iter().map(|&e| (e + q) as usize).collect()).unwrap();
    let poly = bialternant_schur(&shifted, n).unwrap();
    LaurentPoly::from_poly(&poly, Alphabet::X, n, 1).mul(&LaurentPoly::det_power(n, -(q as i32)))
}

fn gl_n_characters() -> Outcome {
    let cases: Vec<(Partition, Partition, usize)> = pairs(4)
        .into_iter()
        .flat_map(|(l, m)| {
            let lo = l.len() + m.len();
            (lo..=4).map(move |n| (l.clone(), m.clone(), n))
        })
        .collect();
    let ok = |(l, m, n): &(Partition, Partition, usize)| {
        let sig = signature_of(l, m, *n).unwrap();
        let ch = specialize_to_gl_n(&s_class(l, m), *n);
        ch == rational_schur_char(&sig) && ch == weyl_character(sig.entries())
    };
    match first_failure(&cases, ok) {
        None => Ok(format!("{} (lambda, mu, n) cases", cases.len())),
        Some(c) => Err(format!("character mismatch at {c}")),
    }
}

/// `e_k` of `n` variables raised to the power `sign`, by listing subsets.
fn elementary_by_subsets(k: usize, n: usize, sign: i32) -> LaurentPoly {
    let mut out = LaurentPoly::zero(n);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            let exps = (0..n).map(|i| if mask >> i & 1 == 1 { sign } else { 0 }).collect();
            out = out.add(&LaurentPoly::monomial(exps, BigInt::from(1)));
        }
    }
    out
}

fn exterior_powers() -> Outcome {
    let mut cases = 0;
    for n in 0..=5 {
        for i in 0..=n {
            let lhs = elementary_by_subsets(i, n, -1);
            let rhs = elementary_by_subsets(n - i, n, 1).mul(&LaurentPoly::det_power(n, -1));
            if check_detshift(i, n) != Ok(true) || lhs != rhs {
                return Err(format!("i={i} n={n}"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} (i, n) cases"))
}

fn cauchy_identities() -> Outcome {
    let t = TruncationSpec::new(2, 2, 2, 2, 5).map_err(|e| e.to_string())?;
    let taus = partitions_up_to(3);
    if let Some(tau) = taus.iter().find(|tau| !verify_cauchy(tau, &t)) {
        return Err(format!("Cauchy identity fails for tau={tau:?}"));
    }
    let dual = TruncationSpec::new(2, 2, 2, 2, 4).map_err(|e| e.to_string())?;
    if !verify_dual_cauchy(&dual) {
        return Err("dual Cauchy identity fails".into());
    }
    Ok(format!("{} shapes tau plus the dual identity", taus.len()))
}

/// Sign of the permutation listing cross positions, then circle positions.
fn inversion_sign(symbols: &[bool]) -> i8 {
    let order: Vec<usize> = (0..symbols.len())
        .filter(|&i| symbols[i])
        .chain((0..symbols.len()).filter(|&i| !symbols[i]))
        .collect();
    let mut inversions = 0;
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            if order[a] > order[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 { 1 } else { -1 }
}

/// For each circle, the number of crosses to its right, sorted.
fn tau_by_counting(symbols: &[bool]) -> Vec<usize> {
    let mut parts: Vec<usize> = (0..symbols.len())
        .filter(|&i| !symbols[i])
        .map(|i| symbols[i + 1..].iter().filter(|&&c| c).count())
        .filter(|&k| k > 0)
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

fn sign_rule() -> Outcome {
    let mut count = 0;
    for len in 0..=8usize {
        for mask in 0u32..(1 << len) {
            let symbols: Vec<bool> = (0..len).map(|i| mask >> i & 1 == 1).collect();
            let pattern = CosetPattern::new(
                symbols.iter().map(|&c| if c { Symbol::Cross } else { Symbol::Circle }).collect(),
            );
            let (tau, sign) = coset_tau(&pattern);
            let expected = inversion_sign(&symbols);
            if sign != expected
                || coset_sign(&pattern) != expected
                || tau.parts() != tau_by_counting(&symbols).as_slice()
                || cross_statistic(&pattern) != tau.conjugate()
            {
                return Err(format!("pattern {pattern}"));
            }
            count += 1;
        }
    }
    let worked: CosetPattern = "××∘×∘∘×∘".parse().map_err(|e| format!("{e}"))?;
    let (tau, _) = coset_tau(&worked);
    if tau.parts() != [2, 1, 1] {
        return Err(format!("worked pattern gives {tau:?}"));
    }
    Ok(format!("{count} patterns, worked pattern gives (2,1,1)"))
}

fn basis_structure() -> Outcome {
    // Monomials e_a(x) e_b(y) of total degree ≤ 5.
    let mut monomials = Vec::new();
    for d in 0..=5 {
        for dx in 0..=d {
            for a in partitions_of(dx) {
                for b in partitions_of(d - dx) {
                    let mut f = BiSymFunc::one();
                    for &i in a.parts() {
                        f = bimul(&f, &e_x(i));
                    }
                    for &i in b.parts() {
                        f = bimul(&f, &e_y(i));
                    }
                    monomials.push(f);
                }
            }
        }
    }
    if !linearly_independent(&monomials) {
        return Err("e-monomials are dependent".into());
    }
    let cases: Vec<(Partition, Partition)> = pairs(6)
        .into_iter()
        .filter(|(l, m)| l.size() + m.size() <= 6)
        .collect();
    let ok = |(l, m): &(Partition, Partition)| {
        let e = expand_in_s_basis(&s_class(l, m));
        e.terms().len() == 1 && e.terms().get(&PairKey::new(l.clone(), m.clone())) == Some(&BigInt::from(1))
    };
    match first_failure(&cases, ok) {
        None => Ok(format!("{} monomials independent, {} classes round-trip", monomials.len(), cases.len())),
        Some(c) => Err(format!("expansion is not the unit vector at {c}")),
    }
}

fn oracle_spine() -> Outcome {
    let mut checked = 0;
    for p in partitions_up_to(5) {
        for n in 0..=4 {
            let tableaux = schur_poly(&p, Alphabet::X, n);
            let ok = match bialternant_schur(&p, n) {
                Ok(ratio) => ratio == tableaux,
                Err(_) => p.len() > n && tableaux.is_zero(),
            };
            if !ok {
                return Err(format!("schur_poly and bialternant differ for {p:?}, n={n}"));
            }
            checked += 1;
        }
    }
    // Products of total degree ≤ 6, in 6 variables so no Schur polynomial of
    // degree ≤ 6 vanishes.
    let nvars = 6;
    let ps = partitions_up_to(6);
    let polys: HashMap<Partition, MultiPoly> =
        ps.par_iter().map(|p| (p.clone(), schur_poly(p, Alphabet::X, nvars))).collect();
    let products: Vec<(Partition, Partition)> = pairs(6)
        .into_iter()
        .filter(|(l, m)| l.size() + m.size() <= 6 && l <= m)
        .collect();
    let ok = |(l, m): &(Partition, Partition)| {
        let lr = multiply(&schur(l), &schur(m));
        let mut lhs = MultiPoly::zero();
        for (nu, c) in lr.terms() {
            lhs = lhs.add(&polys[nu].scale(c));
        }
        lhs == polys[l].mul(&polys[m])
    };
    match first_failure(&products, ok) {
        None => Ok(format!("{checked} Schur polynomials, {} products", products.len())),
        Some(c) => Err(format!("LR product differs from polynomial product at {c}")),
    }
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "mixed determinant equals the tau-sum, |lambda|,|mu| <= 5", budget: Duration::from_secs(60), run: determinant_equals_sum },
        Criterion { id: 2, name: "generating function, a=b=2 nx=ny=3 D=6", budget: Duration::from_secs(120), run: generating_function },
        Criterion { id: 3, name: "omega duality, |lambda|,|mu| <= 5", budget: Duration::from_secs(30), run: omega_duality },
        Criterion { id: 4, name: "GL_n characters, |lambda|,|mu| <= 4, n <= 4", budget: Duration::from_secs(60), run: gl_n_characters },
        Criterion { id: 5, name: "dual exterior powers, 0 <= i <= n <= 5", budget: Duration::from_secs(1), run: exterior_powers },
        Criterion { id: 6, name: "Cauchy |tau| <= 3 at a=nx=2 D=5; dual at a=b=2 D=4", budget: Duration::from_secs(10), run: cauchy_identities },
        Criterion { id: 7, name: "coset sign rule, all patterns of length <= 8", budget: Duration::from_secs(1), run: sign_rule },
        Criterion { id: 8, name: "e-monomials independent to degree 5; class expansion is the identity to degree 6", budget: Duration::from_secs(30), run: basis_structure },
        Criterion { id: 9, name: "tableaux vs bialternant; LR vs polynomial products", budget: Duration::from_secs(60), run: oracle_spine },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (verdict, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the time budget")),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "{verdict} [{}] {}: {detail} ({:.3}s, budget {}s)",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
