//! One PASS/FAIL line per acceptance criterion. Every comparison is exact.

use std::time::{Duration, Instant};

use detsing::verify::{
    betti_check, display_terms, moduli_point_failure, random_element, random_word, relation_failures, run_suite,
    Suite, VerifyConfig,
};
use detsing_core::clifford::blocks::hankel_factorial_matrix;
use detsing_core::clifford::pbw::convert;
use detsing_core::clifford::{block_decomposition, hankel_factorial_det, pbw_expand_with, presentation, symmetric_diagonalize, Ordering, Strategy};
use detsing_core::cohomology::{direct_image, dual_triple, rank_polynomial};
use detsing_core::ext::{cohom_omega_crosscheck, ext_dim, simple_resolution_table};
use detsing_core::moduli::random_point;
use detsing_core::oracle::hilbert_hom;
use detsing_core::{QMatrix, Rational, RingContext};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn chi_line(m: i64, s: i64) -> i128 {
    let (mut num, mut den) = (1i128, 1i128);
    for k in 1..m {
        num *= (s + k) as i128;
        den *= k as i128;
    }
    num / den
}

// χ(Hom(Ω^{b−1}(b), Ω^{a−1}(a))(z)) from the Koszul classes of both sides.
fn chi_hom(m: usize, a: usize, b: usize, z: i64) -> i128 {
    let mi = m as i64;
    let class = |k: i64| (0..=k).map(move |i| (i, if i % 2 == 0 { 1 } else { -1 } * binom(mi, k - i)));
    let mut total = 0;
    for (i, ci) in class(b as i64 - 1) {
        for (j, cj) in class(a as i64 - 1) {
            total += ci * cj * chi_line(mi, j - i + z);
        }
    }
    total
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for m in 1..=5usize {
        for a in 1..=m {
            for b in 1..=m {
                for c in -(m as i64 + 2)..=2 * m as i64 {
                    count += 1;
                    let e = direct_image(m, a, b, c).map_err(|e| e.to_string())?;
                    if e.nu.is_none() != (e.rank == 0) {
                        return Err(format!("({m},{a},{b},{c}): ν and rank disagree"));
                    }
                    let signed = e.nu.map_or(0, |nu| if nu % 2 == 0 { 1 } else { -1 } * e.rank as i128);
                    if signed != chi_hom(m, a, b, -c) {
                        return Err(format!("({m},{a},{b},{c}): table {signed}, Euler characteristic {}", chi_hom(m, a, b, -c)));
                    }
                    let (a2, b2, c2) = dual_triple(m, a, b, c);
                    let d = direct_image(m, a2, b2, c2).map_err(|e| e.to_string())?;
                    if (d.nu, d.rank) != (e.nu, e.rank) || dual_triple(m, a2, b2, c2) != (a, b, c) {
                        return Err(format!("({m},{a},{b},{c}): involution"));
                    }
                }
                if a + b > m {
                    let p = rank_polynomial(m, a, b).map_err(|e| e.to_string())?;
                    for z in -(m as i64) - 3..=2 * m as i64 + 3 {
                        if p.eval(z) != Rational::from_integer(BigInt::from(chi_hom(m, a, b, z))) {
                            return Err(format!("r^{b}_{a} at {z} on P^{}", m - 1));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{count} triples: at most one ν, Euler characteristic, involution, rank polynomials beyond the nodes"))
}

fn criterion_2() -> Outcome {
    for m in 1..=3 {
        for n in m..=3 {
            let ctx = RingContext::new(m, n).map_err(|e| e.to_string())?;
            let bad = relation_failures(ctx);
            if !bad.is_empty() {
                return Err(format!("({m},{n}): {}", bad.join("; ")));
            }
        }
    }
    let ctx = RingContext::new(3, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let triples: Vec<_> = (0..200).map(|_| (random_element(ctx, &mut rng), random_element(ctx, &mut rng), random_element(ctx, &mut rng))).collect();
    let bad = triples.par_iter().filter(|(u, v, w)| u.star(v).star(w) != u.star(&v.star(w))).count();
    if bad > 0 {
        return Err(format!("{bad} of 200 triples are not associative"));
    }
    Ok("relations and centrality for (m,n) <= (3,3); 200 associative triples at (3,3)".into())
}

fn criterion_3() -> Outcome {
    let cfg = VerifyConfig { m: 3, n: 3, max_degree: 0, seed: 7, samples: 200 };
    let report = run_suite(Suite::Pbw, &cfg).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(format!("{:?}", report.failures()));
    }
    let ctx = RingContext::new(3, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for len in 0..=6 {
        for _ in 0..20 {
            let w = random_word(&ctx, len, &mut rng);
            let right = pbw_expand_with(&ctx, &w, Ordering::RightFirst, &mut Strategy::Rightmost);
            let left = pbw_expand_with(&ctx, &w, Ordering::LeftFirst, &mut Strategy::Rightmost);
            if convert(&ctx, &left, Ordering::RightFirst) != right {
                return Err(format!("change of basis fails on {w:?}"));
            }
        }
    }
    Ok("confluence on 200 words, left-first to right-first change of basis, constant terms are maximal minors".into())
}

fn criterion_4() -> Outcome {
    let mut lines = Vec::new();
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let cfg = VerifyConfig { m, n, max_degree: 6, seed: 11, samples: 0 };
        let report = run_suite(Suite::Hilbert, &cfg).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(format!("({m},{n}): {:?}", report.failures()));
        }
        lines.push(format!("({m},{n}) {} pairs", report.checks.len()));
    }
    Ok(format!("Hilbert functions through degree 6 and generic ranks: {}", lines.join(", ")))
}

fn criterion_5() -> Outcome {
    let mut jobs = Vec::new();
    for (m, n, bound) in [(2, 2, 6), (2, 3, 6), (3, 3, 4)] {
        for a in 1..=m {
            for b in 1..=m {
                jobs.push((m, n, a, b, bound));
            }
        }
    }
    let results: Vec<Result<(), String>> = jobs
        .par_iter()
        .map(|&(m, n, a, b, bound)| betti_check(m, n, a, b, bound).map(|_| ()).map_err(|e| format!("({m},{n}) Hom(M_{a}, M_{b}): {e}")))
        .collect();
    let bad: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    if !bad.is_empty() {
        return Err(bad.join("; "));
    }
    Ok(format!("{} Betti tables match, pd = n - m + 1", jobs.len()))
}

fn criterion_6() -> Outcome {
    for t in 0..=5usize {
        for u in 2 * t..=12 {
            let d = hankel_factorial_det(u, t).map_err(|e| e.to_string())?;
            if d.is_zero() {
                return Err(format!("det vanishes at u = {u}, t = {t}"));
            }
            let a = hankel_factorial_matrix(u, t);
            let (p, diag) = symmetric_diagonalize(&a).map_err(|e| e.to_string())?;
            let dm = QMatrix::from_fn(t, t, |i, j| if i == j { diag[i].clone() } else { Rational::zero() });
            let unit = (0..t).all(|i| p.get(i, i).is_one() && (0..i).all(|j| p.get(i, j).is_zero()));
            if !unit || p.mul(&dm).unwrap().mul(&p.transpose()).unwrap() != a {
                return Err(format!("P D Pᵀ fails at u = {u}, t = {t}"));
            }
        }
    }
    let (m, n) = (3, 3);
    for a in 1..=m {
        for b in 1..=m {
            let (a2, b2) = if a + b > m { (a, b) } else { (m + 1 - b, m + 1 - a) };
            let bd = block_decomposition(m, n, a2, b2).map_err(|e| e.to_string())?;
            if !bd.reconstructs_rho().map_err(|e| e.to_string())? || !bd.reconstructs_a().map_err(|e| e.to_string())? {
                return Err(format!("C_{a}{b}: reconstruction"));
            }
            let pres = presentation(m, n, a, b).map_err(|e| e.to_string())?;
            for d in 0..=4 {
                let want = hilbert_hom(m, n, a, b, d).map_err(|e| e.to_string())?;
                if bd.blocks_hilbert(d) != pres.hilbert(d) || pres.hilbert(d) != want {
                    return Err(format!("C_{a}{b} degree {d}: blocks {}, presentation {}, oracle {want}", bd.blocks_hilbert(d), pres.hilbert(d)));
                }
            }
        }
    }
    Ok("Hankel determinants nonzero for t <= 5, u <= 12; P D Pᵀ exact; block Hilbert sums at (3,3) through degree 4".into())
}

fn criterion_7() -> Outcome {
    let mut simple = 0;
    for (m, n) in [(2, 2), (3, 3), (3, 4)] {
        let bad: Vec<String> = (0..500u64)
            .into_par_iter()
            .filter_map(|s| moduli_point_failure(&random_point(m, n, 1000 + s)).map(|e| format!("({m},{n}) seed {s}: {e}")))
            .collect();
        if !bad.is_empty() {
            return Err(bad.join("; "));
        }
        simple += (0..500u64).filter(|&s| random_point(m, n, 1000 + s).beta.rank() == m - 1).count();
    }
    Ok(format!("1500 points: relations, scalar action, round trip, simple ⟺ β injective ⟺ rank m - 1 ({simple} simple)"))
}

// H^q(P^N, Ω^p(k)) by the classical formula.
fn omega_cohomology(big_n: i64, p: i64, k: i64) -> Option<(usize, u64)> {
    if k > p {
        return Some((0, (binom(k + big_n - p, k) * binom(k - 1, p)) as u64));
    }
    if k == 0 {
        return Some((p as usize, 1));
    }
    if k < p - big_n {
        return Some((big_n as usize, (binom(-k + p, -k) * binom(-k - 1, big_n - p)) as u64));
    }
    None
}

fn criterion_8() -> Outcome {
    for (m, n) in [(3, 3), (3, 5)] {
        for a in 1..=m {
            let one = |b| ext_dim(m, n, 1, a, b).map_err(|e| e.to_string());
            if ext_dim(m, n, 0, a, a).map_err(|e| e.to_string())? != BigInt::one() {
                return Err(format!("({m},{n}) Ext^0(S_{a}, S_{a})"));
            }
            if (a < m && one(a + 1)? != BigInt::from(m)) || (a > 1 && one(a - 1)? != BigInt::from(n)) {
                return Err(format!("({m},{n}) Ext^1 at S_{a}"));
            }
            let mut ours: Vec<_> = simple_resolution_table(m, n, a, 3)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|r| (r.t, r.vertex, r.twist, r.f_shape, r.g_shape))
                .collect();
            ours.sort();
            if ours != display_terms(m, n, a) {
                return Err(format!("({m},{n}) resolution of S_{a}: {ours:?}"));
            }
        }
    }
    let wide: Vec<_> = simple_resolution_table(7, 7, 4, 3).map_err(|e| e.to_string())?.into_iter().filter(|r| r.t == 3).collect();
    if wide.len() != 7 {
        return Err(format!("{} summands at t = 3", wide.len()));
    }
    for b in 0..3 {
        for s in -4..=4 {
            let got = cohom_omega_crosscheck(3, b, s).map_err(|e| e.to_string())?;
            if got != omega_cohomology(2, b as i64, s) {
                return Err(format!("Ω^{b}({s}) on P^2: {got:?}"));
            }
        }
    }
    Ok("Ext^0, Ext^1 and the t <= 3 resolution of simples at (3,3), (3,5); Bott and direct images agree on Ω^b(s), |s| <= 4".into())
}

fn main() {
    let criteria: [(fn() -> Outcome, Option<u64>); 8] = [
        (criterion_1, Some(10)),
        (criterion_2, Some(30)),
        (criterion_3, Some(60)),
        (criterion_4, Some(600)),
        (criterion_5, Some(900)),
        (criterion_6, None),
        (criterion_7, None),
        (criterion_8, Some(30)),
    ];
    let mut failed = 0;
    for (k, (run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(detail), Some(secs)) = (&outcome, limit) {
            if elapsed > Duration::from_secs(*secs) {
                outcome = Err(format!("{detail}; took {elapsed:.1?}, limit {secs} s"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {detail} ({elapsed:.1?})", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {detail} ({elapsed:.1?})", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
