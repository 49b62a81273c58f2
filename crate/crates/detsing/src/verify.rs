//! Verification suites: each runs a family of exact checks and reports one
//! line per check. Randomized checks draw from a seeded ChaCha stream, so a
//! seed fixes the report byte for byte.

use std::collections::BTreeMap;

use detsing_core::clifford::{
    anticommutator_defect, clifford_action_lifts, pbw_expand_with,
    presentation, right_first_to_element, ActionGenerator, CliffordElement, Letter, Ordering, Strategy,
};
use detsing_core::cohomology::{direct_image, rank_polynomial};
use detsing_core::ext::{cohom_omega_crosscheck, ext_dim, simple_resolution_table};
use detsing_core::matrix::{exterior_phi, minor};
use detsing_core::moduli::{build_rep, gauge_fix, isomorphism, random_point, reconstruct};
use detsing_core::oracle::{hilbert_hom, minimal_betti, rank_point, ModuleSpec};
use detsing_core::partitions::Partition;
use detsing_core::resolutions::resolution_shape;
use detsing_core::{IndexSet, RingContext, SparsePoly};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Star,
    Pbw,
    Cohomology,
    Hilbert,
    Betti,
    Moduli,
    Ext,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub m: usize,
    pub n: usize,
    pub max_degree: i32,
    pub seed: u64,
    /// Number of random samples for the randomized checks.
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: Result<String>) -> Self {
        match r {
            Ok(detail) => Check::new(name, true, detail),
            Err(e) => Check::new(name, false, e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

fn fail(msg: String) -> CliError {
    CliError::Core(detsing_core::Error::Inconsistent(msg))
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    if cfg.m == 0 || cfg.n < cfg.m {
        return Err(CliError::Usage(format!("need 1 <= m <= n, got m = {}, n = {}", cfg.m, cfg.n)));
    }
    let checks = match suite {
        Suite::Star => star_suite(cfg)?,
        Suite::Pbw => pbw_suite(cfg)?,
        Suite::Cohomology => cohomology_suite(cfg),
        Suite::Hilbert => hilbert_suite(cfg)?,
        Suite::Betti => betti_suite(cfg)?,
        Suite::Moduli => moduli_suite(cfg),
        Suite::Ext => ext_suite(cfg),
    };
    let name = format!("{suite:?}").to_lowercase();
    Ok(SuiteReport { suite: name, checks })
}

/// A sparse element with up to three basis terms, each with a coefficient in `{±1, ±2} · {1, x_ij}`.
pub fn random_element(ctx: RingContext, rng: &mut ChaCha8Rng) -> CliffordElement {
    let nv = ctx.nvars();
    let mut e = CliffordElement::zero(ctx);
    for _ in 0..rng.gen_range(1..=3) {
        let g = random_subset(ctx.n, rng);
        let l = random_subset(ctx.m, rng);
        let scale = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
        let mut c = SparsePoly::from_int(nv, scale);
        if rng.gen_bool(0.5) {
            let (i, j) = (rng.gen_range(1..=ctx.m), rng.gen_range(1..=ctx.n));
            c = SparsePoly::x(&ctx, i, j).scale(&detsing_core::scalar::rat(scale));
        }
        e.add_term(g, l, c);
    }
    e
}

fn random_subset(n: usize, rng: &mut ChaCha8Rng) -> IndexSet {
    let elems: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.4)).collect();
    IndexSet::new(elems, n).expect("sorted distinct")
}

pub fn random_word(ctx: &RingContext, len: usize, rng: &mut ChaCha8Rng) -> Vec<Letter> {
    (0..len)
        .map(|_| if rng.gen_bool(0.5) { Letter::L(rng.gen_range(1..=ctx.m)) } else { Letter::G(rng.gen_range(1..=ctx.n)) })
        .collect()
}

/// Star product of letters in word order.
pub fn word_product(ctx: RingContext, w: &[Letter]) -> CliffordElement {
    w.iter().fold(CliffordElement::one(ctx), |acc, l| {
        let e = match *l {
            Letter::L(i) => CliffordElement::lambda(ctx, i),
            Letter::G(j) => CliffordElement::g(ctx, j),
        };
        acc.star(&e)
    })
}

/// The relations among the generators: squares, anticommutators,
/// `g_j ∗ λ_i = g_j ∧ λ_i + x_ij`, and centrality of `λ_i ∗ g_j + g_j ∗ λ_i`.
pub fn relation_failures(ctx: RingContext) -> Vec<String> {
    let mut bad = Vec::new();
    let lam: Vec<CliffordElement> = (1..=ctx.m).map(|i| CliffordElement::lambda(ctx, i)).collect();
    let gs: Vec<CliffordElement> = (1..=ctx.n).map(|j| CliffordElement::g(ctx, j)).collect();
    for (fam, name) in [(&lam, "λ"), (&gs, "g")] {
        for (p, x) in fam.iter().enumerate() {
            for (q, y) in fam.iter().enumerate().skip(p) {
                if !x.anticommutator(y).is_zero() {
                    bad.push(format!("{name}{} {name}{} anticommutator", p + 1, q + 1));
                }
            }
        }
    }
    for i in 1..=ctx.m {
        for j in 1..=ctx.n {
            let x = SparsePoly::x(&ctx, i, j);
            let expected = gs[j - 1].wedge(&lam[i - 1]).add(&CliffordElement::scalar(ctx, x.clone()));
            if gs[j - 1].star(&lam[i - 1]) != expected {
                bad.push(format!("g{j} * λ{i} != g{j}∧λ{i} + x_{i}{j}"));
            }
            let xij = lam[i - 1].anticommutator(&gs[j - 1]);
            if xij != CliffordElement::scalar(ctx, x) {
                bad.push(format!("λ{i} g{j} + g{j} λ{i} != x_{i}{j}"));
            }
            for z in lam.iter().chain(gs.iter()) {
                if z.star(&xij) != xij.star(z) {
                    bad.push(format!("X_{i}{j} not central"));
                }
            }
        }
    }
    bad
}

fn star_suite(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let ctx = RingContext::new(cfg.m, cfg.n)?;
    let mut checks = Vec::new();
    let bad = relation_failures(ctx);
    checks.push(Check::new("generator relations", bad.is_empty(), if bad.is_empty() { "all hold".into() } else { bad.join("; ") }));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let triples: Vec<_> = (0..cfg.samples)
        .map(|_| (random_element(ctx, &mut rng), random_element(ctx, &mut rng), random_element(ctx, &mut rng)))
        .collect();
    let failures: Vec<usize> = triples
        .par_iter()
        .enumerate()
        .filter(|(_, (u, v, w))| u.star(v).star(w) != u.star(&v.star(w)))
        .map(|(k, _)| k)
        .collect();
    checks.push(Check::new(
        "associativity",
        failures.is_empty(),
        format!("{} random triples, failures at {failures:?}", triples.len()),
    ));

    let mut lift_failures = Vec::new();
    for a in 0..=cfg.m {
        for i in 1..=cfg.m {
            for j in 1..=cfg.n {
                let (on_f, on_g) = anticommutator_defect(ctx, a, i, j)?;
                if !on_f.is_zero() || !on_g.is_zero() {
                    lift_failures.push(format!("a={a} λ{i} g{j}"));
                }
            }
        }
        for a in 1..=cfg.m {
            let gens = (1..=cfg.m).map(ActionGenerator::Lambda).chain((1..=cfg.n).map(ActionGenerator::G));
            for gen in gens {
                let lift = clifford_action_lifts(ctx, a, gen)?;
                if !lift.square_commutes(ctx)? {
                    lift_failures.push(format!("a={a} {gen:?} does not descend"));
                }
            }
        }
    }
    lift_failures.sort();
    lift_failures.dedup();
    checks.push(Check::new(
        "action on M",
        lift_failures.is_empty(),
        if lift_failures.is_empty() { "lifts descend and satisfy the relations".into() } else { lift_failures.join("; ") },
    ));
    Ok(checks)
}

fn pbw_suite(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let ctx = RingContext::new(cfg.m, cfg.n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let words: Vec<(Vec<Letter>, u64)> = (0..cfg.samples)
        .map(|_| {
            let len = rng.gen_range(0..=6);
            (random_word(&ctx, len, &mut rng), rng.gen())
        })
        .collect();
    let mut checks = Vec::new();
    let confluence: Vec<String> = words
        .par_iter()
        .filter_map(|(w, s)| {
            for ord in [Ordering::RightFirst, Ordering::LeftFirst] {
                let left = pbw_expand_with(&ctx, w, ord, &mut Strategy::Leftmost);
                let right = pbw_expand_with(&ctx, w, ord, &mut Strategy::Rightmost);
                let mut r = ChaCha8Rng::seed_from_u64(*s);
                let mut pick = |k: usize| r.gen_range(0..k);
                let random = pbw_expand_with(&ctx, w, ord, &mut Strategy::Chooser(&mut pick));
                if left != right || left != random {
                    return Some(format!("{ord:?} {}", show_word(w)));
                }
            }
            let star = word_product(ctx, w);
            let normal = right_first_to_element(ctx, &pbw_expand_with(&ctx, w, Ordering::RightFirst, &mut Strategy::Leftmost));
            (star != normal).then(|| format!("star product differs on {}", show_word(w)))
        })
        .collect();
    checks.push(Check::new(
        "confluence",
        confluence.is_empty(),
        format!("{} random words of length <= 6; {}", words.len(), if confluence.is_empty() { "all strategies agree".to_string() } else { confluence.join("; ") }),
    ));

    let mut minor_fail = Vec::new();
    let rows = IndexSet::full(cfg.m);
    for cols in IndexSet::subsets(cfg.n, cfg.m) {
        let mut w: Vec<Letter> = cols.elems().iter().map(|&j| Letter::G(j)).collect();
        w.extend((1..=cfg.m).map(Letter::L));
        let exp = pbw_expand_with(&ctx, &w, Ordering::RightFirst, &mut Strategy::Leftmost);
        let constant = exp.get(&Vec::new()).cloned().unwrap_or_else(|| SparsePoly::zero(ctx.nvars()));
        let det = minor(&ctx, &rows, &cols)?;
        let neg = det.scale(&detsing_core::scalar::rat(-1));
        if constant != det && constant != neg {
            minor_fail.push(format!("{cols:?}"));
        }
    }
    checks.push(Check::new(
        "maximal minors",
        minor_fail.is_empty(),
        format!("constant term of g_I λ_1..λ_m is ± [I | 1..m]; failures: {minor_fail:?}"),
    ));
    Ok(checks)
}

fn show_word(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// `χ(𝓜^b_a(z))` from the Koszul resolutions of `Ω^k(k)` and `χ(O(s)) = C(s+m−1, m−1)`.
pub fn euler_characteristic(m: usize, a: usize, b: usize, z: i64) -> i128 {
    use detsing_core::scalar::{binomial, binomial_signed};
    let mi = m as i64;
    let mut total = 0i128;
    for i in 0..b as i64 {
        for j in 0..a as i64 {
            let coeff = binomial(mi, b as i64 - 1 - i) as i128 * binomial(mi, a as i64 - 1 - j) as i128;
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            total += sign * coeff * binomial_signed(j - i + z + mi - 1, mi - 1);
        }
    }
    total
}

fn cohomology_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let m = cfg.m;
    let mut bad = Vec::new();
    let mut count = 0;
    for a in 1..=m {
        for b in 1..=m {
            for c in -(m as i64 + 2)..=2 * m as i64 {
                count += 1;
                let e = match direct_image(m, a, b, c) {
                    Ok(e) => e,
                    Err(err) => {
                        bad.push(format!("({a},{b},{c}): {err}"));
                        continue;
                    }
                };
                let signed = e.nu.map_or(0, |nu| if nu % 2 == 0 { e.rank as i128 } else { -(e.rank as i128) });
                let chi = euler_characteristic(m, a, b, -c);
                if signed != chi {
                    bad.push(format!("({a},{b},{c}): table {signed}, Euler characteristic {chi}"));
                }
                let (a2, b2, _) = detsing_core::cohomology::dual_triple(m, a, b, c);
                if let Ok(d) = direct_image(m, a2, b2, c) {
                    if (d.nu, d.rank) != (e.nu, e.rank) {
                        bad.push(format!("({a},{b},{c}): involution changes the entry"));
                    }
                }
            }
            if a + b > m {
                match rank_polynomial(m, a, b) {
                    Ok(p) => {
                        for z in -(m as i64)..=m as i64 + 2 {
                            if p.eval(z) != detsing_core::scalar::rat(euler_characteristic(m, a, b, z) as i64) {
                                bad.push(format!("r^{b}_{a}({z}) disagrees with the Euler characteristic"));
                            }
                        }
                    }
                    Err(e) => bad.push(format!("r^{b}_{a}: {e}")),
                }
            }
        }
    }
    vec![Check::new(
        "direct image table",
        bad.is_empty(),
        format!("{count} triples; {}", if bad.is_empty() { "single ν, Euler characteristic and involution agree".to_string() } else { bad.join("; ") }),
    )]
}

fn pairs(m: usize) -> Vec<(usize, usize)> {
    (1..=m).flat_map(|a| (1..=m).map(move |b| (a, b))).collect()
}

fn hilbert_suite(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (m, n) = (cfg.m, cfg.n);
    let ctx = RingContext::new(m, n)?;
    let mut checks: Vec<Check> = pairs(m)
        .par_iter()
        .map(|&(a, b)| {
            let name = format!("hilbert C_{a}{b} vs Hom(M_{a}, M_{b})");
            let r = (|| -> Result<String> {
                let p = presentation(m, n, a, b)?;
                let mut ours = Vec::new();
                let mut theirs = Vec::new();
                for d in 0..=cfg.max_degree {
                    ours.push(p.hilbert(d));
                    theirs.push(hilbert_hom(m, n, a, b, d)?);
                }
                if ours != theirs {
                    return Err(fail(format!("presentation {ours:?}, oracle {theirs:?}")));
                }
                let point = rank_point(&ctx, m - 1, cfg.seed ^ (a * 31 + b) as u64);
                let rank = p.rank_at(&point);
                let want = (detsing_core::scalar::binomial(m as i64 - 1, a as i64 - 1)
                    * detsing_core::scalar::binomial(m as i64 - 1, b as i64 - 1)) as usize;
                if rank != want {
                    return Err(fail(format!("rank at a rank-{} point is {rank}, expected {want}", m - 1)));
                }
                Ok(format!("{ours:?}; generic rank {rank}"))
            })();
            Check::from_result(name, r)
        })
        .collect();
    checks.sort_by(|x, y| x.name.cmp(&y.name));
    Ok(checks)
}

/// Oracle Betti numbers of `Hom(M_a, M_b)` against the resolution table at `c = 0`.
pub fn betti_check(m: usize, n: usize, a: usize, b: usize, bound: i32) -> Result<String> {
    let betti = minimal_betti(&detsing_core::oracle::hom_spec(m, n, a, b)?, bound)?;
    let table = resolution_shape(m, n, b, a, 0)?;
    let ours: BTreeMap<i32, u64> = betti.totals().into_iter().map(|(i, v)| (-(i as i32), v)).collect();
    let theirs = table.ranks();
    if ours != theirs {
        return Err(fail(format!("oracle {ours:?}, table {theirs:?}")));
    }
    for ((mu, d), r) in table.graded_ranks() {
        let got = betti.table.get(&((-mu) as usize, d)).copied().unwrap_or(0);
        if got != r {
            return Err(fail(format!("twist {d} in degree {mu}: oracle {got}, table {r}")));
        }
    }
    let pd = betti.projective_dimension();
    if pd != n - m + 1 {
        return Err(fail(format!("projective dimension {pd}, expected {}", n - m + 1)));
    }
    Ok(format!("ranks {ours:?}, pd {pd}"))
}

fn betti_suite(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (m, n) = (cfg.m, cfg.n);
    let ctx = RingContext::new(m, n)?;
    let mut checks: Vec<Check> = pairs(m)
        .par_iter()
        .map(|&(a, b)| Check::from_result(format!("betti Hom(M_{a}, M_{b})"), betti_check(m, n, a, b, cfg.max_degree)))
        .collect();
    for a in 1..=m {
        let r = (|| -> Result<String> {
            let spec = ModuleSpec::cokernel(&exterior_phi(ctx, a)?);
            let betti = minimal_betti(&spec, cfg.max_degree)?;
            let pd = betti.projective_dimension();
            if pd != n - m + 1 {
                return Err(fail(format!("pd {pd}, expected {}", n - m + 1)));
            }
            Ok(format!("totals {:?}", betti.totals()))
        })();
        checks.push(Check::from_result(format!("pd M_{a}"), r));
    }
    checks.sort_by(|x, y| x.name.cmp(&y.name));
    Ok(checks)
}

fn moduli_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let (m, n) = (cfg.m, cfg.n);
    if m < 2 {
        return vec![Check::new("moduli", true, "nothing to check for m = 1")];
    }
    let results: Vec<Option<String>> = (0..cfg.samples)
        .into_par_iter()
        .map(|k| {
            let pt = random_point(m, n, cfg.seed.wrapping_add(k as u64));
            moduli_point_failure(&pt).map(|e| format!("sample {k}: {e}"))
        })
        .collect();
    let bad: Vec<String> = results.into_iter().flatten().collect();
    vec![Check::new(
        "moduli points",
        bad.is_empty(),
        format!(
            "{} random points: relations, scalar action, round trip, simplicity criterion; {}",
            cfg.samples,
            if bad.is_empty() { "all hold".to_string() } else { bad.join("; ") }
        ),
    )]
}

/// First failed property at one point, if any.
pub fn moduli_point_failure(pt: &detsing_core::moduli::ModuliPoint) -> Option<String> {
    let m = pt.m;
    let rep = match build_rep(pt) {
        Ok(r) => r,
        Err(e) => return Some(e.to_string()),
    };
    if !rep.check_relations().is_empty() {
        return Some("relations fail".into());
    }
    if !rep.scalar_action_failures().is_empty() {
        return Some("x_ij does not act by scalars".into());
    }
    let assoc = pt.associated_matrix();
    for i in 1..=m {
        for j in 1..=pt.n {
            if rep.scalar(i, j).as_ref() != Some(assoc.get(i - 1, j - 1)) {
                return Some(format!("scalar at ({i},{j}) is not the associated matrix entry"));
            }
        }
    }
    let back = match reconstruct(&rep) {
        Ok(p) => p,
        Err(e) => return Some(format!("reconstruct: {e}")),
    };
    match gauge_fix(pt) {
        Ok(fixed) if fixed == back => {}
        Ok(_) => return Some("round trip differs from the gauge-fixed point".into()),
        Err(e) => return Some(e.to_string()),
    }
    match build_rep(&back).and_then(|r| isomorphism(&rep, &r)) {
        Ok(_) => {}
        Err(e) => return Some(format!("no isomorphism: {e}")),
    }
    let rank = assoc.rank();
    if rank > m - 1 {
        return Some(format!("associated matrix has rank {rank} > m - 1"));
    }
    let simple = rep.is_simple();
    let injective = pt.beta.rank() == m - 1;
    if simple != injective || simple != (rank == m - 1) {
        return Some(format!("simple {simple}, beta injective {injective}, associated rank {rank}"));
    }
    None
}

/// One summand of the displayed resolution of `S_a`: vertex offset, twist, shapes on `F^∨` and `G`.
pub const DISPLAY: &[(usize, i64, usize, &[usize], &[usize])] = &[
    (0, 0, 0, &[], &[]),
    (1, -1, 1, &[1], &[]),
    (1, 1, 1, &[], &[1]),
    (2, -2, 2, &[2], &[]),
    (2, -1, 3, &[1, 1], &[1]),
    (2, 1, 3, &[1], &[1, 1]),
    (2, 2, 2, &[], &[2]),
    (3, -3, 3, &[3], &[]),
    (3, -2, 4, &[2, 1], &[1]),
    (3, -1, 5, &[1, 1, 1], &[2]),
    (3, 0, 4, &[1, 1], &[1, 1]),
    (3, 1, 5, &[2], &[1, 1, 1]),
    (3, 2, 4, &[1], &[2, 1]),
    (3, 3, 3, &[], &[3]),
];

/// The displayed terms with `t ≤ 3` that survive at `(m, n, a)`, as `(t, vertex, twist, F-shape, G-shape)`.
pub fn display_terms(m: usize, n: usize, a: usize) -> Vec<(usize, usize, usize, Partition, Partition)> {
    let mut out = Vec::new();
    for &(t, off, tw, f, g) in DISPLAY {
        let v = a as i64 + off;
        let fp = Partition::new(f.to_vec()).expect("partition");
        let gp = Partition::new(g.to_vec()).expect("partition");
        if v < 1 || v > m as i64 || fp.schur_dim(m) == BigInt::from(0) || gp.schur_dim(n) == BigInt::from(0) {
            continue;
        }
        out.push((t, v as usize, tw, fp, gp));
    }
    out.sort();
    out
}

fn ext_suite(cfg: &VerifyConfig) -> Vec<Check> {
    let (m, n) = (cfg.m, cfg.n);
    let mut checks = Vec::new();
    let mut bad = Vec::new();
    for a in 1..=m {
        let d0 = ext_dim(m, n, 0, a, a).ok();
        if d0 != Some(BigInt::from(1)) {
            bad.push(format!("Ext^0(S_{a}, S_{a}) = {d0:?}"));
        }
        if a < m && ext_dim(m, n, 1, a, a + 1).ok() != Some(BigInt::from(m)) {
            bad.push(format!("Ext^1(S_{}, S_{a}) != m", a + 1));
        }
        if a > 1 && ext_dim(m, n, 1, a, a - 1).ok() != Some(BigInt::from(n)) {
            bad.push(format!("Ext^1(S_{}, S_{a}) != n", a - 1));
        }
    }
    checks.push(Check::new("low degree Ext", bad.is_empty(), bad.join("; ")));

    let mut bad = Vec::new();
    for a in 1..=m {
        match simple_resolution_table(m, n, a, 3) {
            Ok(table) => {
                let mut ours: Vec<_> =
                    table.into_iter().map(|r| (r.t, r.vertex, r.twist, r.f_shape, r.g_shape)).collect();
                ours.sort();
                if ours != display_terms(m, n, a) {
                    bad.push(format!("S_{a}"));
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    checks.push(Check::new("resolution of simples, t <= 3", bad.is_empty(), bad.join("; ")));

    let mut bad = Vec::new();
    for b in 0..m {
        for s in -4..=4 {
            if let Err(e) = cohom_omega_crosscheck(m, b, s) {
                bad.push(e.to_string());
            }
        }
    }
    checks.push(Check::new("Bott vs direct images", bad.is_empty(), bad.join("; ")));

    let mut bad = Vec::new();
    for s in 0..=6usize {
        let total: BigInt = detsing_core::partitions::partitions_in_box(s, m - 1, n)
            .iter()
            .map(|p| p.schur_dim(m - 1) * p.conjugate().schur_dim(n))
            .sum();
        let want = BigInt::from(detsing_core::scalar::binomial(((m - 1) * n) as i64, s as i64));
        if total != want {
            bad.push(format!("s = {s}: {total} != {want}"));
        }
    }
    checks.push(Check::new("Cauchy bookkeeping", bad.is_empty(), bad.join("; ")));
    checks
}
