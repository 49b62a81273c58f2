//! Brute-force graded linear algebra: Hilbert functions of `M_a` and of
//! `Hom(M_a, M_b)`, and minimal graded Betti numbers of subquotients of free
//! modules, all by exact rank and kernel computations on weight pieces.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ensure, Error, Result};
use crate::graded::{graded_piece_rank, piece_at_weight, piece_matrix, ring_hilbert, weights_at_degree, Piece};
use crate::linalg::QMatrix;
use crate::matrix::{exterior_phi, PolyMatrix};
use crate::module::{Generator, GradedFreeModule, Label};
use crate::poly::SparsePoly;
use crate::ring::{IndexSet, RingContext};
use crate::scalar::Rational;

/// Degree bound used when none is supplied.
pub const DEFAULT_DEGREE_BOUND: i32 = 6;

/// Values of a Hilbert function on `0..=bound`; anything above is unknown.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
}

impl HilbertFunction {
    pub fn bound(&self) -> i32 {
        self.values.len() as i32 - 1
    }

    pub fn get(&self, d: i32) -> Option<u64> {
        if d < 0 {
            Some(0)
        } else {
            self.values.get(d as usize).copied()
        }
    }
}

/// `dim (M_a)_d` for `M_a = cok Λ^a φ`.
pub fn hilbert_m(m: usize, n: usize, a: usize, d: i32) -> Result<u64> {
    let ctx = RingContext::new(m, n)?;
    ensure!(a <= m, OutOfRange, "a = {a} exceeds m = {m}");
    if d < 0 {
        return Ok(0);
    }
    let phi = exterior_phi(ctx, a)?;
    Ok(phi.target.hilbert(d) - graded_piece_rank(&phi, d) as u64)
}

/// A graded module `N = A / B` where `A = {u ∈ U : T u ∈ im G'}` (or `A = U`)
/// and `B = im(Bmap) ⊆ A`.
#[derive(Debug, Clone)]
pub struct ModuleSpec {
    pub ambient: GradedFreeModule,
    pub constraint: Option<(PolyMatrix, PolyMatrix)>,
    pub relations: PolyMatrix,
}

impl ModuleSpec {
    /// `cok(M)` for a map into `ambient`.
    pub fn cokernel(mat: &PolyMatrix) -> Self {
        ModuleSpec { ambient: mat.target.clone(), constraint: None, relations: mat.clone() }
    }

    pub fn ctx(&self) -> RingContext {
        self.ambient.ctx
    }

    /// Basis of `A` in the `(d, W)` piece of the ambient module.
    fn sub_basis(&self, d: i32, w: &[i32], amb: &Piece) -> Vec<Vec<Rational>> {
        match &self.constraint {
            None => (0..amb.dim())
                .map(|k| {
                    let mut v = alloc::vec![Rational::zero(); amb.dim()];
                    v[k] = Rational::from_integer(1.into());
                    v
                })
                .collect(),
            Some((t, g)) => {
                let stacked = t.hstack(&g.scale(&Rational::from_integer((-1).into()))).expect("common target");
                let src = piece_at_weight(&stacked.source, d, w);
                let tgt = piece_at_weight(&stacked.target, d, w);
                let mat = piece_matrix(&stacked, &src, &tgt);
                let keep = self.ambient.rank();
                project_kernel(&mat, &src, keep)
            }
        }
    }

    /// `dim N_d`.
    pub fn hilbert(&self, d: i32) -> u64 {
        let mut total = 0u64;
        for w in weights_at_degree(&self.ambient, d) {
            let amb = piece_at_weight(&self.ambient, d, &w);
            if amb.dim() == 0 {
                continue;
            }
            let a_dim = self.sub_basis(d, &w, &amb).len();
            let src = piece_at_weight(&self.relations.source, d, &w);
            let b_rank = piece_matrix(&self.relations, &src, &amb).rank();
            total += (a_dim - b_rank) as u64;
        }
        total
    }
}

/// Kernel vectors of `mat` restricted to the coordinates of the first `keep`
/// source generators, reduced to a basis.
fn project_kernel(mat: &QMatrix, src: &Piece, keep: usize) -> Vec<Vec<Rational>> {
    let coords: Vec<usize> = (0..src.dim()).filter(|&k| src.basis[k].0 < keep).collect();
    let kernel = mat.kernel();
    if kernel.is_empty() || coords.is_empty() {
        return Vec::new();
    }
    let proj = QMatrix::from_fn(kernel.len(), coords.len(), |i, j| kernel[i][coords[j]].clone());
    let (r, pivots) = proj.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// `Hom(M_a, M_b)` as a subquotient of `⊕_{|I| = a} Λ^b F`.
pub fn hom_spec(m: usize, n: usize, a: usize, b: usize) -> Result<ModuleSpec> {
    let ctx = RingContext::new(m, n)?;
    ensure!(
        (1..=m).contains(&a) && (1..=m).contains(&b),
        OutOfRange,
        "need 1 <= a, b <= m = {m}"
    );
    let rows_a = IndexSet::subsets(m, a);
    let cols_a = IndexSet::subsets(n, a);
    let lb_f = GradedFreeModule::exterior_f(ctx, b);
    let phi_b = exterior_phi(ctx, b)?;
    let phi_a = exterior_phi(ctx, a)?;

    let row_shift = |s: &IndexSet| {
        let mut w = ctx.zero_weight();
        for &i in s.elems() {
            w[i - 1] += 1;
        }
        w
    };
    let col_shift = |s: &IndexSet| {
        let mut w = ctx.zero_weight();
        for &j in s.elems() {
            w[m + j - 1] -= 1;
        }
        w
    };
    let ambient_parts: Vec<GradedFreeModule> =
        rows_a.iter().enumerate().map(|(k, s)| lb_f.shifted(0, &row_shift(s)).tagged(k as i32)).collect();
    let ambient = GradedFreeModule::direct_sum(&ambient_parts, ctx);
    let target_parts: Vec<GradedFreeModule> = cols_a
        .iter()
        .enumerate()
        .map(|(k, s)| lb_f.shifted(-(a as i32), &col_shift(s)).tagged(k as i32))
        .collect();
    let target = GradedFreeModule::direct_sum(&target_parts, ctx);
    let rb = lb_f.rank();

    let mut t = PolyMatrix::zero(ambient.clone(), target.clone());
    for (ci, _) in cols_a.iter().enumerate() {
        for (ri, _) in rows_a.iter().enumerate() {
            if let Some(p) = phi_a.entry(ri, ci) {
                for k in 0..rb {
                    t.set(ci * rb + k, ri * rb + k, p.clone());
                }
            }
        }
    }

    let g_parts: Vec<GradedFreeModule> = cols_a
        .iter()
        .enumerate()
        .map(|(k, s)| phi_b.source.shifted(-(a as i32), &col_shift(s)).tagged(k as i32))
        .collect();
    let g_src = GradedFreeModule::direct_sum(&g_parts, ctx);
    let mut gp = PolyMatrix::zero(g_src, target);
    let sb = phi_b.cols();
    for ci in 0..cols_a.len() {
        for (r, c, p) in phi_b.triplets() {
            gp.set(ci * rb + r, ci * sb + c, p.clone());
        }
    }

    let b_parts: Vec<GradedFreeModule> = rows_a
        .iter()
        .enumerate()
        .map(|(k, s)| phi_b.source.shifted(0, &row_shift(s)).tagged(k as i32))
        .collect();
    let b_src = GradedFreeModule::direct_sum(&b_parts, ctx);
    let mut bm = PolyMatrix::zero(b_src, ambient.clone());
    for ri in 0..rows_a.len() {
        for (r, c, p) in phi_b.triplets() {
            bm.set(ri * rb + r, ri * sb + c, p.clone());
        }
    }
    Ok(ModuleSpec { ambient, constraint: Some((t, gp)), relations: bm })
}

/// `dim Hom(M_a, M_b)_d`: homomorphisms raising degree by `d`.
pub fn hilbert_hom(m: usize, n: usize, a: usize, b: usize, d: i32) -> Result<u64> {
    if d < 0 {
        // Generators of M_a sit in degree 0 and M_b vanishes below 0.
        return Ok(0);
    }
    Ok(hom_spec(m, n, a, b)?.hilbert(d))
}

/// The Hilbert function of `Hom(M_a, M_b)` on `0..=bound`.
pub fn hilbert_hom_function(m: usize, n: usize, a: usize, b: usize, bound: i32) -> Result<HilbertFunction> {
    let spec = hom_spec(m, n, a, b)?;
    Ok(HilbertFunction { values: (0..=bound).map(|d| spec.hilbert(d)).collect() })
}

/// Graded Betti numbers `β_{i,d}`: `i`-th syzygy generators in degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiNumbers {
    pub table: BTreeMap<(usize, i32), u64>,
}

impl BettiNumbers {
    pub fn total(&self, i: usize) -> u64 {
        self.table.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| *v).sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.table.iter().filter(|(_, v)| **v > 0).map(|((i, _), _)| *i).max().unwrap_or(0)
    }

    /// Total rank per homological degree.
    pub fn totals(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for ((i, _), v) in &self.table {
            if *v > 0 {
                *out.entry(*i).or_insert(0) += v;
            }
        }
        out
    }
}

/// Element of a free module from coordinates in a piece.
fn column_from_vector(piece: &Piece, v: &[Rational], nvars: usize) -> BTreeMap<usize, SparsePoly> {
    let mut col: BTreeMap<usize, SparsePoly> = BTreeMap::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (g, mono) = &piece.basis[k];
        col.entry(*g)
            .or_insert_with(|| SparsePoly::zero(nvars))
            .add_term(mono.clone(), c.clone());
    }
    col.retain(|_, p| !p.is_zero());
    col
}

/// Grows a matrix `F → E` generator by generator.
struct GeneratorSet {
    ambient: GradedFreeModule,
    gens: Vec<Generator>,
    columns: Vec<BTreeMap<usize, SparsePoly>>,
}

impl GeneratorSet {
    fn new(ambient: GradedFreeModule) -> Self {
        GeneratorSet { ambient, gens: Vec::new(), columns: Vec::new() }
    }

    fn matrix(&self) -> PolyMatrix {
        let ctx = self.ambient.ctx;
        let source = GradedFreeModule::new(ctx, self.gens.clone());
        let mut mat = PolyMatrix::zero(source, self.ambient.clone());
        for (c, col) in self.columns.iter().enumerate() {
            for (&r, p) in col {
                mat.set(r, c, p.clone());
            }
        }
        mat
    }

    /// Extend by vectors of `candidates` outside the span of the existing
    /// multiples and of `extra`; returns how many were added.
    fn extend(&mut self, d: i32, w: &[i32], amb: &Piece, extra: &[Vec<Rational>], candidates: &[Vec<Rational>]) -> usize {
        if candidates.is_empty() {
            return 0;
        }
        let current = self.matrix();
        let src = piece_at_weight(&current.source, d, w);
        let mult = piece_matrix(&current, &src, amb);
        let base_cols = mult.cols() + extra.len();
        let total = base_cols + candidates.len();
        let mut big = QMatrix::zeros(amb.dim(), total);
        for i in 0..amb.dim() {
            for j in 0..mult.cols() {
                big.set(i, j, mult.get(i, j).clone());
            }
            for (j, v) in extra.iter().enumerate() {
                big.set(i, mult.cols() + j, v[i].clone());
            }
            for (j, v) in candidates.iter().enumerate() {
                big.set(i, base_cols + j, v[i].clone());
            }
        }
        let (_, pivots) = big.rref();
        let nv = self.ambient.ctx.nvars();
        let mut added = 0;
        for p in pivots.into_iter().filter(|&p| p >= base_cols) {
            let v = &candidates[p - base_cols];
            self.columns.push(column_from_vector(amb, v, nv));
            self.gens.push(Generator {
                label: Label::Index(self.gens.len()),
                twist: d,
                weight: w.to_vec(),
            });
            added += 1;
        }
        added
    }
}

fn min_twist(m: &GradedFreeModule) -> Option<i32> {
    m.gens.iter().map(|g| g.twist).min()
}

fn random_point(ctx: &RingContext, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..ctx.nvars()).map(|_| Rational::from_integer(rng.gen_range(-97i64..=97).into())).collect()
}

/// Full column rank over the fraction field, tested at two pseudo-random points.
fn is_injective(mat: &PolyMatrix) -> bool {
    if mat.cols() == 0 {
        return true;
    }
    let ctx = mat.ctx();
    (0..2u64).any(|s| mat.evaluate(&random_point(&ctx, 0x5eed + s)).rank() == mat.cols())
}

/// Rank at two pseudo-random points, the larger of the two.
fn generic_rank(mat: &PolyMatrix) -> usize {
    if mat.cols() == 0 || mat.rows() == 0 {
        return 0;
    }
    let ctx = mat.ctx();
    (0..2u64).map(|s| mat.evaluate(&random_point(&ctx, 0x7a11 + s)).rank()).max().unwrap_or(0)
}

impl ModuleSpec {
    /// Rank of `N` over the fraction field of `S`.
    pub fn generic_rank(&self) -> usize {
        let a = match &self.constraint {
            None => self.ambient.rank(),
            Some((t, g)) => {
                let stacked = t.hstack(&g.scale(&Rational::from_integer((-1).into()))).expect("common target");
                self.ambient.rank() + generic_rank(g) - generic_rank(&stacked)
            }
        };
        a - generic_rank(&self.relations)
    }
}

/// Minimal graded Betti numbers of `N`, computing every generator in degrees `≤ bound`.
///
/// The result is certified two ways: the alternating sum of the ranks equals
/// the rank of `N`, and the alternating sum of the Hilbert functions equals
/// `dim N_d` at `d = bound + 1`. Either failure is reported as a degree bound error.
pub fn minimal_betti(spec: &ModuleSpec, bound: i32) -> Result<BettiNumbers> {
    if spec.constraint.is_none() {
        if let Some(top) = spec.relations.source.gens.iter().map(|g| g.twist).max() {
            if top >= bound {
                return Err(Error::DegreeBound { level: 1, degree: top });
            }
        }
    }
    let (betti, modules) = resolve(spec, bound)?;
    let level = modules.len().saturating_sub(1);
    let alt = |f: &dyn Fn(&GradedFreeModule) -> i128| -> i128 {
        modules.iter().enumerate().map(|(i, m)| if i % 2 == 0 { f(m) } else { -f(m) }).sum()
    };
    if alt(&|m| m.rank() as i128) != spec.generic_rank() as i128 {
        return Err(Error::DegreeBound { level, degree: bound + 1 });
    }
    let next = bound + 1;
    if alt(&|m| m.hilbert(next) as i128) != spec.hilbert(next) as i128 {
        return Err(Error::DegreeBound { level, degree: next });
    }
    Ok(betti)
}

fn resolve(spec: &ModuleSpec, bound: i32) -> Result<(BettiNumbers, Vec<GradedFreeModule>)> {
    let mut betti = BettiNumbers::default();
    let mut modules = Vec::new();
    let ctx = spec.ctx();
    let lo = min_twist(&spec.ambient).unwrap_or(0);

    // Level 0: minimal generators of A modulo B.
    let mut gens0 = GeneratorSet::new(spec.ambient.clone());
    for d in lo..=bound {
        for w in weights_at_degree(&spec.ambient, d) {
            let amb = piece_at_weight(&spec.ambient, d, &w);
            if amb.dim() == 0 {
                continue;
            }
            let a_basis = spec.sub_basis(d, &w, &amb);
            if a_basis.is_empty() {
                continue;
            }
            let rsrc = piece_at_weight(&spec.relations.source, d, &w);
            let rel = piece_matrix(&spec.relations, &rsrc, &amb);
            let extra: Vec<Vec<Rational>> = (0..rel.cols()).map(|j| rel.column(j)).collect();
            let added = gens0.extend(d, &w, &amb, &extra, &a_basis);
            if added > 0 {
                *betti.table.entry((0, d)).or_insert(0) += added as u64;
                if d == bound {
                    return Err(Error::DegreeBound { level: 0, degree: d });
                }
            }
        }
    }
    let eps = gens0.matrix();
    if eps.cols() == 0 {
        return Ok((betti, modules));
    }
    modules.push(eps.source.clone());

    // Level 1: kernel of F_0 → U / B.
    let stacked = eps.hstack(&spec.relations)?;
    let f0 = eps.source.clone();
    let mut gens1 = GeneratorSet::new(f0.clone());
    let lo1 = min_twist(&f0).unwrap_or(0);
    for d in lo1..=bound {
        for w in weights_at_degree(&f0, d) {
            let src = piece_at_weight(&stacked.source, d, &w);
            let tgt = piece_at_weight(&stacked.target, d, &w);
            let mat = piece_matrix(&stacked, &src, &tgt);
            let ker = project_kernel(&mat, &src, f0.rank());
            if ker.is_empty() {
                continue;
            }
            // Coordinates of the projected kernel live on the first f0.rank() generators,
            // which come first in the stacked piece.
            let own = piece_at_weight(&f0, d, &w);
            let cands: Vec<Vec<Rational>> = ker.iter().map(|v| v[..own.dim()].to_vec()).collect();
            let added = gens1.extend(d, &w, &own, &[], &cands);
            if added > 0 {
                *betti.table.entry((1, d)).or_insert(0) += added as u64;
                if d == bound {
                    return Err(Error::DegreeBound { level: 1, degree: d });
                }
            }
        }
    }
    let mut current = gens1.matrix();
    if current.cols() > 0 {
        modules.push(current.source.clone());
    }
    let mut level = 1;
    // Higher levels: kernels of the differentials.
    while current.cols() > 0 && !is_injective(&current) {
        level += 1;
        let src_mod = current.source.clone();
        let mut next = GeneratorSet::new(src_mod.clone());
        let lo_l = min_twist(&src_mod).unwrap_or(0);
        let mut found = false;
        for d in lo_l..=bound {
            for w in weights_at_degree(&src_mod, d) {
                let src = piece_at_weight(&src_mod, d, &w);
                let tgt = piece_at_weight(&current.target, d, &w);
                let mat = piece_matrix(&current, &src, &tgt);
                let ker = mat.kernel();
                if ker.is_empty() {
                    continue;
                }
                let added = next.extend(d, &w, &src, &[], &ker);
                if added > 0 {
                    found = true;
                    *betti.table.entry((level, d)).or_insert(0) += added as u64;
                    if d == bound {
                        return Err(Error::DegreeBound { level, degree: d });
                    }
                }
            }
        }
        if !found {
            return Err(Error::DegreeBound { level, degree: bound });
        }
        current = next.matrix();
        modules.push(current.source.clone());
        ensure!(level <= ctx.nvars() + 1, Inconsistent, "resolution longer than the number of variables");
    }
    Ok((betti, modules))
}

/// Minimal Betti numbers of `Hom(M_a, M_b)`.
pub fn hom_betti(m: usize, n: usize, a: usize, b: usize, bound: i32) -> Result<BettiNumbers> {
    minimal_betti(&hom_spec(m, n, a, b)?, bound)
}

/// Rational point of `Spec S` whose matrix has the given rank.
pub fn rank_point(ctx: &RingContext, rank: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let left: Vec<Vec<i64>> = (0..ctx.m).map(|_| (0..rank).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    let right: Vec<Vec<i64>> = (0..rank).map(|_| (0..ctx.n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    let mut out = Vec::with_capacity(ctx.nvars());
    for i in 0..ctx.m {
        for j in 0..ctx.n {
            let v: i64 = (0..rank).map(|k| left[i][k] * right[k][j]).sum();
            out.push(Rational::from_integer(v.into()));
        }
    }
    out
}

/// `dim S_d`.
pub fn hilbert_s(m: usize, n: usize, d: i32) -> Result<u64> {
    Ok(ring_hilbert(&RingContext::new(m, n)?, d))
}
