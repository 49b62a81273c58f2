//! Degree pieces of graded free modules, split by torus weight.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::linalg::QMatrix;
use crate::matrix::PolyMatrix;
use crate::module::GradedFreeModule;
use crate::poly::{monomials_of_degree, monomials_with_margins, Monomial};
use crate::ring::RingContext;

/// A basis of a graded piece: pairs (generator index, monomial).
#[derive(Debug, Clone, Default)]
pub struct Piece {
    pub basis: Vec<(usize, Monomial)>,
    index: BTreeMap<(usize, Monomial), usize>,
}

impl Piece {
    pub fn from_basis(basis: Vec<(usize, Monomial)>) -> Self {
        let index = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        Piece { basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, gen: usize, mono: &Monomial) -> Option<usize> {
        self.index.get(&(gen, mono.clone())).copied()
    }
}

/// Compositions of `k` into `parts` nonnegative summands.
pub fn compositions(k: i32, parts: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0i32; parts];
    fn rec(i: usize, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if parts == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    if k >= 0 {
        rec(0, k, &mut cur, &mut out);
    }
    out
}

/// Full degree-`d` piece of a module.
pub fn piece(module: &GradedFreeModule, d: i32) -> Piece {
    let nv = module.ctx.nvars();
    let mut basis = Vec::new();
    for (g, gen) in module.gens.iter().enumerate() {
        let e = d - gen.twist;
        if e < 0 {
            continue;
        }
        for mono in monomials_of_degree(nv, e as u32) {
            basis.push((g, mono));
        }
    }
    Piece::from_basis(basis)
}

/// Degree-`d` piece of a module restricted to torus weight `w`.
pub fn piece_at_weight(module: &GradedFreeModule, d: i32, w: &[i32]) -> Piece {
    let ctx = module.ctx;
    let mut basis = Vec::new();
    for (g, gen) in module.gens.iter().enumerate() {
        let e = d - gen.twist;
        if e < 0 {
            continue;
        }
        let diff: Vec<i32> = w.iter().zip(&gen.weight).map(|(a, b)| a - b).collect();
        let (rows, cols) = diff.split_at(ctx.m);
        if rows.iter().sum::<i32>() != e {
            continue;
        }
        for mono in monomials_with_margins(&ctx, rows, cols) {
            basis.push((g, mono));
        }
    }
    Piece::from_basis(basis)
}

/// All torus weights occurring in the degree-`d` piece of a module.
pub fn weights_at_degree(module: &GradedFreeModule, d: i32) -> BTreeSet<Vec<i32>> {
    let ctx = module.ctx;
    let mut out = BTreeSet::new();
    let mut comp_cache: BTreeMap<i32, (Vec<Vec<i32>>, Vec<Vec<i32>>)> = BTreeMap::new();
    for gen in &module.gens {
        let e = d - gen.twist;
        if e < 0 {
            continue;
        }
        let (rs, cs) = comp_cache
            .entry(e)
            .or_insert_with(|| (compositions(e, ctx.m), compositions(e, ctx.n)));
        for r in rs.iter() {
            for c in cs.iter() {
                let mut w = gen.weight.clone();
                for (k, x) in r.iter().chain(c.iter()).enumerate() {
                    w[k] += x;
                }
                out.insert(w);
            }
        }
    }
    out
}

/// Weights occurring in the given degrees of any of the modules.
pub fn weights_union(modules: &[(&GradedFreeModule, i32)]) -> BTreeSet<Vec<i32>> {
    let mut out = BTreeSet::new();
    for (m, d) in modules {
        out.extend(weights_at_degree(m, *d));
    }
    out
}

/// Scalar matrix of `M` from the source piece to the target piece.
///
/// The source basis element `(c, μ)` maps to `Σ_r M[r,c]·μ` in the target;
/// target terms outside `tgt` are dropped, so `tgt` must be closed under the map.
pub fn piece_matrix(mat: &PolyMatrix, src: &Piece, tgt: &Piece) -> QMatrix {
    let mut q = QMatrix::zeros(tgt.dim(), src.dim());
    for (k, (c, mono)) in src.basis.iter().enumerate() {
        for (&r, p) in mat.column(*c) {
            for (pm, coeff) in p.terms() {
                let prod = pm.mul(mono);
                if let Some(row) = tgt.position(r, &prod) {
                    q.add_at(row, k, coeff);
                }
            }
        }
    }
    q
}

/// Rank of the map induced by a homogeneous `M` between degree-`d` pieces.
pub fn graded_piece_rank(mat: &PolyMatrix, d: i32) -> usize {
    if mat.is_zero() {
        return 0;
    }
    if mat.is_equivariant() {
        let mut total = 0;
        for w in weights_at_degree(&mat.source, d) {
            let src = piece_at_weight(&mat.source, d, &w);
            if src.dim() == 0 {
                continue;
            }
            let tgt = piece_at_weight(&mat.target, d, &w);
            if tgt.dim() == 0 {
                continue;
            }
            total += piece_matrix(mat, &src, &tgt).rank();
        }
        total
    } else {
        let src = piece(&mat.source, d);
        let tgt = piece(&mat.target, d);
        piece_matrix(mat, &src, &tgt).rank()
    }
}

/// `dim` of the degree-`d` piece of `cok M`.
pub fn cokernel_hilbert(mat: &PolyMatrix, d: i32) -> u64 {
    mat.target.hilbert(d) - graded_piece_rank(mat, d) as u64
}

/// Dimension of `S_d` in the given context.
pub fn ring_hilbert(ctx: &RingContext, d: i32) -> u64 {
    if d < 0 {
        return 0;
    }
    let nv = ctx.nvars() as i64;
    crate::scalar::binomial(nv - 1 + d as i64, nv - 1)
}
