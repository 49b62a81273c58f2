//! Sparse polynomial matrices between graded free modules.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{ensure, Error, Result};
use crate::linalg::QMatrix;
use crate::module::{Generator, GradedFreeModule, Label};
use crate::poly::SparsePoly;
use crate::ring::{IndexSet, RingContext};
use crate::scalar::Rational;

/// A map `source → target`; column `c` holds the image of source generator `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    cols: Vec<BTreeMap<usize, SparsePoly>>,
}

impl PolyMatrix {
    pub fn zero(source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let cols = alloc::vec![BTreeMap::new(); source.rank()];
        PolyMatrix { source, target, cols }
    }

    pub fn ctx(&self) -> RingContext {
        self.source.ctx
    }

    pub fn nvars(&self) -> usize {
        self.source.ctx.nvars()
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn get(&self, r: usize, c: usize) -> SparsePoly {
        self.cols[c].get(&r).cloned().unwrap_or_else(|| SparsePoly::zero(self.nvars()))
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<&SparsePoly> {
        self.cols[c].get(&r)
    }

    pub fn set(&mut self, r: usize, c: usize, p: SparsePoly) {
        if p.is_zero() {
            self.cols[c].remove(&r);
        } else {
            self.cols[c].insert(r, p);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, p: &SparsePoly) {
        if p.is_zero() {
            return;
        }
        let cur = self.cols[c].entry(r).or_insert_with(|| SparsePoly::zero(p.nvars()));
        cur.add_assign(p);
        if cur.is_zero() {
            self.cols[c].remove(&r);
        }
    }

    pub fn column(&self, c: usize) -> &BTreeMap<usize, SparsePoly> {
        &self.cols[c]
    }

    /// Nonzero entries as `(row, col, poly)` triplets in column-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, &SparsePoly)> {
        let mut out = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, p) in col {
                out.push((r, c, p));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Every entry `(r, c)` is homogeneous of degree `twist(c) − twist(r)`.
    pub fn is_homogeneous(&self) -> bool {
        self.triplets().into_iter().all(|(r, c, p)| {
            let d = self.source.gens[c].twist - self.target.gens[r].twist;
            d >= 0 && p.is_homogeneous_of(d as u32)
        })
    }

    /// Every monomial of entry `(r, c)` has weight `weight(c) − weight(r)`.
    pub fn is_equivariant(&self) -> bool {
        let ctx = self.ctx();
        self.triplets().into_iter().all(|(r, c, p)| {
            let want: Vec<i32> = self.source.gens[c]
                .weight
                .iter()
                .zip(&self.target.gens[r].weight)
                .map(|(a, b)| a - b)
                .collect();
            p.terms().all(|(m, _)| m.weight(&ctx) == want)
        })
    }

    /// Composite `self ∘ other`. Only ranks have to match; the modules of the
    /// result are `other.source` and `self.target`.
    pub fn compose(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        ensure!(
            self.cols() == other.rows(),
            SizeMismatch,
            "compose: {} columns against {} rows",
            self.cols(),
            other.rows()
        );
        let mut out = PolyMatrix::zero(other.source.clone(), self.target.clone());
        for (c, col) in other.cols.iter().enumerate() {
            for (&k, q) in col {
                for (&r, p) in &self.cols[k] {
                    let prod = p * q;
                    out.add_to(r, c, &prod);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        ensure!(
            self.rows() == other.rows() && self.cols() == other.cols(),
            SizeMismatch,
            "matrix sum"
        );
        let mut out = self.clone();
        for (r, c, p) in other.triplets() {
            out.add_to(r, c, p);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.source.clone(), self.target.clone());
        for (r, c, p) in self.triplets() {
            out.set(r, c, p.scale(s));
        }
        out
    }

    /// Same entries, new modules of equal ranks.
    pub fn with_modules(&self, source: GradedFreeModule, target: GradedFreeModule) -> Result<PolyMatrix> {
        ensure!(
            source.rank() == self.cols() && target.rank() == self.rows(),
            SizeMismatch,
            "relabel with different ranks"
        );
        Ok(PolyMatrix { source, target, cols: self.cols.clone() })
    }

    /// Entries equal, ignoring module metadata.
    pub fn same_entries(&self, other: &PolyMatrix) -> bool {
        self.rows() == other.rows() && self.cols() == other.cols() && self.cols == other.cols
    }

    /// `[self | other]` over a common target.
    pub fn hstack(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        ensure!(self.rows() == other.rows(), SizeMismatch, "hstack with different row counts");
        let source = GradedFreeModule::direct_sum(&[self.source.clone(), other.source.clone()], self.ctx());
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(PolyMatrix { source, target: self.target.clone(), cols })
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &PolyMatrix) -> PolyMatrix {
        let ctx = self.ctx();
        let source = GradedFreeModule::direct_sum(&[self.source.clone(), other.source.clone()], ctx);
        let target = GradedFreeModule::direct_sum(&[self.target.clone(), other.target.clone()], ctx);
        let off = self.rows();
        let mut cols = self.cols.clone();
        for col in &other.cols {
            cols.push(col.iter().map(|(&r, p)| (r + off, p.clone())).collect());
        }
        PolyMatrix { source, target, cols }
    }

    pub fn transpose_entries(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.target.clone(), self.source.clone());
        for (r, c, p) in self.triplets() {
            out.set(c, r, p.clone());
        }
        out
    }

    /// Restriction to the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let ctx = self.ctx();
        let source = GradedFreeModule::new(ctx, cols.iter().map(|&c| self.source.gens[c].clone()).collect());
        let target = GradedFreeModule::new(ctx, rows.iter().map(|&r| self.target.gens[r].clone()).collect());
        let mut out = PolyMatrix::zero(source, target);
        for (cn, &c) in cols.iter().enumerate() {
            for (rn, &r) in rows.iter().enumerate() {
                if let Some(p) = self.cols[c].get(&r) {
                    out.set(rn, cn, p.clone());
                }
            }
        }
        out
    }

    /// Scalar matrix obtained by substituting a rational point for the variables.
    pub fn evaluate(&self, point: &[Rational]) -> QMatrix {
        let mut q = QMatrix::zeros(self.rows(), self.cols());
        for (r, c, p) in self.triplets() {
            q.set(r, c, p.eval(point));
        }
        q
    }

    /// The constant parts of all entries.
    pub fn constant_part(&self) -> QMatrix {
        let mut q = QMatrix::zeros(self.rows(), self.cols());
        for (r, c, p) in self.triplets() {
            let v = p.constant_term();
            if !v.is_zero() {
                q.set(r, c, v);
            }
        }
        q
    }
}

/// The generic matrix `φ: G → F` with entry `(i, j) = x_ij`.
pub fn generic_matrix(ctx: RingContext) -> PolyMatrix {
    let source = GradedFreeModule::exterior_g(ctx, 1);
    let target = GradedFreeModule::exterior_f(ctx, 1);
    let mut phi = PolyMatrix::zero(source, target);
    for i in 1..=ctx.m {
        for j in 1..=ctx.n {
            phi.set(i - 1, j - 1, SparsePoly::x(&ctx, i, j));
        }
    }
    phi
}

/// Determinant of a square matrix of polynomials by expansion over permutations.
pub fn poly_determinant(nvars: usize, entries: &[Vec<SparsePoly>]) -> SparsePoly {
    let t = entries.len();
    let mut total = SparsePoly::zero(nvars);
    let mut perm: Vec<usize> = (0..t).collect();
    let mut sgn = 1i64;
    // Heap's algorithm tracks the sign as a transposition count.
    let mut c = alloc::vec![0usize; t];
    let term = |perm: &[usize], sgn: i64| -> SparsePoly {
        let mut acc = SparsePoly::from_int(nvars, sgn);
        for (r, &k) in perm.iter().enumerate() {
            let e = &entries[r][k];
            if e.is_zero() {
                return SparsePoly::zero(nvars);
            }
            acc = &acc * e;
        }
        acc
    };
    total.add_assign(&term(&perm, sgn));
    let mut i = 0;
    while i < t {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sgn = -sgn;
            total.add_assign(&term(&perm, sgn));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    total
}

/// The `t × t` minor of the generic matrix on the given rows and columns.
pub fn minor(ctx: &RingContext, rows: &IndexSet, cols: &IndexSet) -> Result<SparsePoly> {
    ensure!(
        rows.len() == cols.len(),
        SizeMismatch,
        "minor needs as many rows as columns, got {} and {}",
        rows.len(),
        cols.len()
    );
    ensure!(
        rows.elems().iter().all(|&i| i >= 1 && i <= ctx.m) && cols.elems().iter().all(|&j| j >= 1 && j <= ctx.n),
        OutOfRange,
        "minor indices outside the {}x{} matrix",
        ctx.m,
        ctx.n
    );
    let entries: Vec<Vec<SparsePoly>> = rows
        .elems()
        .iter()
        .map(|&i| cols.elems().iter().map(|&j| SparsePoly::x(ctx, i, j)).collect())
        .collect();
    Ok(poly_determinant(ctx.nvars(), &entries))
}

/// `Λ^a M` in the bases of `a`-subsets of generators; entry `(R, C)` is the minor `det M[R, C]`.
pub fn exterior_power_map(mat: &PolyMatrix, a: usize) -> Result<PolyMatrix> {
    let ctx = mat.ctx();
    ensure!(
        a <= mat.rows().min(mat.cols()),
        OutOfRange,
        "exterior power {a} of a {}x{} matrix",
        mat.rows(),
        mat.cols()
    );
    let row_sets = IndexSet::subsets(mat.rows(), a);
    let col_sets = IndexSet::subsets(mat.cols(), a);
    let wedge = |m: &GradedFreeModule, s: &IndexSet| -> Generator {
        let mut weight = ctx.zero_weight();
        let mut twist = 0;
        for &k in s.elems() {
            let g = &m.gens[k - 1];
            twist += g.twist;
            for (w, x) in weight.iter_mut().zip(&g.weight) {
                *w += x;
            }
        }
        Generator { label: Label::Set(s.clone()), twist, weight }
    };
    let source = GradedFreeModule::new(ctx, col_sets.iter().map(|s| wedge(&mat.source, s)).collect());
    let target = GradedFreeModule::new(ctx, row_sets.iter().map(|s| wedge(&mat.target, s)).collect());
    let mut out = PolyMatrix::zero(source, target);
    let nv = mat.nvars();
    for (cn, cs) in col_sets.iter().enumerate() {
        for (rn, rs) in row_sets.iter().enumerate() {
            let entries: Vec<Vec<SparsePoly>> = rs
                .elems()
                .iter()
                .map(|&r| cs.elems().iter().map(|&c| mat.get(r - 1, c - 1)).collect())
                .collect();
            let d = poly_determinant(nv, &entries);
            out.set(rn, cn, d);
        }
    }
    Ok(out)
}

/// `Λ^a φ: Λ^a G → Λ^a F` for the generic matrix.
pub fn exterior_phi(ctx: RingContext, a: usize) -> Result<PolyMatrix> {
    let m = exterior_power_map(&generic_matrix(ctx), a)?;
    let source = GradedFreeModule::exterior_g(ctx, a);
    let target = GradedFreeModule::exterior_f(ctx, a);
    m.with_modules(source, target)
}

/// Evaluate `M` at a rational point and return the scalar matrix with its rank.
pub fn evaluate_at_point(mat: &PolyMatrix, point: &[Rational]) -> Result<(QMatrix, usize)> {
    if point.len() != mat.nvars() {
        return Err(Error::SizeMismatch(alloc::format!(
            "point has {} coordinates, ring has {} variables",
            point.len(),
            mat.nvars()
        )));
    }
    let q = mat.evaluate(point);
    let r = q.rank();
    Ok((q, r))
}
