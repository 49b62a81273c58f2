//! Representations of the doubled Beĭlinson quiver over `Q`.
//!
//! A point `(α, β)` gives `W_a = Λ^{m−a} P^∨` with `P = Q^{m−1}`: the arrow
//! `λ_i: W_a → W_{a−1}` is wedging with column `i` of `α` (read in `P^∨`) and
//! `g_j: W_a → W_{a+1}` is contraction with column `j` of `β` (read in `P`).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{ensure, Error, Result};
use crate::linalg::QMatrix;
use crate::ring::IndexSet;
use crate::scalar::{binomial, Rational};

/// `alpha` is `(m−1) × m`, `beta` is `(m−1) × n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliPoint {
    pub m: usize,
    pub n: usize,
    pub alpha: QMatrix,
    pub beta: QMatrix,
}

impl ModuliPoint {
    pub fn new(alpha: QMatrix, beta: QMatrix) -> Result<Self> {
        let p = alpha.rows();
        ensure!(p == beta.rows(), SizeMismatch, "alpha has {p} rows, beta has {}", beta.rows());
        ensure!(alpha.cols() == p + 1, SizeMismatch, "alpha must be (m-1) x m, got {p} x {}", alpha.cols());
        Ok(ModuliPoint { m: p + 1, n: beta.cols(), alpha, beta })
    }

    pub fn is_split(&self) -> bool {
        self.alpha.rank() == self.m - 1
    }

    /// `αᵀ β`, an `m × n` matrix with entries `a_ij`.
    pub fn associated_matrix(&self) -> QMatrix {
        self.alpha.transpose().mul(&self.beta).expect("shapes checked at construction")
    }
}

/// Vertex spaces of dimension `C(m−1, a−1)` and one matrix per arrow and source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverRep {
    pub m: usize,
    pub n: usize,
    /// `lambda[i−1][a−1]: W_a → W_{a−1}`, empty for `a = 1`.
    pub lambda: Vec<Vec<QMatrix>>,
    /// `g[j−1][a−1]: W_a → W_{a+1}`, empty for `a = m`.
    pub g: Vec<Vec<QMatrix>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arrow {
    Lambda(usize),
    G(usize),
}

impl core::fmt::Display for Arrow {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Arrow::Lambda(i) => write!(f, "λ{i}"),
            Arrow::G(j) => write!(f, "g{j}"),
        }
    }
}

/// A failed relation, with the vertex where the path starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub relation: String,
    pub vertex: usize,
}

impl QuiverRep {
    pub fn dim(&self, a: usize) -> usize {
        binomial(self.m as i64 - 1, a as i64 - 1) as usize
    }

    pub fn dimension_vector(&self) -> Vec<usize> {
        (1..=self.m).map(|a| self.dim(a)).collect()
    }

    /// Target vertex of `arrow` from `a`, if it stays inside `[1, m]`.
    pub fn target(&self, arrow: Arrow, a: usize) -> Option<usize> {
        match arrow {
            Arrow::Lambda(_) if a > 1 => Some(a - 1),
            Arrow::G(_) if a < self.m => Some(a + 1),
            _ => None,
        }
    }

    pub fn arrow(&self, arrow: Arrow, a: usize) -> Option<&QMatrix> {
        self.target(arrow, a)?;
        Some(match arrow {
            Arrow::Lambda(i) => &self.lambda[i - 1][a - 1],
            Arrow::G(j) => &self.g[j - 1][a - 1],
        })
    }

    pub fn arrow_mut(&mut self, arrow: Arrow, a: usize) -> Option<&mut QMatrix> {
        self.target(arrow, a)?;
        Some(match arrow {
            Arrow::Lambda(i) => &mut self.lambda[i - 1][a - 1],
            Arrow::G(j) => &mut self.g[j - 1][a - 1],
        })
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        (1..=self.m).map(Arrow::Lambda).chain((1..=self.n).map(Arrow::G)).collect()
    }

    /// Composite of a path written in functional order, starting at `a`:
    /// `(target vertex, matrix)` or `None` if it leaves `[1, m]`.
    pub fn path(&self, word: &[Arrow], a: usize) -> Option<(usize, QMatrix)> {
        let mut v = a;
        let mut mat = QMatrix::identity(self.dim(a));
        for &arr in word.iter().rev() {
            let next = self.target(arr, v)?;
            mat = self.arrow(arr, v)?.mul(&mat).ok()?;
            v = next;
        }
        Some((v, mat))
    }

    /// Sum of the defined products `x y + y x` from vertex `a`.
    fn anticommutator(&self, x: Arrow, y: Arrow, a: usize) -> Option<(usize, QMatrix)> {
        let xy = self.path(&[x, y], a);
        let yx = self.path(&[y, x], a);
        match (xy, yx) {
            (Some((t, p)), Some((_, q))) => Some((t, p.add(&q).ok()?)),
            (Some(p), None) | (None, Some(p)) => Some(p),
            (None, None) => None,
        }
    }

    /// `X_ij` on `W_a`: the anticommutator `λ_i g_j + g_j λ_i`.
    pub fn x_action(&self, i: usize, j: usize, a: usize) -> QMatrix {
        self.anticommutator(Arrow::Lambda(i), Arrow::G(j), a)
            .map(|(_, q)| q)
            .unwrap_or_else(|| QMatrix::zeros(self.dim(a), self.dim(a)))
    }

    /// The scalar `a_ij` read off at `W_m`, or `None` if `X_ij` is not a scalar there.
    pub fn scalar(&self, i: usize, j: usize) -> Option<Rational> {
        scalar_of(&self.x_action(i, j, self.m))
    }

    /// Violations of the squares, anticommutation and centrality relations.
    pub fn check_relations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let lambdas: Vec<Arrow> = (1..=self.m).map(Arrow::Lambda).collect();
        let gs: Vec<Arrow> = (1..=self.n).map(Arrow::G).collect();
        for a in 1..=self.m {
            for family in [&lambdas, &gs] {
                for (p, &x) in family.iter().enumerate() {
                    for &y in &family[p..] {
                        if let Some((_, q)) = self.anticommutator(x, y, a) {
                            if !q.is_zero() {
                                let relation =
                                    if x == y { format!("{x}{x} = 0") } else { format!("{x}{y} + {y}{x} = 0") };
                                out.push(Violation { relation, vertex: a });
                            }
                        }
                    }
                }
            }
            for i in 1..=self.m {
                for j in 1..=self.n {
                    let x_here = self.x_action(i, j, a);
                    for arr in self.arrows() {
                        let Some(t) = self.target(arr, a) else { continue };
                        let lhs = self.arrow(arr, a).unwrap().mul(&x_here).expect("dims");
                        let rhs = self.x_action(i, j, t).mul(self.arrow(arr, a).unwrap()).expect("dims");
                        if lhs != rhs {
                            out.push(Violation { relation: format!("{arr} X{i}{j} = X{i}{j} {arr}"), vertex: a });
                        }
                    }
                }
            }
        }
        out
    }

    /// Pairs `(vertex, i, j)` where `X_ij` is not `a_ij` times the identity.
    pub fn scalar_action_failures(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            for j in 1..=self.n {
                let s = self.scalar(i, j);
                for a in 1..=self.m {
                    let ok = match &s {
                        Some(s) => self.x_action(i, j, a) == QMatrix::identity(self.dim(a)).scale(s),
                        None => false,
                    };
                    if !ok {
                        out.push((a, i, j));
                    }
                }
            }
        }
        out
    }

    /// Bases of the submodule generated by the given subspaces, per vertex.
    pub fn generated_by(&self, seeds: Vec<QMatrix>) -> Vec<QMatrix> {
        let mut spans: Vec<QMatrix> = seeds.into_iter().map(|b| column_basis(&b)).collect();
        loop {
            let mut grew = false;
            for a in 1..=self.m {
                for arr in self.arrows() {
                    let Some(t) = self.target(arr, a) else { continue };
                    let image = self.arrow(arr, a).unwrap().mul(&spans[a - 1]).expect("dims");
                    let joined = column_basis(&spans[t - 1].hstack(&image).expect("rows"));
                    if joined.cols() > spans[t - 1].cols() {
                        spans[t - 1] = joined;
                        grew = true;
                    }
                }
            }
            if !grew {
                return spans;
            }
        }
    }

    pub fn is_generated_by_top(&self) -> bool {
        let mut seeds: Vec<QMatrix> = (1..=self.m).map(|a| QMatrix::zeros(self.dim(a), 0)).collect();
        seeds[self.m - 1] = QMatrix::identity(1);
        let spans = self.generated_by(seeds);
        (1..=self.m).all(|a| spans[a - 1].cols() == self.dim(a))
    }

    /// The largest submodule vanishing at `W_m`: vectors killed by every path into `W_m`.
    pub fn largest_submodule_off_top(&self) -> Vec<QMatrix> {
        let mut k: Vec<QMatrix> = (1..=self.m)
            .map(|a| if a == self.m { QMatrix::zeros(1, 0) } else { QMatrix::identity(self.dim(a)) })
            .collect();
        loop {
            let mut shrank = false;
            for a in 1..self.m {
                for arr in self.arrows() {
                    let Some(t) = self.target(arr, a) else { continue };
                    let cur = &k[a - 1];
                    if cur.cols() == 0 {
                        continue;
                    }
                    let image = self.arrow(arr, a).unwrap().mul(cur).expect("dims");
                    let pre = preimage_coords(&image, &k[t - 1]);
                    if pre.cols() < cur.cols() {
                        k[a - 1] = column_basis(&cur.mul(&pre).expect("dims"));
                        shrank = true;
                    }
                }
            }
            if !shrank {
                return k;
            }
        }
    }

    /// Generated by `W_m` with no nonzero submodule missing `W_m`.
    pub fn is_simple(&self) -> bool {
        self.is_generated_by_top() && self.largest_submodule_off_top().iter().all(|b| b.cols() == 0)
    }
}

fn scalar_of(mat: &QMatrix) -> Option<Rational> {
    let d = mat.rows();
    if d == 0 {
        return Some(Rational::zero());
    }
    let s = mat.get(0, 0).clone();
    (*mat == QMatrix::identity(d).scale(&s)).then_some(s)
}

/// Independent columns of `b`, as a matrix.
fn column_basis(b: &QMatrix) -> QMatrix {
    let (_, pivots) = b.rref();
    b.select_columns(&pivots)
}

/// Coefficient vectors `c` (as columns) spanning `{c : image · c ∈ span(sub)}`.
fn preimage_coords(image: &QMatrix, sub: &QMatrix) -> QMatrix {
    let k = image.cols();
    let neg = sub.scale(&-Rational::one());
    let stacked = image.hstack(&neg).expect("rows");
    let kernel = stacked.kernel();
    let projected = QMatrix::from_fn(k, kernel.len(), |i, j| kernel[j][i].clone());
    column_basis(&projected)
}

fn basis_index(sets: &[IndexSet], s: &IndexSet) -> usize {
    sets.iter().position(|t| t == s).expect("basis set")
}

/// `v ∧ −: Λ^k → Λ^{k+1}` on `Q^p`.
fn wedge_matrix(p: usize, k: usize, v: &[Rational]) -> QMatrix {
    let src = IndexSet::subsets(p, k);
    let tgt = IndexSet::subsets(p, k + 1);
    let mut out = QMatrix::zeros(tgt.len(), src.len());
    for (c, s) in src.iter().enumerate() {
        for (e, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if let Some(t) = s.with(e + 1) {
                let sgn = if s.count_below(e + 1) % 2 == 0 { coeff.clone() } else { -coeff.clone() };
                out.add_at(basis_index(&tgt, &t), c, &sgn);
            }
        }
    }
    out
}

/// `w ⌟ −: Λ^k → Λ^{k−1}` on `Q^p`.
fn contraction_matrix(p: usize, k: usize, w: &[Rational]) -> QMatrix {
    let src = IndexSet::subsets(p, k);
    let tgt = if k == 0 { Vec::new() } else { IndexSet::subsets(p, k - 1) };
    let mut out = QMatrix::zeros(tgt.len(), src.len());
    for (c, s) in src.iter().enumerate() {
        for (pos, &e) in s.elems().iter().enumerate() {
            let coeff = &w[e - 1];
            if coeff.is_zero() {
                continue;
            }
            let t = s.without(e).expect("member");
            let sgn = if pos % 2 == 0 { coeff.clone() } else { -coeff.clone() };
            out.add_at(basis_index(&tgt, &t), c, &sgn);
        }
    }
    out
}

/// `W_{αβ}`.
pub fn build_rep(pt: &ModuliPoint) -> Result<QuiverRep> {
    ensure!(pt.is_split(), Singular, "alpha has rank {} < m - 1 = {}", pt.alpha.rank(), pt.m - 1);
    let (m, n, p) = (pt.m, pt.n, pt.m - 1);
    let lambda = (1..=m)
        .map(|i| {
            let v = pt.alpha.column(i - 1);
            (1..=m)
                .map(|a| if a == 1 { QMatrix::zeros(0, 0) } else { wedge_matrix(p, m - a, &v) })
                .collect()
        })
        .collect();
    let g = (1..=n)
        .map(|j| {
            let w = pt.beta.column(j - 1);
            (1..=m)
                .map(|a| if a == m { QMatrix::zeros(0, 0) } else { contraction_matrix(p, m - a, &w) })
                .collect()
        })
        .collect();
    Ok(QuiverRep { m, n, lambda, g })
}

/// `(α, β)` with `α` normalized so its first independent columns form the identity.
pub fn reconstruct(rep: &QuiverRep) -> Result<ModuliPoint> {
    let m = rep.m;
    ensure!(m >= 2, OutOfRange, "reconstruction needs m >= 2");
    if !rep.is_generated_by_top() {
        return Err(Error::NotGenerated);
    }
    // π: F^∨ → W_{m−1}, λ_i ↦ λ_i(1).
    let pi = QMatrix::from_fn(m - 1, m, |r, i| rep.lambda[i][m - 1].get(r, 0).clone());
    let (_, pivots) = pi.rref();
    ensure!(pivots.len() == m - 1, Singular, "λ-images of W_m do not span W_(m-1)");
    let h = pi.select_columns(&pivots).inverse()?;
    let alpha = h.mul(&pi)?;
    let h_inv = pi.select_columns(&pivots);
    let beta = QMatrix::from_fn(m - 1, rep.n, |k, j| {
        let row = rep.g[j][m - 2].mul(&h_inv).expect("dims");
        row.get(0, k).clone()
    });
    ModuliPoint::new(alpha, beta)
}

/// `α` scaled into the gauge used by [`reconstruct`], together with the matching `β`.
pub fn gauge_fix(pt: &ModuliPoint) -> Result<ModuliPoint> {
    let (_, pivots) = pt.alpha.rref();
    ensure!(pivots.len() == pt.m - 1, Singular, "alpha is not split");
    let block = pt.alpha.select_columns(&pivots);
    let h = block.inverse()?;
    // P^∨ changes by h, so P changes by the inverse transpose.
    let beta = block.transpose().mul(&pt.beta)?;
    ModuliPoint::new(h.mul(&pt.alpha)?, beta)
}

/// Vertex-wise isomorphism `Φ_a: W_a → W'_a` sending `p(1) ↦ p(1')` for λ-paths `p`,
/// checked against every arrow. Both representations must be generated by the top vertex.
pub fn isomorphism(rep: &QuiverRep, other: &QuiverRep) -> Result<Vec<QMatrix>> {
    ensure!(rep.m == other.m && rep.n == other.n, SizeMismatch, "different quivers");
    let m = rep.m;
    let mut maps = Vec::with_capacity(m);
    for a in 1..=m {
        let words: Vec<Vec<Arrow>> = IndexSet::subsets(m, m - a)
            .iter()
            .map(|s| s.elems().iter().map(|&i| Arrow::Lambda(i)).collect())
            .collect();
        let images = |r: &QuiverRep| -> QMatrix {
            let cols: Vec<Vec<Rational>> =
                words.iter().map(|w| r.path(w, m).expect("λ-path stays in range").1.column(0)).collect();
            QMatrix::from_fn(r.dim(a), cols.len(), |i, j| cols[j][i].clone())
        };
        let src = images(rep);
        let tgt = images(other);
        let (_, pivots) = src.rref();
        if pivots.len() != rep.dim(a) {
            return Err(Error::NotGenerated);
        }
        let phi = tgt.select_columns(&pivots).mul(&src.select_columns(&pivots).inverse()?)?;
        ensure!(
            phi.mul(&src)? == tgt,
            Inconsistent,
            "λ-path images are not related by a linear map at vertex {a}"
        );
        maps.push(phi);
    }
    for a in 1..=m {
        ensure!(maps[a - 1].rank() == rep.dim(a), Singular, "Φ_{a} is not invertible");
        for arr in rep.arrows() {
            let Some(t) = rep.target(arr, a) else { continue };
            let lhs = maps[t - 1].mul(rep.arrow(arr, a).unwrap())?;
            let rhs = other.arrow(arr, a).unwrap().mul(&maps[a - 1])?;
            ensure!(lhs == rhs, Inconsistent, "Φ does not intertwine {arr} at vertex {a}");
        }
    }
    Ok(maps)
}

/// Random point with entries in `[−3, 3]`, `α` split, and `rank β` drawn from `0..=m−1`.
pub fn random_point(m: usize, n: usize, seed: u64) -> ModuliPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = m - 1;
    let entry = |rng: &mut ChaCha8Rng| Rational::from_integer(rng.gen_range(-3i64..=3).into());
    let alpha = loop {
        let a = QMatrix::from_fn(p, m, |_, _| entry(&mut rng));
        if a.rank() == p {
            break a;
        }
    };
    let r = rng.gen_range(0..=p.min(n));
    let left = QMatrix::from_fn(p, r, |_, _| entry(&mut rng));
    let right = QMatrix::from_fn(r, n, |_, _| entry(&mut rng));
    let beta = left.mul(&right).expect("inner dimension r");
    ModuliPoint { m, n, alpha, beta }
}

/// Random matrices with the right dimension vector and no relations imposed.
pub fn random_rep(m: usize, n: usize, seed: u64) -> QuiverRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = |a: usize| binomial(m as i64 - 1, a as i64 - 1) as usize;
    let entry = |rng: &mut ChaCha8Rng| Rational::from_integer(rng.gen_range(-3i64..=3).into());
    let lambda = (0..m)
        .map(|_| {
            (1..=m)
                .map(|a| if a == 1 { QMatrix::zeros(0, 0) } else { QMatrix::from_fn(dim(a - 1), dim(a), |_, _| entry(&mut rng)) })
                .collect()
        })
        .collect();
    let g = (0..n)
        .map(|_| {
            (1..=m)
                .map(|a| if a == m { QMatrix::zeros(0, 0) } else { QMatrix::from_fn(dim(a + 1), dim(a), |_, _| entry(&mut rng)) })
                .collect()
        })
        .collect();
    QuiverRep { m, n, lambda, g }
}

/// All-zero arrows.
pub fn zero_rep(m: usize, n: usize) -> QuiverRep {
    let mut rep = random_rep(m, n, 0);
    for arr in rep.arrows() {
        for a in 1..=m {
            if let Some(mat) = rep.arrow_mut(arr, a) {
                *mat = QMatrix::zeros(mat.rows(), mat.cols());
            }
        }
    }
    rep
}
