//! Lifts of the Clifford generators to the presentation `Λ^a G → Λ^a F` of `M_a`.

use alloc::vec::Vec;

use crate::error::{ensure, Result};
use crate::matrix::{exterior_phi, PolyMatrix};
use crate::module::GradedFreeModule;
use crate::poly::SparsePoly;
use crate::ring::{IndexSet, RingContext};
use crate::scalar::rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionGenerator {
    Lambda(usize),
    G(usize),
}

/// A pair `(α, β)` with `α ∘ Λ^a φ = Λ^{a'} φ ∘ β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionLift {
    pub a: usize,
    pub a_target: usize,
    /// `α: Λ^a F → Λ^{a'} F`.
    pub alpha: PolyMatrix,
    /// `β: Λ^a G → Λ^{a'} G`.
    pub beta: PolyMatrix,
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn shift_weight(ctx: &RingContext, row: Option<usize>, col: Option<usize>) -> Vec<i32> {
    let mut w = ctx.zero_weight();
    if let Some(i) = row {
        w[i - 1] -= 1;
    }
    if let Some(j) = col {
        w[ctx.m + j - 1] -= 1;
    }
    w
}

fn index_of(sets: &[IndexSet], s: &IndexSet) -> usize {
    sets.iter().position(|x| x == s).expect("subset enumerated")
}

/// Contraction `∂_λ` on `Λ^a V` for a linear form given by its values `coeffs[k]` on basis vector `k+1`.
fn contraction(dim: usize, a: usize, coeffs: &[SparsePoly]) -> Vec<(usize, usize, SparsePoly)> {
    let src = IndexSet::subsets(dim, a);
    let tgt = IndexSet::subsets(dim, a - 1);
    let mut out = Vec::new();
    for (c, s) in src.iter().enumerate() {
        for (pos, &e) in s.elems().iter().enumerate() {
            let v = &coeffs[e - 1];
            if v.is_zero() {
                continue;
            }
            let r = index_of(&tgt, &s.without(e).expect("element present"));
            out.push((r, c, v.scale(&rat(sign(pos)))));
        }
    }
    out
}

/// Wedge with the vector `Σ_k coeffs[k] v_{k+1}` on `Λ^a V`.
fn wedge(dim: usize, a: usize, coeffs: &[SparsePoly]) -> Vec<(usize, usize, SparsePoly)> {
    let src = IndexSet::subsets(dim, a);
    let tgt = IndexSet::subsets(dim, a + 1);
    let mut out = Vec::new();
    for (c, s) in src.iter().enumerate() {
        for e in 1..=dim {
            let v = &coeffs[e - 1];
            if v.is_zero() || s.contains(e) {
                continue;
            }
            let r = index_of(&tgt, &s.with(e).expect("element absent"));
            out.push((r, c, v.scale(&rat(sign(s.count_below(e))))));
        }
    }
    out
}

fn build(source: GradedFreeModule, target: GradedFreeModule, entries: Vec<(usize, usize, SparsePoly)>) -> PolyMatrix {
    let mut mat = PolyMatrix::zero(source, target);
    for (r, c, p) in entries {
        mat.add_to(r, c, &p);
    }
    mat
}

/// The lifts `(∂_{λ_i}, ∂_{λ_i φ})` or `(θ_{φ(g_j)}, θ_{g_j})` on the presentation of `M_a`.
pub fn clifford_action_lifts(ctx: RingContext, a: usize, generator: ActionGenerator) -> Result<ActionLift> {
    ensure!(a <= ctx.m, OutOfRange, "exterior degree {a} above m = {}", ctx.m);
    let nv = ctx.nvars();
    match generator {
        ActionGenerator::Lambda(i) => {
            ensure!((1..=ctx.m).contains(&i), OutOfRange, "λ index {i} outside 1..={}", ctx.m);
            ensure!(a >= 1, OutOfRange, "λ lowers the exterior degree, a must be positive");
            let w = shift_weight(&ctx, Some(i), None);
            let unit: Vec<SparsePoly> =
                (1..=ctx.m).map(|k| SparsePoly::from_int(nv, if k == i { 1 } else { 0 })).collect();
            let row: Vec<SparsePoly> = (1..=ctx.n).map(|j| SparsePoly::x(&ctx, i, j)).collect();
            let alpha = build(
                GradedFreeModule::exterior_f(ctx, a),
                GradedFreeModule::exterior_f(ctx, a - 1).shifted(0, &w),
                contraction(ctx.m, a, &unit),
            );
            let beta = build(
                GradedFreeModule::exterior_g(ctx, a),
                GradedFreeModule::exterior_g(ctx, a - 1).shifted(0, &w),
                contraction(ctx.n, a, &row),
            );
            Ok(ActionLift { a, a_target: a - 1, alpha, beta })
        }
        ActionGenerator::G(j) => {
            ensure!((1..=ctx.n).contains(&j), OutOfRange, "g index {j} outside 1..={}", ctx.n);
            let w = shift_weight(&ctx, None, Some(j));
            let unit: Vec<SparsePoly> =
                (1..=ctx.n).map(|k| SparsePoly::from_int(nv, if k == j { 1 } else { 0 })).collect();
            let col: Vec<SparsePoly> = (1..=ctx.m).map(|i| SparsePoly::x(&ctx, i, j)).collect();
            let alpha = build(
                GradedFreeModule::exterior_f(ctx, a),
                GradedFreeModule::exterior_f(ctx, a + 1).shifted(-1, &w),
                wedge(ctx.m, a, &col),
            );
            let beta = build(
                GradedFreeModule::exterior_g(ctx, a),
                GradedFreeModule::exterior_g(ctx, a + 1).shifted(-1, &w),
                wedge(ctx.n, a, &unit),
            );
            Ok(ActionLift { a, a_target: a + 1, alpha, beta })
        }
    }
}

/// `Λ^a φ`, or the zero map when `a` exceeds `m`.
fn phi_or_zero(ctx: RingContext, a: usize) -> Result<PolyMatrix> {
    if a <= ctx.m {
        exterior_phi(ctx, a)
    } else {
        Ok(PolyMatrix::zero(GradedFreeModule::exterior_g(ctx, a), GradedFreeModule::exterior_f(ctx, a)))
    }
}

impl ActionLift {
    /// `α ∘ Λ^a φ = Λ^{a'} φ ∘ β`, exactly.
    pub fn square_commutes(&self, ctx: RingContext) -> Result<bool> {
        let left = self.alpha.compose(&phi_or_zero(ctx, self.a)?)?;
        let right = phi_or_zero(ctx, self.a_target)?.compose(&self.beta)?;
        Ok(left.same_entries(&right))
    }
}

fn anonymous(ctx: RingContext, rank: usize) -> GradedFreeModule {
    let gens = (0..rank)
        .map(|k| crate::module::Generator {
            label: crate::module::Label::Index(k),
            twist: 0,
            weight: ctx.zero_weight(),
        })
        .collect();
    GradedFreeModule::new(ctx, gens)
}

/// `∂ θ + θ ∂ − x · Id` on `Λ^a V` for a contraction `∂` and a wedge `θ`.
fn defect_on(ctx: RingContext, dim: usize, a: usize, form: &[SparsePoly], vector: &[SparsePoly], x: &SparsePoly) -> Result<PolyMatrix> {
    let size = |k: usize| crate::scalar::binomial(dim as i64, k as i64) as usize;
    let here = anonymous(ctx, size(a));
    let mut total = PolyMatrix::zero(here.clone(), here.clone());
    for r in 0..here.rank() {
        total.set(r, r, -x);
    }
    if a >= 1 {
        let below = anonymous(ctx, size(a - 1));
        let down = build(here.clone(), below.clone(), contraction(dim, a, form));
        let up = build(below, here.clone(), wedge(dim, a - 1, vector));
        total = total.add(&up.compose(&down)?)?;
    }
    if a < dim {
        let above = anonymous(ctx, size(a + 1));
        let up = build(here.clone(), above.clone(), wedge(dim, a, vector));
        let down = build(above, here, contraction(dim, a + 1, form));
        total = total.add(&down.compose(&up)?)?;
    }
    Ok(total)
}

/// `∂_i θ_j + θ_j ∂_i − x_ij · Id` on `Λ^a F` and on `Λ^a G`; both vanish.
pub fn anticommutator_defect(ctx: RingContext, a: usize, i: usize, j: usize) -> Result<(PolyMatrix, PolyMatrix)> {
    ensure!(
        (1..=ctx.m).contains(&i) && (1..=ctx.n).contains(&j) && a <= ctx.n,
        OutOfRange,
        "indices outside the {}x{} matrix",
        ctx.m,
        ctx.n
    );
    let nv = ctx.nvars();
    let x = SparsePoly::x(&ctx, i, j);
    let e_i: Vec<SparsePoly> = (1..=ctx.m).map(|k| SparsePoly::from_int(nv, (k == i) as i64)).collect();
    let phi_gj: Vec<SparsePoly> = (1..=ctx.m).map(|k| SparsePoly::x(&ctx, k, j)).collect();
    let e_j: Vec<SparsePoly> = (1..=ctx.n).map(|k| SparsePoly::from_int(nv, (k == j) as i64)).collect();
    let lam_phi: Vec<SparsePoly> = (1..=ctx.n).map(|k| SparsePoly::x(&ctx, i, k)).collect();
    let on_f = if a <= ctx.m {
        defect_on(ctx, ctx.m, a, &e_i, &phi_gj, &x)?
    } else {
        PolyMatrix::zero(GradedFreeModule::zero(ctx), GradedFreeModule::zero(ctx))
    };
    let on_g = defect_on(ctx, ctx.n, a, &lam_phi, &e_j, &x)?;
    Ok((on_f, on_g))
}
