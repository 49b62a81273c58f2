//! Matrices of the divided powers `Δ^(t)` on `Λ^p G ⊗ Λ^q F^∨`.

use crate::error::{ensure, Error, Result};
use crate::matrix::{minor, PolyMatrix};
use crate::module::{GradedFreeModule, Label};
use crate::ring::{IndexSet, RingContext};
use crate::scalar::rat;

use super::element::{deriv_g_multi, deriv_lambda_multi};

fn pair_of(label: &Label) -> (&IndexSet, &IndexSet) {
    match label {
        Label::Pair { g, lambda } => (g, lambda),
        _ => unreachable!("exterior_pair generators carry pair labels"),
    }
}

/// `Δ^(t): Λ^{qg} G ⊗ Λ^{ql} F^∨ → Λ^{qg−t} G ⊗ Λ^{ql−t} F^∨`, entries `± t×t` minors.
pub fn delta_matrix(ctx: RingContext, t: usize, qg: usize, ql: usize) -> Result<PolyMatrix> {
    ensure!(
        qg <= ctx.n && ql <= ctx.m && t <= qg.min(ql),
        OutOfRange,
        "Δ^({t}) on Λ^{qg}G ⊗ Λ^{ql}F^∨ with m = {}, n = {}",
        ctx.m,
        ctx.n
    );
    let source = GradedFreeModule::exterior_pair(ctx, qg, ql);
    let target = GradedFreeModule::exterior_pair(ctx, qg - t, ql - t);
    let mut out = PolyMatrix::zero(source.clone(), target.clone());
    let index: alloc::collections::BTreeMap<(&IndexSet, &IndexSet), usize> =
        target.gens.iter().enumerate().map(|(k, g)| (pair_of(&g.label), k)).collect();
    let ti = t as i64;
    let empty_l = IndexSet::empty(ctx.m);
    let minors: alloc::vec::Vec<(IndexSet, IndexSet, crate::poly::SparsePoly)> = IndexSet::subsets(ctx.n, t)
        .into_iter()
        .flat_map(|ip| {
            IndexSet::subsets(ctx.m, t).into_iter().map(move |jp| (ip.clone(), jp))
        })
        .map(|(ip, jp)| {
            let d = minor(&ctx, &jp, &ip).expect("indices in range");
            (ip, jp, d)
        })
        .collect();
    for (c, gen) in source.gens.iter().enumerate() {
        let (g, l) = pair_of(&gen.label);
        let base = if (ti * g.len() as i64 + ti * (ti - 1) / 2) % 2 == 0 { 1 } else { -1 };
        for (ip, jp, d) in &minors {
            if !ip.is_subset(g) || !jp.is_subset(l) {
                continue;
            }
            let Some((su, g2)) = deriv_g_multi(g, &empty_l, ip) else { continue };
            let Some((sv, l2)) = deriv_lambda_multi(l, jp) else { continue };
            let r = index[&(&g2, &l2)];
            out.add_to(r, c, &d.scale(&rat(base * su * sv)));
        }
    }
    Ok(out)
}

/// The undivided power `Δ^t`, obtained by composing `t` copies of `Δ`.
pub fn delta_power_matrix(ctx: RingContext, t: usize, qg: usize, ql: usize) -> Result<PolyMatrix> {
    let mut acc = delta_matrix(ctx, 0, qg, ql)?;
    for s in 0..t {
        let step = delta_matrix(ctx, 1, qg - s, ql - s)?;
        acc = step.compose(&acc)?;
    }
    let target = GradedFreeModule::exterior_pair(ctx, qg - t, ql - t);
    let source = acc.source.clone();
    acc.with_modules(source, target)
        .map_err(|_| Error::Inconsistent(alloc::string::String::from("Δ power shape")))
}
