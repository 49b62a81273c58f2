//! Minimal presentations `P_1 → P_0 → C_ab → 0`.

use alloc::vec::Vec;

use crate::cohomology::dual_triple;
use crate::error::{ensure, Result};
use crate::graded::cokernel_hilbert;
use crate::matrix::PolyMatrix;
use crate::module::GradedFreeModule;
use crate::ring::RingContext;
use crate::scalar::Rational;

use super::delta::delta_matrix;

/// One summand `Λ^{qg} G ⊗ Λ^{ql} F^∨` of `P_0` (indexed by `k`) or `P_1` (indexed by `l`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Summand {
    pub index: i64,
    pub qg: usize,
    pub ql: usize,
    pub offset: usize,
    pub rank: usize,
}

/// A minimal presentation of `C_ab`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub ctx: RingContext,
    /// The requested pair.
    pub a: usize,
    pub b: usize,
    /// The pair actually presented: `(a, b)` or its image under the involution.
    pub a_eff: usize,
    pub b_eff: usize,
    pub p0: GradedFreeModule,
    pub p1: GradedFreeModule,
    pub rho: PolyMatrix,
    pub p0_summands: Vec<Summand>,
    pub p1_summands: Vec<Summand>,
}

impl Presentation {
    pub fn dualized(&self) -> bool {
        (self.a, self.b) != (self.a_eff, self.b_eff)
    }

    /// `t = a + b − k − l` for the block in row `k`, column `l`.
    pub fn block_degree(&self, k: i64, l: i64) -> i64 {
        (self.a_eff + self.b_eff) as i64 - k - l
    }

    /// Restriction of `ρ` to one block.
    pub fn block(&self, row: usize, col: usize) -> PolyMatrix {
        let r = self.p0_summands[row];
        let c = self.p1_summands[col];
        let rows: Vec<usize> = (r.offset..r.offset + r.rank).collect();
        let cols: Vec<usize> = (c.offset..c.offset + c.rank).collect();
        self.rho.submatrix(&rows, &cols)
    }

    /// `dim (cok ρ)_d`.
    pub fn hilbert(&self, d: i32) -> u64 {
        cokernel_hilbert(&self.rho, d)
    }

    /// Dimension of the fibre of `cok ρ` at a rational point.
    pub fn rank_at(&self, point: &[Rational]) -> usize {
        self.p0.rank() - self.rho.evaluate(point).rank()
    }
}

/// `P_0 = ⊕_{max(a,b) ≤ k ≤ m} Λ^{k−a}G ⊗ Λ^{k−b}F^∨`,
/// `P_1 = ⊕_{max(a,b)−m ≤ l ≤ 0} Λ^{b−l}G ⊗ Λ^{a−l}F^∨`, `ρ_{kl} = Δ^(a+b−k−l)`.
/// Pairs with `a + b < m + 1` are first moved by `(a, b) ↦ (m+1−b, m+1−a)`.
pub fn presentation(m: usize, n: usize, a: usize, b: usize) -> Result<Presentation> {
    let ctx = RingContext::new(m, n)?;
    ensure!(
        (1..=m).contains(&a) && (1..=m).contains(&b),
        OutOfRange,
        "need 1 <= a, b <= m = {m}, got a = {a}, b = {b}"
    );
    let (ae, be) = if a + b < m + 1 {
        let (x, y, _) = dual_triple(m, a, b, 0);
        (x, y)
    } else {
        (a, b)
    };
    let top = ae.max(be) as i64;
    let (ai, bi, mi) = (ae as i64, be as i64, m as i64);

    let mut p0_summands = Vec::new();
    let mut p0_parts = Vec::new();
    let mut offset = 0;
    for k in top..=mi {
        let (qg, ql) = ((k - ai) as usize, (k - bi) as usize);
        let part = GradedFreeModule::exterior_pair(ctx, qg, ql).tagged(k as i32);
        p0_summands.push(Summand { index: k, qg, ql, offset, rank: part.rank() });
        offset += part.rank();
        p0_parts.push(part);
    }
    let mut p1_summands = Vec::new();
    let mut p1_parts = Vec::new();
    offset = 0;
    for l in (top - mi)..=0 {
        let (qg, ql) = ((bi - l) as usize, (ai - l) as usize);
        let part = if qg <= n && ql <= m {
            GradedFreeModule::exterior_pair(ctx, qg, ql).tagged(l as i32)
        } else {
            GradedFreeModule::zero(ctx)
        };
        p1_summands.push(Summand { index: l, qg, ql, offset, rank: part.rank() });
        offset += part.rank();
        p1_parts.push(part);
    }
    let p0 = GradedFreeModule::direct_sum(&p0_parts, ctx);
    let p1 = GradedFreeModule::direct_sum(&p1_parts, ctx);
    let mut rho = PolyMatrix::zero(p1.clone(), p0.clone());
    for r in &p0_summands {
        for c in &p1_summands {
            if c.rank == 0 {
                continue;
            }
            let t = ai + bi - r.index - c.index;
            if t < 0 {
                continue;
            }
            let t = t as usize;
            ensure!(
                c.qg >= t && c.qg - t == r.qg && c.ql - t == r.ql,
                Inconsistent,
                "block ({}, {}) has mismatched exterior degrees",
                r.index,
                c.index
            );
            let d = delta_matrix(ctx, t, c.qg, c.ql)?;
            for (row, col, p) in d.triplets() {
                rho.set(r.offset + row, c.offset + col, p.clone());
            }
        }
    }
    Ok(Presentation { ctx, a, b, a_eff: ae, b_eff: be, p0, p1, rho, p0_summands, p1_summands })
}

/// Whether every nonzero entry of `ρ` has positive degree.
pub fn is_minimal(p: &Presentation) -> bool {
    p.rho.triplets().iter().all(|(_, _, poly)| poly.constant_term() == crate::scalar::rat(0))
}

