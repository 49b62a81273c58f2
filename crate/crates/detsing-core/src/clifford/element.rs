//! Elements of `Λ_S(F^∨ ⊕ G)` and the star product.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::minor;
use crate::poly::SparsePoly;
use crate::ring::{IndexSet, RingContext};

/// Basis label `(g-set, λ-set)`.
pub type BasisKey = (IndexSet, IndexSet);

/// A finite `S`-combination of the basis elements `e(I, J)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    ctx: RingContext,
    terms: BTreeMap<BasisKey, SparsePoly>,
}

impl CliffordElement {
    pub fn zero(ctx: RingContext) -> Self {
        CliffordElement { ctx, terms: BTreeMap::new() }
    }

    pub fn scalar(ctx: RingContext, p: SparsePoly) -> Self {
        Self::basis(ctx, IndexSet::empty(ctx.n), IndexSet::empty(ctx.m), p)
    }

    pub fn one(ctx: RingContext) -> Self {
        Self::scalar(ctx, SparsePoly::one(ctx.nvars()))
    }

    pub fn basis(ctx: RingContext, g: IndexSet, lambda: IndexSet, coeff: SparsePoly) -> Self {
        let mut e = Self::zero(ctx);
        e.add_term(g, lambda, coeff);
        e
    }

    pub fn lambda(ctx: RingContext, i: usize) -> Self {
        let l = IndexSet::new(alloc::vec![i], ctx.m).expect("λ index in range");
        Self::basis(ctx, IndexSet::empty(ctx.n), l, SparsePoly::one(ctx.nvars()))
    }

    pub fn g(ctx: RingContext, j: usize) -> Self {
        let g = IndexSet::new(alloc::vec![j], ctx.n).expect("g index in range");
        Self::basis(ctx, g, IndexSet::empty(ctx.m), SparsePoly::one(ctx.nvars()))
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &SparsePoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &IndexSet, lambda: &IndexSet) -> SparsePoly {
        self.terms
            .get(&(g.clone(), lambda.clone()))
            .cloned()
            .unwrap_or_else(|| SparsePoly::zero(self.ctx.nvars()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: IndexSet, lambda: IndexSet, coeff: SparsePoly) {
        if coeff.is_zero() {
            return;
        }
        let key = (g, lambda);
        match self.terms.get_mut(&key) {
            Some(c) => {
                c.add_assign(&coeff);
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add(&self, other: &CliffordElement) -> CliffordElement {
        let mut out = self.clone();
        for ((g, l), c) in &other.terms {
            out.add_term(g.clone(), l.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> CliffordElement {
        self.scale(&SparsePoly::from_int(self.ctx.nvars(), -1))
    }

    pub fn sub(&self, other: &CliffordElement) -> CliffordElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, p: &SparsePoly) -> CliffordElement {
        let mut out = Self::zero(self.ctx);
        for ((g, l), c) in &self.terms {
            out.add_term(g.clone(), l.clone(), c * p);
        }
        out
    }

    /// Exterior product in `Λ_S(F^∨ ⊕ G)`.
    pub fn wedge(&self, other: &CliffordElement) -> CliffordElement {
        let mut out = Self::zero(self.ctx);
        for ((g1, l1), c1) in &self.terms {
            for ((g2, l2), c2) in &other.terms {
                if let Some((s, g, l)) = wedge_basis(g1, l1, g2, l2) {
                    out.add_term(g, l, (c1 * c2).scale(&crate::scalar::rat(s)));
                }
            }
        }
        out
    }

    /// `∂_{g_i}`.
    pub fn deriv_g(&self, i: usize) -> CliffordElement {
        let mut out = Self::zero(self.ctx);
        for ((g, l), c) in &self.terms {
            if let Some((s, g2)) = deriv_g_basis(g, l, i) {
                out.add_term(g2, l.clone(), c.scale(&crate::scalar::rat(s)));
            }
        }
        out
    }

    /// `∂_{λ_j}`.
    pub fn deriv_lambda(&self, j: usize) -> CliffordElement {
        let mut out = Self::zero(self.ctx);
        for ((g, l), c) in &self.terms {
            if let Some((s, l2)) = deriv_lambda_basis(l, j) {
                out.add_term(g.clone(), l2, c.scale(&crate::scalar::rat(s)));
            }
        }
        out
    }

    /// Homogeneous components by total exterior degree.
    pub fn parity_split(&self) -> BTreeMap<usize, CliffordElement> {
        let mut out: BTreeMap<usize, CliffordElement> = BTreeMap::new();
        for ((g, l), c) in &self.terms {
            out.entry(g.len() + l.len())
                .or_insert_with(|| Self::zero(self.ctx))
                .add_term(g.clone(), l.clone(), c.clone());
        }
        out
    }

    /// `u ∗ v = 𝔪(Σ_t (−1)^t Δ^(t)(u ⊗ v))`, with `Δ^(t)` in minor form.
    pub fn star(&self, other: &CliffordElement) -> CliffordElement {
        let ctx = self.ctx;
        let mut out = Self::zero(ctx);
        for ((g1, l1), c1) in &self.terms {
            for ((g2, l2), c2) in &other.terms {
                let coeff = c1 * c2;
                let deg_u = g1.len() + l1.len();
                let tmax = g1.len().min(l2.len());
                for t in 0..=tmax {
                    let ti = t as i64;
                    let sign = if (ti * deg_u as i64 + ti * (ti - 1) / 2 + ti) % 2 == 0 { 1 } else { -1 };
                    for ip in IndexSet::subsets(ctx.n, t) {
                        if !ip.is_subset(g1) {
                            continue;
                        }
                        let Some((su, gu)) = deriv_g_multi(g1, l1, &ip) else { continue };
                        for jp in IndexSet::subsets(ctx.m, t) {
                            if !jp.is_subset(l2) {
                                continue;
                            }
                            let Some((sv, lv)) = deriv_lambda_multi(l2, &jp) else { continue };
                            let Some((sw, g, l)) = wedge_basis(&gu, l1, g2, &lv) else { continue };
                            let det = minor(&ctx, &jp, &ip).expect("minor indices in range");
                            let s = sign * su * sv * sw;
                            out.add_term(g, l, (&coeff * &det).scale(&crate::scalar::rat(s)));
                        }
                    }
                }
            }
        }
        out
    }

    /// `λ_i ∗ g_j + g_j ∗ λ_i`.
    pub fn anticommutator(&self, other: &CliffordElement) -> CliffordElement {
        self.star(other).add(&other.star(self))
    }

    pub fn display(&self) -> ElementDisplay<'_> {
        ElementDisplay(self)
    }
}

pub struct ElementDisplay<'a>(&'a CliffordElement);

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.0;
        if e.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((g, l), c) in &e.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c.display(&e.ctx))?;
            for &j in l.elems().iter().rev() {
                write!(f, "·l{j}")?;
            }
            for &i in g.elems() {
                write!(f, "·g{i}")?;
            }
        }
        Ok(())
    }
}

fn parity(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `e(I1, J1) ∧ e(I2, J2) = sign · e(I1 ∪ I2, J1 ∪ J2)`, or `None` on overlap.
pub fn wedge_basis(
    g1: &IndexSet,
    l1: &IndexSet,
    g2: &IndexSet,
    l2: &IndexSet,
) -> Option<(i64, IndexSet, IndexSet)> {
    // λ_{J1} g_{I1} λ_{J2} g_{I2}: move λ_{J2} past g_{I1}, then merge each kind.
    let s0 = parity(g1.len() * l2.len());
    let (sg, g) = g1.merge(g2)?;
    // Descending merge of J1 then J2 has the sign of the ascending merge of J2 then J1.
    let (sl, l) = l2.merge(l1)?;
    Some((s0 * sg * sl, g, l))
}

fn deriv_g_basis(g: &IndexSet, l: &IndexSet, i: usize) -> Option<(i64, IndexSet)> {
    let pos = g.position(i)?;
    Some((parity(l.len() + pos), g.without(i)?))
}

fn deriv_lambda_basis(l: &IndexSet, j: usize) -> Option<(i64, IndexSet)> {
    if !l.contains(j) {
        return None;
    }
    Some((parity(l.count_above(j)), l.without(j)?))
}

/// `∂_{g_{i_t}} ⋯ ∂_{g_{i_1}}` on `e(I, J)`; the rightmost factor acts first.
pub fn deriv_g_multi(g: &IndexSet, l: &IndexSet, ip: &IndexSet) -> Option<(i64, IndexSet)> {
    let mut sign = 1;
    let mut cur = g.clone();
    for &i in ip.elems() {
        let (s, next) = deriv_g_basis(&cur, l, i)?;
        sign *= s;
        cur = next;
    }
    Some((sign, cur))
}

/// `∂_{λ_{j_t}} ⋯ ∂_{λ_{j_1}}` on `e(∅, J)`.
pub fn deriv_lambda_multi(l: &IndexSet, jp: &IndexSet) -> Option<(i64, IndexSet)> {
    let mut sign = 1;
    let mut cur = l.clone();
    for &j in jp.elems() {
        let (s, next) = deriv_lambda_basis(&cur, j)?;
        sign *= s;
        cur = next;
    }
    Some((sign, cur))
}

/// Elements `λ_1..λ_m` followed by `g_1..g_n`.
pub fn generators(ctx: RingContext) -> Vec<CliffordElement> {
    let mut v: Vec<CliffordElement> = (1..=ctx.m).map(|i| CliffordElement::lambda(ctx, i)).collect();
    v.extend((1..=ctx.n).map(|j| CliffordElement::g(ctx, j)));
    v
}
