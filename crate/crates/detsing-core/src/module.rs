//! Graded free `S`-modules whose generators carry a twist and a torus weight.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::ring::{IndexSet, RingContext};
use crate::scalar::binomial;

/// Basis label of a generator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// A basis vector `e_I` of an exterior power `Λ^|I| F` or `Λ^|I| G`.
    Set(IndexSet),
    /// `g_I ⊗ λ_J` in `Λ^|I| G ⊗ Λ^|J| F^∨`.
    Pair { g: IndexSet, lambda: IndexSet },
    /// A label with a block tag, e.g. a summand index.
    Tagged(i32, alloc::boxed::Box<Label>),
    /// An anonymous generator.
    Index(usize),
    /// A named generator.
    Name(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Set(s) => write!(f, "e{s}"),
            Label::Pair { g, lambda } => write!(f, "g{g}*l{lambda}"),
            Label::Tagged(t, l) => write!(f, "[{t}]{l}"),
            Label::Index(i) => write!(f, "#{i}"),
            Label::Name(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: Label,
    /// Internal degree in which the generator sits.
    pub twist: i32,
    /// Torus weight in `Z^m × Z^n`.
    pub weight: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    pub ctx: RingContext,
    pub gens: Vec<Generator>,
}

impl GradedFreeModule {
    pub fn new(ctx: RingContext, gens: Vec<Generator>) -> Self {
        GradedFreeModule { ctx, gens }
    }

    pub fn zero(ctx: RingContext) -> Self {
        GradedFreeModule { ctx, gens: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn twists(&self) -> Vec<i32> {
        self.gens.iter().map(|g| g.twist).collect()
    }

    /// `Λ^a F`: generators `f_I` in degree 0 with weight `-e_I` on the row side.
    pub fn exterior_f(ctx: RingContext, a: usize) -> Self {
        let gens = IndexSet::subsets(ctx.m, a)
            .into_iter()
            .map(|s| {
                let mut w = ctx.zero_weight();
                for &i in s.elems() {
                    w[i - 1] -= 1;
                }
                Generator { label: Label::Set(s), twist: 0, weight: w }
            })
            .collect();
        GradedFreeModule { ctx, gens }
    }

    /// `Λ^a G`: generators `g_J` in degree `a` with weight `e_J` on the column side.
    pub fn exterior_g(ctx: RingContext, a: usize) -> Self {
        let gens = IndexSet::subsets(ctx.n, a)
            .into_iter()
            .map(|s| {
                let mut w = ctx.zero_weight();
                for &j in s.elems() {
                    w[ctx.m + j - 1] += 1;
                }
                Generator { label: Label::Set(s), twist: a as i32, weight: w }
            })
            .collect();
        GradedFreeModule { ctx, gens }
    }

    /// `Λ^qg G ⊗ Λ^ql F^∨` with generators `g_I ⊗ λ_J` in degree `qg`.
    pub fn exterior_pair(ctx: RingContext, qg: usize, ql: usize) -> Self {
        let mut gens = Vec::new();
        for g in IndexSet::subsets(ctx.n, qg) {
            for lambda in IndexSet::subsets(ctx.m, ql) {
                gens.push(Generator {
                    weight: pair_weight(&ctx, &g, &lambda),
                    label: Label::Pair { g: g.clone(), lambda },
                    twist: qg as i32,
                });
            }
        }
        GradedFreeModule { ctx, gens }
    }

    /// Shift every generator by the given twist and weight.
    pub fn shifted(&self, twist: i32, weight: &[i32]) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| Generator {
                label: g.label.clone(),
                twist: g.twist + twist,
                weight: g.weight.iter().zip(weight).map(|(a, b)| a + b).collect(),
            })
            .collect();
        GradedFreeModule { ctx: self.ctx, gens }
    }

    pub fn tagged(&self, tag: i32) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| Generator {
                label: Label::Tagged(tag, alloc::boxed::Box::new(g.label.clone())),
                twist: g.twist,
                weight: g.weight.clone(),
            })
            .collect();
        GradedFreeModule { ctx: self.ctx, gens }
    }

    pub fn direct_sum(parts: &[GradedFreeModule], ctx: RingContext) -> Self {
        GradedFreeModule { ctx, gens: parts.iter().flat_map(|p| p.gens.iter().cloned()).collect() }
    }

    /// `dim_K` of the degree-`d` piece: `Σ_g C(mn − 1 + d − twist(g), mn − 1)`.
    pub fn hilbert(&self, d: i32) -> u64 {
        let nv = self.ctx.nvars() as i64;
        self.gens
            .iter()
            .map(|g| {
                let e = (d - g.twist) as i64;
                if e < 0 {
                    0
                } else {
                    binomial(nv - 1 + e, nv - 1)
                }
            })
            .sum()
    }
}

pub fn pair_weight(ctx: &RingContext, g: &IndexSet, lambda: &IndexSet) -> Vec<i32> {
    let mut w = ctx.zero_weight();
    for &j in lambda.elems() {
        w[j - 1] += 1;
    }
    for &i in g.elems() {
        w[ctx.m + i - 1] += 1;
    }
    w
}
