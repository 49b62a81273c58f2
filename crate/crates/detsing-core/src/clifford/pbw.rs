//! Paths in the doubly infinite quiver and their PBW normal forms.
//!
//! Words are written in functional order: the rightmost letter is traversed
//! first. `λ_i` lowers the vertex by one and `g_j` raises it by one.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::poly::SparsePoly;
use crate::ring::{IndexSet, RingContext};
use crate::scalar::rat;

use super::element::CliffordElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `λ_i`, `1 ≤ i ≤ m`.
    L(usize),
    /// `g_j`, `1 ≤ j ≤ n`.
    G(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::L(i) => write!(f, "l{i}"),
            Letter::G(j) => write!(f, "g{j}"),
        }
    }
}

/// A path with a start vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWord {
    pub start: i64,
    pub letters: Vec<Letter>,
}

impl PathWord {
    pub fn new(start: i64, letters: Vec<Letter>) -> Self {
        PathWord { start, letters }
    }

    pub fn end(&self) -> i64 {
        self.start + self.letters.iter().map(|l| if matches!(l, Letter::G(_)) { 1 } else { -1 }).sum::<i64>()
    }

    /// Vertices visited, from the start through the end.
    pub fn vertices(&self) -> Vec<i64> {
        let mut v = alloc::vec![self.start];
        let mut cur = self.start;
        for l in self.letters.iter().rev() {
            cur += if matches!(l, Letter::G(_)) { 1 } else { -1 };
            v.push(cur);
        }
        v
    }

    /// Every vertex along the path lies in `[1, m]`.
    pub fn stays_within(&self, m: usize) -> bool {
        self.vertices().iter().all(|&v| v >= 1 && v <= m as i64)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.end())?;
        for l in &self.letters {
            write!(f, "·{l}")?;
        }
        write!(f, "·e{}", self.start)
    }
}

/// Which PBW basis is the target of rewriting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ordering {
    /// `λ_{j_q} ⋯ λ_{j_1} g_{i_1} ⋯ g_{i_p}`: first right along the `g`s, then left.
    RightFirst,
    /// `g_{i_1} ⋯ g_{i_p} λ_{j_q} ⋯ λ_{j_1}`: first left along the `λ`s, then right.
    LeftFirst,
}

/// Which reducible adjacent pair to rewrite next.
pub enum Strategy<'a> {
    Leftmost,
    Rightmost,
    /// Picks an index below the given count.
    Chooser(&'a mut dyn FnMut(usize) -> usize),
}

/// A combination of words over `S`; all words share the start vertex of the input.
pub type Expansion = BTreeMap<Vec<Letter>, SparsePoly>;

fn key(ord: Ordering, l: Letter) -> (u8, Reverse<usize>, usize) {
    match (ord, l) {
        (Ordering::RightFirst, Letter::L(i)) => (0, Reverse(i), 0),
        (Ordering::RightFirst, Letter::G(j)) => (1, Reverse(0), j),
        (Ordering::LeftFirst, Letter::G(j)) => (0, Reverse(0), j),
        (Ordering::LeftFirst, Letter::L(i)) => (1, Reverse(i), 0),
    }
}

fn reducible(ord: Ordering, w: &[Letter]) -> Vec<usize> {
    (0..w.len().saturating_sub(1)).filter(|&p| key(ord, w[p]) >= key(ord, w[p + 1])).collect()
}

pub fn is_normal(ord: Ordering, w: &[Letter]) -> bool {
    reducible(ord, w).is_empty()
}

fn add_into(map: &mut Expansion, w: Vec<Letter>, c: &SparsePoly) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(x) => {
            x.add_assign(c);
            if x.is_zero() {
                map.remove(&w);
            }
        }
        None => {
            map.insert(w, c.clone());
        }
    }
}

/// Rewrite a word into the chosen PBW basis of `C^∞` using the quiver relations.
pub fn pbw_expand_with(ctx: &RingContext, word: &[Letter], ord: Ordering, strategy: &mut Strategy<'_>) -> Expansion {
    let nv = ctx.nvars();
    let mut pending: Expansion = BTreeMap::new();
    pending.insert(word.to_vec(), SparsePoly::one(nv));
    let mut done: Expansion = BTreeMap::new();
    let minus = rat(-1);
    while let Some((w, c)) = pending.pop_first() {
        let spots = reducible(ord, &w);
        if spots.is_empty() {
            add_into(&mut done, w, &c);
            continue;
        }
        let p = match strategy {
            Strategy::Leftmost => spots[0],
            Strategy::Rightmost => spots[spots.len() - 1],
            Strategy::Chooser(f) => spots[f(spots.len()) % spots.len()],
        };
        let (x, y) = (w[p], w[p + 1]);
        if x == y {
            continue;
        }
        let mut swapped = w.clone();
        swapped.swap(p, p + 1);
        add_into(&mut pending, swapped, &c.scale(&minus));
        let contraction = match (ord, x, y) {
            (Ordering::RightFirst, Letter::G(j), Letter::L(i)) => Some((i, j)),
            (Ordering::LeftFirst, Letter::L(i), Letter::G(j)) => Some((i, j)),
            _ => None,
        };
        if let Some((i, j)) = contraction {
            let mut shorter = w.clone();
            shorter.drain(p..p + 2);
            add_into(&mut pending, shorter, &(&c * &SparsePoly::x(ctx, i, j)));
        }
    }
    done
}

/// PBW expansion with the leftmost-first rewriting strategy.
pub fn pbw_expand(ctx: &RingContext, word: &PathWord, ord: Ordering) -> Expansion {
    pbw_expand_with(ctx, &word.letters, ord, &mut Strategy::Leftmost)
}

/// Vertex at which a normal word turns around.
pub fn turning_vertex(start: i64, w: &[Letter], ord: Ordering) -> i64 {
    match ord {
        Ordering::RightFirst => start + w.iter().filter(|l| matches!(l, Letter::G(_))).count() as i64,
        Ordering::LeftFirst => start - w.iter().filter(|l| matches!(l, Letter::L(_))).count() as i64,
    }
}

/// Drop the basis paths that leave `[1, m]` (to the right for the right-first
/// basis, to the left for the left-first basis).
pub fn quotient_to_c(m: usize, start: i64, exp: &Expansion, ord: Ordering) -> Expansion {
    exp.iter()
        .filter(|(w, _)| {
            let l = turning_vertex(start, w, ord);
            match ord {
                Ordering::RightFirst => l <= m as i64,
                Ordering::LeftFirst => l >= 1,
            }
        })
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect()
}

/// Right-first normal word `λ_J g_I` (`λ`s decreasing, `g`s increasing).
pub fn right_first_word(g: &IndexSet, lambda: &IndexSet) -> Vec<Letter> {
    let mut w: Vec<Letter> = lambda.elems().iter().rev().map(|&j| Letter::L(j)).collect();
    w.extend(g.elems().iter().map(|&i| Letter::G(i)));
    w
}

/// Left-first normal word `g_I λ_J` (`g`s increasing, `λ`s decreasing).
pub fn left_first_word(g: &IndexSet, lambda: &IndexSet) -> Vec<Letter> {
    let mut w: Vec<Letter> = g.elems().iter().map(|&i| Letter::G(i)).collect();
    w.extend(lambda.elems().iter().rev().map(|&j| Letter::L(j)));
    w
}

/// Index sets `(g, λ)` of a word with no repeated letters of either kind.
pub fn word_sets(ctx: &RingContext, w: &[Letter]) -> Option<(IndexSet, IndexSet)> {
    let mut gs: Vec<usize> = w.iter().filter_map(|l| if let Letter::G(j) = l { Some(*j) } else { None }).collect();
    let mut ls: Vec<usize> = w.iter().filter_map(|l| if let Letter::L(i) = l { Some(*i) } else { None }).collect();
    gs.sort_unstable();
    ls.sort_unstable();
    Some((IndexSet::new(gs, ctx.n).ok()?, IndexSet::new(ls, ctx.m).ok()?))
}

/// A right-first expansion as an element of `Λ_S(F^∨ ⊕ G)` (the words are the basis `e(I, J)`).
pub fn right_first_to_element(ctx: RingContext, exp: &Expansion) -> CliffordElement {
    let mut e = CliffordElement::zero(ctx);
    for (w, c) in exp {
        let (g, l) = word_sets(&ctx, w).expect("normal words have distinct letters");
        debug_assert!(right_first_word(&g, &l) == *w);
        e.add_term(g, l, c.clone());
    }
    e
}

/// Normal words of each ordering whose paths run from `a` to `b` in `C^∞`.
pub fn normal_words(ctx: &RingContext, a: i64, b: i64, ord: Ordering) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for p in 0..=ctx.n {
        let q = p as i64 - (b - a);
        if q < 0 || q > ctx.m as i64 {
            continue;
        }
        for g in IndexSet::subsets(ctx.n, p) {
            for l in IndexSet::subsets(ctx.m, q as usize) {
                out.push(match ord {
                    Ordering::RightFirst => right_first_word(&g, &l),
                    Ordering::LeftFirst => left_first_word(&g, &l),
                });
            }
        }
    }
    out
}

/// The change of basis from left-first to right-first words in `C^∞_{ab}`:
/// each left-first normal word with its right-first expansion.
pub fn basis_change(ctx: &RingContext, a: i64, b: i64) -> Vec<(Vec<Letter>, Expansion)> {
    normal_words(ctx, a, b, Ordering::LeftFirst)
        .into_iter()
        .map(|w| {
            let e = pbw_expand_with(ctx, &w, Ordering::RightFirst, &mut Strategy::Leftmost);
            (w, e)
        })
        .collect()
}

/// Re-expand a combination of words in the target ordering.
pub fn convert(ctx: &RingContext, exp: &Expansion, ord: Ordering) -> Expansion {
    let mut out = BTreeMap::new();
    for (w, c) in exp {
        for (w2, c2) in pbw_expand_with(ctx, w, ord, &mut Strategy::Leftmost) {
            add_into(&mut out, w2, &(c * &c2));
        }
    }
    out
}
