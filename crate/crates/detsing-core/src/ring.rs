//! The polynomial ring `S = K[x_ij]` of a generic `m × n` matrix and the index
//! sets labelling exterior-power bases.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{ensure, Result};

/// Shape of the generic matrix. Variables `x_ij` are ordered lexicographically
/// in `(i, j)`, each of total degree one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingContext {
    pub m: usize,
    pub n: usize,
}

impl RingContext {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        ensure!(m >= 1 && n >= m, OutOfRange, "need n >= m >= 1, got m={m}, n={n}");
        Ok(RingContext { m, n })
    }

    pub fn nvars(&self) -> usize {
        self.m * self.n
    }

    /// Position of `x_ij` (1-based `i`, `j`) in the variable order.
    pub fn var(&self, i: usize, j: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.m && j >= 1 && j <= self.n);
        (i - 1) * self.n + (j - 1)
    }

    /// Inverse of [`RingContext::var`], 1-based.
    pub fn var_indices(&self, v: usize) -> (usize, usize) {
        (v / self.n + 1, v % self.n + 1)
    }

    /// Length of a weight vector: `m` row coordinates followed by `n` column coordinates.
    pub fn weight_len(&self) -> usize {
        self.m + self.n
    }

    pub fn zero_weight(&self) -> Vec<i32> {
        alloc::vec![0; self.m + self.n]
    }
}

/// A strictly increasing tuple of positive integers bounded by an ambient rank.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    elems: Vec<usize>,
    bound: usize,
}

impl IndexSet {
    pub fn new(elems: Vec<usize>, bound: usize) -> Result<Self> {
        ensure!(
            elems.windows(2).all(|w| w[0] < w[1]),
            OutOfRange,
            "index set {elems:?} is not strictly increasing"
        );
        ensure!(
            elems.iter().all(|&e| e >= 1 && e <= bound),
            OutOfRange,
            "index set {elems:?} leaves [1, {bound}]"
        );
        Ok(IndexSet { elems, bound })
    }

    pub fn empty(bound: usize) -> Self {
        IndexSet { elems: Vec::new(), bound }
    }

    pub fn full(bound: usize) -> Self {
        IndexSet { elems: (1..=bound).collect(), bound }
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    /// 0-based position of `e`, if present.
    pub fn position(&self, e: usize) -> Option<usize> {
        self.elems.binary_search(&e).ok()
    }

    /// Number of elements strictly greater than `e`.
    pub fn count_above(&self, e: usize) -> usize {
        self.elems.iter().filter(|&&x| x > e).count()
    }

    /// Number of elements strictly below `e`.
    pub fn count_below(&self, e: usize) -> usize {
        self.elems.iter().filter(|&&x| x < e).count()
    }

    pub fn without(&self, e: usize) -> Option<IndexSet> {
        let p = self.position(e)?;
        let mut elems = self.elems.clone();
        elems.remove(p);
        Some(IndexSet { elems, bound: self.bound })
    }

    pub fn with(&self, e: usize) -> Option<IndexSet> {
        match self.elems.binary_search(&e) {
            Ok(_) => None,
            Err(p) => {
                let mut elems = self.elems.clone();
                elems.insert(p, e);
                Some(IndexSet { elems, bound: self.bound })
            }
        }
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.elems.iter().all(|&e| other.contains(e))
    }

    pub fn minus(&self, other: &IndexSet) -> IndexSet {
        IndexSet {
            elems: self.elems.iter().copied().filter(|&e| !other.contains(e)).collect(),
            bound: self.bound,
        }
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.elems.iter().all(|&e| !other.contains(e))
    }

    /// Union with the sign of the shuffle sorting `self ++ other`; `None` on overlap.
    pub fn merge(&self, other: &IndexSet) -> Option<(i64, IndexSet)> {
        if !self.is_disjoint(other) {
            return None;
        }
        let mut inversions = 0usize;
        for &a in &self.elems {
            inversions += other.count_below(a);
        }
        let mut elems: Vec<usize> = self.elems.iter().chain(other.elems.iter()).copied().collect();
        elems.sort_unstable();
        let bound = self.bound.max(other.bound);
        Some((crate::scalar::sign(inversions as i64), IndexSet { elems, bound }))
    }

    /// All `k`-subsets of `{1..bound}` in lexicographic order.
    pub fn subsets(bound: usize, k: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        if k > bound {
            return out;
        }
        let mut cur: Vec<usize> = (1..=k).collect();
        loop {
            out.push(IndexSet { elems: cur.clone(), bound });
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < bound - (k - 1 - i) {
                    cur[i] += 1;
                    for t in i + 1..k {
                        cur[t] = cur[t - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elems.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
