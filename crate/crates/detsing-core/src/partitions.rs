//! Young diagrams: conjugates, convex squares, rim hooks and Schur dimensions.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{ensure, Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

/// A box `(r, α_r)` with `α_{r+1} < α_r`; rows and columns count from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConvexSquare {
    pub row: usize,
    pub col: usize,
}

impl Partition {
    /// Trailing zeros are stripped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        ensure!(
            parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0),
            OutOfRange,
            "{parts:?} is not a partition"
        );
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `α_r`, zero past the last row.
    pub fn part(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(1) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    pub fn convex_squares(&self) -> Vec<ConvexSquare> {
        (1..=self.len())
            .filter(|&r| self.part(r + 1) < self.part(r))
            .map(|r| ConvexSquare { row: r, col: self.part(r) })
            .collect()
    }

    pub fn is_convex(&self, sq: ConvexSquare) -> bool {
        sq.row >= 1 && sq.row <= self.len() && self.part(sq.row) == sq.col && self.part(sq.row + 1) < sq.col
    }

    /// `R_r(α)`: the diagram with row `r` removed.
    pub fn drop_row(&self, sq: ConvexSquare) -> Result<Partition> {
        ensure!(self.is_convex(sq), OutOfRange, "({}, {}) is not a convex square of {self}", sq.row, sq.col);
        let mut p = self.0.clone();
        p.remove(sq.row - 1);
        Ok(Partition(p))
    }

    /// `C_c(α)`: the diagram with column `c` removed.
    pub fn drop_column(&self, sq: ConvexSquare) -> Result<Partition> {
        ensure!(self.is_convex(sq), OutOfRange, "({}, {}) is not a convex square of {self}", sq.row, sq.col);
        let p: Vec<usize> = self.0.iter().map(|&x| if x >= sq.col { x - 1 } else { x }).collect();
        Partition::new(p)
    }

    /// Content-hook formula for the number of semistandard tableaux with entries in `1..=n`.
    pub fn schur_dim(&self, n: usize) -> BigInt {
        if self.len() > n {
            return BigInt::from(0);
        }
        let conj = self.conjugate();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (r0, &len) in self.0.iter().enumerate() {
            let r = r0 + 1;
            for c in 1..=len {
                let content = n as i64 + c as i64 - r as i64;
                let hook = (len - c) + (conj.part(c) - r) + 1;
                num *= content;
                den *= hook as i64;
            }
        }
        let (q, rem) = num.div_rem(&den);
        debug_assert!(rem == BigInt::from(0));
        q
    }

    pub fn schur_dim_u64(&self, n: usize) -> u64 {
        self.schur_dim(n).to_u64().unwrap_or(u64::MAX)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

pub fn conjugate(alpha: &Partition) -> Partition {
    alpha.conjugate()
}

pub fn convex_squares(alpha: &Partition) -> Vec<ConvexSquare> {
    alpha.convex_squares()
}

pub fn drop_row(alpha: &Partition, r: usize) -> Result<Partition> {
    alpha.drop_row(ConvexSquare { row: r, col: alpha.part(r) })
}

pub fn drop_column(alpha: &Partition, c: usize) -> Result<Partition> {
    let r = (1..=alpha.len()).rev().find(|&r| alpha.part(r) == c);
    match r {
        Some(row) => alpha.drop_column(ConvexSquare { row, col: c }),
        None => Err(Error::OutOfRange(alloc::format!("column {c} ends no row of {alpha}"))),
    }
}

pub fn schur_dim(alpha: &Partition, n: usize) -> BigInt {
    alpha.schur_dim(n)
}

/// All `β ⊇ α` such that `β − α` is a border strip of `s` boxes whose lowest box lies in row `m`.
pub fn rim_hook_extensions(alpha: &Partition, s: usize, m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if s == 0 || m == 0 || alpha.len() > m {
        return out;
    }
    // The strip occupies rows top..=m; below the top row each new row ends at α_{i−1} + 1.
    for top in (1..=m).rev() {
        let mut lower = 0usize;
        for i in top + 1..=m {
            lower += alpha.part(i - 1) + 1 - alpha.part(i);
        }
        if lower >= s {
            continue;
        }
        let top_len = alpha.part(top) + (s - lower);
        if top > 1 && top_len > alpha.part(top - 1) {
            continue;
        }
        let mut beta: Vec<usize> = (1..=m).map(|i| alpha.part(i)).collect();
        beta[top - 1] = top_len;
        for i in top + 1..=m {
            beta[i - 1] = alpha.part(i - 1) + 1;
        }
        out.push(Partition::new(beta).expect("border strip yields a partition"));
    }
    out.sort();
    out
}

/// Partitions of `k` with at most `rows` parts, each at most `cols`, in lexicographic order.
pub fn partitions_in_box(k: usize, rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(left: usize, max: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == rows {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            // Prune when the remaining rows cannot hold what is left.
            if p * (rows - cur.len()) < left {
                break;
            }
            cur.push(p);
            rec(left - p, p, rows, cur, out);
            cur.pop();
        }
    }
    rec(k, cols, rows, &mut cur, &mut out);
    out
}
