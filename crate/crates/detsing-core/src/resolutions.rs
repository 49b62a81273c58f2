//! Shapes of the free resolutions of `q'_* p'^* 𝓜^b_a(−c)` and their projective dimensions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::cohomology::{direct_image, dual_triple};
use crate::error::{ensure, Error, Result};
use crate::scalar::binomial;

/// Schur-factor shape of a summand of `P^μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SummandShape {
    /// `Λ^p F^∨ ⊗ Λ^q G`.
    Exterior { p: usize, q: usize },
    /// `R^ν π_* 𝓜^b_a(−c') ⊗ Λ^q G`.
    DirectImage { nu: usize, c: i64, q: usize },
}

impl fmt::Display for SummandShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SummandShape::Exterior { p, q } => write!(f, "Λ^{p}F^∨⊗Λ^{q}G"),
            SummandShape::DirectImage { nu, c, q } => write!(f, "R^{nu}π_*M({})⊗Λ^{q}G", -c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiSummand {
    pub rank: u64,
    pub shape: SummandShape,
    /// Internal degree, `None` where no twist is assigned.
    pub twist: Option<i32>,
}

/// Summands of `P^μ` indexed by homological degree `μ ≤ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    pub terms: BTreeMap<i32, Vec<BettiSummand>>,
}

impl BettiTable {
    fn push(&mut self, mu: i32, s: BettiSummand) {
        if s.rank > 0 {
            self.terms.entry(mu).or_default().push(s);
        }
    }

    pub fn rank(&self, mu: i32) -> u64 {
        self.terms.get(&mu).map_or(0, |v| v.iter().map(|s| s.rank).sum())
    }

    /// Total rank per homological degree, nonzero degrees only.
    pub fn ranks(&self) -> BTreeMap<i32, u64> {
        self.terms.keys().map(|&mu| (mu, self.rank(mu))).filter(|(_, r)| *r > 0).collect()
    }

    pub fn support(&self) -> Option<(i32, i32)> {
        let r = self.ranks();
        Some((*r.keys().next()?, *r.keys().next_back()?))
    }

    /// `max μ − min μ` over nonzero terms.
    pub fn length(&self) -> i32 {
        self.support().map_or(0, |(lo, hi)| hi - lo)
    }

    /// Ranks of `P^μ` in twist `d`, for summands with an assigned twist.
    pub fn graded_ranks(&self) -> BTreeMap<(i32, i32), u64> {
        let mut out = BTreeMap::new();
        for (&mu, v) in &self.terms {
            for s in v {
                if let Some(t) = s.twist {
                    *out.entry((mu, t)).or_insert(0) += s.rank;
                }
            }
        }
        out
    }
}

fn ext_rank(rank: usize, k: i64) -> u64 {
    if k < 0 {
        0
    } else {
        binomial(rank as i64, k)
    }
}

/// Whether all higher direct images with `ν ≠ 0` vanish.
pub fn in_regime(m: usize, a: usize, b: usize, c: i64) -> bool {
    c <= 0 || (c == 1 && (b == m || a == 1)) || (c == 2 && b == m && a == 1)
}

fn check(m: usize, n: usize, a: usize, b: usize) -> Result<()> {
    ensure!(m >= 1 && n >= m, OutOfRange, "need 1 <= m <= n, got m = {m}, n = {n}");
    ensure!(
        (1..=m).contains(&a) && (1..=m).contains(&b),
        OutOfRange,
        "need 1 <= a, b <= m = {m}, got a = {a}, b = {b}"
    );
    Ok(())
}

/// The five-row table of the free modules `P^μ` resolving `q'_* p'^* 𝓜^b_a(−c)`.
pub fn resolution_shape(m: usize, n: usize, a: usize, b: usize, c: i64) -> Result<BettiTable> {
    check(m, n, a, b)?;
    ensure!(in_regime(m, a, b, c), OutsideRegime, "higher direct images need not vanish at c = {c}");
    let (a, b, c) = if a + b < m + 1 { dual_triple(m, a, b, c) } else { (a, b, c) };
    let (mi, ni, ai, bi) = (m as i64, n as i64, a as i64, b as i64);
    let mut t = BettiTable::default();

    for mu in (mi - ni - 1)..=(c - 2).min(mi - 1) {
        let shift = c - mu + mi - 1;
        let e = direct_image(m, a, b, shift)?;
        let q = mi - 1 - mu;
        t.push(
            mu as i32,
            BettiSummand {
                rank: e.rank_in_degree(m - 1) * ext_rank(n, q),
                shape: SummandShape::DirectImage { nu: m - 1, c: shift, q: q.max(0) as usize },
                twist: None,
            },
        );
    }

    for k in 0..=(mi - ai).min(mi - bi) {
        let (p, q) = (bi + k, ai - c + k);
        t.push(
            (c - 1) as i32,
            BettiSummand {
                rank: ext_rank(m, p) * ext_rank(n, q),
                shape: SummandShape::Exterior { p: p as usize, q: q.max(0) as usize },
                twist: Some(q as i32),
            },
        );
    }

    for k in ai.max(bi)..=mi {
        let (p, q) = (k - ai, k - bi - c);
        t.push(
            c as i32,
            BettiSummand {
                rank: ext_rank(m, p) * ext_rank(n, q),
                shape: SummandShape::Exterior { p: p as usize, q: q.max(0) as usize },
                twist: Some(q as i32),
            },
        );
    }

    for mu in (c + 1).max(-ni)..=0 {
        let shift = c - mu;
        let e = direct_image(m, a, b, shift)?;
        let q = -mu;
        t.push(
            mu as i32,
            BettiSummand {
                rank: e.rank_in_degree(0) * ext_rank(n, q),
                shape: SummandShape::DirectImage { nu: 0, c: shift, q: q as usize },
                twist: Some(q as i32),
            },
        );
    }
    Ok(t)
}

/// Projective dimension read from the eight-row table.
pub fn projective_dimension(m: usize, n: usize, a: usize, b: usize, c: i64) -> Result<i64> {
    check(m, n, a, b)?;
    let (a, b, c) = if a + b < m + 1 { dual_triple(m, a, b, c) } else { (a, b, c) };
    let (mi, ni, ai, bi) = (m as i64, n as i64, a as i64, b as i64);
    let grade = ni - mi + 1;
    let d = if c == 2 && a == 1 && b == m {
        grade
    } else if c == 1 && b == m {
        grade
    } else if (mi - ni..=0).contains(&c) {
        grade
    } else if (ai - ni..=mi - ni).contains(&c) {
        -c + 1
    } else if ai > bi && (ai - bi - ni..=ai - ni - 1).contains(&c) {
        -c
    } else if ai <= bi && (-ni..=ai - ni - 1).contains(&c) {
        -c
    } else if ai > bi && (-ni..=ai - bi - ni - 1).contains(&c) {
        -c - 1
    } else if c < -ni {
        ni
    } else {
        return Err(Error::OutsideRegime(alloc::format!(
            "no projective dimension entry for a = {a}, b = {b}, c = {c}"
        )));
    };
    Ok(d)
}

/// Whether the module is perfect of grade `n − m + 1`.
pub fn perfection_check(m: usize, n: usize, a: usize, b: usize, c: i64) -> bool {
    let (mi, ni) = (m as i64, n as i64);
    (c == mi - ni - 1 && (a == m || b == 1))
        || (mi - ni..=0).contains(&c)
        || (c == 1 && (b == m || a == 1))
        || (c == 2 && b == m && a == 1)
}
