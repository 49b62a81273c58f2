//! Higher direct images of `𝓜^b_a(−c) = Hom(Ω^{b−1}(b), Ω^{a−1}(a))(−c)` on `ℙ^{m−1}`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{ensure, Error, Result};
use crate::scalar::{binomial, Rational};

/// Which closed form describes the nonvanishing direct image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Descriptor {
    /// Every higher direct image vanishes.
    Vanishes,
    /// `F^∨_k = Λ^k F^∨`.
    FDual(usize),
    /// `π_* 𝓜^b_a(−c)` for `c < 0`.
    DirectImage { a: usize, b: usize, c: i64 },
    /// `π_*(𝓜^a_b(c−m))^∨ ⊗ |F|^∨` for `c > m`.
    SerreDual { a: usize, b: usize, c: i64 },
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Descriptor::Vanishes => write!(f, "0"),
            Descriptor::FDual(k) => write!(f, "F^∨_{k}"),
            Descriptor::DirectImage { a, b, c } => write!(f, "π_*M^{b}_{a}({})", -c),
            Descriptor::SerreDual { a, b, c } => write!(f, "(π_*M^{a}_{b}({}))^∨⊗|F|^∨", c),
        }
    }
}

/// The unique possibly nonvanishing `R^ν π_*`, with its rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyEntry {
    pub nu: Option<usize>,
    pub rank: u64,
    pub descriptor: Descriptor,
}

impl CohomologyEntry {
    fn vanishing() -> Self {
        CohomologyEntry { nu: None, rank: 0, descriptor: Descriptor::Vanishes }
    }

    /// Rank of `R^d π_*`.
    pub fn rank_in_degree(&self, d: usize) -> u64 {
        if self.nu == Some(d) {
            self.rank
        } else {
            0
        }
    }
}

/// A polynomial in one variable with rational coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankPolynomial {
    pub coeffs: Vec<Rational>,
}

impl RankPolynomial {
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, z: i64) -> Rational {
        let zq = Rational::from_integer(BigInt::from(z));
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &zq + c;
        }
        acc
    }

    /// Value at an integer, which must itself be an integer.
    pub fn eval_integer(&self, z: i64) -> Result<BigInt> {
        let v = self.eval(z);
        ensure!(v.is_integer(), Inconsistent, "rank polynomial is not integral at {z}");
        Ok(v.to_integer())
    }
}

impl fmt::Display for RankPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn check_range(m: usize, a: usize, b: usize) -> Result<()> {
    ensure!(m >= 1, OutOfRange, "m must be positive");
    ensure!(
        (1..=m).contains(&a) && (1..=m).contains(&b),
        OutOfRange,
        "need 1 <= a, b <= m = {m}, got a = {a}, b = {b}"
    );
    Ok(())
}

/// The involution `(a, b, c) ↦ (m+1−b, m+1−a, c)`.
pub fn dual_triple(m: usize, a: usize, b: usize, c: i64) -> (usize, usize, i64) {
    (m + 1 - b, m + 1 - a, c)
}

/// Signed value `χ(𝓜^b_a(−c))` at `0 ≤ c ≤ m` read off the case list; requires `a + b ≥ m + 1`.
fn sample_value(m: usize, a: usize, b: usize, c: i64) -> i64 {
    let (mi, ai, bi) = (m as i64, a as i64, b as i64);
    let k = c + bi - ai;
    if (0.max(ai - bi)..=mi - bi).contains(&c) {
        let s = if c % 2 == 0 { 1 } else { -1 };
        s * binomial(mi, k) as i64
    } else if (ai..=(ai + mi - bi).min(mi)).contains(&c) {
        let s = if (c - 1) % 2 == 0 { 1 } else { -1 };
        s * binomial(mi, k) as i64
    } else {
        0
    }
}

/// `r^b_a(z)`: degree `≤ m−1`, fixed by its values at `z = −1, …, −m`;
/// the value at `z = 0` is checked against the case list.
pub fn rank_polynomial(m: usize, a: usize, b: usize) -> Result<RankPolynomial> {
    check_range(m, a, b)?;
    ensure!(a + b > m, OutOfRange, "rank polynomial needs a + b >= m + 1, got a = {a}, b = {b}");
    let xs: Vec<i64> = (1..=m as i64).map(|c| -c).collect();
    let ys: Vec<i64> = (1..=m as i64).map(|c| sample_value(m, a, b, c)).collect();
    let p = lagrange(&xs, &ys);
    let at_zero = p.eval(0);
    let want = sample_value(m, a, b, 0);
    ensure!(
        at_zero == Rational::from_integer(BigInt::from(want)),
        Inconsistent,
        "interpolated r^{b}_{a}(0) = {at_zero}, expected {want}"
    );
    Ok(p)
}

/// Exact Lagrange interpolation through integer points.
pub fn lagrange(xs: &[i64], ys: &[i64]) -> RankPolynomial {
    let k = xs.len();
    let mut coeffs = alloc::vec![Rational::zero(); k.max(1)];
    for i in 0..k {
        // Basis polynomial ∏_{j≠i} (z − x_j)/(x_i − x_j), built coefficientwise.
        let mut basis = alloc::vec![Rational::one()];
        let mut denom = BigInt::one();
        for j in 0..k {
            if j == i {
                continue;
            }
            let mut next = alloc::vec![Rational::zero(); basis.len() + 1];
            let xj = Rational::from_integer(BigInt::from(xs[j]));
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &xj;
            }
            basis = next;
            denom *= xs[i] - xs[j];
        }
        let scale = Rational::new(BigInt::from(ys[i]), denom);
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += c * &scale;
        }
    }
    while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
        coeffs.pop();
    }
    RankPolynomial { coeffs }
}

/// The only nonvanishing `R^ν π_* 𝓜^b_a(−c)`, if any.
pub fn direct_image(m: usize, a: usize, b: usize, c: i64) -> Result<CohomologyEntry> {
    check_range(m, a, b)?;
    if a + b < m + 1 {
        let (a2, b2, c2) = dual_triple(m, a, b, c);
        return direct_image(m, a2, b2, c2);
    }
    let (mi, ai, bi) = (m as i64, a as i64, b as i64);
    if c < 0 {
        let r = rank_polynomial(m, a, b)?.eval_integer(-c)?;
        let rank = to_rank(&r)?;
        return Ok(if rank == 0 {
            CohomologyEntry::vanishing()
        } else {
            CohomologyEntry { nu: Some(0), rank, descriptor: Descriptor::DirectImage { a, b, c } }
        });
    }
    if c > mi {
        let inner = direct_image(m, b, a, mi - c)?;
        return Ok(if inner.rank == 0 {
            CohomologyEntry::vanishing()
        } else {
            CohomologyEntry { nu: Some(m - 1), rank: inner.rank, descriptor: Descriptor::SerreDual { a, b, c } }
        });
    }
    let k = c + bi - ai;
    if (0.max(ai - bi)..=mi - bi).contains(&c) {
        return Ok(CohomologyEntry {
            nu: Some(c as usize),
            rank: binomial(mi, k),
            descriptor: Descriptor::FDual(k as usize),
        });
    }
    if (ai..=(ai + mi - bi).min(mi)).contains(&c) {
        return Ok(CohomologyEntry {
            nu: Some(c as usize - 1),
            rank: binomial(mi, k),
            descriptor: Descriptor::FDual(k as usize),
        });
    }
    Ok(CohomologyEntry::vanishing())
}

fn to_rank(r: &BigInt) -> Result<u64> {
    r.to_u64()
        .ok_or_else(|| Error::Inconsistent(alloc::format!("negative or oversized rank {r}")))
}

/// The necessary condition for `R^d π_* 𝓜^b_a(−c) ≠ 0` stated as four windows.
pub fn vanishing_window(m: usize, a: usize, b: usize, c: i64, d: i64) -> bool {
    let (mi, ai, bi) = (m as i64, a as i64, b as i64);
    match d - c {
        x if x > 0 => d == 0 && c < 0,
        0 => {
            let v = c + bi;
            v >= ai.max(bi) && v <= mi.min(ai + bi - 1)
        }
        -1 => {
            let v = c - ai;
            v >= 0.max(mi - ai - bi - 1) && v <= (mi - bi).min(mi - ai)
        }
        _ => d == mi - 1 && c > mi,
    }
}
