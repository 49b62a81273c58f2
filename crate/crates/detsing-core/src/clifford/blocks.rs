//! Rational block decomposition `C_ab = ⊕_p C^{p−a, p−b}`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{ensure, Error, Result};
use crate::linalg::QMatrix;
use crate::matrix::PolyMatrix;
use crate::ring::RingContext;
use crate::scalar::{factorial, Rational};

use super::delta::{delta_matrix, delta_power_matrix};
use super::presentation::{presentation, Presentation};

/// The `t × t` matrix `A_ij = 1/(u−i−j)!`, indices from 1.
pub fn hankel_factorial_matrix(u: usize, t: usize) -> QMatrix {
    QMatrix::from_fn(t, t, |i, j| {
        let e = u as i64 - (i + 1) as i64 - (j + 1) as i64;
        if e < 0 {
            Rational::zero()
        } else {
            Rational::new(One::one(), factorial(e as u32))
        }
    })
}

/// `det (1/(u−i−j)!)_{1 ≤ i,j ≤ t}`.
pub fn hankel_factorial_det(u: usize, t: usize) -> Result<Rational> {
    ensure!(u >= 2 * t, OutOfRange, "need u >= 2t, got u = {u}, t = {t}");
    if t == 0 {
        return Ok(Rational::one());
    }
    hankel_factorial_matrix(u, t).determinant()
}

/// `A = P D Pᵀ` with `P` unit upper triangular, eliminating from the last index.
pub fn symmetric_diagonalize(a: &QMatrix) -> Result<(QMatrix, Vec<Rational>)> {
    let t = a.rows();
    ensure!(a.cols() == t && *a == a.transpose(), SizeMismatch, "matrix is not square symmetric");
    let mut work = a.clone();
    let mut p = QMatrix::identity(t);
    let mut d = alloc::vec![Rational::zero(); t];
    for k in (0..t).rev() {
        let pivot = work.get(k, k).clone();
        if pivot.is_zero() {
            return Err(Error::Singular(alloc::format!("trailing principal minor {} vanishes", k + 1)));
        }
        for i in 0..k {
            p.set(i, k, work.get(i, k) / &pivot);
        }
        for i in 0..=k {
            for j in 0..=k {
                let v = work.get(i, j) - &(p.get(i, k) * &pivot * p.get(j, k));
                work.set(i, j, v);
            }
        }
        d[k] = pivot;
    }
    Ok((p, d))
}

/// One block `C^{αβ} = cok(Δ^(t): Λ^{m−β}G ⊗ Λ^{m−α}F^∨ → Λ^α G ⊗ Λ^β F^∨)`, `t = m − α − β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub p: usize,
    pub alpha: usize,
    pub beta: usize,
    pub t: usize,
    pub map: PolyMatrix,
}

impl Block {
    pub fn hilbert(&self, d: i32) -> u64 {
        crate::graded::cokernel_hilbert(&self.map, d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub presentation: Presentation,
    /// `A_ij = 1/(u−i−j)!` with `u = m − |a−b| + 2`.
    pub a_matrix: QMatrix,
    pub p: QMatrix,
    pub d: Vec<Rational>,
    pub blocks: Vec<Block>,
    /// `P̃: P_0 → P_0`, entry `(i, k) = P_ik Δ^{k−i}`.
    pub p_tilde: PolyMatrix,
    /// `diag(D_k Δ^{t_k}): P_1 → P_0`.
    pub middle: PolyMatrix,
    /// `P̃': P_1 → P_1`, entry `(k, j) = P_jk Δ^{k−j}`.
    pub p_tilde_prime: PolyMatrix,
}

impl BlockDecomposition {
    /// `ρ = P̃ · middle · P̃'` entry by entry.
    pub fn reconstructs_rho(&self) -> Result<bool> {
        let prod = self.p_tilde.compose(&self.middle)?.compose(&self.p_tilde_prime)?;
        Ok(prod.same_entries(&self.presentation.rho))
    }

    /// `A = P D Pᵀ`.
    pub fn reconstructs_a(&self) -> Result<bool> {
        let t = self.d.len();
        let dm = QMatrix::from_fn(t, t, |i, j| if i == j { self.d[i].clone() } else { Rational::zero() });
        Ok(self.p.mul(&dm)?.mul(&self.p.transpose())? == self.a_matrix)
    }

    pub fn blocks_hilbert(&self, d: i32) -> u64 {
        self.blocks.iter().map(|b| b.hilbert(d)).sum()
    }
}

fn place(target: &mut PolyMatrix, block: &PolyMatrix, roff: usize, coff: usize, scale: &Rational) {
    for (r, c, p) in block.triplets() {
        target.add_to(roff + r, coff + c, &p.scale(scale));
    }
}

/// Diagonalize the presentation of `C_ab` over the rationals (requires `a + b ≥ m + 1`).
pub fn block_decomposition(m: usize, n: usize, a: usize, b: usize) -> Result<BlockDecomposition> {
    ensure!(a + b > m, OutOfRange, "block decomposition needs a + b >= m + 1");
    let pres = presentation(m, n, a, b)?;
    let ctx: RingContext = pres.ctx;
    let size = pres.p0_summands.len();
    let r = m - a.abs_diff(b);
    let u = r + 2;
    let a_matrix = hankel_factorial_matrix(u, size);
    let (p, d) = symmetric_diagonalize(&a_matrix)?;

    let mut p_tilde = PolyMatrix::zero(pres.p0.clone(), pres.p0.clone());
    let mut p_tilde_prime = PolyMatrix::zero(pres.p1.clone(), pres.p1.clone());
    let mut middle = PolyMatrix::zero(pres.p1.clone(), pres.p0.clone());
    let mut blocks = Vec::new();
    for k in 0..size {
        let s0 = pres.p0_summands[k];
        let s1 = pres.p1_summands[k];
        for i in 0..=k {
            let coeff = p.get(i, k).clone();
            if coeff.is_zero() {
                continue;
            }
            let e = k - i;
            let t0 = pres.p0_summands[i];
            let pow = delta_power_matrix(ctx, e, s0.qg, s0.ql)?;
            place(&mut p_tilde, &pow, t0.offset, s0.offset, &coeff);
            let t1 = pres.p1_summands[i];
            if t1.rank > 0 && s1.rank > 0 {
                let pow1 = delta_power_matrix(ctx, e, t1.qg, t1.ql)?;
                place(&mut p_tilde_prime, &pow1, s1.offset, t1.offset, &coeff);
            }
        }
        let tk = (r + 2) as i64 - 2 * (k as i64 + 1);
        ensure!(tk >= 0, Inconsistent, "negative block degree");
        let tk = tk as usize;
        if s1.rank > 0 {
            let pow = delta_power_matrix(ctx, tk, s1.qg, s1.ql)?;
            place(&mut middle, &pow, s0.offset, s1.offset, &d[k]);
        }
        let pk = s0.index as usize;
        let alpha = pk - pres.a_eff;
        let beta = pk - pres.b_eff;
        let t = m - alpha - beta;
        ensure!(t == tk, Inconsistent, "block degree {t} against middle degree {tk}");
        let map = if s1.rank > 0 {
            delta_matrix(ctx, t, m - beta, m - alpha)?
        } else {
            PolyMatrix::zero(crate::module::GradedFreeModule::zero(ctx), crate::module::GradedFreeModule::exterior_pair(ctx, alpha, beta))
        };
        blocks.push(Block { p: pk, alpha, beta, t, map });
    }
    Ok(BlockDecomposition { presentation: pres, a_matrix, p, d, blocks, p_tilde, middle, p_tilde_prime })
}
