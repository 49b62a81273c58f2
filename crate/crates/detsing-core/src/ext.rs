//! Ext between graded simples via convex squares, the resolutions of the
//! simples they assemble into, and Bott's algorithm on `P^{m−1}`.
//!
//! Weights are integer `m`-tuples; a weight is dominant when weakly decreasing.
//! The dotted reflection `s_i` sends `(α_i, α_{i+1})` to `(α_{i+1} − 1, α_i + 1)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cohomology::direct_image;
use crate::error::{ensure, Result};
use crate::partitions::{partitions_in_box, ConvexSquare, Partition};

pub type Weight = Vec<i64>;

/// Cohomological degree and dominant weight, or `None` for a singular weight.
pub fn bott_flatten(w: &[i64]) -> Option<(usize, Weight)> {
    let mut cur = w.to_vec();
    let mut swaps = 0usize;
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i + 1] > cur[i]) else {
            return Some((swaps, cur));
        };
        if cur[i + 1] == cur[i] + 1 {
            return None;
        }
        let (x, y) = (cur[i], cur[i + 1]);
        cur[i] = y - 1;
        cur[i + 1] = x + 1;
        swaps += 1;
    }
}

/// Dimension of the irreducible `GL_m`-module with dominant weight `θ`.
pub fn dominant_dim(theta: &[i64]) -> BigInt {
    let Some(&last) = theta.last() else { return BigInt::from(1) };
    let parts: Vec<usize> = theta.iter().map(|&t| (t - last) as usize).collect();
    Partition::new(parts).expect("dominant weight").schur_dim(theta.len())
}

/// Weight of `Ω^b(s)` on `P^{m−1}`.
pub fn omega_weight(m: usize, b: usize, s: i64) -> Weight {
    let mut w = vec![0i64; m];
    for k in 0..b {
        w[m - 1 - b + k] = -1;
    }
    w[m - 1] = b as i64 - s;
    w
}

/// `H^•(P^{m−1}, Ω^b(s))` computed by Bott's algorithm and by the direct image table;
/// `None` when all cohomology vanishes.
pub fn cohom_omega_crosscheck(m: usize, b: usize, s: i64) -> Result<Option<(usize, u64)>> {
    ensure!(m >= 1 && b < m, OutOfRange, "need 0 <= b < m, got b = {b}, m = {m}");
    let bott = bott_flatten(&omega_weight(m, b, s)).map(|(i, theta)| {
        (i, dominant_dim(&theta).to_u64().expect("small dimension"))
    });
    let table = direct_image(m, b + 1, m, b as i64 + 1 - s)?;
    let other = table.nu.map(|nu| (nu, table.rank));
    ensure!(
        bott == other,
        Inconsistent,
        "Ω^{b}({s}) on P^{}: Bott gives {bott:?}, direct image gives {other:?}",
        m - 1
    );
    Ok(bott)
}

/// `L_C F ⊗ L_{R'} G^∨` attached to a convex square `(r, c)` of `α`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtSummand {
    pub alpha: Partition,
    pub square: ConvexSquare,
    pub column_dropped: Partition,
    pub row_dropped_conjugate: Partition,
    pub dim_f: BigInt,
    pub dim_g: BigInt,
}

impl ExtSummand {
    pub fn dim(&self) -> BigInt {
        &self.dim_f * &self.dim_g
    }

    /// Internal degree `|C_c(α)| + |R_r(α)|`.
    pub fn twist(&self) -> usize {
        self.column_dropped.size() + self.row_dropped_conjugate.size()
    }

    /// `c − r`.
    pub fn offset(&self) -> i64 {
        self.square.col as i64 - self.square.row as i64
    }
}

/// Every convex-square summand for `|α| = t + 1` in `Γ(m, n)`, with its dimensions.
pub fn ext_summands(m: usize, n: usize, t: usize) -> Vec<ExtSummand> {
    let mut out = Vec::new();
    for alpha in partitions_in_box(t + 1, m, n) {
        for sq in alpha.convex_squares() {
            let c = alpha.drop_column(sq).expect("convex square");
            let r = alpha.drop_row(sq).expect("convex square").conjugate();
            let dim_f = c.schur_dim(m);
            let dim_g = r.schur_dim(n);
            out.push(ExtSummand {
                alpha: alpha.clone(),
                square: sq,
                column_dropped: c,
                row_dropped_conjugate: r,
                dim_f,
                dim_g,
            });
        }
    }
    out
}

/// Summands of `Ext^t(S_b, S_a)`: those with `c − r = b − a`.
pub fn ext_dims(m: usize, n: usize, t: usize, a: usize, b: usize) -> Result<Vec<ExtSummand>> {
    ensure!(
        (1..=m).contains(&a) && (1..=m).contains(&b),
        OutOfRange,
        "need 1 <= a, b <= m = {m}"
    );
    let offset = b as i64 - a as i64;
    Ok(ext_summands(m, n, t).into_iter().filter(|s| s.offset() == offset).collect())
}

/// `dim Ext^t(S_b, S_a)`.
pub fn ext_dim(m: usize, n: usize, t: usize, a: usize, b: usize) -> Result<BigInt> {
    Ok(ext_dims(m, n, t, a, b)?.iter().map(ExtSummand::dim).sum())
}

/// One summand `P_vertex(−twist) ⊗ L_C F^∨ ⊗ L_{R'} G` of the resolution of `S_a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResolutionTerm {
    pub t: usize,
    pub vertex: usize,
    pub twist: usize,
    pub f_shape: Partition,
    pub g_shape: Partition,
    pub rank: BigInt,
}

fn schur_name(shape: &Partition, base: &str) -> Option<String> {
    let parts = shape.parts();
    match parts {
        [] => None,
        [1] => Some(String::from(base)),
        [k] => Some(format!("S^{k}{base}")),
        _ if parts.iter().all(|&p| p == 1) => Some(format!("Λ^{}{base}", parts.len())),
        _ => {
            let digits: String = parts.iter().map(|p| format!("{p}")).collect();
            Some(format!("L_{{{digits}}}{base}"))
        }
    }
}

impl ResolutionTerm {
    /// Schur factors, e.g. `Λ^2F^∨ ⊗ G`.
    pub fn descriptor(&self) -> String {
        let factors: Vec<String> =
            [schur_name(&self.f_shape, "F^∨"), schur_name(&self.g_shape, "G")].into_iter().flatten().collect();
        if factors.is_empty() {
            String::from("K")
        } else {
            factors.join(" ⊗ ")
        }
    }
}

impl core::fmt::Display for ResolutionTerm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "P_{}(-{}) ⊗ {}", self.vertex, self.twist, self.descriptor())
    }
}

/// Terms of the minimal graded projective resolution of `S_a` for `t ≤ t_max`;
/// `P_{a+r−c}` is dropped when the vertex leaves `[1, m]`.
pub fn simple_resolution_table(m: usize, n: usize, a: usize, t_max: usize) -> Result<Vec<ResolutionTerm>> {
    ensure!((1..=m).contains(&a), OutOfRange, "need 1 <= a <= m = {m}, got {a}");
    let mut out = Vec::new();
    for t in 0..=t_max {
        for s in ext_summands(m, n, t) {
            let vertex = a as i64 - s.offset();
            if vertex < 1 || vertex > m as i64 {
                continue;
            }
            let rank = s.dim();
            if rank == BigInt::from(0) {
                continue;
            }
            out.push(ResolutionTerm {
                t,
                vertex: vertex as usize,
                twist: s.twist(),
                f_shape: s.column_dropped,
                g_shape: s.row_dropped_conjugate,
                rank,
            });
        }
    }
    out.sort_by(|x, y| (x.t, x.vertex, x.twist).cmp(&(y.t, y.vertex, y.twist)));
    Ok(out)
}

/// Coefficients in `q^0..=q^degree` of `Σ_t (−1)^t Σ rank · q^twist · H_{vertex, c}(q)`.
///
/// `path_hilbert(b, c, k)` is the dimension of the path-length-`k` part of `e_b E e_c`.
pub fn euler_series(
    m: usize,
    n: usize,
    a: usize,
    c: usize,
    degree: usize,
    mut path_hilbert: impl FnMut(usize, usize, usize) -> Result<u64>,
) -> Result<Vec<i128>> {
    // Total degrees of the resolution are bounded by |α| ≤ mn.
    let table = simple_resolution_table(m, n, a, m * n)?;
    let mut out = vec![0i128; degree + 1];
    for term in table {
        if term.twist > degree {
            continue;
        }
        let rank = term.rank.to_i128().expect("small rank");
        let sign = if term.t % 2 == 0 { 1 } else { -1 };
        for k in 0..=degree - term.twist {
            let h = path_hilbert(term.vertex, c, k)? as i128;
            out[k + term.twist] += sign * rank * h;
        }
    }
    Ok(out)
}
