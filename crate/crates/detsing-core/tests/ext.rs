use std::collections::BTreeSet;

use detsing_core::ext::{
    bott_flatten, cohom_omega_crosscheck, dominant_dim, euler_series, ext_dim, ext_dims, omega_weight,
    simple_resolution_table,
};
use detsing_core::oracle::hilbert_hom;
use detsing_core::partitions::{partitions_in_box, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

// Hook-content formula.
fn hook_content(parts: &[usize], n: i64) -> BigInt {
    let conj: Vec<usize> = (0..parts.first().copied().unwrap_or(0)).map(|j| parts.iter().filter(|&&p| p > j).count()).collect();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            num *= n + j as i64 - i as i64;
            den *= (p - j - 1) + (conj[j] - i - 1) + 1;
        }
    }
    num / den
}

// Sort w + ρ and count inversions.
fn bott_oracle(w: &[i64]) -> Option<(usize, Vec<i64>)> {
    let m = w.len() as i64;
    let shifted: Vec<i64> = w.iter().enumerate().map(|(i, &x)| x + m - 1 - i as i64).collect();
    let distinct: BTreeSet<i64> = shifted.iter().copied().collect();
    if distinct.len() < shifted.len() {
        return None;
    }
    let inversions = (0..shifted.len()).flat_map(|i| (i + 1..shifted.len()).map(move |j| (i, j))).filter(|&(i, j)| shifted[i] < shifted[j]).count();
    let mut sorted = shifted;
    sorted.sort_by(|x, y| y.cmp(x));
    Some((inversions, sorted.iter().enumerate().map(|(i, &x)| x - (m - 1 - i as i64)).collect()))
}

// H^q(P^N, Ω^p(k)) by the classical formula.
fn omega_cohomology(big_n: i64, p: i64, k: i64) -> Option<(usize, u64)> {
    if k > p && p <= big_n {
        return Some((0, binom(k + big_n - p, k) * binom(k - 1, p)));
    }
    if k == 0 {
        return Some((p as usize, 1));
    }
    if k < p - big_n {
        return Some((big_n as usize, binom(-k + p, -k) * binom(-k - 1, big_n - p)));
    }
    None
}

#[test]
fn dominant_weights_are_fixed() {
    assert_eq!(bott_flatten(&[3, 1, 1, -2]), Some((0, vec![3, 1, 1, -2])));
    assert_eq!(bott_flatten(&[]), Some((0, vec![])));
}

#[test]
fn top_cohomology_of_the_canonical_twist() {
    for m in 1..=6usize {
        let mut w = vec![0i64; m];
        w[m - 1] = m as i64;
        let (i, theta) = bott_flatten(&w).unwrap();
        assert_eq!(i, m - 1);
        assert_eq!(dominant_dim(&theta), BigInt::from(1), "m={m}");
    }
}

#[test]
fn singular_weights_vanish() {
    assert_eq!(bott_flatten(&[0, 1]), None);
    assert_eq!(bott_flatten(&[0, 0, 2]), None);
}

#[test]
fn bott_matches_sorting_oracle_exhaustively() {
    for m in 1..=3usize {
        let mut w = vec![-4i64; m];
        loop {
            assert_eq!(bott_flatten(&w), bott_oracle(&w), "{w:?}");
            let Some(k) = w.iter().position(|&x| x < 4) else { break };
            w[k] += 1;
            for x in &mut w[..k] {
                *x = -4;
            }
        }
    }
}

#[test]
fn omega_cohomology_two_routes_agree_with_the_formula() {
    for m in 1..=5usize {
        for b in 0..m {
            for s in -6i64..=6 {
                let got = cohom_omega_crosscheck(m, b, s).unwrap();
                assert_eq!(got, omega_cohomology(m as i64 - 1, b as i64, s), "m={m} b={b} s={s}");
            }
        }
    }
    for b in 0..3 {
        assert_eq!(cohom_omega_crosscheck(3, b, 0).unwrap(), Some((b, 1)));
    }
    assert!(cohom_omega_crosscheck(3, 3, 0).is_err());
}

#[test]
fn omega_weight_shape() {
    assert_eq!(omega_weight(4, 2, 1), vec![0, -1, -1, 1]);
    assert_eq!(omega_weight(3, 0, -2), vec![0, 0, 2]);
}

#[test]
fn ext_in_low_degrees() {
    for (m, n) in [(2, 2), (3, 3), (3, 5), (4, 6)] {
        for a in 1..=m {
            for b in 1..=m {
                let s = ext_dims(m, n, 0, a, b).unwrap();
                if a == b {
                    assert_eq!(s.len(), 1);
                    assert_eq!(s[0].dim(), BigInt::from(1));
                    assert_eq!(s[0].alpha, Partition::new(vec![1]).unwrap());
                } else {
                    assert!(s.is_empty());
                }
            }
            if a < m {
                assert_eq!(ext_dim(m, n, 1, a, a + 1).unwrap(), BigInt::from(m));
            }
            if a > 1 {
                assert_eq!(ext_dim(m, n, 1, a, a - 1).unwrap(), BigInt::from(n));
            }
            let total: BigInt = (1..=m).map(|b| ext_dim(m, n, 1, a, b).unwrap()).sum();
            let arrows = (if a > 1 { n } else { 0 }) + (if a < m { m } else { 0 });
            assert_eq!(total, BigInt::from(arrows));
        }
    }
}

#[test]
fn degree_three_diagonal_summand() {
    for (m, n) in [(2, 2), (3, 3), (3, 5), (4, 4)] {
        let s = ext_dims(m, n, 3, 2, 2).unwrap();
        let sq = s.iter().find(|e| e.alpha == Partition::new(vec![2, 2]).unwrap()).expect("α = (2,2)");
        assert_eq!((sq.square.row, sq.square.col), (2, 2));
        assert_eq!(sq.dim(), BigInt::from(binom(m as i64, 2) * binom(n as i64, 2)));
        assert_eq!(sq.twist(), 4);
        for e in &s {
            assert_eq!(e.offset(), 0);
        }
        // |α| = 3 contributes only off the diagonal.
        assert!(ext_dims(m, n, 2, 2, 2).unwrap().is_empty());
    }
}

#[test]
fn summand_dimensions_are_hook_content() {
    for t in 0..6 {
        for e in detsing_core::ext::ext_summands(3, 4, t) {
            assert_eq!(e.dim_f, hook_content(e.column_dropped.parts(), 3));
            assert_eq!(e.dim_g, hook_content(e.row_dropped_conjugate.parts(), 4));
            assert_eq!(e.alpha.size(), t + 1);
        }
    }
}

#[test]
fn cauchy_bookkeeping() {
    for m in 2..=5usize {
        for n in 1..=5usize {
            for s in 0..=6usize {
                let total: BigInt = partitions_in_box(s, s, s)
                    .iter()
                    .map(|al| hook_content(al.parts(), m as i64 - 1).max(BigInt::from(0)) * hook_content(al.conjugate().parts(), n as i64).max(BigInt::from(0)))
                    .sum();
                assert_eq!(total, BigInt::from(binom(((m - 1) * n) as i64, s as i64)), "m={m} n={n} s={s}");
            }
        }
    }
}

// (t, vertex − a, twist, F^∨ shape, G shape) as displayed for t ≤ 3.
const DISPLAY: &[(usize, i64, usize, &[usize], &[usize])] = &[
    (0, 0, 0, &[], &[]),
    (1, -1, 1, &[1], &[]),
    (1, 1, 1, &[], &[1]),
    (2, -2, 2, &[2], &[]),
    (2, -1, 3, &[1, 1], &[1]),
    (2, 1, 3, &[1], &[1, 1]),
    (2, 2, 2, &[], &[2]),
    (3, -3, 3, &[3], &[]),
    (3, -2, 4, &[2, 1], &[1]),
    (3, -1, 5, &[1, 1, 1], &[2]),
    (3, 0, 4, &[1, 1], &[1, 1]),
    (3, 1, 5, &[2], &[1, 1, 1]),
    (3, 2, 4, &[1], &[2, 1]),
    (3, 3, 3, &[], &[3]),
];

#[test]
fn resolution_of_simples_matches_the_display() {
    for (m, n) in [(3, 3), (3, 5), (7, 7)] {
        for a in 1..=m {
            let got: BTreeSet<(usize, usize, usize, Vec<usize>, Vec<usize>, BigInt)> = simple_resolution_table(m, n, a, 3)
                .unwrap()
                .into_iter()
                .map(|r| (r.t, r.vertex, r.twist, r.f_shape.parts().to_vec(), r.g_shape.parts().to_vec(), r.rank))
                .collect();
            let want: BTreeSet<_> = DISPLAY
                .iter()
                .filter_map(|&(t, dv, tw, f, g)| {
                    let v = a as i64 + dv;
                    let rank = hook_content(f, m as i64) * hook_content(g, n as i64);
                    ((1..=m as i64).contains(&v) && rank != BigInt::from(0)).then(|| (t, v as usize, tw, f.to_vec(), g.to_vec(), rank))
                })
                .collect();
            assert_eq!(got, want, "m={m} n={n} a={a}");
        }
    }
}

#[test]
fn resolution_descriptors() {
    let table = simple_resolution_table(7, 7, 4, 3).unwrap();
    let names: BTreeSet<String> = table.iter().map(|r| r.to_string()).collect();
    for want in ["P_4(-0) ⊗ K", "P_3(-1) ⊗ F^∨", "P_6(-2) ⊗ S^2G", "P_2(-4) ⊗ L_{21}F^∨ ⊗ G", "P_4(-4) ⊗ Λ^2F^∨ ⊗ Λ^2G"] {
        assert!(names.contains(want), "{want} missing from {names:?}");
    }
    assert!(simple_resolution_table(3, 3, 0, 2).is_err());
}

// e_v E e_c in path length k is Hom(M_v, M_c) in degree (k + c − v)/2.
fn path_hilbert(m: usize, n: usize, v: usize, c: usize, k: usize) -> u64 {
    let s = k as i64 + c as i64 - v as i64;
    if s < 0 || s % 2 != 0 {
        return 0;
    }
    hilbert_hom(m, n, v, c, (s / 2) as i32).unwrap()
}

#[test]
fn euler_series_against_brute_force_hom() {
    for (m, n) in [(2, 2), (2, 3)] {
        for a in 1..=m {
            for c in 1..=m {
                let got = euler_series(m, n, a, c, 6, |v, c, k| Ok(path_hilbert(m, n, v, c, k))).unwrap();
                let mut want = vec![0i128; 7];
                want[0] = (a == c) as i128;
                assert_eq!(got, want, "m={m} n={n} a={a} c={c}");
            }
        }
    }
}

proptest! {
    #[test]
    fn bott_matches_sorting_oracle(w in prop::collection::vec(-12i64..12, 1..7)) {
        prop_assert_eq!(bott_flatten(&w), bott_oracle(&w));
    }

    #[test]
    fn ext_offsets_are_symmetric(m in 2usize..5, n in 2usize..6, t in 0usize..6) {
        // Swapping the roles of F and G negates the offset and transposes α.
        for a in 1..=m.min(n) {
            for b in 1..=m.min(n) {
                let here: BigInt = ext_dims(m, n, t, a, b).unwrap().iter().map(|e| e.dim()).sum();
                let there: BigInt = ext_dims(n, m, t, b, a).unwrap().iter().map(|e| e.dim()).sum();
                prop_assert_eq!(here, there);
            }
        }
    }
}
