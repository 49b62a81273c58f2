use std::collections::BTreeSet;

use detsing_core::partitions::{
    conjugate, convex_squares, drop_column, drop_row, partitions_in_box, rim_hook_extensions, schur_dim, ConvexSquare,
    Partition,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

// Count semistandard fillings row by row, left to right.
fn ssyt_count(shape: &[usize], n: usize) -> u64 {
    fn go(shape: &[usize], n: usize, grid: &mut Vec<Vec<usize>>, r: usize, c: usize) -> u64 {
        if r == shape.len() {
            return 1;
        }
        if c == shape[r] {
            return go(shape, n, grid, r + 1, 0);
        }
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[r].push(v);
            total += go(shape, n, grid, r, c + 1);
            grid[r].pop();
        }
        total
    }
    let mut grid = vec![Vec::new(); shape.len()];
    go(shape, n, &mut grid, 0, 0)
}

// Weyl: prod_{i<j} (l_i − l_j + j − i) / (j − i) over n slots.
fn weyl_dim(shape: &[usize], n: usize) -> BigInt {
    if shape.len() > n {
        return BigInt::from(0);
    }
    let l: Vec<i64> = (0..n).map(|i| shape.get(i).copied().unwrap_or(0) as i64).collect();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..n {
        for j in i + 1..n {
            num *= l[i] - l[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

fn conj_oracle(shape: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut c = 1;
    loop {
        let k = shape.iter().filter(|&&x| x >= c).count();
        if k == 0 {
            return out;
        }
        out.push(k);
        c += 1;
    }
}

fn arb_partition(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

#[test]
fn conjugate_small() {
    assert_eq!(conjugate(&p(&[4, 2, 1])), p(&[3, 2, 1, 1]));
    assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    assert_eq!(conjugate(&p(&[3])), p(&[1, 1, 1]));
}

#[test]
fn rejects_non_partitions() {
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(Partition::new(vec![2, 0, 1]).is_err());
    assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
}

#[test]
fn convex_squares_of_421() {
    let a = p(&[4, 2, 1]);
    let sq: Vec<(usize, usize)> = convex_squares(&a).iter().map(|s| (s.row, s.col)).collect();
    assert_eq!(sq, vec![(1, 4), (2, 2), (3, 1)]);
}

#[test]
fn dropped_pairs_of_421() {
    let a = p(&[4, 2, 1]);
    let pairs: Vec<(Partition, Partition)> = convex_squares(&a)
        .into_iter()
        .map(|s| (a.drop_column(s).unwrap(), a.drop_row(s).unwrap()))
        .collect();
    assert_eq!(
        pairs,
        vec![(p(&[3, 2, 1]), p(&[2, 1])), (p(&[3, 1, 1]), p(&[4, 1])), (p(&[3, 1]), p(&[4, 2]))]
    );
}

#[test]
fn drop_edge_cases() {
    assert_eq!(drop_row(&p(&[5]), 1).unwrap(), Partition::empty());
    assert_eq!(drop_column(&p(&[2, 2]), 2).unwrap(), p(&[1, 1]));
    assert!(drop_row(&p(&[2, 2]), 1).is_err());
    assert!(p(&[2, 2]).drop_column(ConvexSquare { row: 1, col: 2 }).is_err());
}

#[test]
fn schur_dim_examples() {
    assert_eq!(schur_dim(&p(&[2, 1]), 3), BigInt::from(8));
    for n in 0..8usize {
        assert_eq!(schur_dim(&p(&[1]), n), BigInt::from(n));
        assert_eq!(schur_dim(&p(&[1, 1]), n), BigInt::from(n * n.saturating_sub(1) / 2));
    }
    assert_eq!(schur_dim(&Partition::empty(), 0), BigInt::from(1));
    assert_eq!(schur_dim(&p(&[1, 1, 1]), 2), BigInt::from(0));
}

#[test]
fn schur_dim_matches_tableaux_and_weyl() {
    for k in 0..=16 {
        for a in partitions_in_box(k, 4, 4) {
            for n in 0..=6 {
                let hook = schur_dim(&a, n);
                assert_eq!(hook, weyl_dim(a.parts(), n), "{a} n={n}");
                if n <= 4 {
                    assert_eq!(hook, BigInt::from(ssyt_count(a.parts(), n)), "{a} n={n}");
                }
            }
        }
    }
}

#[test]
fn partitions_in_box_counts_gaussian_binomial() {
    // Coefficients of [6 choose 3]_q.
    let expected = [1, 1, 2, 3, 3, 3, 3, 2, 1, 1];
    for (k, &e) in expected.iter().enumerate() {
        assert_eq!(partitions_in_box(k, 3, 3).len(), e, "k={k}");
    }
    assert!(partitions_in_box(10, 3, 3).is_empty());
}

fn is_border_strip(alpha: &Partition, beta: &Partition, m: usize) -> bool {
    let cells: BTreeSet<(usize, usize)> = (1..=beta.len())
        .flat_map(|r| (alpha.part(r) + 1..=beta.part(r)).map(move |c| (r, c)))
        .collect();
    if cells.is_empty() || cells.iter().map(|c| c.0).max() != Some(m) {
        return false;
    }
    if cells.iter().any(|&(r, c)| cells.contains(&(r + 1, c)) && cells.contains(&(r, c + 1)) && cells.contains(&(r + 1, c + 1))) {
        return false;
    }
    let mut seen = BTreeSet::new();
    let mut stack = vec![*cells.iter().next().unwrap()];
    while let Some((r, c)) = stack.pop() {
        if !seen.insert((r, c)) {
            continue;
        }
        for nb in [(r + 1, c), (r.wrapping_sub(1), c), (r, c + 1), (r, c.wrapping_sub(1))] {
            if cells.contains(&nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == cells.len()
}

fn rim_oracle(alpha: &Partition, s: usize, m: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = partitions_in_box(alpha.size() + s, m, alpha.part(1) + s)
        .into_iter()
        .filter(|b| b.contains(alpha) && is_border_strip(alpha, b, m))
        .collect();
    out.sort();
    out
}

#[test]
fn rim_hook_from_empty_is_the_column() {
    for m in 1..=6 {
        assert_eq!(rim_hook_extensions(&Partition::empty(), m, m), vec![p(&vec![1; m])]);
        assert!(rim_hook_extensions(&Partition::empty(), m - 1, m).is_empty());
    }
}

#[test]
fn rim_hooks_match_exhaustive_enumeration() {
    for m in 1..=4 {
        for k in 0..=8 {
            for alpha in partitions_in_box(k, m, 4) {
                for s in 1..=6 {
                    assert_eq!(rim_hook_extensions(&alpha, s, m), rim_oracle(&alpha, s, m), "{alpha} s={s} m={m}");
                }
            }
        }
    }
}

#[test]
fn rim_hook_single_box_and_empty_result() {
    assert_eq!(rim_hook_extensions(&p(&[2, 1]), 1, 3), vec![p(&[2, 1, 1])]);
    assert_eq!(rim_hook_extensions(&p(&[2, 1]), 1, 2), vec![p(&[2, 2])]);
    assert!(rim_hook_extensions(&p(&[1, 1]), 1, 2).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn conjugate_is_involution(a in arb_partition(8, 8)) {
        prop_assert_eq!(conjugate(&conjugate(&a)), a.clone());
        prop_assert_eq!(conjugate(&a).parts().to_vec(), conj_oracle(a.parts()));
        prop_assert_eq!(conjugate(&a).size(), a.size());
    }
}

proptest! {
    #[test]
    fn dropped_sizes(a in arb_partition(8, 8)) {
        let conj = conjugate(&a);
        for sq in convex_squares(&a) {
            let c = a.drop_column(sq).unwrap();
            let r = a.drop_row(sq).unwrap();
            prop_assert_eq!(c.size(), a.size() - conj.part(sq.col));
            prop_assert_eq!(r.size(), a.size() - a.part(sq.row));
            prop_assert!(a.contains(&c) && a.contains(&r));
        }
    }
}
