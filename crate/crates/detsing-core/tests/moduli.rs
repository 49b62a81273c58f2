use detsing_core::moduli::{build_rep, gauge_fix, isomorphism, random_point, random_rep, reconstruct, zero_rep, Arrow, ModuliPoint, QuiverRep};
use detsing_core::scalar::rat;
use detsing_core::{Error, QMatrix, Rational};
use proptest::prelude::*;

// Rows spanning every path operator W_a → W_m, found by pulling back from the top.
fn paths_to_top(rep: &QuiverRep) -> Vec<QMatrix> {
    let m = rep.m;
    let mut ops: Vec<QMatrix> = (1..=m).map(|a| QMatrix::zeros(0, rep.dim(a))).collect();
    ops[m - 1] = QMatrix::identity(1);
    loop {
        let mut grew = false;
        for a in 1..=m {
            for arr in rep.arrows() {
                let Some(t) = rep.target(arr, a) else { continue };
                if ops[t - 1].rows() == 0 {
                    continue;
                }
                let pulled = ops[t - 1].mul(rep.arrow(arr, a).unwrap()).unwrap();
                let joined = stack_rows(&ops[a - 1], &pulled);
                if joined.rank() > ops[a - 1].rank() {
                    ops[a - 1] = joined;
                    grew = true;
                }
            }
        }
        if !grew {
            return ops;
        }
    }
}

fn stack_rows(x: &QMatrix, y: &QMatrix) -> QMatrix {
    let rows: Vec<Vec<Rational>> = (0..x.rows()).map(|i| x.row(i).to_vec()).chain((0..y.rows()).map(|i| y.row(i).to_vec())).collect();
    if rows.is_empty() {
        return QMatrix::zeros(0, x.cols());
    }
    QMatrix::from_rows(rows)
}

// A vector at a lies in a submodule missing W_m iff every path to the top kills it.
fn simple_oracle(rep: &QuiverRep) -> bool {
    let ops = paths_to_top(rep);
    let off_top_zero = (1..=rep.m).all(|a| ops[a - 1].rank() == rep.dim(a));
    off_top_zero && rep.is_generated_by_top()
}

fn q(rows: &[&[i64]]) -> QMatrix {
    QMatrix::from_i64(rows)
}

#[test]
fn dimension_vector_is_binomial() {
    let rep = build_rep(&random_point(4, 5, 3)).unwrap();
    assert_eq!(rep.dimension_vector(), vec![1, 3, 3, 1]);
}

#[test]
fn split_two_by_two_point_is_simple() {
    let pt = ModuliPoint::new(q(&[&[1, 0]]), q(&[&[1, 0]])).unwrap();
    let rep = build_rep(&pt).unwrap();
    assert!(rep.check_relations().is_empty());
    assert!(rep.is_simple());
    assert_eq!(pt.associated_matrix().rank(), 1);
    assert_eq!(pt.associated_matrix(), q(&[&[1, 0], &[0, 0]]));
}

#[test]
fn zero_beta_is_not_simple() {
    let pt = ModuliPoint::new(q(&[&[1, 0]]), q(&[&[0, 0]])).unwrap();
    let rep = build_rep(&pt).unwrap();
    assert!(rep.is_generated_by_top());
    assert!(!rep.is_simple());
    assert!(!simple_oracle(&rep));
}

#[test]
fn bad_shapes_and_non_split_alpha() {
    assert!(matches!(ModuliPoint::new(q(&[&[1, 0, 0]]), q(&[&[1, 0]])), Err(Error::SizeMismatch(_))));
    assert!(matches!(ModuliPoint::new(q(&[&[1, 0]]), q(&[&[1], &[0]])), Err(Error::SizeMismatch(_))));
    let pt = ModuliPoint::new(q(&[&[0, 0]]), q(&[&[1, 0]])).unwrap();
    assert!(matches!(build_rep(&pt), Err(Error::Singular(_))));
}

#[test]
fn unconstrained_matrices_break_relations() {
    for seed in 0..20 {
        assert!(!random_rep(3, 3, seed).check_relations().is_empty());
    }
    let z = zero_rep(3, 3);
    assert!(z.check_relations().is_empty());
    assert!(!z.is_generated_by_top());
    assert!(matches!(reconstruct(&z), Err(Error::NotGenerated)));
}

#[test]
fn x_acts_by_the_associated_matrix() {
    for seed in 0..40 {
        let pt = random_point(3, 4, seed);
        let rep = build_rep(&pt).unwrap();
        let a = pt.associated_matrix();
        for i in 1..=3 {
            for j in 1..=4 {
                for v in 1..=3 {
                    assert_eq!(rep.x_action(i, j, v), QMatrix::identity(rep.dim(v)).scale(a.get(i - 1, j - 1)));
                }
            }
        }
    }
}

#[test]
fn paths_compose_in_functional_order() {
    let rep = build_rep(&random_point(3, 3, 11)).unwrap();
    let (t, mat) = rep.path(&[Arrow::Lambda(1), Arrow::G(2)], 2).unwrap();
    let g = rep.arrow(Arrow::G(2), 2).unwrap();
    let l = rep.arrow(Arrow::Lambda(1), 3).unwrap();
    assert_eq!((t, mat), (2, l.mul(g).unwrap()));
    assert!(rep.path(&[Arrow::G(1)], 3).is_none());
}

fn invertible(p: usize, entries: &[i64]) -> Option<QMatrix> {
    let h = QMatrix::from_fn(p, p, |i, j| rat(entries[i * p + j]));
    (h.rank() == p).then_some(h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn points_satisfy_everything(seed in any::<u64>(), shape in 0usize..3) {
        let (m, n) = [(2, 2), (3, 3), (3, 4)][shape];
        let pt = random_point(m, n, seed);
        let rep = build_rep(&pt).unwrap();
        prop_assert!(rep.check_relations().is_empty());
        prop_assert!(rep.scalar_action_failures().is_empty());
        let back = reconstruct(&rep).unwrap();
        prop_assert_eq!(&back, &gauge_fix(&pt).unwrap());
        prop_assert_eq!(back.associated_matrix(), pt.associated_matrix());
        prop_assert!(isomorphism(&rep, &build_rep(&back).unwrap()).is_ok());
        let simple = rep.is_simple();
        prop_assert_eq!(simple, simple_oracle(&rep));
        prop_assert_eq!(simple, pt.beta.rank() == m - 1);
        prop_assert_eq!(simple, pt.associated_matrix().rank() == m - 1);
    }

    #[test]
    fn gauge_orbits_are_isomorphic(seed in any::<u64>(), h in prop::collection::vec(-3i64..4, 4)) {
        let pt = random_point(3, 3, seed);
        let Some(h) = invertible(2, &h) else { return Ok(()) };
        let moved = ModuliPoint::new(h.mul(&pt.alpha).unwrap(), h.inverse().unwrap().transpose().mul(&pt.beta).unwrap()).unwrap();
        prop_assert_eq!(moved.associated_matrix(), pt.associated_matrix());
        prop_assert!(isomorphism(&build_rep(&pt).unwrap(), &build_rep(&moved).unwrap()).is_ok());
        prop_assert_eq!(gauge_fix(&moved).unwrap(), gauge_fix(&pt).unwrap());
    }

    #[test]
    fn different_scalars_are_not_isomorphic(seed in any::<u64>()) {
        let pt = random_point(3, 3, seed);
        let mut other = pt.clone();
        other.beta.add_at(0, 0, &rat(1));
        prop_assume!(other.associated_matrix() != pt.associated_matrix());
        prop_assert!(isomorphism(&build_rep(&pt).unwrap(), &build_rep(&other).unwrap()).is_err());
    }
}

#[test]
fn full_rank_beta_is_simple() {
    for seed in 0..200 {
        let pt = random_point(3, 4, seed);
        assert_eq!(build_rep(&pt).unwrap().is_simple(), pt.beta.rank() == 2, "seed={seed}");
    }
}
