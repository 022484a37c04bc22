use proptest::prelude::*;

use super::*;
use crate::exactnum::{int, Rational};
use crate::linalg::{kernel, Mat, Subspace};

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn gens(n: usize, vs: &[&[i64]]) -> PolyCone {
    PolyCone::from_generators(n, &vs.iter().map(|x| v(x)).collect::<Vec<_>>()).unwrap()
}

fn data_cone_planar_trajectory() -> PolyCone {
    // Columns of [X; Y] for the 4-step planar trajectory.
    gens(
        4,
        &[&[0, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 0, -1], &[0, -1, -1, 0]],
    )
}

#[test]
fn polar_examples() {
    let orth = gens(2, &[&[1, 0], &[0, 1]]);
    assert_eq!(
        orth.polar(PolarSign::Negative),
        gens(2, &[&[-1, 0], &[0, -1]])
    );
    let d = gens(2, &[&[0, 1], &[1, -1]]);
    let p = d.polar(PolarSign::Positive);
    assert_eq!(p, gens(2, &[&[1, 0], &[1, 1]]));
    for eta in p.generators() {
        for g in d.generators() {
            assert!(crate::exactnum::dot(eta, g) >= int(0));
        }
    }
    assert!(PolyCone::full(2).polar(PolarSign::Negative).generators().is_empty());
}

#[test]
fn hrep_of_data_cone_for_planar_trajectory() {
    // Four independent generators in R^4: a simplicial cone, so one facet
    // per generator. The two-row description sometimes quoted for this data
    // only contains the first two.
    let pair = data_cone_planar_trajectory().vrep_to_hrep();
    assert_eq!(
        pair.hrep,
        Mat::from_i64(&[
            &[1, 0, 0, 0],
            &[1, 0, 0, -1],
            &[1, -1, 0, -1],
            &[1, -1, 1, -1],
        ])
    );
    // ((0,1),(0,0)) satisfies the two-row description but is not in the cone.
    assert!(!data_cone_planar_trajectory().member(&v(&[0, 1, 0, 0])).unwrap());
}

#[test]
fn orthant_reps_round_trip() {
    let pair = gens(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).vrep_to_hrep();
    assert_eq!(pair.hrep, Mat::identity(3));
    let back = PolyCone::orthant(3).hrep_to_vrep();
    assert_eq!(back.vrep, Mat::identity(3));
}

#[test]
fn single_ray_has_three_inequalities() {
    let c = gens(2, &[&[1, 1]]);
    assert_eq!(c.inequalities().len(), 3);
    // Membership agrees with the explicit description x1 = x2 >= 0.
    for a in -4..=4 {
        for b in -4..=4 {
            let expect = a == b && a >= 0;
            assert_eq!(c.member(&v(&[a, b])).unwrap(), expect, "({a},{b})");
        }
    }
}

#[test]
fn membership() {
    assert!(data_cone_planar_trajectory().member(&v(&[0, 0, 0, 0])).unwrap());
    assert!(gens(2, &[&[0, 1], &[1, -1]]).member(&v(&[1, -1])).unwrap());
    assert!(!gens(2, &[&[1, 0], &[0, 1]]).member(&v(&[-1, 0])).unwrap());
    assert!(gens(2, &[&[1, 0]]).member(&v(&[1])).is_err());
}

#[test]
fn intersections() {
    let a = gens(2, &[&[1, 2], &[3, -1]]);
    assert_eq!(a.intersect(&PolyCone::full(2)).unwrap(), a);
    let neg = gens(2, &[&[-1, 0], &[0, -1]]);
    assert!(PolyCone::orthant(2).intersect(&neg).unwrap().is_zero());
    let graph = gens(2, &[&[0, 1], &[1, -1]]);
    let s_times_r = PolyCone::from_inequalities(2, &[v(&[1, 0])]).unwrap();
    assert_eq!(graph.intersect(&s_times_r).unwrap(), graph);
}

#[test]
fn sums() {
    let a = gens(2, &[&[1, 2]]);
    assert_eq!(a.sum(&PolyCone::zero(2)).unwrap(), a);
    let axis = gens(2, &[&[1, 0]]).sum(&gens(2, &[&[-1, 0]])).unwrap();
    assert_eq!(axis.lineality(), Subspace::span(2, &[v(&[1, 0])]).unwrap());
    assert_eq!(axis.linear_span().dim(), 1);
    // (R_+ x R) + (R x {0}) = R^2
    let half = PolyCone::from_inequalities(2, &[v(&[1, 0])]).unwrap();
    let line = Subspace::span(2, &[v(&[1, 0])]).unwrap();
    assert!(half.sum_subspace(&line).unwrap().is_full());
}

#[test]
fn images_and_preimages() {
    let c = gens(2, &[&[1, 3], &[2, -1]]);
    assert_eq!(linear_image(&Mat::identity(2), &c).unwrap(), c);
    let img = linear_image(&Mat::from_i64(&[&[1, -1]]), &PolyCone::orthant(2)).unwrap();
    assert!(img.is_full());
    let pre = linear_preimage(&Mat::from_i64(&[&[0], &[-1]]), &PolyCone::orthant(2)).unwrap();
    assert_eq!(pre, gens(1, &[&[-1]]));
    assert!(pre.member(&v(&[-3])).unwrap());
    assert!(!pre.member(&v(&[2])).unwrap());
}

#[test]
fn lineality_and_span() {
    let s = Subspace::span(3, &[v(&[1, 2, 0]), v(&[0, 0, 1])]).unwrap();
    let c = PolyCone::from_subspace(&s);
    assert_eq!(c.lineality(), s);
    assert_eq!(c.linear_span(), s);
    let orth = PolyCone::orthant(2);
    assert!(orth.lineality().is_trivial());
    assert!(orth.linear_span().is_full());
    let d = data_cone_planar_trajectory();
    assert!(d.lineality().is_trivial());
    assert!(d.linear_span().is_full());
    // A cone with a genuine two-dimensional lineality space.
    let wedge = PolyCone::from_inequalities(4, &[v(&[1, 0, 0, 0]), v(&[1, 0, 0, -1])]).unwrap();
    assert_eq!(
        wedge.lineality(),
        kernel(&Mat::from_i64(&[&[1, 0, 0, 0], &[1, 0, 0, -1]]))
    );
    assert_eq!(wedge.lineality().dim(), 2);
    assert!(wedge.linear_span().is_full());
}

#[test]
fn fullness() {
    assert!(gens(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]).is_full());
    assert!(!PolyCone::orthant(2).is_full());
    // Columns of Y - X/2 for the worked example.
    let m = gens(
        2,
        &[&[2, 0], &[-1, 2], &[0, -3], &[-2, 1]],
    );
    assert!(m.is_full());
}

#[test]
fn containment() {
    let a = gens(3, &[&[1, 0, 2], &[0, 1, -1]]);
    assert!(a.contains(&a).unwrap());
    assert!(PolyCone::full(3).contains(&a).unwrap());
    assert!(!PolyCone::orthant(2).contains(&gens(2, &[&[-1, 0]])).unwrap());
}

#[test]
fn degenerate_descriptions() {
    assert!(PolyCone::from_generators(3, &[]).unwrap().is_zero());
    assert!(PolyCone::from_inequalities(3, &[]).unwrap().is_full());
    assert_eq!(PolyCone::zero(2).polar(PolarSign::Positive), PolyCone::full(2));
}

// ---------- properties ----------

fn cone_strategy(max_n: usize, max_gens: usize) -> impl Strategy<Value = PolyCone> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=max_gens).prop_map(
            move |vs| {
                let vs: Vec<Vec<Rational>> = vs.iter().map(|x| v(x)).collect();
                PolyCone::from_generators(n, &vs).unwrap()
            },
        )
    })
}

fn cone_pair_strategy() -> impl Strategy<Value = (PolyCone, PolyCone)> {
    (1usize..=4).prop_flat_map(|n| {
        let one = prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=5);
        (one.clone(), one).prop_map(move |(a, b)| {
            let a: Vec<Vec<Rational>> = a.iter().map(|x| v(x)).collect();
            let b: Vec<Vec<Rational>> = b.iter().map(|x| v(x)).collect();
            (
                PolyCone::from_generators(n, &a).unwrap(),
                PolyCone::from_generators(n, &b).unwrap(),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn double_polar_is_identity(c in cone_strategy(4, 8)) {
        let back = c.polar(PolarSign::Negative).polar(PolarSign::Negative);
        prop_assert!(back.set_eq(&c).unwrap());
    }

    #[test]
    fn polar_of_sum_is_intersection((a, b) in cone_pair_strategy()) {
        let lhs = a.sum(&b).unwrap().polar(PolarSign::Negative);
        let rhs = a.polar(PolarSign::Negative).intersect(&b.polar(PolarSign::Negative)).unwrap();
        prop_assert!(lhs.set_eq(&rhs).unwrap());
    }

    #[test]
    fn reps_are_consistent(c in cone_strategy(4, 7), weights in prop::collection::vec(0i64..5, 7)) {
        let mut x = vec![int(0); c.ambient()];
        for (g, w) in c.generators().iter().zip(&weights) {
            for (xi, gi) in x.iter_mut().zip(g) {
                *xi += gi * int(*w);
            }
        }
        prop_assert!(c.member(&x).unwrap());
        // Stepping just outside any inequality leaves the cone.
        for a in c.inequalities() {
            let outside: Vec<Rational> = x.iter().zip(a).map(|(xi, ai)| xi - ai * int(1000)).collect();
            if crate::exactnum::dot(a, &outside) < int(0) {
                prop_assert!(!c.member(&outside).unwrap());
            }
        }
        // Derived generators and the original ones describe the same set.
        let rebuilt = PolyCone::from_inequalities(c.ambient(), c.inequalities()).unwrap();
        prop_assert!(rebuilt.set_eq(&c).unwrap());
    }

    #[test]
    fn canonicalization_is_idempotent(c in cone_strategy(4, 7)) {
        let once = c.canonical();
        let twice = once.canonical();
        prop_assert_eq!(once.generators(), twice.generators());
        prop_assert_eq!(once.inequalities(), twice.inequalities());
        prop_assert_eq!(&once, &c);
    }
}
