use proptest::prelude::*;

use super::*;
use crate::analysis::oracle_reach;
use crate::exactnum::{frac, int};

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn pairs(n: usize, ps: &[(&[i64], &[i64])]) -> DataSet {
    DataSet::from_pairs(n, ps.iter().map(|(x, y)| (v(x), v(y)))).unwrap()
}

fn scalar_pairs() -> DataSet {
    pairs(1, &[(&[0], &[1]), (&[1], &[-1])])
}

fn planar_trajectory() -> DataSet {
    let traj = vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[0, -1]), v(&[-1, 0])];
    DataSet::from_trajectories(2, &[traj]).unwrap()
}

fn full_information(n: usize) -> DataSet {
    let mut d = DataSet::new(n);
    for i in 0..n {
        for j in 0..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut x = vec![int(0); n];
                let mut y = vec![int(0); n];
                x[i] = int(si);
                y[j] = int(sj);
                d.push(x, y).unwrap();
            }
        }
    }
    d
}

#[test]
fn planar_trajectory_reachability() {
    let r = decide_reachability(&planar_trajectory(), &DecideOptions::default()).unwrap();
    assert_eq!(r.matrices.x, Mat::from_i64(&[&[0, 1, 0, 0], &[0, 0, 1, -1]]));
    assert_eq!(r.matrices.y, Mat::from_i64(&[&[1, 0, 0, -1], &[0, 1, -1, 0]]));
    assert!(r.subspaces.r_plus.is_full());
    assert!(r.eigen.is_free());
    // The exact graph has trivial lineality, so the domain hypothesis fails
    // and the verdict comes from H_D reaching R^2.
    assert!(!r.assumption_13.holds);
    assert_eq!(r.verdict, Verdict::Informative);
    assert_eq!(r.path, DecisionPath::OracleFallback);
    assert_eq!(r.oracle.unwrap().chain.first_full(), Some(2));
}

#[test]
fn planar_trajectory_nullcontrollability() {
    let r = decide_nullcontrollability(&planar_trajectory(), &DecideOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::InconclusiveAssumptions);
    assert!(r.assumption_14.unwrap().r_plus_full);
    assert!(r.eigen.is_free());
}

#[test]
fn scalar_pairs_reachability_paths() {
    let r = decide_reachability(&scalar_pairs(), &DecideOptions::default()).unwrap();
    assert!(!r.assumption_13.holds);
    assert_eq!(r.assumption_13.sum, PolyCone::orthant(1));
    assert_eq!((r.verdict, r.path), (Verdict::Informative, DecisionPath::OracleFallback));
    assert_eq!(r.oracle.unwrap().chain.first_full(), Some(2));

    let opts = DecideOptions {
        fallback: false,
        q_max: None,
    };
    let r = decide_reachability(&scalar_pairs(), &opts).unwrap();
    assert_eq!(r.verdict, Verdict::InconclusiveAssumptions);
    assert!(r.oracle.is_none());

    // A one-step horizon is too short for the fallback.
    let opts = DecideOptions {
        fallback: true,
        q_max: Some(1),
    };
    assert_eq!(
        decide_reachability(&scalar_pairs(), &opts).unwrap().verdict,
        Verdict::InconclusiveAssumptions
    );
}

#[test]
fn single_fixed_pair_is_inconclusive() {
    let d = pairs(1, &[(&[1], &[1])]);
    let r = decide_reachability(&d, &DecideOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::InconclusiveAssumptions);
    assert!(r.oracle.unwrap().chain.last().is_zero());
    let r = decide_nullcontrollability(&d, &DecideOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::InconclusiveAssumptions);
}

#[test]
fn full_information_is_informative() {
    let d = full_information(2);
    let r = decide_nullcontrollability(&d, &DecideOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Informative);
    let r = decide_reachability(&d, &DecideOptions::default()).unwrap();
    assert_eq!((r.verdict, r.path), (Verdict::Informative, DecisionPath::Theorem));
    assert_eq!(r.matrices.z.rows(), 0);
}

#[test]
fn negative_verdicts_carry_witnesses() {
    // graph H_D = { y >= x }: R(H_D) = R_+, and lambda = 1 is an eigenvalue
    // of the dual.
    let d = pairs(1, &[(&[1], &[1]), (&[-1], &[-1]), (&[0], &[1])]);
    let r = decide_reachability(&d, &DecideOptions::default()).unwrap();
    assert!(r.assumption_13.holds && r.subspaces.r_plus.is_full());
    assert_eq!(r.verdict, Verdict::NotInformative);
    match r.witness.unwrap() {
        NegativeWitness::Eigenpair(w) => {
            assert_eq!(w, EigenWitness::Rational { lambda: int(1), xi: v(&[-1]) });
            assert!(w.verify(&r.matrices.x, &r.matrices.y, EigenMode::NonNegative).unwrap());
        }
        other => panic!("unexpected witness {other:?}"),
    }
    let h = ConvexProcess::from_data(&d);
    assert!(!oracle_reach(&h, 4).reached_full);

    // graph H_D = { y = x }: nothing is reachable.
    let d = pairs(1, &[(&[1], &[1]), (&[-1], &[-1])]);
    let r = decide_reachability(&d, &DecideOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::NotInformative);
    assert!(matches!(r.witness, Some(NegativeWitness::UnreachableDirection(_))));
}

#[test]
fn empty_data_is_rejected() {
    assert!(decide_reachability(&DataSet::new(2), &DecideOptions::default()).is_err());
    assert!(decide_nullcontrollability(&DataSet::new(2), &DecideOptions::default()).is_err());
}

#[test]
fn consistency() {
    let d = scalar_pairs();
    assert!(consistency_check(&d, &ConvexProcess::from_data(&d)).unwrap());
    assert!(!consistency_check(&d, &ConvexProcess::zero(1)).unwrap());
    assert!(consistency_check(&d, &ConvexProcess::full(1)).unwrap());
    assert!(consistency_check(&d, &ConvexProcess::full(2)).is_err());
}

#[test]
fn report_serialization() {
    let r = decide_reachability(&scalar_pairs(), &DecideOptions::default()).unwrap();
    let j = InformativityJson::from(&r);
    let text = serde_json::to_string(&j).unwrap();
    assert!(text.contains("\"verdict\":\"INFORMATIVE\""));
    assert!(text.contains("\"path\":\"ORACLE_FALLBACK\""));
    assert!(text.contains("\"property\":\"reachability\""));
    let back: InformativityJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back, j);
    assert_eq!(j.matrices.z, vec![vec!["1"], vec!["1"]]);
    assert_eq!(j.matrices.w, vec![vec!["0"], vec!["-1"]]);
}

fn arb_data() -> impl Strategy<Value = DataSet> {
    (1usize..=2).prop_flat_map(|n| {
        prop::collection::vec(
            (prop::collection::vec(-2i64..=2, n), prop::collection::vec(-2i64..=2, n)),
            1..=5,
        )
        .prop_map(move |ps| DataSet::from_pairs(n, ps.iter().map(|(x, y)| (v(x), v(y)))).unwrap())
        .prop_filter("nonempty", |d| !d.is_empty())
    })
}

fn summary(d: &DataSet) -> (Verdict, DecisionPath, Verdict, LinIterResult, LinIterResult) {
    let r = decide_reachability(d, &DecideOptions::default()).unwrap();
    let nc = decide_nullcontrollability(d, &DecideOptions::default()).unwrap();
    (r.verdict, r.path, nc.verdict, r.subspaces.r_plus, r.subspaces.n_minus)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn order_and_scale_invariance(d in arb_data(), seed in 0usize..100, k in 1i64..=4) {
        let base = summary(&d);
        let mut ps = d.pairs().to_vec();
        let len = ps.len();
        ps.rotate_left(seed % len);
        ps.reverse();
        let alpha = frac(k, 3);
        let scaled: Vec<_> = ps
            .iter()
            .enumerate()
            .map(|(i, (x, y))| {
                if i % 2 == 0 {
                    (x.iter().map(|a| a * &alpha).collect(), y.iter().map(|a| a * &alpha).collect())
                } else {
                    (x.clone(), y.clone())
                }
            })
            .collect();
        let permuted = DataSet::from_pairs(d.n(), ps).unwrap();
        prop_assert_eq!(&summary(&permuted), &base);
        let rescaled = DataSet::from_pairs(d.n(), scaled).unwrap();
        prop_assert_eq!(&summary(&rescaled), &base);
    }

    #[test]
    fn informative_reachability_is_sound(
        d in arb_data(),
        extra in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 0..=2),
    ) {
        let r = decide_reachability(&d, &DecideOptions::default()).unwrap();
        if r.verdict == Verdict::Informative {
            let n = d.n();
            let mut gens = d.stacked();
            gens.extend(extra.iter().map(|g| v(&g[..2 * n])));
            let h = ConvexProcess::from_generators(n, &gens).unwrap();
            prop_assert!(consistency_check(&d, &h).unwrap());
            prop_assert!(oracle_reach(&h, 2 * n).reached_full);
        }
        if let Some(NegativeWitness::Eigenpair(w)) = &r.witness {
            prop_assert!(w.verify(&r.matrices.x, &r.matrices.y, EigenMode::NonNegative).unwrap());
        }
    }
}
