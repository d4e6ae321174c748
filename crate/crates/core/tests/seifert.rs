mod common;

use common::{alpha_lists, check_against_cosets, check_reducibility};
use proptest::prelude::*;
use swf_core::rat::{int, rat};
use swf_core::seifert::{
    enumerate_torsion_spinc, orb_degree, orb_euler, picard_quotient_order, reducibility_check, GroupOrder,
    OrbLineBundle, SeifertData, TorsionSpinC,
};

#[test]
fn torsion_spinc_matches_cosets() {
    let lists = alpha_lists(36);
    assert!(lists.iter().any(|l| l == &vec![2, 2, 3, 3]));
    for alphas in &lists {
        let n = check_against_cosets(0, alphas, 3, true).unwrap();
        assert!(n > 0);
    }
    for alphas in [vec![], vec![2], vec![3, 4]] {
        check_against_cosets(2, &alphas, 3, true).unwrap();
    }
}

#[test]
fn smooth_orders() {
    for g in 0..3 {
        let base = SeifertData::smooth(g).unwrap();
        for d in -20i64..=20 {
            let n = OrbLineBundle::smooth(d);
            let order = picard_quotient_order(&base, &n).unwrap();
            if d == 0 {
                assert_eq!(order, GroupOrder::Infinite);
                assert!(enumerate_torsion_spinc(&base, &n).is_err());
            } else {
                assert_eq!(order, GroupOrder::Finite(d.unsigned_abs()));
                assert_eq!(enumerate_torsion_spinc(&base, &n).unwrap().len(), d.unsigned_abs() as usize);
            }
        }
    }
}

#[test]
fn degree_zero_with_markings_is_infinite() {
    let base = SeifertData::new(0, vec![(2, 1), (2, 1)]).unwrap();
    assert_eq!(picard_quotient_order(&base, &OrbLineBundle::new(-1, vec![1, 1])).unwrap(), GroupOrder::Infinite);
}

#[test]
fn euler_characteristics() {
    let base = SeifertData::new(0, vec![(2, 1), (3, 1), (5, 1)]).unwrap();
    assert_eq!(orb_euler(&base), rat(1, 30));
    assert_eq!(orb_euler(&SeifertData::smooth(3).unwrap()), int(-4));
}

#[test]
fn reducibility_exhaustive() {
    assert_eq!(check_reducibility(4, 10).unwrap(), 5 * 55);
}

fn base_strategy() -> impl Strategy<Value = SeifertData> {
    (0i64..3, prop::collection::vec((2i64..8, 1i64..8), 0..4)).prop_map(|(g, ms)| {
        let marks = ms
            .into_iter()
            .map(|(a, b)| {
                let b = (1..a).cycle().nth(b as usize).unwrap();
                if num_integer::gcd(a, b) == 1 { (a, b) } else { (a, 1) }
            })
            .collect();
        SeifertData::new(g, marks).unwrap()
    })
}

fn bundle_for(base: &SeifertData, seed: (i64, Vec<i64>)) -> OrbLineBundle {
    let beta = base.alphas().iter().zip(seed.1.iter().chain(std::iter::repeat(&0))).map(|(a, x)| x.rem_euclid(*a)).collect();
    OrbLineBundle::new(seed.0, beta)
}

fn seed() -> impl Strategy<Value = (i64, Vec<i64>)> {
    (-20i64..20, prop::collection::vec(0i64..64, 4))
}

proptest! {
    #[test]
    fn group_law(base in base_strategy(), x in seed(), y in seed(), z in seed(), k in -6i64..6) {
        let (a, b, c) = (bundle_for(&base, x), bundle_for(&base, y), bundle_for(&base, z));
        let ab = base.add(&a, &b).unwrap();
        prop_assert_eq!(&ab, &base.add(&b, &a).unwrap());
        prop_assert_eq!(base.add(&ab, &c).unwrap(), base.add(&a, &base.add(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(orb_degree(&base, &ab).unwrap(), orb_degree(&base, &a).unwrap() + orb_degree(&base, &b).unwrap());
        let zero = base.integral_bundle(0);
        prop_assert_eq!(base.add(&a, &base.negate(&a).unwrap()).unwrap(), zero.clone());
        let mut repeated = zero;
        for _ in 0..k.abs() {
            repeated = base.add(&repeated, &a).unwrap();
        }
        if k < 0 {
            repeated = base.negate(&repeated).unwrap();
        }
        prop_assert_eq!(base.multiple(&a, k).unwrap(), repeated);
    }

    #[test]
    fn representative_is_class_invariant(base in base_strategy(), n in seed(), e in seed(), k in -5i64..5) {
        let n = bundle_for(&base, n);
        prop_assume!(orb_degree(&base, &n).unwrap() != int(0));
        let e = bundle_for(&base, e);
        let shifted = base.add(&e, &base.multiple(&n, k).unwrap()).unwrap();
        let c1 = TorsionSpinC::from_bundle(&base, &n, &e).unwrap();
        let c2 = TorsionSpinC::from_bundle(&base, &n, &shifted).unwrap();
        prop_assert_eq!(&c1, &c2);
        let r1 = reducibility_check(&base, &n, &c1).unwrap();
        prop_assert_eq!(r1, reducibility_check(&base, &n, &c2).unwrap());
    }
}
