use proptest::prelude::*;
use swf_core::grading::{
    c_formal, c_of_gdq, cosine_critical_value, cosine_morse_index, eta_dirac_tilde, eta_sign_over8, expected_dimension,
    n_plus_m, p1_integral, relative_grading, RPoly,
};
use swf_core::rat::{int, rat};
use swf_core::spectral::{spectral_flow, AffineBranchFamily, PLPath, SpectralGap};
use swf_core::Rat;

fn in_range() -> impl Iterator<Item = (i64, i64, i64)> {
    (1..=12).flat_map(|d| (1..d).flat_map(move |g| (g..d).map(move |q| (g, d, q))))
}

#[test]
fn r_dependence_cancels() {
    let mut n = 0;
    for (g, d, q) in in_range() {
        let eta = RPoly::new(vec![eta_dirac_tilde(g, d, q).unwrap() / int(2)]);
        let total = eta + p1_integral(g, d) + eta_sign_over8(g, d);
        assert!(total.is_constant(), "(g, d, q) = ({g}, {d}, {q})");
        assert_eq!(total.coefficient(0), c_of_gdq(g, d, q).unwrap());
        // the separate terms do depend on r
        assert_eq!(p1_integral(g, d).degree(), Some(2));
        n += 1;
    }
    assert_eq!(n, 286);
}

#[test]
fn c_is_symmetric_about_the_midpoint() {
    for (g, d, q) in in_range() {
        let mirror = d + 2 * g - 2 - q;
        if (g..d).contains(&mirror) {
            assert_eq!(c_of_gdq(g, d, q).unwrap(), c_of_gdq(g, d, mirror).unwrap());
        }
    }
}

#[test]
fn c_agrees_with_direct_evaluation() {
    for (g, d, q) in in_range() {
        let direct = rat(d - 1, 8) + rat((g - 1 - q) * (d + g - 1 - q), 2 * d);
        assert_eq!(c_of_gdq(g, d, q).unwrap(), direct);
    }
    assert_eq!(c_of_gdq(1, 5, 1).unwrap(), rat(1, 10));
    assert_eq!(c_of_gdq(2, 7, 3).unwrap(), rat(1, 28));
}

#[test]
fn kernel_correction() {
    for d in 1..=12 {
        let with_kernel = n_plus_m(1, d, 0, 2).unwrap().value;
        assert_eq!(with_kernel, c_formal(1, d, 0) - int(3));
        assert_eq!(c_formal(1, d, 0), rat(d - 1, 8));
    }
    for (g, d, q) in in_range() {
        assert_eq!(n_plus_m(g, d, q, 0).unwrap().value, c_of_gdq(g, d, q).unwrap());
    }
}

fn flow(fam: &AffineBranchFamily, from: &[Rat], to: &[Rat]) -> i64 {
    let gap = SpectralGap::new(rat(1, 2)).unwrap();
    spectral_flow(fam, &gap, &PLPath::segment(from.to_vec(), to.to_vec()).unwrap(), &rat(1, 20)).unwrap()
}

fn gr(fam: &AffineBranchFamily, freq: i64, a: &[Rat], b: &[Rat]) -> i64 {
    let idx = |p: &Vec<Rat>| cosine_morse_index(p, freq).unwrap();
    relative_grading(&a.to_vec(), &b.to_vec(), idx, flow(fam, b, a))
}

#[test]
fn nil_gradings_from_spectral_flow() {
    let f = AffineBranchFamily::nil_blocks();
    let h = rat(1, 2);
    let z = int(0);
    let (h00, h10, h01, h11) =
        (vec![z.clone(), z.clone()], vec![h.clone(), z.clone()], vec![z.clone(), h.clone()], vec![h.clone(), h]);
    assert_eq!(gr(&f, 1, &h11, &h10), 1);
    assert_eq!(gr(&f, 1, &h11, &h01), 1);
    assert_eq!(gr(&f, 1, &h10, &h00), -1);
    assert_eq!(gr(&f, 1, &h01, &h00), -1);
    // additive along h00 → h10 → h11
    assert_eq!(gr(&f, 1, &h11, &h00), gr(&f, 1, &h11, &h10) + gr(&f, 1, &h10, &h00));
}

#[test]
fn flat_gradings_from_spectral_flow() {
    let f = AffineBranchFamily::flat_order_two();
    let p = |x: Rat| vec![x];
    assert_eq!(gr(&f, 2, &p(int(0)), &p(rat(1, 4))), -1);
    assert_eq!(gr(&f, 2, &p(rat(1, 2)), &p(rat(1, 4))), -1);
    assert_eq!(gr(&f, 2, &p(int(0)), &p(rat(3, 4))), 1);
    assert_eq!(gr(&f, 2, &p(rat(1, 2)), &p(rat(3, 4))), 1);
    // the only pair of grading 2 joins points of equal value
    assert_eq!(gr(&f, 2, &p(rat(1, 4)), &p(rat(3, 4))), 2);
    assert_eq!(cosine_critical_value(&[rat(1, 4)], 2).unwrap(), cosine_critical_value(&[rat(3, 4)], 2).unwrap());
}

proptest! {
    #[test]
    fn gradings_add_when_flows_add(ia in 0i64..3, ib in 0i64..3, ic in 0i64..3, s in -4i64..4, t in -4i64..4) {
        let pts = [vec![int(0)], vec![rat(1, 4)], vec![rat(1, 2)]];
        let idx = |p: &Vec<Rat>| cosine_morse_index(p, 2).unwrap();
        let (a, b, c) = (&pts[ia as usize], &pts[ib as usize], &pts[ic as usize]);
        prop_assert_eq!(
            relative_grading(a, c, idx, s + t),
            relative_grading(a, b, idx, s) + relative_grading(b, c, idx, t)
        );
    }

    #[test]
    fn zero_counts_lose_two(g in -50i64..50) {
        prop_assert_eq!(expected_dimension(g, 0, 0), g - 2);
    }
}
