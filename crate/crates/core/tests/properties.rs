use proptest::prelude::*;

use quotring::arith::{cube_class_mod_q, int, rat, square_class, GaussianRational, Rational};
use quotring::biquotient::Complement;
use quotring::graded_ring::QuadricSystem;
use quotring::invariants::{
    det_cubic, family_net, rank_one_quadratic, rotate_alpha_beta, t1_alpha_beta, t1_invariant, t2_det_class,
    t2_det_class_with, t3_delta, t3_reference_quadratic, t3_system, BinaryCubic, T1Invariant,
};
use quotring::linalg::Matrix;
use quotring::upoly::UPoly;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| *q != int(0))
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-4i64..=4, n * n)
        .prop_map(move |v| Matrix::from_rows(v.chunks(n).map(|r| r.iter().map(|&x| int(x)).collect()).collect()))
        .prop_filter("invertible", |m| m.det() != int(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rotation_law(alpha in rational(), beta in rational(), t in rational()) {
        let den = int(1) + &t * &t;
        let (c, d) = ((int(1) - &t * &t) / &den, int(2) * &t / &den);
        let rotated = BinaryCubic::from_alpha_beta(&alpha, &beta).rotate(&c, &d);
        prop_assert_eq!(rotated.alpha_beta().unwrap(), rotate_alpha_beta(&alpha, &beta, &c, &d).unwrap());
    }

    #[test]
    fn det_cubic_scales_by_square_of_determinant(a in rational(), b in rational(), m in invertible(3)) {
        let net = family_net(&a, &b);
        let moved = net.transform(&m).unwrap();
        let scale = m.det() * m.det();
        let f = det_cubic(&net).unwrap().poly().scale(&scale);
        let g = det_cubic(&moved).unwrap();
        prop_assert_eq!(&f, g.poly());
    }

    #[test]
    fn t1_invariant_symmetries(alpha in rational(), beta in rational(), k in nonzero_rational()) {
        prop_assume!(alpha != int(0) || beta != int(0));
        let inv = T1Invariant::from_alpha_beta(&alpha, &beta).unwrap();
        prop_assert_eq!(&inv, &T1Invariant::from_alpha_beta(&beta, &alpha).unwrap());
        prop_assert_eq!(&inv, &T1Invariant::from_alpha_beta(&(&alpha * &k), &(&beta * &k)).unwrap());
        prop_assert!(inv.is_conjugate_pair());
        prop_assert_eq!(inv.to_string().parse::<T1Invariant>().unwrap(), inv);
    }

    #[test]
    fn t1_closed_form_contains_cube_class(b1 in -40i64..=40, c1 in -40i64..=40) {
        prop_assume!(b1 != 0 || c1 != 0);
        let (alpha, beta) = t1_alpha_beta(&b1.into(), &c1.into());
        let class = cube_class_mod_q(&GaussianRational::new(alpha, beta)).unwrap();
        prop_assert!(t1_invariant(b1, c1).unwrap().contains(&class));
    }

    #[test]
    fn square_class_is_multiplicative(x in nonzero_rational(), y in nonzero_rational()) {
        let lhs = square_class(&(&x * &y)).unwrap();
        prop_assert_eq!(lhs, square_class(&x).unwrap().combine(&square_class(&y).unwrap()));
        prop_assert_eq!(square_class(&(&x * &y * &y)).unwrap(), square_class(&x).unwrap());
    }

    #[test]
    fn rational_roots_of_products(roots in proptest::collection::vec(rational(), 1..5), extra in 1i64..20) {
        let mut p = UPoly::new(vec![int(extra), int(0), int(1)]);
        for r in &roots {
            p = p.mul(&UPoly::new(vec![-r.clone(), int(1)]));
        }
        let mut expected = roots.clone();
        expected.sort();
        expected.dedup();
        prop_assert_eq!(p.rational_roots(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn t2_class_independent_of_complement(
        a0 in nonzero_rational(),
        a1 in nonzero_rational(),
        v in proptest::collection::vec(-3i64..=3, 20),
    ) {
        let vecs: Vec<Vec<Rational>> = v.chunks(5).map(|c| c.iter().map(|&x| int(x)).collect()).collect();
        let base = t2_det_class(&a0, &a1).unwrap();
        prop_assert_eq!(&base, &square_class(&-(&a0 * &a1)).unwrap());
        match t2_det_class_with(&a0, &a1, &Complement::Vectors(vecs)) {
            Ok(c) => prop_assert_eq!(c, base),
            Err(e) => prop_assert!(e.to_string().contains("complement") || e.to_string().contains("basis"), "{}", e),
        }
    }

    #[test]
    fn t3_rank_one_matches_quadratic(a in nonzero_rational(), b in nonzero_rational(), c in nonzero_rational()) {
        prop_assume!(t3_delta(&a, &b, &c).unwrap() != int(0));
        let system: QuadricSystem = t3_system(&a, &b, &c).unwrap();
        prop_assert_eq!(rank_one_quadratic(&system, &a, &b).unwrap(), t3_reference_quadratic(&a, &b, &c).unwrap());
    }
}
