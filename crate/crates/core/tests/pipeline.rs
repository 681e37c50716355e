use quotring::arith::{int, square_class};
use quotring::biquotient::{family_t1_matrix, is_free, quotient_ring};
use quotring::graded_ring::kernel_of_square_map;
use quotring::invariants::{
    family_net, nodal_cubic_invariant, rank_one_elements, rank_one_field_class, t1_ab, t1_invariant,
    t3_discriminant_class, t3_reference_system, t3_system,
};

#[test]
fn t1_matrix_to_invariant() {
    for (b1, c1) in [(6, 8), (2, 0), (14, 12), (-3, 5), (1, 1)] {
        let m = family_t1_matrix(b1, c1);
        assert!(is_free(&m));
        let ring = quotient_ring(&m).unwrap();
        assert!(ring.is_complete_intersection());
        assert_eq!(&ring.hilbert_function()[..4], &[1, 3, 3, 1]);

        let net = kernel_of_square_map(&ring);
        let (a, b) = t1_ab(&b1.into(), &c1.into());
        assert!(net.same_span(&family_net(&a, &b)), "({b1}, {c1})");

        let data = nodal_cubic_invariant(&net).unwrap();
        assert_eq!(data.invariant, t1_invariant(b1, c1).unwrap(), "({b1}, {c1})");
    }
}

#[test]
fn t3_system_to_class() {
    for p in [3i64, 5, 11] {
        let (a, b, c) = (int(1), int(p + 2), int(1));
        let system = t3_system(&a, &b, &c).unwrap();
        assert!(system.same_span(&t3_reference_system(&a, &b, &c).unwrap()));

        let rank_one = rank_one_elements(&system).unwrap();
        assert_eq!(rank_one.rational.len(), 2);
        assert_eq!(rank_one.orbits.len(), 1);

        let class = rank_one_field_class(&system).unwrap();
        assert_eq!(class, t3_discriminant_class(&a, &b, &c).unwrap());
        assert_eq!(class, square_class(&int(p * (p + 2))).unwrap());
    }
}
