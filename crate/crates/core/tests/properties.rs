use deligne_ring::bisym::{multiply, omega_xy, BiSymFunc};
use deligne_ring::oracle::{expand_bisym, schur_poly, Alphabet, MultiPoly};
use deligne_ring::specialize::specialize_to_gl_n;
use deligne_ring::symfunc::{self, schur, SymFunc};
use deligne_ring::{expand_in_s_basis, mixed_jacobi_trudi, s_class, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| {
        let all = deligne_ring::partition::partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn symfunc(max_size: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition(max_size), -3i64..=3), 0..4).prop_map(|terms| {
        let mut f = SymFunc::zero();
        for (p, c) in terms {
            f.add_term(p, BigInt::from(c));
        }
        f
    })
}

fn bisym(max_size: usize) -> impl Strategy<Value = BiSymFunc> {
    prop::collection::vec((partition(max_size), partition(max_size), -3i64..=3), 0..4).prop_map(|terms| {
        let mut f = BiSymFunc::zero();
        for (l, m, c) in terms {
            f.add_term(deligne_ring::PairKey::new(l, m), BigInt::from(c));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(p in partition(10)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn partition_text_round_trips(p in partition(10)) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn symfunc_product_is_commutative_and_associative(a in symfunc(3), b in symfunc(3), c in symfunc(2)) {
        prop_assert_eq!(symfunc::multiply(&a, &b), symfunc::multiply(&b, &a));
        prop_assert_eq!(
            symfunc::multiply(&symfunc::multiply(&a, &b), &c),
            symfunc::multiply(&a, &symfunc::multiply(&b, &c))
        );
    }

    #[test]
    fn product_distributes(a in symfunc(3), b in symfunc(3), c in symfunc(3)) {
        prop_assert_eq!(
            symfunc::multiply(&a, &b.add(&c)),
            symfunc::multiply(&a, &b).add(&symfunc::multiply(&a, &c))
        );
    }

    #[test]
    fn omega_is_a_ring_involution(a in symfunc(3), b in symfunc(3)) {
        let w = symfunc::omega;
        prop_assert_eq!(w(&w(&a)), a.clone());
        prop_assert_eq!(w(&symfunc::multiply(&a, &b)), symfunc::multiply(&w(&a), &w(&b)));
    }

    #[test]
    fn bisym_product_is_commutative(a in bisym(2), b in bisym(2)) {
        prop_assert_eq!(multiply(&a, &b), multiply(&b, &a));
    }

    #[test]
    fn omega_xy_is_multiplicative(a in bisym(2), b in bisym(2)) {
        prop_assert_eq!(omega_xy(&multiply(&a, &b)), multiply(&omega_xy(&a), &omega_xy(&b)));
    }

    #[test]
    fn lr_product_matches_polynomials(l in partition(3), m in partition(3)) {
        let prod = symfunc::multiply(&schur(&l), &schur(&m));
        let mut lhs = MultiPoly::zero();
        for (nu, c) in prod.terms() {
            lhs = lhs.add(&schur_poly(nu, Alphabet::X, 3).scale(c));
        }
        let rhs = schur_poly(&l, Alphabet::X, 3).mul(&schur_poly(&m, Alphabet::X, 3));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn class_expansion_round_trips(l in partition(3), m in partition(3)) {
        let e = expand_in_s_basis(&s_class(&l, &m));
        prop_assert!(e.is_unit_vector(&l, &m));
    }

    #[test]
    fn determinant_matches_sum(l in partition(4), m in partition(4)) {
        prop_assert_eq!(mixed_jacobi_trudi(&l, &m), s_class(&l, &m));
    }

    #[test]
    fn specialization_is_a_ring_map(a in bisym(2), b in bisym(2), n in 1usize..=3) {
        prop_assert_eq!(
            specialize_to_gl_n(&multiply(&a, &b), n),
            specialize_to_gl_n(&a, n).mul(&specialize_to_gl_n(&b, n))
        );
        prop_assert!(specialize_to_gl_n(&a, n).is_symmetric());
    }

    #[test]
    fn polynomial_images_are_symmetric(f in bisym(3)) {
        let p = expand_bisym(&f, 3, 2);
        prop_assert!(p.is_symmetric_in(Alphabet::X));
        prop_assert!(p.is_symmetric_in(Alphabet::Y));
    }

    #[test]
    fn json_round_trip(f in bisym(3)) {
        let text = serde_json::to_string(&f).unwrap();
        let back: BiSymFunc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, f);
    }
}
