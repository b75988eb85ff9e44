use cluster_tilt::cluster_algebra::{initial_seed, LaurentPolynomial};
use cluster_tilt::linalg::Q;
use cluster_tilt::root_system::{DynkinType, RootSystem};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_type() -> impl Strategy<Value = DynkinType> {
    prop::sample::select(vec!["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"])
        .prop_map(|t| t.parse().unwrap())
}

fn walk() -> impl Strategy<Value = (DynkinType, Vec<usize>)> {
    small_type().prop_flat_map(|t| (Just(t), prop::collection::vec(0..t.rank, 0..12)))
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::collection::vec(-2i32..3, 3), -4i64..5), 0..5)
        .prop_map(|terms| LaurentPolynomial::from_terms(3, terms.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

proptest! {
    #[test]
    fn mutation_is_an_involution((t, path) in walk(), k in 0usize..8) {
        let s = initial_seed(t).mutate_path(&path).unwrap();
        let k = k % t.rank;
        prop_assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
    }

    #[test]
    fn seeds_stay_finite_type_with_root_denominators((t, path) in walk()) {
        let rs = RootSystem::new(t);
        let s = initial_seed(t).mutate_path(&path).unwrap();
        prop_assert!(s.quiver.check_simply_laced().is_ok());
        for v in &s.vars {
            if v.as_variable().is_none() {
                prop_assert!(v.numerator_prime_to_variables());
                let d = cluster_tilt::root_system::Root(v.denominator_vector());
                prop_assert!(rs.positive_roots().contains(&d), "{} has denominator {}", v, d);
            }
        }
    }

    #[test]
    fn seed_id_ignores_relabeling((t, path) in walk(), seed in any::<u64>()) {
        let s = initial_seed(t).mutate_path(&path).unwrap();
        let n = s.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let relabeled = cluster_tilt::cluster_algebra::Seed {
            quiver: s.quiver.permuted(&perm),
            vars: perm.iter().map(|&p| s.vars[p].clone()).collect(),
        };
        prop_assert_eq!(relabeled.id(), s.id());
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in laurent(), b in laurent(), p in prop::collection::vec(1i64..6, 3)) {
        let point: Vec<Q> = p.into_iter().map(|x| Q::from_integer(BigInt::from(x))).collect();
        prop_assert_eq!(a.mul(&b).evaluate(&point), a.evaluate(&point) * b.evaluate(&point));
    }
}
