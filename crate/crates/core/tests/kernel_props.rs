use csl_core::kernel::{hnf2, Algebra, BaseField, FieldTower, Scalar, Subspace};
use csl_core::semigroup::{random_commutative_table, FiniteSemigroup};
use num_bigint::BigInt;
use proptest::prelude::*;

fn vecs(field: &BaseField, raw: &[Vec<i64>]) -> Vec<Vec<Scalar>> {
    raw.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()
}

fn fields() -> impl Strategy<Value = BaseField> {
    prop_oneof![Just(BaseField::Rationals), Just(BaseField::prime(5).unwrap()), Just(BaseField::prime(7).unwrap())]
}

fn raw_vectors(dim: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 0..=max)
}

proptest! {
    #[test]
    fn sum_and_intersection_dimensions(field in fields(), a in raw_vectors(4, 4), b in raw_vectors(4, 4)) {
        let a = Subspace::span(&field, 4, vecs(&field, &a)).unwrap();
        let b = Subspace::span(&field, 4, vecs(&field, &b)).unwrap();
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(a.rank() + b.rank(), sum.rank() + meet.rank());
        prop_assert!(a.contains(&meet).unwrap() && b.contains(&meet).unwrap());
        prop_assert!(sum.contains(&a).unwrap() && sum.contains(&b).unwrap());
    }

    #[test]
    fn module_product_is_associative(a in raw_vectors(4, 3), b in raw_vectors(4, 3), c in raw_vectors(4, 3)) {
        let t = FieldTower::biquadratic(2, 3).unwrap();
        let q = BaseField::Rationals;
        let [a, b, c] = [a, b, c].map(|r| Subspace::span(&q, 4, vecs(&q, &r)).unwrap());
        let left = t.module_product(&t.module_product(&a, &b).unwrap(), &c).unwrap();
        let right = t.module_product(&a, &t.module_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn colon_is_the_largest_solution(a in raw_vectors(3, 3), b in raw_vectors(3, 2), x in prop::collection::vec(-3i64..=3, 3)) {
        let q = BaseField::Rationals;
        // k[X]/(X^3) is not a field, so colons can be proper and nonzero
        let alg = Algebra::polynomial_quotient(&q, &vecs(&q, &[vec![0, 0, 0, 1]])[0]).unwrap();
        let a = Subspace::span(&q, 3, vecs(&q, &a)).unwrap();
        let b = Subspace::span(&q, 3, vecs(&q, &b)).unwrap();
        prop_assume!(!b.is_zero());
        let colon = alg.colon(&a, &b).unwrap();
        prop_assert!(a.contains(&alg.module_product(&colon, &b).unwrap()).unwrap());
        let x = vecs(&q, &[x])[0].clone();
        let xb = Subspace::span(&q, 3, b.basis().iter().map(|v| alg.mul(&x, v)).collect()).unwrap();
        prop_assert_eq!(a.contains(&xb).unwrap(), colon.contains_vector(&x));
    }

    #[test]
    fn hnf_is_canonical(gens in prop::collection::vec((-12i64..=12, -12i64..=12), 2..6)) {
        let gens: Vec<(BigInt, BigInt)> = gens.into_iter().map(|(x, y)| (x.into(), y.into())).collect();
        if let Ok(h) = hnf2(&gens) {
            prop_assert_eq!(hnf2(&h.columns()).unwrap(), h.clone());
            for (x, y) in &gens {
                prop_assert!(h.contains(x, y));
            }
            let mut shuffled = gens.clone();
            shuffled.reverse();
            prop_assert_eq!(hnf2(&shuffled).unwrap(), h);
        }
    }

    #[test]
    fn random_size_five_tables(seed in any::<u64>()) {
        let mut state = seed | 1;
        let mut choose = |n: usize| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as usize
        };
        let table = random_commutative_table(5, &mut choose);
        let s = FiniteSemigroup::unlabeled(table).unwrap();
        let d = s.clifford_decomposition();
        prop_assert_eq!(d.unassigned.is_empty(), s.is_clifford().holds());
        let trivial = d.groups.values().all(|g| g.len() == 1);
        prop_assert_eq!(s.is_boolean().holds(), s.is_clifford().holds() && trivial);
    }
}
