use csl_core::kernel::{BaseField, FieldTower, Poly, RatFn, Scalar, Subspace};
use csl_core::pvd::oracle::{truncated_colon, truncated_product, DEFAULT_DEPTH};
use csl_core::pvd::PvdRing;
use csl_core::quadratic::{QuadElement, QuadLattice, QuadraticOrder};
use csl_core::regularity::{check_implications, regularity_report, IdealArithmetic};
use csl_core::window::{WindowIdeal, WindowRing};
use proptest::prelude::*;

fn poly(field: &BaseField, c: &[i64]) -> Poly {
    Poly::new(c.iter().map(|&v| field.from_i64(v)).collect())
}

fn small_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..=5)
}

/// `k[X²,X³]` presented with conductor `X²`, `k[X³,X⁴,X⁵]`, and `k + X²k + X³k[X]`.
fn window_rings(field: &BaseField) -> Vec<WindowRing> {
    vec![
        WindowRing::constants(field, &poly(field, &[0, 0, 1])).unwrap(),
        WindowRing::constants(field, &poly(field, &[0, 0, 0, 1])).unwrap(),
        WindowRing::from_polys(field, &poly(field, &[0, 0, 0, 1]), &[Poly::one(), poly(field, &[0, 0, 1])]).unwrap(),
        WindowRing::constants(field, &poly(field, &[-1, 0, 1])).unwrap(),
    ]
}

fn window_ideal(r: &WindowRing, gens: &[Vec<i64>]) -> Option<WindowIdeal> {
    let gens: Vec<Poly> = gens.iter().map(|g| poly(r.field(), g)).collect();
    r.ideal_from_generators(&gens).ok()
}

fn fields() -> impl Strategy<Value = BaseField> {
    prop_oneof![Just(BaseField::Rationals), Just(BaseField::prime(5).unwrap())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn window_law_and_product_exactness(
        field in fields(),
        which in 0usize..4,
        gi in prop::collection::vec(small_poly(), 1..=2),
        gj in prop::collection::vec(small_poly(), 1..=2),
        coords in prop::collection::vec(-2i64..=2, 3),
        tail in small_poly(),
    ) {
        let r = &window_rings(&field)[which];
        let (Some(i), Some(j)) = (window_ideal(r, &gi), window_ideal(r, &gj)) else { return Ok(()) };
        // g·c·k[X] ⊆ I ⊆ g·k[X]
        let gc = RatFn::poly(r.conductor().clone()).unwrap().mul(&i.g, &field);
        prop_assert!(r.contains_element(&i, &gc));
        prop_assert!(r.contains_element(&i, &gc.mul(&RatFn::poly(poly(&field, &[1, 1])).unwrap(), &field)));
        for g in &gi {
            if let Some(g) = RatFn::poly(poly(&field, g)) {
                prop_assert!(r.contains_element(&i, &g));
            }
        }
        // products of elements land in the computed product
        let ij = r.wproduct(&i, &j);
        let coords: Vec<Scalar> = coords.iter().map(|&c| field.from_i64(c)).collect();
        let x = r.element(&i, &coords, &poly(&field, &tail));
        let y = r.element(&j, &coords[1..], &Poly::one());
        prop_assert!(r.contains_element(&ij, &x.mul(&y, &field)));
        // colon law and implications
        let h = r.wcolon(&i, &j);
        prop_assert!(r.contains(&i, &r.wproduct(&h, &j)));
        let report = regularity_report(r, &i, 4);
        prop_assert!(check_implications(r, &i, &report).is_ok());
        prop_assert!(report.boole_criterion_holds());
        prop_assert_eq!(report.is_regular(), report.is_stable());
    }

    #[test]
    fn window_colon_is_maximal(
        gi in prop::collection::vec(small_poly(), 1..=2),
        gj in prop::collection::vec(small_poly(), 1..=2),
        x in small_poly(),
    ) {
        let q = BaseField::Rationals;
        let r = &window_rings(&q)[1];
        let (Some(i), Some(j)) = (window_ideal(r, &gi), window_ideal(r, &gj)) else { return Ok(()) };
        let Some(x) = RatFn::poly(poly(&q, &x)) else { return Ok(()) };
        let xj = r.scale(&x, &j);
        prop_assert_eq!(r.contains(&i, &xj), r.contains_element(&r.wcolon(&i, &j), &x));
    }

    #[test]
    fn quadratic_arithmetic_laws(
        dk in prop::sample::select(vec![-3i64, -4, -7, -8, -15, -20]),
        f in 1i64..=4,
        a in prop::collection::vec((-6i64..=6, -6i64..=6), 2..=3),
        b in prop::collection::vec((-6i64..=6, -6i64..=6), 2..=3),
    ) {
        let order = QuadraticOrder::new(dk, f).unwrap();
        let lat = |gens: &[(i64, i64)]| {
            let mut elems: Vec<QuadElement> = gens.iter().map(|&(x, y)| QuadElement::integer(x, y * f)).collect();
            // close under O = Z + fωZ
            let fw = QuadElement::integer(0, f);
            let extra: Vec<QuadElement> = elems.iter().map(|e| order.field().mul(e, &fw)).collect();
            elems.extend(extra);
            QuadLattice::from_elements(&elems).ok()
        };
        let (Some(i), Some(j)) = (lat(&a), lat(&b)) else { return Ok(()) };
        prop_assert!(order.is_module_over(&i, f));
        let ij = order.ideal_product(&i, &j);
        prop_assert_eq!(&ij, &order.ideal_product(&j, &i));
        prop_assert!(order.colon(&ij, &j).contains_lattice(&i));
        prop_assert!(i.contains_lattice(&order.ideal_product(&order.colon(&i, &j), &j)));
        let fp = order.multiplier_order(&i).unwrap();
        prop_assert_eq!(f % fp, 0);
        let report = regularity_report(&order, &i, 4);
        prop_assert!(report.is_regular() && report.is_stable());
        prop_assert!(check_implications(&order, &i, &report).is_ok());
    }

    #[test]
    fn pvd_closed_forms_match_truncation(
        wa in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..=3),
        wb in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..=3),
        la in -2i64..=2,
        lb in -2i64..=2,
    ) {
        let r = PvdRing::over_base(FieldTower::biquadratic(2, 3).unwrap()).unwrap();
        let q = BaseField::Rationals;
        let to = |w: &[Vec<i64>]| w.iter().map(|v| v.iter().map(|&x| q.from_i64(x)).collect()).collect::<Vec<Vec<Scalar>>>();
        let (Ok(a), Ok(b)) = (r.ideal_from_residues(la, to(&wa)), r.ideal_from_residues(lb, to(&wb))) else { return Ok(()) };
        prop_assert_eq!(truncated_product(&r, &a, &b, DEFAULT_DEPTH), Some(r.pvd_product(&a, &b)));
        prop_assert_eq!(truncated_colon(&r, &a, &b, DEFAULT_DEPTH), Some(r.pvd_colon(&a, &b)));
    }

    #[test]
    fn endomorphisms_of_preimages(w in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..=2)) {
        let r = PvdRing::over_base(FieldTower::biquadratic(2, 3).unwrap()).unwrap();
        let q = BaseField::Rationals;
        let mut rows: Vec<Vec<Scalar>> = vec![r.k().basis()[0].clone()];
        rows.extend(w.iter().map(|v| v.iter().map(|&x| q.from_i64(x)).collect()));
        let w = Subspace::span(&q, 4, rows).unwrap();
        prop_assume!(!w.is_full());
        let pre = r.preimage(&w).unwrap();
        let closed = r.pvd_colon(&pre, &pre);
        let expect = r.preimage(&r.tower().field_colon(&w, &w).unwrap()).unwrap();
        prop_assert_eq!(&closed, &expect);
        prop_assert_eq!(truncated_colon(&r, &pre, &pre, DEFAULT_DEPTH), Some(expect));
    }
}

#[test]
fn quadratic_extension_dichotomy_on_a_grid() {
    let r = PvdRing::over_base(FieldTower::quadratic(5).unwrap()).unwrap();
    let q = BaseField::Rationals;
    for a in -4..=4 {
        for b in -4..=4 {
            assert!(r.is_quadratic_like(&[q.from_i64(a), q.from_i64(b)]));
        }
    }
}
