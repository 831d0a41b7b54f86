use std::collections::HashMap;

use cga_core::geometry::{
    embed_point, inversor, line_through, normalize_point, rotation, HalfAngle, Vector3, Versor,
};
use cga_core::{Blade, Error, Generator, Multivector, Poly, Rational, Scalar, Symbol};
use proptest::prelude::*;

type Q = Multivector<Rational>;
type P = Multivector<Poly>;
type F = Multivector<f64>;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn multivector(max_terms: usize) -> impl Strategy<Value = Q> {
    prop::collection::vec((0u8..32, rational()), 0..=max_terms)
        .prop_map(|t| Q::from_terms(t.into_iter().map(|(m, c)| (Blade::from_mask(m).unwrap(), c))))
}

fn vector() -> impl Strategy<Value = Q> {
    prop::array::uniform5(rational()).prop_map(Q::vector)
}

fn vector3() -> impl Strategy<Value = Vector3<Rational>> {
    (rational(), rational(), rational()).prop_map(|(x, y, z)| Vector3::new(x, y, z))
}

fn fvector3() -> impl Strategy<Value = Vector3<f64>> {
    (-5.0f64..5.0, -5.0f64..5.0, -5.0f64..5.0).prop_map(|(x, y, z)| Vector3::new(x, y, z))
}

const NAMES: [&str; 3] = ["a", "b", "c"];

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((rational(), 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, i, j, k)| {
            let mono = Poly::symbol("a").unwrap().pow(i) * Poly::symbol("b").unwrap().pow(j) * Poly::symbol("c").unwrap().pow(k);
            acc + mono.scale(&c)
        })
    })
}

fn bindings() -> impl Strategy<Value = HashMap<Symbol, Rational>> {
    prop::array::uniform3(rational())
        .prop_map(|vals| NAMES.iter().zip(vals).map(|(n, v)| (Symbol::new(n).unwrap(), v)).collect())
}

fn poly_multivector() -> impl Strategy<Value = P> {
    prop::collection::vec((0u8..32, poly()), 0..4)
        .prop_map(|t| P::from_terms(t.into_iter().map(|(m, c)| (Blade::from_mask(m).unwrap(), c))))
}

fn point(v: &Vector3<Rational>) -> Q {
    embed_point(v).into_multivector()
}

fn sum_grades(a: &Q) -> Q {
    (0..=5).fold(Q::zero(), |acc, k| &acc + &a.grade(k).unwrap())
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn poly_render_round_trip(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a.clone());
        prop_assert_eq!(a.to_input_string().parse::<Poly>().unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in poly(), b in poly(), env in bindings()) {
        let ev = |p: &Poly| p.substitute(&env).as_constant().unwrap();
        prop_assert_eq!(ev(&(&a * &b)), &ev(&a) * &ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), &ev(&a) + &ev(&b));
    }

    #[test]
    fn geometric_product_is_associative(a in multivector(6), b in multivector(6), c in multivector(6)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn outer_product_is_associative(a in multivector(6), b in multivector(6), c in multivector(6)) {
        prop_assert_eq!(a.outer_product(&b).outer_product(&c), a.outer_product(&b.outer_product(&c)));
    }

    #[test]
    fn products_distribute(a in multivector(6), b in multivector(6), c in multivector(6)) {
        let bc = &b + &c;
        prop_assert_eq!(&a * &bc, &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&bc * &a, &(&b * &a) + &(&c * &a));
        prop_assert_eq!(a.outer_product(&bc), &a.outer_product(&b) + &a.outer_product(&c));
        prop_assert_eq!(a.left_contraction(&bc), &a.left_contraction(&b) + &a.left_contraction(&c));
    }

    #[test]
    fn symbolic_products_commute_with_substitution(a in poly_multivector(), b in poly_multivector(), env in bindings()) {
        let sub = |m: &P| m.map_coefficients(|c| c.substitute(&env).as_constant().unwrap());
        prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
    }

    #[test]
    fn grades_are_complete_and_disjoint(a in multivector(8), j in 0i64..=5, k in 0i64..=5) {
        prop_assert_eq!(sum_grades(&a), a.clone());
        let aj = a.grade(j).unwrap();
        prop_assert!(aj.grade_q(j).unwrap() || aj.is_zero());
        prop_assert_eq!(aj.grade(j).unwrap(), aj.clone());
        if j != k {
            prop_assert!(aj.grade(k).unwrap().is_zero());
        }
        prop_assert!(matches!(a.grade(6), Err(Error::GradeOutOfRange(6))));
        prop_assert!(matches!(a.grade(-1), Err(Error::GradeOutOfRange(-1))));
    }

    #[test]
    fn vector_product_splits(v in vector(), b in multivector(8)) {
        prop_assert_eq!(&v * &b, &v.left_contraction(&b) + &v.outer_product(&b));
    }

    #[test]
    fn reversion_is_an_anti_automorphism(a in multivector(6), b in multivector(6)) {
        prop_assert_eq!((&a * &b).reversion(), &b.reversion() * &a.reversion());
        prop_assert_eq!(a.reversion().reversion(), a.clone());
        prop_assert_eq!((&a * &b).involution(), &a.involution() * &b.involution());
    }

    #[test]
    fn double_dual_negates(a in multivector(8)) {
        prop_assert_eq!(a.dual().dual(), -&a);
        for k in 0..=5 {
            let ak = a.grade(k).unwrap();
            if !ak.is_zero() {
                prop_assert!(ak.dual().grade_q(5 - k).unwrap());
            }
        }
    }

    #[test]
    fn inverse_contract(a in multivector(6)) {
        match a.inverse() {
            Ok(inv) => {
                prop_assert!((&a * &inv) == Q::one());
                prop_assert!((&inv * &a) == Q::one());
            }
            Err(Error::NotInvertible) => {
                prop_assert!(a.is_zero() || !(&a * &a.reversion()).as_scalar().is_some_and(|s| !s.is_zero()));
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn nonnull_vectors_invert(v in vector()) {
        let n = v.magnitude_squared();
        if n.is_zero() {
            prop_assert!(matches!(v.inverse(), Err(Error::NotInvertible)) || v.is_zero());
        } else {
            prop_assert_eq!(&v * &v.inverse().unwrap(), Q::one());
        }
    }

    #[test]
    fn points_are_null(v in vector3()) {
        let p = point(&v);
        let inf = Q::generator(Generator::Inf);
        prop_assert!((&p * &p).is_zero());
        prop_assert_eq!(p.left_contraction(&inf), Q::scalar(Rational::from(-1)));
        prop_assert_eq!(cga_core::geometry::to_vector(&p), v);
    }

    #[test]
    fn point_distance(u in vector3(), v in vector3()) {
        let d = u.add(&v.neg()).norm_squared();
        prop_assert_eq!(point(&u).left_contraction(&point(&v)).scalar_part(), &d * &Rational::new(-1, 2).unwrap());
    }

    #[test]
    fn points_on_a_line_are_incident(u in vector3(), v in vector3(), t in rational()) {
        let line = line_through(&point(&u), &point(&v));
        let w = v.add(&u.neg());
        let on = u.add(&Vector3::new(&w.x * &t, &w.y * &t, &w.z * &t));
        prop_assert!(point(&on).outer_product(&line.blade).is_zero());
        prop_assert_eq!(line.degenerate, u == v);
    }

    #[test]
    fn translators_compose(a in vector3(), b in vector3(), x in vector3()) {
        let ta = Versor::translator(&a);
        let tb = Versor::translator(&b);
        let tab = Versor::translator(&a.add(&b));
        prop_assert_eq!(ta.multivector() * tb.multivector(), tab.multivector().clone());
        prop_assert_eq!(Versor::translator(&a.neg()).multivector().clone(), ta.inverse().unwrap());
        let moved = ta.apply(&tb.apply(&point(&x)).unwrap()).unwrap();
        prop_assert_eq!(moved, point(&x.add(&a).add(&b)));
        prop_assert_eq!(ta.apply(&Q::generator(Generator::Inf)).unwrap(), Q::generator(Generator::Inf));
    }

    #[test]
    fn versors_are_covariant(t in vector3(), x in multivector(5), y in multivector(5)) {
        let v = Versor::translator(&t);
        let lhs = v.apply(&x.outer_product(&y)).unwrap();
        let rhs = v.apply(&x).unwrap().outer_product(&v.apply(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(v.apply(&(&x * &y)).unwrap(), &v.apply(&x).unwrap() * &v.apply(&y).unwrap());
    }

    #[test]
    fn inversion_is_an_involution(x in vector3(), c in vector3(), r in nonzero_rational()) {
        let p = point(&x);
        let center = point(&c);
        let once = inversor(&p, &center, &r).unwrap();
        if once.is_zero() {
            return Ok(());
        }
        // the image of the center is the point at infinity; skip normalizing it
        if x == c {
            return Ok(());
        }
        let image = normalize_point(&once).unwrap();
        let back = normalize_point(&inversor(&image, &center, &r).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rotations_preserve_inner_products(u in fvector3(), v in fvector3(), a in fvector3(), b in fvector3(), theta in -3.2f64..3.2) {
        let (a, b) = (a.to_multivector(), b.to_multivector());
        if a.outer_product(&b).magnitude_squared().abs() < 1e-6 {
            return Ok(());
        }
        let ha = HalfAngle::from_radians(theta);
        let (pu, pv) = (embed_point(&u).into_multivector(), embed_point(&v).into_multivector());
        let ru = rotation(&pu, &a, &b, Some(&ha)).unwrap();
        let rv = rotation(&pv, &a, &b, Some(&ha)).unwrap();
        let before = pu.left_contraction(&pv).scalar_part();
        let after = ru.left_contraction(&rv).scalar_part();
        prop_assert!((before - after).abs() <= 1e-10 * (1.0 + before.abs()), "{before} vs {after}");
        let (fu, fv) = (u.to_multivector(), v.to_multivector());
        let d0 = fu.left_contraction(&fv).scalar_part();
        let d1 = rotation(&fu, &a, &b, Some(&ha)).unwrap().left_contraction(&rotation(&fv, &a, &b, Some(&ha)).unwrap()).scalar_part();
        prop_assert!((d0 - d1).abs() <= 1e-10 * (1.0 + d0.abs()));
    }

    #[test]
    fn json_round_trip(a in multivector(8)) {
        prop_assert_eq!(Q::from_json(&a.to_json()).unwrap(), a.clone());
        let f: F = a.map_coefficients(|c| c.to_f64());
        prop_assert_eq!(F::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn rotor_quarter_turn_float() {
    let e1 = F::generator(Generator::E1);
    let e2 = F::generator(Generator::E2);
    let out = rotation(&e1, &e1, &e2, Some(&HalfAngle::from_radians(std::f64::consts::FRAC_PI_2))).unwrap();
    for m in 0..32u8 {
        let b = Blade::from_mask(m).unwrap();
        let want = if b == Blade::from_mask(4).unwrap() { 1.0 } else { 0.0 };
        assert!((out.coefficient(b) - want).abs() <= 1e-12, "{out}");
    }
    assert_eq!(f64::from_rational(&Rational::new(1, 4).unwrap()), 0.25);
}
