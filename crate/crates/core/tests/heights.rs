use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use pfl_core::algebraic::{Algebraic, IntPolynomial, NumberField, NumberFieldElement};
use pfl_core::heights::*;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn phi_field() -> NumberField {
    NumberField::new(IntPolynomial::from_i64(&[-1, -1, 1])).unwrap()
}

fn elem(k: &NumberField, a: (i64, i64), b: (i64, i64)) -> NumberFieldElement {
    k.element(vec![q(a.0, a.1), q(b.0, b.1)])
}

#[test]
fn rational_examples() {
    let h = weil_height(&Algebraic::ratio(1, 2), 64).unwrap();
    assert_eq!(h.exact, Some(BigInt::from(2)));
    assert_eq!(weil_height(&Algebraic::int(-1), 64).unwrap().exact, Some(BigInt::one()));
    assert_eq!(rational_place_abs(&q(1, 2), &Place::Prime(2.into())).unwrap(), q(2, 1));
    assert_eq!(rational_place_abs(&q(5, 1), &Place::Prime(5.into())).unwrap(), q(1, 5));
    assert_eq!(place_product(&q(3, 7)).unwrap(), q(1, 1));
    assert_eq!(rational_place_abs(&q(0, 1), &Place::Infinity), Err(HeightError::ZeroInput));
}

#[test]
fn pisot_height_is_mahler_root() {
    // M(theta) = theta for a Pisot unit, so H(theta)^d = theta
    for c in [&[-1i64, -1, 1][..], &[-1, -1, 0, 1], &[-1, -1, -1, 1]] {
        let k = NumberField::new(IntPolynomial::from_i64(c)).unwrap();
        let h = field_height(&k.theta(), 128).unwrap();
        let theta = k.theta_interval(128);
        assert!(h.multiplicative.powi(k.degree() as i64).unwrap().overlaps(&theta));
        assert!(h.logarithmic.exp().unwrap().overlaps(&h.multiplicative));
    }
}

#[test]
fn dependence_examples() {
    let w = mult_dependence_search(&Algebraic::ratio(1, 4), &Algebraic::ratio(1, 8), 10).unwrap().unwrap();
    assert_eq!(w.exponents, (3, -2));
    assert!(w.verified);
    assert_eq!(mult_dependence_search(&Algebraic::ratio(1, 5), &Algebraic::ratio(1, 7), 50).unwrap(), None);
    let k = phi_field();
    let inv = k.theta().inverse().unwrap();
    let a = Algebraic::from(inv.clone());
    let b = Algebraic::from(inv.mul(&inv));
    assert_eq!(mult_dependence_search(&a, &b, 10).unwrap().unwrap().exponents, (2, -1));
    assert_eq!(mult_dependence_search(&Algebraic::int(-1), &Algebraic::int(3), 10), Err(HeightError::RootOfUnity));
    let plastic = NumberField::new(IntPolynomial::from_i64(&[-1, -1, 0, 1])).unwrap();
    assert_eq!(
        mult_dependence_search(&a, &Algebraic::from(plastic.theta()), 10),
        Err(HeightError::IncommensurableFields)
    );
}

#[test]
fn minkowski_examples() {
    let m = minkowski_lower_bound(&Algebraic::int(5), &Algebraic::int(7), 6, 64).unwrap();
    // 5^3 7^-2 = 125/49 has height 125 and weight 5
    assert_eq!(m.exponents, (3, -2));
    assert_eq!(m.exact_height, Some(BigInt::from(125)));
    assert!((m.constant.mid_f64() - 125f64.powf(0.2)).abs() < 1e-12);
    let k = phi_field();
    let m = minkowski_lower_bound(&Algebraic::from(k.theta()), &Algebraic::int(5), 6, 64).unwrap();
    assert!(m.constant.is_positive());
    assert!(m.constant.hi().to_f64() < 1.6180339887);
    assert_eq!(
        minkowski_lower_bound(&Algebraic::ratio(1, 4), &Algebraic::ratio(1, 8), 6, 64).unwrap_err(),
        HeightError::DependentInputs(3, -2)
    );
}

fn rat() -> impl Strategy<Value = BigRational> {
    (-100_000i64..100_000, 1i64..100_000).prop_filter_map("nonzero", |(n, d)| (n != 0).then(|| q(n, d)))
}

fn phi_elem() -> impl Strategy<Value = NumberFieldElement> {
    ((-40i64..40, 1i64..9), (-40i64..40, 1i64..9))
        .prop_filter_map("nonzero", |(a, b)| {
            let x = elem(&phi_field(), a, b);
            (!x.is_zero()).then_some(x)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rational_axioms(x in rat(), y in rat(), m in -5i64..=5) {
        let h = |r: &BigRational| rational_height(r);
        prop_assert!(h(&(&x * &y)) <= h(&x) * h(&y));
        prop_assert_eq!(h(&num_traits::pow::Pow::pow(&x, m as i32)), num_traits::pow(h(&x), m.unsigned_abs() as usize));
        prop_assert!(h(&x) >= BigInt::one());
        prop_assert_eq!(place_product(&x).unwrap(), BigRational::one());
        // place-by-place cross-check of H
        let mut hp = BigRational::one();
        for v in relevant_places(&x) {
            hp *= rational_place_abs(&x, &v).unwrap().max(BigRational::one());
        }
        prop_assert_eq!(hp, BigRational::from_integer(h(&x)));
    }

    #[test]
    fn field_axioms(x in phi_elem(), y in phi_elem(), m in -5i64..=5) {
        let hx = field_height(&x, 128).unwrap();
        let hy = field_height(&y, 128).unwrap();
        let hxy = field_height(&x.mul(&y), 128).unwrap();
        prop_assert!(hxy.multiplicative.lo() <= hx.multiplicative.mul(&hy.multiplicative).hi());
        prop_assert!(hx.multiplicative.lo() >= pfl_core::algebraic::Dyadic::one());
        let hm = field_height(&x.pow(m).unwrap(), 128).unwrap();
        let expect = hx.multiplicative.powi(m.abs()).unwrap();
        prop_assert!(hm.multiplicative.overlaps(&expect));
        prop_assert!(hx.logarithmic.exp().unwrap().overlaps(&hx.multiplicative));
    }

    #[test]
    fn rational_field_element_agrees(n in -500i64..500, d in 1i64..500) {
        prop_assume!(n != 0);
        let x = NumberFieldElement::from_rational(&phi_field(), q(n, d));
        let h = field_height(&x, 64).unwrap();
        prop_assert_eq!(h.exact, Some(rational_height(&q(n, d))));
    }
}
