use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use pfl_core::algebraic::text::{format_polynomial, parse_polynomial};
use pfl_core::algebraic::*;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn phi_field() -> NumberField {
    NumberField::new(p(&[-1, -1, 1])).unwrap()
}

#[test]
fn pisot_classification() {
    let five = is_pisot(&p(&[-5, 1])).unwrap();
    assert!(five.is_pisot);
    assert!(five.theta.unwrap().contains_rational(&q(5, 1)));
    let phi = is_pisot(&p(&[-1, -1, 1])).unwrap();
    assert!(phi.is_pisot);
    assert!((phi.max_conjugate_modulus.unwrap().mid_f64() - 0.6180339887).abs() < 1e-9);
    assert!(is_pisot(&p(&[-1, -1, 0, 1])).unwrap().is_pisot);
    let r3 = is_pisot(&p(&[-3, 0, 1])).unwrap();
    assert!(!r3.is_pisot);
    assert!(r3.max_conjugate_modulus.unwrap().lo().to_f64() > 1.7);
    // Lehmer's Salem polynomial has a conjugate on the unit circle
    assert!(!is_pisot(&p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])).map(|r| r.is_pisot).unwrap_or(false));
    // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
    assert!(!check_irreducible(&p(&[4, 0, 0, 0, 1]), false).unwrap().is_irreducible());
    assert!(is_pisot(&p(&[-5, 2])).is_err());
}

#[test]
fn pisot_witness_consistency() {
    for c in [&[-1i64, -1, 1][..], &[-1, -1, 0, 1], &[-1, -1, -1, 1], &[-7, 1], &[-1, -3, 1]] {
        let poly = p(c);
        let rep = is_pisot(&poly).unwrap();
        assert!(rep.is_pisot, "{c:?}");
        let theta = rep.theta.unwrap();
        let c0 = BigRational::from_integer(poly.coeff(0).abs());
        assert!(c0 <= theta.hi().to_rational());
        assert!(rep.max_conjugate_modulus.is_none_or(|m| m.hi() < Dyadic::one()));
    }
}

#[test]
fn conjugates_examples() {
    let r = all_conjugates(&p(&[-1, -1, 1]), 128).unwrap();
    assert!((r[0].re.mid_f64() - 1.6180339887).abs() < 1e-9);
    assert!((r[1].re.mid_f64() + 0.6180339887).abs() < 1e-9);
    let plastic = all_conjugates(&p(&[-1, -1, 0, 1]), 128).unwrap();
    assert!((plastic[0].re.mid_f64() - 1.3247179572).abs() < 1e-9);
    for z in &plastic[1..] {
        assert!((z.abs().mid_f64() - 0.8688369618).abs() < 1e-9);
    }
    let five = all_conjugates(&p(&[-5, 1]), 64).unwrap();
    assert_eq!(five.len(), 1);
    assert!(five[0].re.contains_rational(&q(5, 1)));
    let real = isolate_real_roots(&p(&[-2, 0, 1]), 128).unwrap();
    assert_eq!(real.len(), 2);
    assert!((real[1].mid_f64() - std::f64::consts::SQRT_2).abs() < 1e-9);
}

#[test]
fn field_examples() {
    let k = phi_field();
    let th = k.theta();
    assert_eq!(th.inverse().unwrap(), th.sub(&k.one()));
    assert_eq!(k.element(vec![q(2, 1)]).inverse().unwrap(), k.element(vec![q(1, 2)]));
    assert!(k.zero().inverse().is_err());
    assert_eq!(th.min_poly().unwrap(), p(&[-1, -1, 1]));
    assert_eq!(th.add(&k.one()).min_poly().unwrap(), p(&[1, -3, 1]));
    assert_eq!(k.element(vec![q(3, 1)]).min_poly().unwrap(), p(&[-3, 1]));
    assert!((th.embed(1, 64).unwrap().re.mid_f64() - 1.6180339887).abs() < 1e-9);
    assert!((th.embed(2, 64).unwrap().re.mid_f64() + 0.6180339887).abs() < 1e-9);
    assert!(th.embed(3, 64).is_err());
    // discriminant of x^2 - x - 1 is 5
    assert_eq!(k.discriminant(), &BigInt::from(5));
}

#[test]
fn polynomial_text_round_trip() {
    let poly = parse_polynomial("x^3-x-1").unwrap();
    assert_eq!(poly, p(&[-1, -1, 0, 1]));
    assert_eq!(parse_polynomial("[-1,-1,1]").unwrap(), p(&[-1, -1, 1]));
    assert_eq!(parse_polynomial(&format_polynomial(&poly)).unwrap(), poly);
    assert!(parse_polynomial("x^2+").is_err());
}

fn coords() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-30i64..30, 1i64..12), 2).prop_map(|v| v.into_iter().map(|(n, d)| q(n, d)).collect())
}

fn small_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-6i64..6, 2..6).prop_map(|mut c| {
        let last = c.len() - 1;
        if c[last] == 0 {
            c[last] = 1;
        }
        IntPolynomial::from_i64(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn double_inverse(c in coords()) {
        let k = phi_field();
        let x = k.element(c);
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.inverse().unwrap().inverse().unwrap(), x.clone());
        prop_assert!(x.mul(&x.inverse().unwrap()).is_one());
    }

    #[test]
    fn min_poly_vanishes_on_embeddings(c in coords()) {
        let k = phi_field();
        let x = k.element(c);
        let m = x.min_poly().unwrap();
        for i in 1..=2 {
            prop_assert!(m.eval_complex(&x.embed(i, 128).unwrap()).contains_zero());
        }
    }

    #[test]
    fn conjugate_product_matches_constant(poly in small_poly()) {
        prop_assume!(poly.is_squarefree() && !poly.coeff(0).is_zero());
        let roots = all_conjugates(&poly, 128).unwrap();
        prop_assert_eq!(roots.len(), poly.degree());
        let mut prod = ComplexBall::one(128);
        for z in &roots {
            prod = prod.mul(z);
        }
        let d = poly.degree() as i64;
        let sign = if d % 2 == 0 { 1 } else { -1 };
        let expect = BigRational::new(poly.coeff(0) * sign, poly.leading());
        prop_assert!(prod.re.contains_rational(&expect));
        prop_assert!(prod.im.contains_zero());
    }

    #[test]
    fn sturm_count_matches_isolation(poly in small_poly()) {
        prop_assume!(poly.is_squarefree());
        let roots = isolate_real_roots(&poly, 96).unwrap();
        prop_assert_eq!(roots.len(), SturmChain::new(&poly).count_real());
        for r in &roots {
            if r.is_exact() {
                prop_assert!(poly.eval_rational(&r.lo().to_rational()).is_zero());
            } else {
                prop_assert_eq!(SturmChain::new(&poly).count_in(&r.lo(), &r.hi()), 1);
            }
        }
    }

    #[test]
    fn ball_ops_contain_exact(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let (x, y) = (q(a, b), q(c, d));
        let (bx, by) = (RealBall::from_rational(&x, 64), RealBall::from_rational(&y, 64));
        prop_assert!(bx.add(&by).contains_rational(&(&x + &y)));
        prop_assert!(bx.mul(&by).contains_rational(&(&x * &y)));
        if !y.is_zero() {
            prop_assert!(bx.div(&by).unwrap().contains_rational(&(&x / &y)));
        }
        let e = bx.div_int(1000).exp().unwrap();
        prop_assert!(e.log().unwrap().contains_rational(&(&x / BigInt::from(1000))));
    }

    #[test]
    fn cos_pi_periodic_and_bounded(a in -500i64..500, b in 1i64..64) {
        let x = q(a, b);
        let c = RealBall::from_rational(&x, 96).cos_pi();
        let c2 = RealBall::from_rational(&(&x + BigRational::from_integer(2.into())), 96).cos_pi();
        prop_assert!(c.overlaps(&c2));
        prop_assert!(c.lo().to_rational() <= BigRational::one() + q(1, 1 << 40));
        let s = RealBall::from_rational(&x, 96).sin_pi();
        prop_assert!(c.sqr().add(&s.sqr()).contains_rational(&BigRational::one()));
    }
}
