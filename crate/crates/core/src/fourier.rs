//! Certified evaluation of `G_lambda(u) = prod_{n>=0} cos(pi lambda^n u)`.
//!
//! The product splits into a head, multiplied factor by factor, and a tail
//! starting at the first index with `lambda^n |u| <= 1/4`. On `[0, 1/4]`,
//! `cos(pi x) >= 1 - t` with `t = (pi x)^2 / 2 <= pi^2/32`, and
//! `-log(1 - t) <= t / (1 - t)`, so
//!
//! ```text
//! 0 <= -log cos(pi x) <= c x^2,   c = 16 pi^2 / (32 - pi^2) ~ 7.14
//! ```
//!
//! and summing the geometric series bounds the omitted tail by
//! `c (lambda^{n0} u)^2 / (1 - lambda^2)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebraic::{
    is_pisot, AlgebraicError, Algebraic, Dyadic, NumberField, RealBall, PRECISION_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FourierError {
    #[error("lambda must lie strictly between 0 and 1")]
    InvalidLambda,
    #[error("lambda and u live in different number fields")]
    FieldMismatch,
    #[error("precision cap {cap} reached before the target radius")]
    PrecisionExhausted { cap: u32 },
    #[error("a head factor straddles zero at the precision cap")]
    AmbiguousZero,
    #[error("theta is not a Pisot number")]
    NotPisot,
    #[error("empty grid")]
    EmptyGrid,
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
}

impl FourierError {
    pub fn code(&self) -> &'static str {
        match self {
            FourierError::InvalidLambda => "InvalidLambda",
            FourierError::FieldMismatch => "FieldMismatch",
            FourierError::PrecisionExhausted { .. } => "PrecisionExhausted",
            FourierError::AmbiguousZero => "AmbiguousZero",
            FourierError::NotPisot => "NotPisot",
            FourierError::EmptyGrid => "EmptyGrid",
            FourierError::Algebraic(e) => e.code(),
        }
    }
}

/// The argument `u`: exact data (reduced modulo 1 exactly before taking
/// cosines) or an enclosure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Argument {
    Exact(Algebraic),
    Ball(RealBall),
}

impl Argument {
    pub fn rational(r: BigRational) -> Self {
        Argument::Exact(Algebraic::Rational(r))
    }

    pub fn to_ball(&self, prec: u32) -> RealBall {
        match self {
            Argument::Exact(x) => x.to_ball(prec),
            Argument::Ball(b) => b.with_prec(prec),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Argument::Exact(x) => x.is_zero(),
            Argument::Ball(b) => b.is_exact() && b.mid().is_zero(),
        }
    }
}

impl std::fmt::Display for Argument {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Argument::Exact(x) => write!(f, "{x}"),
            Argument::Ball(b) => write!(f, "{b:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductEvaluation {
    pub value: RealBall,
    pub head_terms: usize,
    /// Encloses `-log` of the omitted tail; always within `[0, T]`.
    pub tail_log_bound: RealBall,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogAbs {
    Finite(RealBall),
    /// Some factor is exactly zero.
    NegInfinity,
}

impl LogAbs {
    pub fn finite(&self) -> Option<&RealBall> {
        match self {
            LogAbs::Finite(b) => Some(b),
            LogAbs::NegInfinity => None,
        }
    }
}

struct Head {
    factors: Vec<RealBall>,
    exact_zero: bool,
    tail: RealBall,
}

/// `c = 16 pi^2 / (32 - pi^2)`
pub fn tail_constant(prec: u32) -> RealBall {
    let pi2 = RealBall::pi(prec).sqr();
    let den = RealBall::from_int(32, prec).sub(&pi2);
    pi2.mul_int(16).div(&den).expect("32 > pi^2")
}

fn check_lambda(lambda: &Algebraic) -> Result<(), FourierError> {
    let upper = match lambda {
        Algebraic::Rational(r) => r < &BigRational::one(),
        Algebraic::Field(x) => x.cmp_rational(&BigRational::one()).is_lt(),
    };
    if lambda.sign() <= 0 || !upper {
        return Err(FourierError::InvalidLambda);
    }
    Ok(())
}

/// `cos(pi y)` for exact `y`, reduced by an exact integer shift first.
/// Returns `None` when the factor is exactly zero.
fn exact_cos_pi(y: &Algebraic, prec: u32) -> Option<RealBall> {
    let approx = y.to_ball(prec);
    let (k, _) = approx.mid().round_half_even();
    let sign = if k.is_odd() { -1 } else { 1 };
    let kq = BigRational::from_integer(k);
    let eps = match y {
        Algebraic::Rational(r) => {
            let e = r - &kq;
            if e.is_zero() {
                return Some(RealBall::from_int(sign, prec));
            }
            if e.abs() == BigRational::new(1.into(), 2.into()) {
                return None;
            }
            RealBall::from_rational(&e, prec)
        }
        Algebraic::Field(x) => {
            let shift = crate::algebraic::NumberFieldElement::from_rational(x.field(), kq);
            x.sub(&shift).embed_real(prec)
        }
    };
    Some(eps.cos_pi().mul_int(sign))
}

fn head_factors(lambda: &Algebraic, u: &Argument, tail_target: &Dyadic, prec: u32) -> Result<Head, FourierError> {
    let quarter = Dyadic::pow2(-2);
    let lam = lambda.to_ball(prec);
    let mut factors = Vec::new();
    let mut exact_zero = false;
    // exact iterate while the argument is large, then an enclosure
    let mut exact = match u {
        Argument::Exact(x) => {
            Algebraic::common_field(lambda, x).map_err(|_| FourierError::FieldMismatch)?;
            Some(x.clone())
        }
        Argument::Ball(_) => None,
    };
    let mut x = u.to_ball(prec);
    let lam2 = lam.sqr();
    let denom = RealBall::one(prec).sub(&lam2);
    let c = tail_constant(prec);
    loop {
        if x.abs().hi() <= quarter {
            let t = c.mul(&x.sqr()).div(&denom).expect("lambda < 1");
            if t.hi() <= *tail_target {
                let tail = RealBall::hull(&Dyadic::zero(), &t.hi(), prec);
                return Ok(Head { factors, exact_zero, tail });
            }
        }
        let f = match &exact {
            Some(y) => match exact_cos_pi(y, prec) {
                Some(f) => f,
                None => {
                    exact_zero = true;
                    RealBall::zero(prec)
                }
            },
            None => x.cos_pi(),
        };
        factors.push(f);
        if let Some(y) = exact.take() {
            // exact tracking stops paying off once |y| < 1/4
            if x.abs().hi() > quarter {
                let next = y.mul(lambda)?;
                x = next.to_ball(prec);
                exact = Some(next);
                continue;
            }
        }
        x = x.mul(&lam);
        if factors.len() > 1 << 20 {
            return Err(FourierError::PrecisionExhausted { cap: prec });
        }
    }
}

fn start_precision(target: &Dyadic) -> u32 {
    let bits = if target.is_zero() { 64 } else { (-target.magnitude()).max(0) as u32 };
    (bits + 32).max(64)
}

/// Certified `G_lambda(u)` with radius at most `target_radius`.
pub fn eval_g(lambda: &Algebraic, u: &Argument, target_radius: &Dyadic) -> Result<ProductEvaluation, FourierError> {
    eval_g_capped(lambda, u, target_radius, PRECISION_CAP)
}

pub fn eval_g_capped(
    lambda: &Algebraic,
    u: &Argument,
    target_radius: &Dyadic,
    cap: u32,
) -> Result<ProductEvaluation, FourierError> {
    check_lambda(lambda)?;
    if u.is_zero() {
        return Ok(ProductEvaluation { value: RealBall::one(64), head_terms: 0, tail_log_bound: RealBall::zero(64) });
    }
    let tail_target = target_radius.mul_pow2(-2);
    let mut prec = start_precision(target_radius).min(cap);
    loop {
        let head = head_factors(lambda, u, &tail_target, prec)?;
        let head_terms = head.factors.len();
        if head.exact_zero {
            return Ok(ProductEvaluation { value: RealBall::zero(prec), head_terms, tail_log_bound: head.tail });
        }
        let mut value = RealBall::one(prec);
        for f in &head.factors {
            value = value.mul(f);
        }
        let shrink = head.tail.neg().exp().expect("small tail");
        let factor = RealBall::hull(&shrink.lo(), &Dyadic::one(), prec);
        let value = value.mul(&factor);
        if value.rad() <= target_radius {
            return Ok(ProductEvaluation { value, head_terms, tail_log_bound: head.tail });
        }
        if prec >= cap {
            return Err(FourierError::PrecisionExhausted { cap });
        }
        prec = (prec * 2).min(cap);
    }
}

/// Certified `log |G_lambda(u)|`, summed in log space so large `u` cannot underflow.
pub fn eval_log_abs_g(lambda: &Algebraic, u: &Argument, target_radius: &Dyadic) -> Result<LogAbs, FourierError> {
    eval_log_abs_g_capped(lambda, u, target_radius, PRECISION_CAP)
}

pub fn eval_log_abs_g_capped(
    lambda: &Algebraic,
    u: &Argument,
    target_radius: &Dyadic,
    cap: u32,
) -> Result<LogAbs, FourierError> {
    check_lambda(lambda)?;
    if u.is_zero() {
        return Ok(LogAbs::Finite(RealBall::zero(64)));
    }
    let tail_target = target_radius.mul_pow2(-2);
    let mut prec = start_precision(target_radius).min(cap);
    loop {
        let head = head_factors(lambda, u, &tail_target, prec)?;
        if head.exact_zero {
            return Ok(LogAbs::NegInfinity);
        }
        let mut sum = head.tail.neg();
        let mut straddles = false;
        for f in &head.factors {
            match f.abs().log() {
                Some(l) => sum = sum.add(&l),
                None => {
                    straddles = true;
                    break;
                }
            }
        }
        if !straddles && sum.rad() <= target_radius {
            return Ok(LogAbs::Finite(sum));
        }
        if prec >= cap {
            return Err(if straddles { FourierError::AmbiguousZero } else { FourierError::PrecisionExhausted { cap } });
        }
        prec = (prec * 2).min(cap);
    }
}

#[derive(Clone, Debug)]
pub struct ErdosReport {
    /// `(n, |G_{1/theta}(theta^n)|)`
    pub rows: Vec<(u32, RealBall)>,
    /// Running minimum of the certified lower bounds.
    pub running_min: Vec<Dyadic>,
    pub min_lower: Dyadic,
}

/// `|G_{1/theta}(theta^n)|` for `n = 1..=n_max`, evaluated with exact field data.
pub fn erdos_witness(theta: &NumberField, n_max: u32, target_radius: &Dyadic) -> Result<ErdosReport, FourierError> {
    let report = is_pisot(theta.poly())?;
    if !report.is_pisot {
        return Err(FourierError::NotPisot);
    }
    let t = theta.theta();
    let lambda = Algebraic::from(t.inverse()?);
    if lambda == Algebraic::ratio(1, 2) {
        return Err(FourierError::InvalidLambda);
    }
    let rows: Vec<Result<(u32, RealBall), FourierError>> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let u = Argument::Exact(Algebraic::from(t.pow(n as i64)?));
            let g = eval_g(&lambda, &u, target_radius)?;
            Ok((n, g.value.abs()))
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut running_min = Vec::with_capacity(rows.len());
    let mut current: Option<Dyadic> = None;
    for (_, b) in &rows {
        let lo = b.lo().max(Dyadic::zero());
        current = Some(match current {
            None => lo,
            Some(c) => c.min(lo),
        });
        running_min.push(current.clone().unwrap());
    }
    let min_lower = current.unwrap_or_else(Dyadic::zero);
    Ok(ErdosReport { rows, running_min, min_lower })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub u: Argument,
    pub g1_abs: RealBall,
    pub g2_abs: RealBall,
    pub product_abs: RealBall,
}

/// Rows come back in grid order whatever the scheduling.
pub fn scan_product(
    lambda1: &Algebraic,
    lambda2: &Algebraic,
    grid: &[Argument],
    target_radius: &Dyadic,
) -> Result<Vec<ScanRow>, FourierError> {
    if grid.is_empty() {
        return Err(FourierError::EmptyGrid);
    }
    grid.par_iter()
        .map(|u| {
            let g1 = eval_g(lambda1, u, target_radius)?.value.abs();
            let g2 = eval_g(lambda2, u, target_radius)?.value.abs();
            let product_abs = g1.mul(&g2);
            Ok(ScanRow { u: u.clone(), g1_abs: g1, g2_abs: g2, product_abs })
        })
        .collect()
}

/// Points `10^j (1 + i / 2^m)`, `i = 0..=2^m`, for each decade `j` in range.
pub fn dyadic_decade_grid(decades: std::ops::RangeInclusive<u32>, m: u32) -> Vec<(u32, BigRational)> {
    let steps = 1u64 << m;
    let mut out = Vec::new();
    for j in decades {
        let base = num_traits::pow(BigInt::from(10), j as usize);
        for i in 0..=steps {
            let num = &base * BigInt::from(steps + i);
            out.push((j, BigRational::new(num, BigInt::from(steps))));
        }
    }
    out
}

/// Largest certified upper bound of the product per decade, in decade order.
pub fn decade_maxima(decades: &[u32], rows: &[ScanRow]) -> Vec<(u32, Dyadic)> {
    let mut out: Vec<(u32, Dyadic)> = Vec::new();
    for (j, row) in decades.iter().zip(rows) {
        let hi = row.product_abs.hi();
        match out.last_mut() {
            Some((d, m)) if d == j => {
                if hi > *m {
                    *m = hi;
                }
            }
            _ => out.push((*j, hi)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::IntPolynomial;

    fn tgt() -> Dyadic {
        Dyadic::pow2(-60)
    }

    #[test]
    fn zero_argument_is_one() {
        let g = eval_g(&Algebraic::ratio(1, 3), &Argument::rational(BigRational::zero()), &tgt()).unwrap();
        assert_eq!(g.value, RealBall::one(64));
        assert_eq!(g.head_terms, 0);
    }

    #[test]
    fn half_is_sinc() {
        let u = BigRational::new(3.into(), 10.into());
        let g = eval_g(&Algebraic::ratio(1, 2), &Argument::rational(u), &tgt()).unwrap();
        let x = 0.6 * std::f64::consts::PI;
        assert!((g.value.mid_f64() - x.sin() / x).abs() < 1e-15);
        assert!(g.value.rad() <= &tgt());
    }

    #[test]
    fn vanishing_factor() {
        let u = Argument::rational(BigRational::new(3.into(), 2.into()));
        let g = eval_g(&Algebraic::ratio(1, 3), &u, &tgt()).unwrap();
        assert!(g.value.contains_zero());
        assert_eq!(eval_log_abs_g(&Algebraic::ratio(1, 3), &u, &tgt()).unwrap(), LogAbs::NegInfinity);
    }

    #[test]
    fn rejects_bad_lambda() {
        let u = Argument::rational(BigRational::one());
        assert_eq!(eval_g(&Algebraic::int(1), &u, &tgt()), Err(FourierError::InvalidLambda));
        assert_eq!(eval_g(&Algebraic::ratio(-1, 2), &u, &tgt()), Err(FourierError::InvalidLambda));
    }

    #[test]
    fn tail_constant_value() {
        let c = tail_constant(128);
        let pi2 = std::f64::consts::PI.powi(2);
        assert!((c.mid_f64() - 16.0 * pi2 / (32.0 - pi2)).abs() < 1e-13);
    }

    #[test]
    fn non_pisot_rejected() {
        let k = NumberField::new(IntPolynomial::from_i64(&[-3, 0, 1])).unwrap();
        assert!(matches!(erdos_witness(&k, 3, &tgt()), Err(FourierError::NotPisot)));
    }

    #[test]
    fn grid_shape() {
        let g = dyadic_decade_grid(1..=2, 2);
        assert_eq!(g.len(), 10);
        assert_eq!(g[0].1, BigRational::from_integer(10.into()));
        assert_eq!(g[4].1, BigRational::from_integer(20.into()));
    }
}
