//! Main terms `f(u) = alpha u^r + O(u^{r - eps})`, the approximations `t_n`
//! and the Roth/Ridout product over the places dividing `theta_1 theta_2`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebraic::{AlgebraicError, Algebraic, Dyadic, IntPolynomial, NumberField, QPoly, RealBall};
use crate::approx::{certify, decompose_at, ApproxError, EngineParams, WindowPolicy};
use crate::arith;
use crate::fourier::Argument;
use crate::heights::{mult_dependence_search, rational_height, rational_place_abs, weil_height, HeightError, HeightValue, Place};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RothError {
    #[error("leading coefficient must be positive")]
    NonPositiveLeading,
    #[error("value below the validity threshold {0}")]
    BelowValidityThreshold(String),
    #[error("D/c must be a positive integer")]
    NonIntegralExponents,
    #[error("general number-field places are out of scope")]
    NonRationalMode,
    #[error("lambdas are multiplicatively dependent: exponents ({0}, {1})")]
    DependentLambdas(i64, i64),
    #[error("1/lambda is not a Pisot number")]
    NotPisot,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Approx(#[from] ApproxError),
    #[error(transparent)]
    Height(#[from] HeightError),
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
}

impl RothError {
    pub fn code(&self) -> &'static str {
        match self {
            RothError::NonPositiveLeading => "NonPositiveLeading",
            RothError::BelowValidityThreshold(_) => "BelowValidityThreshold",
            RothError::NonIntegralExponents => "NonIntegralExponents",
            RothError::NonRationalMode => "NonRationalMode",
            RothError::DependentLambdas(..) => "DependentLambdas",
            RothError::NotPisot => "NotPisot",
            RothError::Unsupported(_) => "Unsupported",
            RothError::Approx(e) => e.code(),
            RothError::Height(e) => e.code(),
            RothError::Algebraic(e) => e.code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, RothError>;

/// `f(u) = P(u)^{1/q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootForm {
    pub p: QPoly,
    pub q: u32,
}

impl RootForm {
    pub fn identity() -> Self {
        RootForm { p: QPoly::x(), q: 1 }
    }

    pub fn is_identity(&self) -> bool {
        self.q == 1 && self.p == QPoly::x()
    }

    /// Exact when `P(u)` is a perfect `q`-th power.
    pub fn eval_exact(&self, u: &BigRational) -> Option<BigRational> {
        rational_root(&self.p.eval(u), self.q)
    }

    pub fn eval_ball(&self, u: &RealBall) -> Option<RealBall> {
        let prec = u.prec();
        let mut acc = RealBall::zero(prec);
        for c in self.p.coeffs().iter().rev() {
            acc = acc.mul(u).add(&RealBall::from_rational(c, prec));
        }
        if self.q == 1 {
            Some(acc)
        } else {
            acc.root(self.q)
        }
    }

    pub fn eval(&self, u: &BigRational, prec: u32) -> Argument {
        match self.eval_exact(u) {
            Some(v) => Argument::rational(v),
            None => Argument::Ball(self.eval_ball(&RealBall::from_rational(u, prec + 32)).expect("P(u) > 0").with_prec(prec)),
        }
    }
}

impl fmt::Display for RootForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "identity");
        }
        let coeffs: Vec<String> = self.p.coeffs().iter().map(|c| c.to_string()).collect();
        write!(f, "root:{}:[{}]", self.q, coeffs.join(","))
    }
}

/// `r^{1/q}` when it is rational.
pub fn rational_root(r: &BigRational, q: u32) -> Option<BigRational> {
    if q == 1 {
        return Some(r.clone());
    }
    if r.is_negative() && q.is_multiple_of(2) {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let m = n.abs().nth_root(q);
        (num_traits::pow(m.clone(), q as usize) == n.abs()).then(|| if n.is_negative() { -m } else { m })
    };
    Some(BigRational::new(root(r.numer())?, root(r.denom())?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainTermDescriptor {
    pub r: BigRational,
    /// `alpha = lead^{1/q}`
    pub alpha_lead: BigRational,
    pub alpha_exact: Option<BigRational>,
    /// A defining polynomial for `alpha`: `den x^q - num`, primitive.
    pub alpha_poly: IntPolynomial,
    pub epsilon: BigRational,
    pub form: RootForm,
}

impl MainTermDescriptor {
    pub fn alpha_ball(&self, prec: u32) -> RealBall {
        match &self.alpha_exact {
            Some(a) => RealBall::from_rational(a, prec),
            None => RealBall::from_rational(&self.alpha_lead, prec + 16).root(self.form.q).unwrap().with_prec(prec),
        }
    }

    /// Beyond this `u`, `P` is positive and increasing (Cauchy bounds on `P`, `P'`).
    pub fn validity_threshold(&self) -> BigRational {
        let bound = |p: &QPoly| -> BigRational {
            if p.degree() == 0 {
                return BigRational::zero();
            }
            let lead = p.leading().abs();
            let m = p.coeffs()[..p.degree()].iter().map(|c| c.abs() / &lead).max().unwrap_or_else(BigRational::zero);
            BigRational::one() + m
        };
        bound(&self.form.p).max(bound(&self.form.p.derivative()))
    }
}

pub const DEFAULT_EPSILON: (i64, i64) = (1, 1);

pub fn main_term_of(form: &RootForm) -> Result<MainTermDescriptor> {
    let p = &form.p;
    let lead = p.leading();
    if p.is_zero() || !lead.is_positive() || form.q == 0 {
        return Err(RothError::NonPositiveLeading);
    }
    let deg = p.degree();
    let q = BigInt::from(form.q);
    let r = BigRational::new(BigInt::from(deg), q.clone());
    let next = (0..deg).rev().find(|&i| !p.coeff(i).is_zero());
    let epsilon = match next {
        Some(i) => BigRational::new(BigInt::from(deg - i), q),
        None => BigRational::new(DEFAULT_EPSILON.0.into(), DEFAULT_EPSILON.1.into()),
    };
    let mut alpha_coeffs = vec![BigInt::zero(); form.q as usize + 1];
    alpha_coeffs[0] = -lead.numer().clone();
    alpha_coeffs[form.q as usize] = lead.denom().clone();
    Ok(MainTermDescriptor {
        r,
        alpha_exact: rational_root(&lead, form.q),
        alpha_lead: lead,
        alpha_poly: IntPolynomial::new(alpha_coeffs).primitive(),
        epsilon,
        form: form.clone(),
    })
}

/// Certified `u` with `f(u) = w`, by exact-sign bisection on `P(u) - w^q`.
pub fn invert_main_term(d: &MainTermDescriptor, w: &BigRational, prec: u32) -> Result<RealBall> {
    let u0 = d.validity_threshold();
    let target = num_traits::pow(w.clone(), d.form.q as usize);
    let g = |u: &BigRational| d.form.p.eval(u) - &target;
    if !w.is_positive() || g(&u0).is_positive() {
        return Err(RothError::BelowValidityThreshold(u0.to_string()));
    }
    // the inverted main term (w / alpha)^{1/r} seeds the bracket
    let guess = RealBall::from_rational(w, 64)
        .div(&d.alpha_ball(64))
        .and_then(|x| x.pow_rational(&d.r.recip()))
        .map(|x| x.mid().to_rational())
        .unwrap_or_else(|| u0.clone());
    let mut lo = u0.clone();
    let mut hi = guess.max(u0.clone()) + BigRational::one();
    while !g(&hi).is_positive() {
        lo = hi.clone();
        hi = &hi * BigInt::from(2);
    }
    if g(&hi).is_zero() {
        return Ok(RealBall::from_rational(&hi, prec));
    }
    let tol = BigRational::new(BigInt::one(), BigInt::one() << (prec as usize)) * (&hi).max(&BigRational::one());
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / BigInt::from(2);
        let s = g(&mid);
        if s.is_zero() {
            return Ok(RealBall::from_rational(&mid, prec));
        }
        if s.is_positive() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let lo_d = Dyadic::from_rational(&lo, prec + 8, crate::algebraic::Round::Down);
    let hi_d = Dyadic::from_rational(&hi, prec + 8, crate::algebraic::Round::Up);
    Ok(RealBall::hull(&lo_d, &hi_d, prec))
}

/// `D`: smallest positive integer with `D / c_1`, `D / c_2` integral.
pub fn common_denominator(c1: &BigRational, c2: &BigRational) -> BigInt {
    c1.recip().denom().lcm(c2.recip().denom())
}

fn integral_exponent(d: &BigInt, c: &BigRational) -> Result<u64> {
    let x = BigRational::from_integer(d.clone()) / c;
    if !x.is_integer() || !x.is_positive() {
        return Err(RothError::NonIntegralExponents);
    }
    x.to_integer().to_u64().ok_or(RothError::NonIntegralExponents)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TValue {
    pub t: Algebraic,
    pub height: HeightValue,
}

/// `t = alpha^{D/c1} theta1^{e1 D/c1} / (beta^{D/c2} theta2^{e2 D/c2})`.
#[allow(clippy::too_many_arguments)]
pub fn build_t(
    alpha: &Algebraic,
    beta: &Algebraic,
    e1: u64,
    e2: u64,
    d: &BigInt,
    c1: &BigRational,
    c2: &BigRational,
    theta1: &NumberField,
    theta2: &NumberField,
    prec: u32,
) -> Result<TValue> {
    let p1 = integral_exponent(d, c1)? as i64;
    let p2 = integral_exponent(d, c2)? as i64;
    let t1 = Algebraic::from(theta1.theta());
    let t2 = Algebraic::from(theta2.theta());
    let num = alpha.pow(p1)?.mul(&t1.pow(e1 as i64 * p1)?)?;
    let den = beta.pow(p2)?.mul(&t2.pow(e2 as i64 * p2)?)?;
    let t = num.mul(&den.inverse()?).map_err(|_| RothError::Unsupported("t needs a compositum of Q(theta1) and Q(theta2)".into()))?;
    let height = weil_height(&t, prec)?;
    Ok(TValue { t, height })
}

/// `v` in `S` with the value `t_v` assigned to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assignment {
    Target,
    Zero,
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SProduct {
    Exact(BigRational),
    Ball(RealBall),
}

impl SProduct {
    pub fn to_ball(&self, prec: u32) -> RealBall {
        match self {
            SProduct::Exact(r) => RealBall::from_rational(r, prec),
            SProduct::Ball(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SProduct::Exact(r) if r.is_zero())
    }
}

impl fmt::Display for SProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SProduct::Exact(r) => write!(f, "{r}"),
            SProduct::Ball(b) => write!(f, "{b:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kappa {
    Finite(RealBall),
    /// `t` hits the target exactly.
    PlusInfinity,
    /// `H(t) = 1`, so `log H(t) = 0`.
    Undefined,
}

impl Kappa {
    pub fn finite(&self) -> Option<&RealBall> {
        match self {
            Kappa::Finite(b) => Some(b),
            _ => None,
        }
    }
}

/// A real algebraic target; exact when rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    pub exact: Option<BigRational>,
    pub ball: RealBall,
}

impl Target {
    pub fn rational(r: BigRational, prec: u32) -> Self {
        Target { ball: RealBall::from_rational(&r, prec), exact: Some(r) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RothQuantity {
    pub factors: Vec<(Place, Assignment, SProduct)>,
    pub s_product: SProduct,
    pub kappa: Kappa,
}

impl RothQuantity {
    /// e.g. `inf:target 5:zero 7:inf`
    pub fn partition(&self) -> String {
        self.factors
            .iter()
            .map(|(v, a, _)| {
                let a = match a {
                    Assignment::Target => "target",
                    Assignment::Zero => "zero",
                    Assignment::Infinity => "inf",
                };
                format!("{v}:{a}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `prod_{v in S} min(1, |t - t_v|_v)` with `S = {inf} u {p | theta1 theta2}`.
pub fn roth_quantity(t: &Algebraic, target: &Target, theta1: &BigInt, theta2: &BigInt, prec: u32) -> Result<RothQuantity> {
    let t = t.as_rational().ok_or(RothError::NonRationalMode)?;
    if t.is_zero() {
        return Err(HeightError::ZeroInput.into());
    }
    let one = BigRational::one();
    let mut factors = Vec::new();
    let arch = match &target.exact {
        Some(g) => SProduct::Exact((&t - g).abs().min(one.clone())),
        None => {
            let d = RealBall::from_rational(&t, prec).sub(&target.ball).abs();
            SProduct::Ball(d.min(&RealBall::one(prec)))
        }
    };
    factors.push((Place::Infinity, Assignment::Target, arch));
    let mut primes: Vec<BigInt> = arith::factor(&(theta1 * theta2)).into_iter().map(|(p, _)| p).collect();
    primes.sort();
    for p in primes {
        let place = Place::Prime(p);
        let abs = rational_place_abs(&t, &place)?;
        let (assignment, value) = if abs <= one { (Assignment::Zero, abs) } else { (Assignment::Infinity, abs.recip()) };
        factors.push((place, assignment, SProduct::Exact(value)));
    }
    let exact: Option<BigRational> = factors.iter().try_fold(one.clone(), |acc, (_, _, f)| match f {
        SProduct::Exact(r) => Some(acc * r),
        SProduct::Ball(_) => None,
    });
    let s_product = match exact {
        Some(r) => SProduct::Exact(r),
        None => {
            let mut b = RealBall::one(prec);
            for (_, _, f) in &factors {
                b = b.mul(&f.to_ball(prec));
            }
            SProduct::Ball(b)
        }
    };
    let h = rational_height(&t);
    let kappa = kappa_of(&s_product, &HeightValue {
        multiplicative: RealBall::from_bigint(&h, prec),
        logarithmic: RealBall::from_bigint(&h, prec).log().unwrap(),
        exact: Some(h.clone()),
    }, prec);
    Ok(RothQuantity { factors, s_product, kappa })
}

/// `kappa = -log(S) / log H(t)`
pub fn kappa_of(s: &SProduct, h: &HeightValue, prec: u32) -> Kappa {
    if s.is_zero() {
        return Kappa::PlusInfinity;
    }
    if h.exact.as_ref().is_some_and(|x| x.is_one()) || h.logarithmic.contains_zero() {
        return Kappa::Undefined;
    }
    match s.to_ball(prec).log() {
        Some(l) => Kappa::Finite(l.neg().div(&h.logarithmic).expect("log H > 0")),
        None => Kappa::PlusInfinity,
    }
}

/// `gamma1^{D/c1} / gamma2^{D/c2}` with `gamma^{D/c} = lead^{D/deg P}`.
pub fn roth_target(f1: &MainTermDescriptor, f2: &MainTermDescriptor, d: &BigInt, prec: u32) -> Target {
    let part = |f: &MainTermDescriptor| -> (Option<BigRational>, RealBall) {
        let deg = f.form.p.degree() as u32;
        let e = BigRational::new(d.clone(), BigInt::from(deg));
        let num = num_traits::pow(f.alpha_lead.clone(), e.numer().to_usize().unwrap());
        let exact = rational_root(&num, e.denom().to_u32().unwrap());
        let ball = match &exact {
            Some(x) => RealBall::from_rational(x, prec),
            None => RealBall::from_rational(&f.alpha_lead, prec + 16).pow_rational(&e).unwrap().with_prec(prec),
        };
        (exact, ball)
    };
    let (e1, b1) = part(f1);
    let (e2, b2) = part(f2);
    let exact = match (e1, e2) {
        (Some(a), Some(b)) => Some(a / b),
        _ => None,
    };
    let ball = match &exact {
        Some(x) => RealBall::from_rational(x, prec),
        None => b1.div(&b2).unwrap(),
    };
    Target { exact, ball }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Certified,
    /// Computed under the measuring window policy, or with a failed recurrence.
    Measured,
    Failed(String),
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowStatus::Certified => write!(f, "certified"),
            RowStatus::Measured => write!(f, "measured"),
            RowStatus::Failed(c) => write!(f, "failed:{c}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RothRow {
    pub n: u64,
    pub u: BigRational,
    pub e1: Option<u64>,
    pub e2: Option<u64>,
    pub k: Option<u64>,
    pub ell: Option<u64>,
    pub t: Option<Algebraic>,
    pub h_t: Option<HeightValue>,
    pub arch_error: Option<RealBall>,
    pub s_product: Option<SProduct>,
    pub kappa: Option<Kappa>,
    pub partition: String,
    pub status: RowStatus,
}

impl RothRow {
    fn failed(n: u64, u: BigRational, e: &RothError) -> Self {
        RothRow {
            n,
            u,
            e1: None,
            e2: None,
            k: None,
            ell: None,
            t: None,
            h_t: None,
            arch_error: None,
            s_product: None,
            kappa: None,
            partition: String::new(),
            status: RowStatus::Failed(e.code().to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReportInputs {
    pub lambda1: Algebraic,
    pub lambda2: Algebraic,
    pub f1: RootForm,
    pub f2: RootForm,
    /// `(n, u_n)`
    pub useq: Vec<(u64, BigRational)>,
    pub params: EngineParams,
    /// Rows before this index are exempt from the monotonicity check.
    pub burn_in: usize,
    pub dependence_bound: u32,
}

#[derive(Clone, Debug)]
pub struct ExponentReport {
    pub rows: Vec<RothRow>,
    /// First row (after burn-in) where `H(t_n)` decreased.
    pub monotone_violation: Option<u64>,
    /// `min log H(t_n) / (e1 + e2)` over completed rows.
    pub growth_constant: Option<RealBall>,
}

/// `theta = 1/lambda` as a field whose generator is `theta` itself.
pub fn theta_field(lambda: &Algebraic) -> Result<NumberField> {
    match lambda {
        Algebraic::Rational(r) => {
            if !r.numer().is_one() || r.denom() <= &BigInt::one() {
                return Err(RothError::NotPisot);
            }
            Ok(NumberField::rational_integer(r.denom().to_i64().ok_or(RothError::Unsupported("theta too large".into()))?)?)
        }
        Algebraic::Field(x) => {
            let f = x.field();
            if x.inverse()? != f.theta() {
                return Err(RothError::Unsupported("lambda must be 1/theta for the field generator theta".into()));
            }
            Ok(f.clone())
        }
    }
}

pub fn exponent_report(inputs: &ReportInputs) -> Result<ExponentReport> {
    let theta1 = theta_field(&inputs.lambda1)?;
    let theta2 = theta_field(&inputs.lambda2)?;
    for t in [&theta1, &theta2] {
        if !crate::algebraic::is_pisot(t.poly())?.is_pisot {
            return Err(RothError::NotPisot);
        }
    }
    if let Some(w) = mult_dependence_search(&inputs.lambda1, &inputs.lambda2, inputs.dependence_bound)? {
        return Err(RothError::DependentLambdas(w.exponents.0, w.exponents.1));
    }
    let m1 = main_term_of(&inputs.f1)?;
    let m2 = main_term_of(&inputs.f2)?;
    let d = common_denominator(&m1.r, &m2.r);
    let prec = inputs.params.prec;
    let target = roth_target(&m1, &m2, &d, prec);
    let ctx = RowContext { theta1: &theta1, theta2: &theta2, m1: &m1, m2: &m2, d: &d, target: &target, params: &inputs.params };
    let rows: Vec<RothRow> = inputs
        .useq
        .par_iter()
        .map(|(n, u)| ctx.row(*n, u).unwrap_or_else(|e| RothRow::failed(*n, u.clone(), &e)))
        .collect();
    let mut monotone_violation = None;
    let mut prev: Option<&HeightValue> = None;
    for row in rows.iter().skip(inputs.burn_in) {
        if let Some(h) = &row.h_t {
            if let Some(p) = prev {
                if h.multiplicative.certified_cmp(&p.multiplicative) == Some(std::cmp::Ordering::Less) {
                    monotone_violation.get_or_insert(row.n);
                }
            }
            prev = Some(h);
        }
    }
    let mut growth: Option<RealBall> = None;
    for row in &rows {
        if let (Some(h), Some(e1), Some(e2)) = (&row.h_t, row.e1, row.e2) {
            let c = h.logarithmic.div_int((e1 + e2) as i64);
            growth = Some(match growth {
                None => c,
                Some(g) => g.min(&c),
            });
        }
    }
    Ok(ExponentReport { rows, monotone_violation, growth_constant: growth })
}

struct RowContext<'a> {
    theta1: &'a NumberField,
    theta2: &'a NumberField,
    m1: &'a MainTermDescriptor,
    m2: &'a MainTermDescriptor,
    d: &'a BigInt,
    target: &'a Target,
    params: &'a EngineParams,
}

impl RowContext<'_> {
    fn row(&self, n: u64, u: &BigRational) -> Result<RothRow> {
        let prec = self.params.prec;
        let r_n = self.m1.form.eval(u, prec);
        let s_n = self.m2.form.eval(u, prec);
        let d1 = decompose_at(&r_n, self.theta1, prec)?;
        let d2 = decompose_at(&s_n, self.theta2, prec)?;
        // strict when the block hypothesis can hold, measuring otherwise
        let nc2 = self.params.n.checked_pow(self.params.c2).unwrap_or(u64::MAX);
        let mut params = self.params.clone();
        if d1.e.min(d2.e) < nc2 {
            params.policy = WindowPolicy::Measure;
        }
        let cert = certify(&d1, &d2, &params)?;
        let tv = build_t(
            &Algebraic::from(cert.alpha.clone()),
            &Algebraic::from(cert.beta.clone()),
            d1.e,
            d2.e,
            self.d,
            &self.m1.r,
            &self.m2.r,
            self.theta1,
            self.theta2,
            prec,
        )?;
        let arch_error = tv.t.to_ball(prec).sub(&self.target.ball).abs();
        let (s_product, kappa, partition) = match (self.theta1.as_integer(), self.theta2.as_integer()) {
            (Some(a), Some(b)) if tv.t.as_rational().is_some() => {
                let rq = roth_quantity(&tv.t, self.target, &a, &b, prec)?;
                let partition = rq.partition();
                (Some(rq.s_product), Some(rq.kappa), partition)
            }
            _ => (None, None, String::new()),
        };
        let status = if cert.certified() { RowStatus::Certified } else { RowStatus::Measured };
        Ok(RothRow {
            n,
            u: u.clone(),
            e1: Some(d1.e),
            e2: Some(d2.e),
            k: Some(cert.k),
            ell: Some(cert.ell),
            t: Some(tv.t),
            h_t: Some(tv.height),
            arch_error: Some(arch_error),
            s_product,
            kappa,
            partition,
            status,
        })
    }
}

/// `(n, base^n)` for `n` in the range.
pub fn power_sequence(base: &BigInt, range: std::ops::RangeInclusive<u64>) -> Vec<(u64, BigRational)> {
    range.map(|n| (n, BigRational::from_integer(num_traits::pow(base.clone(), n as usize)))).collect()
}
