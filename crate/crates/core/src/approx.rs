//! The approximation engine: `u = a theta^e`, nearest integers to
//! `a theta^j`, window selection, the integer recurrence, and exact
//! reconstruction of the Binet coefficient `alpha_1` in `Q(theta)`.

use std::ops::Range;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebraic::{
    is_pisot, AlgebraicError, Algebraic, Dyadic, IntPolynomial, NumberField, NumberFieldElement, RealBall,
    PRECISION_CAP,
};
use crate::fourier::Argument;
use crate::heights::{weil_height, HeightError, HeightValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("u must be at least 1")]
    UBelowOne,
    #[error("u is within its enclosure of a power of theta")]
    UndecidableBoundary,
    #[error("theta must exceed 1")]
    ThetaNotAboveOne,
    #[error("theta is not a Pisot number")]
    NotPisot,
    #[error("precision cap {cap} reached with a residual straddling +-1/2")]
    PrecisionExhausted { cap: u32 },
    #[error("no block meets the threshold with small residuals")]
    NoAdmissibleWindow,
    #[error("input too short: {0}")]
    InputTooShort(String),
    #[error("trace check failed at index {0}")]
    TraceMismatch(i64),
    #[error("recurrence fails at index {0} despite small residuals")]
    RecurrenceFailed(i64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
    #[error(transparent)]
    Height(#[from] HeightError),
}

impl ApproxError {
    pub fn code(&self) -> &'static str {
        match self {
            ApproxError::UBelowOne => "UBelowOne",
            ApproxError::UndecidableBoundary => "UndecidableBoundary",
            ApproxError::ThetaNotAboveOne => "ThetaNotAboveOne",
            ApproxError::NotPisot => "NotPisot",
            ApproxError::PrecisionExhausted { .. } => "PrecisionExhausted",
            ApproxError::NoAdmissibleWindow => "NoAdmissibleWindow",
            ApproxError::InputTooShort(_) => "InputTooShort",
            ApproxError::TraceMismatch(_) => "TraceMismatch",
            ApproxError::RecurrenceFailed(_) => "RecurrenceFailed",
            ApproxError::InvalidParameter(_) => "InvalidParameter",
            ApproxError::Algebraic(e) => e.code(),
            ApproxError::Height(e) => e.code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, ApproxError>;

/// `u = a theta^e` with `1 <= a < theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub a: Argument,
    pub e: u64,
    pub theta: NumberField,
}

fn theta_power(theta: &NumberField, e: u64) -> Algebraic {
    Algebraic::from(theta.theta().pow(e as i64).expect("nonnegative power"))
}

fn cmp_exact(x: &Algebraic, y: &Algebraic) -> std::cmp::Ordering {
    match (x, y) {
        (Algebraic::Rational(a), Algebraic::Rational(b)) => a.cmp(b),
        _ => {
            let f = Algebraic::common_field(x, y).expect("same field").expect("a field operand");
            x.in_field(&f).unwrap().cmp_real(&y.in_field(&f).unwrap())
        }
    }
}

pub fn decompose(u: &Argument, theta: &NumberField) -> Result<Decomposition> {
    decompose_at(u, theta, 128)
}

pub fn decompose_at(u: &Argument, theta: &NumberField, prec: u32) -> Result<Decomposition> {
    let t = theta.theta();
    if t.cmp_rational(&BigRational::one()).is_le() {
        return Err(ApproxError::ThetaNotAboveOne);
    }
    let tb = t.embed_real(prec);
    let ub = u.to_ball(prec);
    match u {
        Argument::Exact(x) => {
            let one = Algebraic::int(1);
            if cmp_exact(x, &one).is_lt() {
                return Err(ApproxError::UBelowOne);
            }
            if Algebraic::common_field(x, &Algebraic::Field(t.clone())).is_err() {
                return Err(ApproxError::Algebraic(AlgebraicError::FieldMismatch));
            }
            let est = ub.log().unwrap().div(&tb.log().unwrap()).unwrap().mid_f64().floor().max(0.0) as u64;
            let mut e = est;
            while e > 0 && cmp_exact(&theta_power(theta, e), x).is_gt() {
                e -= 1;
            }
            while cmp_exact(&theta_power(theta, e + 1), x).is_le() {
                e += 1;
            }
            let a = x.mul(&theta_power(theta, e).inverse()?)?;
            Ok(Decomposition { a: Argument::Exact(a), e, theta: theta.clone() })
        }
        Argument::Ball(b) => {
            let one = RealBall::one(prec);
            match b.certified_cmp(&one) {
                Some(std::cmp::Ordering::Less) => return Err(ApproxError::UBelowOne),
                None => return Err(ApproxError::UndecidableBoundary),
                _ => {}
            }
            let est = b.log().unwrap().div(&tb.log().unwrap()).unwrap();
            let e = est.mid_f64().floor().max(0.0) as u64;
            let pe = tb.powi(e as i64).unwrap();
            let a = b.div(&pe).unwrap();
            let lower = a.certified_cmp(&one);
            let upper = a.certified_cmp(&tb);
            if !matches!(lower, Some(o) if o.is_ge()) || upper != Some(std::cmp::Ordering::Less) {
                return Err(ApproxError::UndecidableBoundary);
            }
            Ok(Decomposition { a: Argument::Ball(a), e, theta: theta.clone() })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearestIntegerRow {
    pub j: u64,
    pub a_j: BigInt,
    /// `a theta^j - A_j`
    pub eps: RealBall,
    /// The value was exactly a half-integer; `A_j` is the even neighbour.
    pub tie: bool,
}

/// Nearest integer with round-half-to-even; the flag marks exact ties.
pub fn round_half_even(r: &BigRational) -> (BigInt, bool) {
    let two = BigInt::from(2);
    let doubled = r * BigRational::from_integer(two.clone());
    if doubled.is_integer() && doubled.to_integer().is_odd() {
        let lo = r.floor().to_integer();
        let k = if lo.is_even() { lo } else { lo + 1 };
        return (k, true);
    }
    ((r + BigRational::new(1.into(), two)).floor().to_integer(), false)
}

pub fn nearest_integer_sequence(a: &Argument, theta: &NumberField, js: Range<u64>) -> Result<Vec<NearestIntegerRow>> {
    nearest_integer_sequence_at(a, theta, js, 128)
}

pub fn nearest_integer_sequence_at(
    a: &Argument,
    theta: &NumberField,
    js: Range<u64>,
    prec: u32,
) -> Result<Vec<NearestIntegerRow>> {
    if js.is_empty() {
        return Err(ApproxError::InputTooShort("empty index range".into()));
    }
    let half = Dyadic::pow2(-1);
    match a {
        Argument::Exact(x) => {
            let t = Algebraic::Field(theta.theta()).normalized();
            let mut y = x.mul(&t.pow(js.start as i64)?)?;
            let mut rows = Vec::with_capacity(js.clone().count());
            for j in js {
                rows.push(nearest_row_exact(j, &y, prec, &half)?);
                y = y.mul(&t)?;
            }
            Ok(rows)
        }
        Argument::Ball(b) => {
            let tb = theta.theta_interval(prec + 64);
            let mut y = b.mul(&tb.powi(js.start as i64).unwrap());
            let mut rows = Vec::new();
            for j in js {
                let (k, _) = y.mid().round_half_even();
                let eps = y.sub(&RealBall::from_bigint(&k, prec));
                if eps.abs().hi() >= half {
                    return Err(ApproxError::PrecisionExhausted { cap: prec });
                }
                rows.push(NearestIntegerRow { j, a_j: k, eps, tie: false });
                y = y.mul(&tb);
            }
            Ok(rows)
        }
    }
}

fn nearest_row_exact(j: u64, y: &Algebraic, prec: u32, half: &Dyadic) -> Result<NearestIntegerRow> {
    if let Some(r) = y.as_rational() {
        let (k, tie) = round_half_even(&r);
        let eps = RealBall::from_rational(&(r - BigRational::from_integer(k.clone())), prec);
        return Ok(NearestIntegerRow { j, a_j: k, eps, tie });
    }
    let x = match y {
        Algebraic::Field(x) => x,
        Algebraic::Rational(_) => unreachable!(),
    };
    let mut p = prec;
    loop {
        let (k, _) = x.embed_real(p).mid().round_half_even();
        let shift = NumberFieldElement::from_rational(x.field(), BigRational::from_integer(k.clone()));
        let eps = x.sub(&shift).embed_real(p);
        if eps.abs().hi() < *half {
            return Ok(NearestIntegerRow { j, a_j: k, eps: eps.with_prec(prec), tie: false });
        }
        if p >= PRECISION_CAP {
            return Err(ApproxError::PrecisionExhausted { cap: PRECISION_CAP });
        }
        p = (p * 2).min(PRECISION_CAP);
    }
}

/// How `k` and `ell` are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowPolicy {
    /// The block search: requires `min(e1, e2) >= N^C2`.
    Strict,
    /// `k = max(1, floor(e / N^2))` without the block search, for inputs too
    /// short to satisfy the block hypothesis; results are measurements only.
    Measure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineParams {
    pub n: u64,
    pub delta: BigRational,
    pub c2: u32,
    pub prec: u32,
    pub policy: WindowPolicy,
}

impl Default for EngineParams {
    fn default() -> Self {
        EngineParams { n: 3, delta: BigRational::new(1.into(), 100.into()), c2: 4, prec: 128, policy: WindowPolicy::Strict }
    }
}

impl EngineParams {
    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(ApproxError::InvalidParameter("N must be at least 3".into()));
        }
        if self.c2 < 2 {
            return Err(ApproxError::InvalidParameter("C2 must be at least 2".into()));
        }
        if !self.delta.is_positive() || self.delta > BigRational::one() {
            return Err(ApproxError::InvalidParameter("delta must lie in (0, 1]".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowSelection {
    pub k: u64,
    pub ell: u64,
    /// Selected block index `i` (0 under the measuring policy).
    pub level_index_i: u32,
    pub c1: BigInt,
    /// `1 / C1`
    pub c1_threshold: BigRational,
    pub delta: BigRational,
    /// `P_i Q_i` for the selected block.
    pub block_product: Option<RealBall>,
    /// `delta^(1/(C2-1))`
    pub block_threshold: Option<RealBall>,
    /// Conditions (a) through (d); (e) is reported through `c3_ratio`.
    pub conditions: [bool; 4],
    /// `k / ell`, the measured stand-in for `C3`.
    pub c3_ratio: BigRational,
    pub policy: WindowPolicy,
}

impl WindowSelection {
    /// Upper end (exclusive) of the window on the `theta_1` side.
    pub fn window_end(&self, k: u64, n: u64, d: usize) -> u64 {
        (n * k).max(k + d as u64)
    }

    pub fn certified(&self) -> bool {
        self.policy == WindowPolicy::Strict && self.conditions.iter().all(|&c| c)
    }
}

/// `C1 = max(l1(g1), l1(g2))`
pub fn c1_constant(g1: &IntPolynomial, g2: &IntPolynomial) -> BigInt {
    g1.l1_norm().max(g2.l1_norm())
}

fn lookup(rows: &[NearestIntegerRow], j: u64) -> Option<&NearestIntegerRow> {
    let first = rows.first()?.j;
    rows.get(j.checked_sub(first)? as usize).filter(|r| r.j == j)
}

fn residuals_below(rows: &[NearestIntegerRow], js: Range<u64>, bound: &RealBall) -> Option<bool> {
    let mut ok = true;
    for j in js {
        let r = lookup(rows, j)?;
        ok &= r.eps.abs().hi() < bound.lo();
    }
    Some(ok)
}

fn block_product(rows: &[NearestIntegerRow], js: Range<u64>, prec: u32) -> Option<RealBall> {
    let mut p = RealBall::one(prec);
    for j in js {
        p = p.mul(&lookup(rows, j)?.eps.cos_pi().abs());
    }
    Some(p)
}

#[allow(clippy::too_many_arguments)]
pub fn select_window(
    rows1: &[NearestIntegerRow],
    rows2: &[NearestIntegerRow],
    n: u64,
    delta: &BigRational,
    c1: &BigInt,
    c2: u32,
    e1: u64,
    e2: u64,
) -> Result<WindowSelection> {
    let nc2 = n.checked_pow(c2).ok_or_else(|| ApproxError::InputTooShort("N^C2 overflows".into()))?;
    if e1.min(e2) < nc2 {
        return Err(ApproxError::InputTooShort(format!("min(e1, e2) = {} < N^C2 = {}", e1.min(e2), nc2)));
    }
    let prec = rows1.first().map_or(128, |r| r.eps.prec()).max(64);
    let threshold = RealBall::from_rational(delta, prec)
        .pow_rational(&BigRational::new(1.into(), BigInt::from(c2 - 1)))
        .expect("delta > 0");
    let c1_threshold = BigRational::new(BigInt::one(), c1.clone());
    let c1_ball = RealBall::from_rational(&c1_threshold, prec);
    let level = |e: u64, i: u32| e / n.pow(i);
    let missing = || ApproxError::InputTooShort("residual rows do not cover the blocks".into());
    for i in 2..=c2 {
        let (k, ell) = (level(e1, i), level(e2, i));
        let (k_prev, ell_prev) = (level(e1, i - 1), level(e2, i - 1));
        let p = block_product(rows1, k..k_prev, prec).ok_or_else(missing)?;
        let q = block_product(rows2, ell..ell_prev, prec).ok_or_else(missing)?;
        let pq = p.mul(&q);
        if pq.lo() < threshold.hi() {
            continue;
        }
        // residual smallness is checked directly, not inferred from the cosines
        let c = residuals_below(rows1, k..n * k, &c1_ball).ok_or_else(missing)?;
        let d = residuals_below(rows2, ell..n * ell, &c1_ball).ok_or_else(missing)?;
        if !(c && d) || k == 0 || ell == 0 {
            continue;
        }
        let a = level(e1, c2) <= k && k * n * n <= e1;
        let b = level(e2, c2) <= ell && ell * n * n <= e2;
        return Ok(WindowSelection {
            k,
            ell,
            level_index_i: i,
            c1: c1.clone(),
            c1_threshold,
            delta: delta.clone(),
            block_product: Some(pq),
            block_threshold: Some(threshold),
            conditions: [a, b, c, d],
            c3_ratio: BigRational::new(k.into(), ell.into()),
            policy: WindowPolicy::Strict,
        });
    }
    Err(ApproxError::NoAdmissibleWindow)
}

/// The measuring policy's choice of `k`, `ell` and its residual checks.
pub fn measure_window(
    rows1: &[NearestIntegerRow],
    rows2: &[NearestIntegerRow],
    n: u64,
    delta: &BigRational,
    c1: &BigInt,
    e1: u64,
    e2: u64,
) -> WindowSelection {
    let k = (e1 / (n * n)).max(1);
    let ell = (e2 / (n * n)).max(1);
    let prec = rows1.first().map_or(128, |r| r.eps.prec()).max(64);
    let c1_threshold = BigRational::new(BigInt::one(), c1.clone());
    let c1_ball = RealBall::from_rational(&c1_threshold, prec);
    let c = residuals_below(rows1, k..n * k, &c1_ball).unwrap_or(false);
    let d = residuals_below(rows2, ell..n * ell, &c1_ball).unwrap_or(false);
    WindowSelection {
        k,
        ell,
        level_index_i: 0,
        c1: c1.clone(),
        c1_threshold,
        delta: delta.clone(),
        block_product: None,
        block_threshold: None,
        conditions: [k * n * n <= e1, ell * n * n <= e2, c, d],
        c3_ratio: BigRational::new(k.into(), ell.into()),
        policy: WindowPolicy::Measure,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub holds: bool,
    /// Index (into the input) of the top term of the first failing relation.
    pub first_failure: Option<usize>,
}

/// `A_{j+d} + c_{d-1} A_{j+d-1} + ... + c_0 A_j = 0` for every admissible `j`.
pub fn verify_recurrence(a: &[BigInt], g: &IntPolynomial) -> RecurrenceCheck {
    let d = g.degree();
    let c = g.coeffs();
    if a.len() <= d {
        return RecurrenceCheck { holds: true, first_failure: None };
    }
    for j in 0..a.len() - d {
        let s: BigInt = (0..=d).map(|i| &c[i] * &a[j + i]).sum();
        if !s.is_zero() {
            return RecurrenceCheck { holds: false, first_failure: Some(j + d) };
        }
    }
    RecurrenceCheck { holds: true, first_failure: None }
}

/// Coefficients of `g(x) / ((x - theta) g'(theta))` in `Q(theta)`: the
/// Lagrange basis polynomial vanishing at every other conjugate.
pub fn lagrange_row(field: &NumberField) -> Result<Vec<NumberFieldElement>> {
    let g = field.poly();
    let d = g.degree();
    let t = field.theta();
    let lead = BigRational::from_integer(g.leading());
    // synthetic division of g by (x - theta)
    let mut q = vec![field.zero(); d];
    q[d - 1] = NumberFieldElement::from_rational(field, lead);
    for m in (1..d).rev() {
        let gm = NumberFieldElement::from_rational(field, BigRational::from_integer(g.coeff(m)));
        q[m - 1] = gm.add(&t.mul(&q[m]));
    }
    let dg = NumberFieldElement::from_qpoly(field, &g.derivative().to_q());
    let inv = dg.inverse()?;
    Ok(q.iter().map(|c| c.mul(&inv)).collect())
}

/// `alpha_1 = theta^{-k} sum_j c_j A_{k+j}` from the first `d` entries,
/// checked by `Tr(alpha_1 theta^j) = A_j` over the whole window.
pub fn reconstruct_alpha(window: &[BigInt], field: &NumberField, k: u64) -> Result<NumberFieldElement> {
    if !field.irreducibility().is_irreducible() {
        return Err(AlgebraicError::Reducible.into());
    }
    let d = field.degree();
    if window.len() < d {
        return Err(ApproxError::InputTooShort(format!("window has {} entries, degree is {}", window.len(), d)));
    }
    let row = lagrange_row(field)?;
    let mut beta = field.zero();
    for (c, a) in row.iter().zip(window) {
        beta = beta.add(&c.scale(&BigRational::from_integer(a.clone())));
    }
    let alpha = beta.mul(&field.theta().pow(-(k as i64))?);
    check_traces(&alpha, window, k)?;
    Ok(alpha)
}

/// `Tr(alpha theta^j) = A_j` for `j = k, k+1, ...`.
pub fn check_traces(alpha: &NumberFieldElement, a: &[BigInt], k: u64) -> Result<()> {
    let t = alpha.field().theta();
    let mut x = alpha.mul(&t.pow(k as i64)?);
    for (i, aj) in a.iter().enumerate() {
        if x.trace() != BigRational::from_integer(aj.clone()) {
            return Err(ApproxError::TraceMismatch(k as i64 + i as i64));
        }
        x = x.mul(&t);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideReport {
    pub start: u64,
    pub rows: Vec<NearestIntegerRow>,
    pub recurrence: RecurrenceCheck,
    pub alpha: NumberFieldElement,
    pub err: RealBall,
    pub height: HeightValue,
    /// `|a - alpha| theta^{(N-2)k}`
    pub c5_witness: RealBall,
    /// `H(alpha) / theta^{2k}`
    pub c4_witness: RealBall,
    /// `1/2 < alpha < theta + 1/2`, decided exactly.
    pub in_range: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationCertificate {
    pub k: u64,
    pub ell: u64,
    pub alpha: NumberFieldElement,
    pub beta: NumberFieldElement,
    pub err_alpha: RealBall,
    pub err_beta: RealBall,
    pub h_alpha: HeightValue,
    pub h_beta: HeightValue,
    pub n: u64,
    pub window: WindowSelection,
    pub side1: SideReport,
    pub side2: SideReport,
}

impl ApproximationCertificate {
    /// Strict window, every condition met, recurrence on both sides.
    pub fn certified(&self) -> bool {
        self.window.certified() && self.side1.recurrence.holds && self.side2.recurrence.holds
    }
}

fn run_side(d: &Decomposition, k: u64, n: u64, strict: bool, prec: u32) -> Result<SideReport> {
    let field = &d.theta;
    let deg = field.degree();
    let end = (n * k).max(k + deg as u64);
    let rows = nearest_integer_sequence_at(&d.a, field, k..end, prec)?;
    let ints: Vec<BigInt> = rows.iter().map(|r| r.a_j.clone()).collect();
    let recurrence = verify_recurrence(&ints, field.poly());
    if strict && !recurrence.holds {
        return Err(ApproxError::RecurrenceFailed(k as i64 + recurrence.first_failure.unwrap() as i64));
    }
    let seed = if recurrence.holds { &ints[..] } else { &ints[..deg] };
    let alpha = reconstruct_alpha(seed, field, k)?;
    let err = match &d.a {
        Argument::Exact(a) => {
            let diff = match a {
                Algebraic::Rational(r) => NumberFieldElement::from_rational(field, r.clone()).sub(&alpha),
                Algebraic::Field(x) => x.sub(&alpha),
            };
            diff.embed_real(prec).abs()
        }
        Argument::Ball(b) => b.sub(&alpha.embed_real(prec)).abs(),
    };
    let height = weil_height(&Algebraic::from(alpha.clone()), prec)?;
    let tb = field.theta_interval(prec);
    let c5_witness = err.mul(&tb.powi(((n - 2) * k) as i64).unwrap());
    let c4_witness = height.multiplicative.div(&tb.powi((2 * k) as i64).unwrap()).unwrap();
    let half = BigRational::new(1.into(), 2.into());
    let upper = field.theta().add(&NumberFieldElement::from_rational(field, half.clone()));
    let in_range = alpha.cmp_rational(&half).is_gt() && alpha.cmp_real(&upper).is_lt();
    Ok(SideReport { start: k, rows, recurrence, alpha, err, height, c5_witness, c4_witness, in_range })
}

fn residual_rows(d: &Decomposition, js: Range<u64>, prec: u32) -> Result<Vec<NearestIntegerRow>> {
    nearest_integer_sequence_at(&d.a, &d.theta, js, prec)
}

pub fn certify(d1: &Decomposition, d2: &Decomposition, params: &EngineParams) -> Result<ApproximationCertificate> {
    params.validate()?;
    for d in [d1, d2] {
        if !is_pisot(d.theta.poly())?.is_pisot {
            return Err(ApproxError::NotPisot);
        }
    }
    let n = params.n;
    let c1 = c1_constant(d1.theta.poly(), d2.theta.poly());
    let prec = params.prec;
    let window = match params.policy {
        WindowPolicy::Strict => {
            let nc2 = n.checked_pow(params.c2).unwrap_or(u64::MAX);
            if d1.e.min(d2.e) < nc2 {
                return Err(ApproxError::InputTooShort(format!(
                    "min(e1, e2) = {} < N^C2 = {}",
                    d1.e.min(d2.e),
                    nc2
                )));
            }
            let span = |e: u64| e / n.pow(params.c2)..e / n;
            let (r1, r2) = rayon::join(|| residual_rows(d1, span(d1.e), prec), || residual_rows(d2, span(d2.e), prec));
            select_window(&r1?, &r2?, n, &params.delta, &c1, params.c2, d1.e, d2.e)?
        }
        WindowPolicy::Measure => {
            let span = |e: u64| {
                let k = (e / (n * n)).max(1);
                k..n * k
            };
            let (r1, r2) = rayon::join(|| residual_rows(d1, span(d1.e), prec), || residual_rows(d2, span(d2.e), prec));
            measure_window(&r1?, &r2?, n, &params.delta, &c1, d1.e, d2.e)
        }
    };
    let strict = params.policy == WindowPolicy::Strict;
    let (s1, s2) = rayon::join(|| run_side(d1, window.k, n, strict, prec), || run_side(d2, window.ell, n, strict, prec));
    let (side1, side2) = (s1?, s2?);
    Ok(ApproximationCertificate {
        k: window.k,
        ell: window.ell,
        alpha: side1.alpha.clone(),
        beta: side2.alpha.clone(),
        err_alpha: side1.err.clone(),
        err_beta: side2.err.clone(),
        h_alpha: side1.height.clone(),
        h_beta: side2.height.clone(),
        n,
        window,
        side1,
        side2,
    })
}

/// `u` given as `a * theta^e` exactly.
pub fn symbolic_power(theta: &NumberField, a: &Algebraic, e: u64) -> Result<Algebraic> {
    Ok(a.mul(&theta_power(theta, e))?)
}
