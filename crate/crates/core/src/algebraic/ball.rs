//! Midpoint-radius real balls over [`Dyadic`] numbers.
//!
//! Every operation returns a ball containing every possible exact result for
//! exact inputs drawn from the operand balls. Midpoints are rounded to the
//! working precision; radii are kept at [`RADIUS_BITS`] bits, rounded up.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dyadic::{Dyadic, Round};

pub const RADIUS_BITS: u32 = 30;

#[derive(Clone, PartialEq, Eq)]
pub struct RealBall {
    mid: Dyadic,
    rad: Dyadic,
    prec: u32,
}

impl fmt::Debug for RealBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e} +/- {:e}]", self.mid.to_f64(), self.rad.to_f64())
    }
}

impl RealBall {
    /// Build from an exact midpoint/radius pair, rounding the midpoint to
    /// `prec` bits and absorbing the rounding error into the radius.
    pub fn from_parts(mid: Dyadic, rad: Dyadic, prec: u32) -> Self {
        debug_assert!(!rad.is_negative());
        let rounded = mid.round(prec, Round::Nearest);
        let err = mid.sub(&rounded).abs();
        let rad = if err.is_zero() { rad } else { rad.add(&err) };
        RealBall { mid: rounded, rad: rad.round(RADIUS_BITS, Round::Up), prec }
    }

    /// Like [`from_parts`](Self::from_parts) but keeps the midpoint exactly.
    pub fn with_exact_mid(mid: Dyadic, rad: Dyadic, prec: u32) -> Self {
        RealBall { mid, rad: rad.round(RADIUS_BITS, Round::Up), prec }
    }

    pub fn exact(x: Dyadic, prec: u32) -> Self {
        RealBall { mid: x, rad: Dyadic::zero(), prec }
    }

    pub fn zero(prec: u32) -> Self {
        Self::exact(Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::exact(Dyadic::one(), prec)
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        Self::exact(Dyadic::from_int(n), prec)
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Self::from_parts(Dyadic::from_bigint(n), Dyadic::zero(), prec)
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        if let Some(d) = Dyadic::try_from_rational(r) {
            return Self::from_parts(d, Dyadic::zero(), prec);
        }
        let mid = Dyadic::from_rational(r, prec + 2, Round::Nearest);
        let err = (r - mid.to_rational()).abs();
        let rad = Dyadic::from_rational(&err, RADIUS_BITS, Round::Up);
        Self::from_parts(mid, rad, prec)
    }

    pub fn from_f64(x: f64, prec: u32) -> Option<Self> {
        Dyadic::from_f64(x).map(|d| Self::exact(d, prec))
    }

    /// The ball `[lo, hi]`.
    pub fn hull(lo: &Dyadic, hi: &Dyadic, prec: u32) -> Self {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        let mid = lo.add(hi).mul_pow2(-1);
        let rad = hi.sub(lo).mul_pow2(-1);
        Self::from_parts(mid, rad, prec)
    }

    pub fn mid(&self) -> &Dyadic {
        &self.mid
    }

    pub fn rad(&self) -> &Dyadic {
        &self.rad
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Self::from_parts(self.mid.clone(), self.rad.clone(), prec)
    }

    pub fn lo(&self) -> Dyadic {
        self.mid.sub(&self.rad)
    }

    pub fn hi(&self) -> Dyadic {
        self.mid.add(&self.rad)
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    pub fn rad_f64(&self) -> f64 {
        self.rad.to_f64()
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        self.lo() <= *x && *x <= self.hi()
    }

    pub fn contains_rational(&self, x: &BigRational) -> bool {
        self.lo().to_rational() <= *x && *x <= self.hi().to_rational()
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Dyadic::zero())
    }

    pub fn contains_ball(&self, other: &Self) -> bool {
        self.lo() <= other.lo() && other.hi() <= self.hi()
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo() <= other.hi() && other.lo() <= self.hi()
    }

    pub fn is_positive(&self) -> bool {
        self.lo().is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi().is_negative()
    }

    /// Certified comparison; `None` when the balls overlap.
    pub fn certified_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.hi() < other.lo() {
            Some(Ordering::Less)
        } else if self.lo() > other.hi() {
            Some(Ordering::Greater)
        } else if self.is_exact() && other.is_exact() && self.mid == other.mid {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo().max(other.lo());
        let hi = self.hi().min(other.hi());
        if lo > hi {
            None
        } else {
            Some(Self::hull(&lo, &hi, self.prec.max(other.prec)))
        }
    }

    /// Union hull of two balls.
    pub fn union(&self, other: &Self) -> Self {
        let lo = self.lo().min(other.lo());
        let hi = self.hi().max(other.hi());
        Self::hull(&lo, &hi, self.prec.max(other.prec))
    }

    /// Enlarge the radius by `extra`.
    pub fn inflate(&self, extra: &Dyadic) -> Self {
        RealBall {
            mid: self.mid.clone(),
            rad: self.rad.add(&extra.abs()).round(RADIUS_BITS, Round::Up),
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Self {
        RealBall { mid: self.mid.neg(), rad: self.rad.clone(), prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        if !self.lo().is_negative() {
            self.clone()
        } else if !self.hi().is_positive() {
            self.neg()
        } else {
            let m = self.lo().abs().max(self.hi());
            Self::hull(&Dyadic::zero(), &m, self.prec)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        Self::from_parts(self.mid.add(&other.mid), self.rad.add(&other.rad), prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        let mid = self.mid.mul(&other.mid);
        let rad = self
            .mid
            .abs()
            .mul(&other.rad)
            .add(&other.mid.abs().mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        Self::from_parts(mid, rad, prec)
    }

    pub fn sqr(&self) -> Self {
        let s = self.mul(self);
        // x^2 >= 0
        if s.lo().is_negative() {
            Self::hull(&Dyadic::zero(), &s.hi(), s.prec)
        } else {
            s
        }
    }

    pub fn mul_dyadic(&self, d: &Dyadic) -> Self {
        Self::from_parts(self.mid.mul(d), self.rad.mul(&d.abs()), self.prec)
    }

    pub fn mul_int(&self, n: i64) -> Self {
        self.mul_dyadic(&Dyadic::from_int(n))
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        RealBall { mid: self.mid.mul_pow2(k), rad: self.rad.mul_pow2(k), prec: self.prec }
    }

    /// Quotient; `None` when the divisor contains zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if other.contains_zero() {
            return None;
        }
        let prec = self.prec.max(other.prec);
        let bm = &other.mid;
        let q = Dyadic::div(&self.mid, bm, prec + 4, Round::Nearest);
        let q_err = Dyadic::div(&self.mid.sub(&q.mul(bm)).abs(), &bm.abs(), RADIUS_BITS, Round::Up);
        let rad = if self.rad.is_zero() && other.rad.is_zero() {
            Dyadic::zero()
        } else {
            let num = self.mid.abs().mul(&other.rad).add(&bm.abs().mul(&self.rad));
            let den = bm.abs().mul(&bm.abs().sub(&other.rad));
            Dyadic::div(&num, &den, RADIUS_BITS, Round::Up)
        };
        Some(Self::from_parts(q, rad.add(&q_err), prec))
    }

    pub fn recip(&self) -> Option<Self> {
        Self::one(self.prec).div(self)
    }

    pub fn div_int(&self, n: i64) -> Self {
        self.div(&Self::from_int(n, self.prec)).expect("nonzero integer divisor")
    }

    pub fn powi(&self, n: i64) -> Option<Self> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        let mut result = Self::one(self.prec);
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        Some(result)
    }

    pub fn max(&self, other: &Self) -> Self {
        let lo = self.lo().max(other.lo());
        let hi = self.hi().max(other.hi());
        Self::hull(&lo, &hi, self.prec.max(other.prec))
    }

    pub fn min(&self, other: &Self) -> Self {
        let lo = self.lo().min(other.lo());
        let hi = self.hi().min(other.hi());
        Self::hull(&lo, &hi, self.prec.max(other.prec))
    }

    /// Clamp the enclosure to `[lo, +inf)` when the true value is known to be `>= lo`.
    pub fn clamp_below(&self, lo: &Dyadic) -> Self {
        if self.lo() >= *lo {
            self.clone()
        } else {
            Self::hull(lo, &self.hi().max(lo.clone()), self.prec)
        }
    }

    /// Clamp the enclosure to `[lo, hi]` when the true value is known to lie there.
    pub fn clamp(&self, lo: &Dyadic, hi: &Dyadic) -> Self {
        let a = self.lo().max(lo.clone()).min(hi.clone());
        let b = self.hi().min(hi.clone()).max(lo.clone());
        if a == self.lo() && b == self.hi() {
            self.clone()
        } else {
            Self::hull(&a, &b, self.prec)
        }
    }

    pub fn sqrt(&self) -> Option<Self> {
        if self.hi().is_negative() {
            return None;
        }
        let lo = self.lo().max(Dyadic::zero());
        let a = lo.sqrt(self.prec + 2, Round::Down)?;
        if self.is_exact() {
            let b = lo.sqrt(self.prec + 2, Round::Up)?;
            return Some(Self::hull(&a, &b, self.prec));
        }
        let b = self.hi().sqrt(self.prec + 2, Round::Up)?;
        Some(Self::hull(&a, &b, self.prec))
    }

    pub fn exp(&self) -> Option<Self> {
        let lo = exp_dyadic(&self.lo(), self.prec)?;
        if self.is_exact() {
            return Some(lo);
        }
        let hi = exp_dyadic(&self.hi(), self.prec)?;
        Some(Self::hull(&lo.lo(), &hi.hi(), self.prec))
    }

    /// Natural logarithm; `None` unless the ball is certified positive.
    pub fn log(&self) -> Option<Self> {
        if !self.is_positive() {
            return None;
        }
        let lo = log_dyadic(&self.lo(), self.prec);
        if self.is_exact() {
            return Some(lo);
        }
        let hi = log_dyadic(&self.hi(), self.prec);
        Some(Self::hull(&lo.lo(), &hi.hi(), self.prec))
    }

    /// `x^(1/n)` for a positive ball.
    pub fn root(&self, n: u32) -> Option<Self> {
        if n == 1 {
            return Some(self.clone());
        }
        if n == 2 {
            return self.sqrt();
        }
        let r = self.log()?.div_int(n as i64).exp()?;
        Some(r.clamp_below(&Dyadic::zero()))
    }

    /// `x^p` for an exact rational exponent and a positive ball.
    pub fn pow_rational(&self, p: &BigRational) -> Option<Self> {
        if p.is_integer() {
            let n: i64 = p.numer().try_into().ok()?;
            return self.powi(n);
        }
        let l = self.log()?;
        let num = Self::from_rational(p, self.prec);
        l.mul(&num).exp()
    }

    /// `cos(pi x)`. Uses exact reduction of the dyadic midpoint modulo 2.
    pub fn cos_pi(&self) -> Self {
        let prec = self.prec;
        let core = cos_pi_dyadic(&self.mid, prec);
        let pi_hi = Dyadic::new(BigInt::from(13), -2); // 3.25 > pi
        let widened = core.inflate(&self.rad.mul(&pi_hi));
        widened.clamp(&Dyadic::from_int(-1), &Dyadic::one())
    }

    /// `sin(pi x)`.
    pub fn sin_pi(&self) -> Self {
        self.sub(&Self::exact(Dyadic::pow2(-1), self.prec)).cos_pi()
    }

    pub fn pi(prec: u32) -> Self {
        pi_ball(prec)
    }

    pub fn ln2(prec: u32) -> Self {
        ln2_ball(prec)
    }
}

/// `pi` via Machin's formula in fixed point.
fn pi_ball(prec: u32) -> RealBall {
    let w = prec as usize + 16;
    let (s5, k5) = atan_inv_fixed(5, w);
    let (s239, k239) = atan_inv_fixed(239, w);
    let total = s5 * 16 - s239 * 4;
    let err = BigInt::from(16 * (2 * k5 + 1) + 4 * (2 * k239 + 1));
    RealBall::from_parts(
        Dyadic::new(total, -(w as i64)),
        Dyadic::new(err, -(w as i64)),
        prec,
    )
}

/// `floor(2^w atan(1/n))` up to `2k + 1` units, where `k` is the term count.
fn atan_inv_fixed(n: u64, w: usize) -> (BigInt, u64) {
    let n2 = BigInt::from(n * n);
    let mut p: BigInt = (BigInt::one() << w) / BigInt::from(n);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !p.is_zero() {
        let term = &p / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        p /= &n2;
        k += 1;
    }
    (sum, k)
}

/// `ln 2 = 2 atanh(1/3)` in fixed point.
fn ln2_ball(prec: u32) -> RealBall {
    let w = prec as usize + 16;
    let nine = BigInt::from(9);
    let mut p: BigInt = (BigInt::one() << w) / BigInt::from(3);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !p.is_zero() {
        sum += &p / BigInt::from(2 * k + 1);
        p /= &nine;
        k += 1;
    }
    let err = BigInt::from(2 * (2 * k + 2));
    RealBall::from_parts(Dyadic::new(sum * 2, -(w as i64)), Dyadic::new(err, -(w as i64)), prec)
}

/// Sum a series whose terms are produced by `next`, stopping once a term
/// drops below `2^-w`; the first omitted term, scaled by `tail_factor`,
/// bounds the remainder.
fn sum_series<F>(first: RealBall, w: u32, tail_factor: i64, mut next: F) -> RealBall
where
    F: FnMut(&RealBall, u64) -> RealBall,
{
    let eps = Dyadic::pow2(-(w as i64));
    let mut sum = first.clone();
    let mut term = first;
    let mut k = 1u64;
    loop {
        term = next(&term, k);
        let bound = term.abs().hi();
        if bound < eps {
            return sum.inflate(&bound.mul_int(tail_factor));
        }
        sum = sum.add(&term);
        k += 1;
    }
}

fn cos_series(y: &RealBall, w: u32) -> RealBall {
    let y2 = y.sqr();
    sum_series(RealBall::one(w), w, 1, |t, k| {
        t.mul(&y2).div_int((2 * k * (2 * k - 1)) as i64).neg()
    })
}

fn sin_series(y: &RealBall, w: u32) -> RealBall {
    let y2 = y.sqr();
    sum_series(y.clone(), w, 1, |t, k| {
        t.mul(&y2).div_int((2 * k * (2 * k + 1)) as i64).neg()
    })
}

fn cos_pi_dyadic(x: &Dyadic, prec: u32) -> RealBall {
    // r = x - 2 round(x/2), in [-1, 1]
    let half = x.mul_pow2(-1);
    let n = half.add(&Dyadic::pow2(-1)).floor();
    let r = x.sub(&Dyadic::from_bigint(&(n * 2)));
    let mut s = r.abs();
    let mut sign = 1i64;
    if s > Dyadic::pow2(-1) {
        s = Dyadic::one().sub(&s);
        sign = -1;
    }
    if s.is_zero() {
        return RealBall::from_int(sign, prec);
    }
    if s == Dyadic::pow2(-1) {
        return RealBall::zero(prec);
    }
    let w = prec + 12;
    let pi = pi_ball(w);
    let v = if s > Dyadic::pow2(-2) {
        let t = Dyadic::pow2(-1).sub(&s);
        sin_series(&pi.mul_dyadic(&t), w)
    } else {
        cos_series(&pi.mul_dyadic(&s), w)
    };
    let v = if sign < 0 { v.neg() } else { v };
    v.with_prec(prec)
}

/// `exp(x)` by scaling to a tiny argument, Taylor series, then squaring.
fn exp_dyadic(x: &Dyadic, prec: u32) -> Option<RealBall> {
    if x.is_zero() {
        return Some(RealBall::one(prec));
    }
    let mag = x.magnitude();
    if mag > 40 {
        return None;
    }
    let s = (mag + 10).max(0);
    let w = prec + s as u32 + 16;
    let r = RealBall::exact(x.mul_pow2(-s), w);
    let mut v = sum_series(RealBall::one(w), w, 2, |t, k| t.mul(&r).div_int(k as i64));
    for _ in 0..s {
        v = v.sqr();
    }
    Some(v.clamp_below(&Dyadic::zero()).with_prec(prec))
}

/// `log(x)` for `x > 0` via `x = m 2^e`, `log m = 2 atanh((m-1)/(m+1))`.
fn log_dyadic(x: &Dyadic, prec: u32) -> RealBall {
    debug_assert!(x.is_positive());
    if *x == Dyadic::one() {
        return RealBall::zero(prec);
    }
    let mut e = x.magnitude() + 1;
    let mut m = x.mul_pow2(-e);
    // m in [1/2, 1); move to [2/3, 4/3)
    if m.mul_int(3) < Dyadic::from_int(2) {
        m = m.mul_pow2(1);
        e -= 1;
    }
    let ebits = 64 - (e.unsigned_abs()).leading_zeros();
    let w = prec + 16 + ebits;
    let mb = RealBall::exact(m, w);
    let one = RealBall::one(w);
    let z = mb.sub(&one).div(&mb.add(&one)).expect("m + 1 > 0");
    let z2 = z.sqr();
    let mut power = z.clone();
    let atanh = sum_series(z.clone(), w, 2, |_, k| {
        power = power.mul(&z2);
        power.div_int((2 * k + 1) as i64)
    });
    let log_m = atanh.mul_pow2(1);
    let result = if e == 0 {
        log_m
    } else {
        ln2_ball(w).mul_int(e).add(&log_m)
    };
    result.with_prec(prec)
}
