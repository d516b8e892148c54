//! Exact binary floating-point numbers `mant · 2^exp` with directed rounding.
//!
//! Addition, subtraction and multiplication are exact. Division and square
//! roots round to a requested number of mantissa bits in a requested
//! direction, which is what the ball layer needs to keep enclosures honest.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Rounding direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
    Nearest,
}

/// The value `mant · 2^exp`. Normalized: `mant` is odd, or zero with `exp == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{} (~{:e})", self.mant, self.exp, self.to_f64())
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Self::zero();
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            Dyadic { mant, exp }
        } else {
            Dyadic { mant: mant >> tz, exp: exp + tz as i64 }
        }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigInt::from(n), 0)
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self::new(n.clone(), 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic { mant: BigInt::one(), exp: k }
    }

    /// Exact conversion; `None` for NaN and infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Self::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Some(Self::new(BigInt::from(m) * sign, e))
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Number of significant bits in the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// `floor(log2 |x|)`; meaningless for zero (returns `i64::MIN`).
    pub fn magnitude(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.bits() as i64 - 1
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &other.mant << (other.exp - e) as usize;
        Self::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Dyadic { mant: &self.mant * &other.mant, exp: self.exp + other.exp }
    }

    pub fn mul_int(&self, n: i64) -> Self {
        Self::new(&self.mant * n, self.exp)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Round to a multiple of `2^e`.
    pub fn round_to_exp(&self, e: i64, mode: Round) -> Self {
        if self.exp >= e {
            return self.clone();
        }
        let shift = (e - self.exp) as usize;
        let q = match mode {
            Round::Down => &self.mant >> shift,
            Round::Up => -((-&self.mant) >> shift),
            Round::Nearest => (&self.mant + (BigInt::one() << (shift - 1))) >> shift,
        };
        Self::new(q, e)
    }

    /// Round to at most `prec` significant bits (one more after an upward carry).
    pub fn round(&self, prec: u32, mode: Round) -> Self {
        let bits = self.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        self.round_to_exp(self.exp + (bits - prec as u64) as i64, mode)
    }

    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            &self.mant >> (-self.exp) as usize
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(self.neg().floor())
    }

    /// Nearest integer with ties to even, plus whether the input was a tie.
    pub fn round_half_even(&self) -> (BigInt, bool) {
        let fl = self.floor();
        let frac = self.sub(&Dyadic::from_bigint(&fl));
        let half = Dyadic::pow2(-1);
        match frac.cmp(&half) {
            Ordering::Less => (fl, false),
            Ordering::Greater => (fl + 1, false),
            Ordering::Equal => {
                if fl.is_even() {
                    (fl, true)
                } else {
                    (fl + 1, true)
                }
            }
        }
    }

    /// `a / b` rounded to roughly `prec` bits in direction `mode`.
    pub fn div(a: &Self, b: &Self, prec: u32, mode: Round) -> Self {
        assert!(!b.is_zero(), "dyadic division by zero");
        if a.is_zero() {
            return Self::zero();
        }
        let s = (prec as i64 + b.bits() as i64 - a.bits() as i64 + 2).max(0);
        let num = &a.mant << s as usize;
        let exp = a.exp - b.exp - s;
        let q = match mode {
            Round::Down => num.div_floor(&b.mant),
            Round::Up => num.div_ceil(&b.mant),
            Round::Nearest => {
                let q2: BigInt = (num << 1usize).div_floor(&b.mant);
                (q2 + 1i32).div_floor(&BigInt::from(2))
            }
        };
        Self::new(q, exp)
    }

    /// Square root rounded to roughly `prec` bits; `None` for negative input.
    pub fn sqrt(&self, prec: u32, mode: Round) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut s = (2 * prec as i64 + 2 - self.bits() as i64).max(0);
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let n = &self.mant << s as usize;
        let r = n.sqrt();
        let sq = &r * &r;
        let exact = sq == n;
        let r = match mode {
            Round::Down => r,
            Round::Up => {
                if exact {
                    r
                } else {
                    r + 1
                }
            }
            Round::Nearest => {
                if n > &sq + &r {
                    r + 1
                } else {
                    r
                }
            }
        };
        Some(Self::new(r, (self.exp - s) / 2))
    }

    pub fn from_rational(r: &BigRational, prec: u32, mode: Round) -> Self {
        let num = Dyadic::from_bigint(r.numer());
        let den = Dyadic::from_bigint(r.denom());
        Self::div(&num, &den, prec, mode)
    }

    /// Exact when the rational has a power-of-two denominator.
    pub fn try_from_rational(r: &BigRational) -> Option<Self> {
        let den = r.denom();
        let tz = den.trailing_zeros().unwrap_or(0);
        if (den >> tz as usize).is_one() {
            Some(Self::new(r.numer().clone(), -(tz as i64)))
        } else {
            None
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits() as i64;
        let (m, e) = if bits > 64 {
            (&self.mant >> (bits - 64) as usize, self.exp + bits - 64)
        } else {
            (self.mant.clone(), self.exp)
        };
        let mf = m.to_f64().unwrap_or(f64::NAN);
        ldexp(mf, e)
    }

    pub fn is_integer(&self) -> bool {
        self.exp >= 0
    }

    pub fn from_u64(n: u64) -> Self {
        Self::new(BigInt::from_u64(n).unwrap(), 0)
    }
}

fn ldexp(x: f64, e: i64) -> f64 {
    let mut x = x;
    let mut e = e.clamp(-2200, 2200);
    while e > 0 {
        let step = e.min(1000);
        x *= 2f64.powi(step as i32);
        e -= step;
    }
    while e < 0 {
        let step = (-e).min(1000);
        x /= 2f64.powi(step as i32);
        e += step;
    }
    x
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.signum(), other.signum()) {
            (a, b) if a != b => a.cmp(&b),
            (0, 0) => Ordering::Equal,
            (s, _) => {
                let ma = self.magnitude();
                let mb = other.magnitude();
                if ma != mb {
                    let ord = ma.cmp(&mb);
                    if s > 0 {
                        ord
                    } else {
                        ord.reverse()
                    }
                } else {
                    self.sub(other).signum().cmp(&0)
                }
            }
        }
    }
}
