//! Absolute values on `Q`, the absolute Weil height, multiplicative
//! dependence and the searched-range height lower bound.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebraic::value::Algebraic;
use crate::algebraic::{AlgebraicError, Dyadic, NumberFieldElement, RealBall};
use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeightError {
    #[error("zero input")]
    ZeroInput,
    #[error("input is a root of unity")]
    RootOfUnity,
    #[error("no exact comparison route: inputs lie in different number fields")]
    IncommensurableFields,
    #[error("inputs are multiplicatively dependent: exponents ({0}, {1})")]
    DependentInputs(i64, i64),
    #[error("{0} is not a prime")]
    NotPrime(BigInt),
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
}

impl HeightError {
    pub fn code(&self) -> &'static str {
        match self {
            HeightError::ZeroInput => "ZeroInput",
            HeightError::RootOfUnity => "RootOfUnity",
            HeightError::IncommensurableFields => "IncommensurableFields",
            HeightError::DependentInputs(..) => "DependentInputs",
            HeightError::NotPrime(_) => "NotPrime",
            HeightError::Algebraic(e) => e.code(),
        }
    }
}

/// `H(x)` and `h(x) = log H(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightValue {
    pub multiplicative: RealBall,
    pub logarithmic: RealBall,
    /// `H(x)` itself when `x` is rational.
    pub exact: Option<BigInt>,
}

impl HeightValue {
    fn from_exact(h: BigInt, prec: u32) -> Self {
        let m = RealBall::from_bigint(&h, prec);
        let l = m.log().expect("height is at least 1").clamp_below(&Dyadic::zero());
        HeightValue { multiplicative: m.clamp_below(&Dyadic::one()), logarithmic: l, exact: Some(h) }
    }
}

/// Height of a rational: `max(|p|, |q|)` in lowest terms (and 1 at zero).
pub fn rational_height(r: &BigRational) -> BigInt {
    if r.is_zero() {
        return BigInt::one();
    }
    r.numer().abs().max(r.denom().clone())
}

pub fn weil_height(x: &Algebraic, prec: u32) -> Result<HeightValue, HeightError> {
    match x {
        Algebraic::Rational(r) => Ok(HeightValue::from_exact(rational_height(r), prec)),
        Algebraic::Field(e) => field_height(e, prec),
    }
}

/// Mahler-measure form: `H(x)^d = a_m^(d/m) prod_i max(1, |sigma_i x|)` over
/// all `d` embeddings, `m` and `a_m` the degree and leading coefficient of
/// the minimal polynomial.
pub fn field_height(x: &NumberFieldElement, prec: u32) -> Result<HeightValue, HeightError> {
    if let Some(r) = x.as_rational() {
        return Ok(HeightValue::from_exact(rational_height(&r), prec));
    }
    let d = x.field().degree() as i64;
    let minpoly = x.min_poly()?;
    let m = minpoly.degree() as i64;
    let work = prec + 16;
    let one = RealBall::one(work);
    let lead = RealBall::from_bigint(&minpoly.leading(), work);
    let mut log_sum = lead.log().expect("positive leading coefficient").mul_int(d / m);
    for z in x.embeddings(work)? {
        let t = z.abs().max(&one);
        log_sum = log_sum.add(&t.log().expect("at least one"));
    }
    let log_h = log_sum.div_int(d).clamp_below(&Dyadic::zero()).with_prec(prec);
    let mult = log_h.exp().expect("moderate height").clamp_below(&Dyadic::one()).with_prec(prec);
    Ok(HeightValue { multiplicative: mult, logarithmic: log_h, exact: None })
}

/// A place of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    Prime(BigInt),
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// `|x|_v`, exact in both cases: `p^(-v_p(x))`, or the ordinary absolute value.
pub fn rational_place_abs(x: &BigRational, place: &Place) -> Result<BigRational, HeightError> {
    if x.is_zero() {
        return Err(HeightError::ZeroInput);
    }
    match place {
        Place::Infinity => Ok(x.abs()),
        Place::Prime(p) => {
            if !arith::is_prime(p) {
                return Err(HeightError::NotPrime(p.clone()));
            }
            let vn = arith::valuation(x.numer(), p) as usize;
            let vd = arith::valuation(x.denom(), p) as usize;
            let num = num_traits::pow(p.clone(), vd);
            let den = num_traits::pow(p.clone(), vn);
            Ok(BigRational::new(num, den))
        }
    }
}

/// Infinity and every prime dividing the numerator or denominator.
pub fn relevant_places(x: &BigRational) -> Vec<Place> {
    let mut places = vec![Place::Infinity];
    let mut primes: Vec<BigInt> = arith::factor(x.numer())
        .into_iter()
        .chain(arith::factor(x.denom()))
        .map(|(p, _)| p)
        .collect();
    primes.sort();
    primes.dedup();
    places.extend(primes.into_iter().map(Place::Prime));
    places
}

/// The product formula over [`relevant_places`]; exactly 1 for `x != 0`.
pub fn place_product(x: &BigRational) -> Result<BigRational, HeightError> {
    relevant_places(x)
        .iter()
        .try_fold(BigRational::one(), |acc, v| Ok(acc * rational_place_abs(x, v)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DependenceWitness {
    pub exponents: (i64, i64),
    pub verified: bool,
}

/// Exponent vectors with `|m1| + |m2| = s`, normalized so the first nonzero
/// entry is positive.
fn shell(s: i64) -> impl Iterator<Item = (i64, i64)> {
    (0..=s).flat_map(move |m1| {
        let m2 = s - m1;
        let both: Vec<(i64, i64)> = match (m1, m2) {
            (0, m2) => vec![(0, m2)],
            (m1, 0) => vec![(m1, 0)],
            (m1, m2) => vec![(m1, m2), (m1, -m2)],
        };
        both.into_iter()
    })
}

fn check_inputs(a: &Algebraic, b: &Algebraic) -> Result<(), HeightError> {
    if a.is_zero() || b.is_zero() {
        return Err(HeightError::ZeroInput);
    }
    if a.is_root_of_unity() || b.is_root_of_unity() {
        return Err(HeightError::RootOfUnity);
    }
    Ok(())
}

/// Smallest `(m1, m2) != 0` with `|m1| + |m2| <= bound` and `a^m1 b^m2 = 1`,
/// verified by exact arithmetic.
pub fn mult_dependence_search(
    a: &Algebraic,
    b: &Algebraic,
    bound: u32,
) -> Result<Option<DependenceWitness>, HeightError> {
    let a = a.clone().normalized();
    let b = b.clone().normalized();
    check_inputs(&a, &b)?;
    let field = Algebraic::common_field(&a, &b).map_err(|_| HeightError::IncommensurableFields)?;
    match field {
        None => Ok(rational_dependence(&a.as_rational().unwrap(), &b.as_rational().unwrap(), bound)),
        Some(f) => {
            let x = a.in_field(&f).unwrap();
            let y = b.in_field(&f).unwrap();
            field_dependence(&x, &y, bound)
        }
    }
}

/// Exponent vectors of `v_p` over the joint prime support, plus signs.
fn rational_dependence(a: &BigRational, b: &BigRational, bound: u32) -> Option<DependenceWitness> {
    let support: Vec<BigInt> = {
        let mut ps: Vec<BigInt> = [a.numer(), a.denom(), b.numer(), b.denom()]
            .into_iter()
            .flat_map(|n| arith::factor(n).into_iter().map(|(p, _)| p))
            .collect();
        ps.sort();
        ps.dedup();
        ps
    };
    let vals = |r: &BigRational| -> Vec<i64> {
        support
            .iter()
            .map(|p| arith::valuation(r.numer(), p) as i64 - arith::valuation(r.denom(), p) as i64)
            .collect()
    };
    let (va, vb) = (vals(a), vals(b));
    let (na, nb) = (a.is_negative(), b.is_negative());
    for s in 1..=bound as i64 {
        for (m1, m2) in shell(s) {
            let balanced = va.iter().zip(&vb).all(|(x, y)| m1 * x + m2 * y == 0);
            let negative = (na && m1 % 2 != 0) ^ (nb && m2 % 2 != 0);
            if balanced && !negative {
                let check = num_traits::pow(pow_signed(a, m1), 1) * pow_signed(b, m2);
                return Some(DependenceWitness { exponents: (m1, m2), verified: check.is_one() });
            }
        }
    }
    None
}

fn pow_signed(r: &BigRational, m: i64) -> BigRational {
    let base = if m < 0 { r.recip() } else { r.clone() };
    num_traits::pow(base, m.unsigned_abs() as usize)
}

fn field_dependence(
    x: &NumberFieldElement,
    y: &NumberFieldElement,
    bound: u32,
) -> Result<Option<DependenceWitness>, HeightError> {
    // log|x| and log|y| at the real place filter candidates; equality is exact
    let prec = 128;
    let lx = x.embed_real(prec).abs().log().ok_or(HeightError::ZeroInput)?;
    let ly = y.embed_real(prec).abs().log().ok_or(HeightError::ZeroInput)?;
    let n = bound as usize;
    let mut px = vec![x.field().one()];
    for i in 1..=n {
        px.push(px[i - 1].mul(x));
    }
    let y_inv = y.inverse()?;
    let mut py = vec![x.field().one()];
    let mut pyi = vec![x.field().one()];
    for i in 1..=n {
        py.push(py[i - 1].mul(y));
        pyi.push(pyi[i - 1].mul(&y_inv));
    }
    for s in 1..=bound as i64 {
        for (m1, m2) in shell(s) {
            if !lx.mul_int(m1).add(&ly.mul_int(m2)).contains_zero() {
                continue;
            }
            // x^m1 = y^(-m2)
            let lhs = &px[m1 as usize];
            let rhs = if m2 <= 0 { &py[(-m2) as usize] } else { &pyi[m2 as usize] };
            if lhs == rhs {
                let verified = lhs.mul(&if m2 <= 0 { pyi[(-m2) as usize].clone() } else { py[m2 as usize].clone() }).is_one();
                return Ok(Some(DependenceWitness { exponents: (m1, m2), verified }));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct MinkowskiBound {
    /// `min H(a^m1 b^m2)^(1/(|m1|+|m2|))` over the searched range.
    pub constant: RealBall,
    pub exponents: (i64, i64),
    /// Exact `H` at the minimizing vector, in the rational case.
    pub exact_height: Option<BigInt>,
}

pub fn minkowski_lower_bound(
    a: &Algebraic,
    b: &Algebraic,
    search_cap: u32,
    prec: u32,
) -> Result<MinkowskiBound, HeightError> {
    if let Some(w) = mult_dependence_search(a, b, search_cap)? {
        return Err(HeightError::DependentInputs(w.exponents.0, w.exponents.1));
    }
    // H(z^-1) = H(z), so half the vectors suffice
    let vectors: Vec<(i64, i64)> = (1..=search_cap as i64).flat_map(shell).collect();
    let heights: Vec<Result<(i64, i64, HeightValue), HeightError>> = vectors
        .par_iter()
        .map(|&(m1, m2)| {
            let z = a.pow(m1)?.mul(&b.pow(m2)?)?;
            Ok((m1, m2, weil_height(&z, prec)?))
        })
        .collect();
    let mut best: Option<(i64, i64, HeightValue)> = None;
    for h in heights {
        let (m1, m2, hv) = h?;
        let better = match &best {
            None => true,
            Some((b1, b2, bh)) => {
                let s_new = m1.abs() + m2.abs();
                let s_old = b1.abs() + b2.abs();
                match (&hv.exact, &bh.exact) {
                    // H_new^(1/s_new) < H_old^(1/s_old)  <=>  H_new^s_old < H_old^s_new
                    (Some(hn), Some(ho)) => {
                        num_traits::pow(hn.clone(), s_old as usize) < num_traits::pow(ho.clone(), s_new as usize)
                    }
                    _ => {
                        let rn = hv.logarithmic.div_int(s_new);
                        let ro = bh.logarithmic.div_int(s_old);
                        rn.mid().cmp(ro.mid()) == Ordering::Less
                    }
                }
            }
        };
        if better {
            best = Some((m1, m2, hv));
        }
    }
    let (m1, m2, hv) = best.expect("search_cap >= 1");
    let s = m1.abs() + m2.abs();
    let constant = hv.logarithmic.div_int(s).exp().expect("bounded").clamp_below(&Dyadic::one());
    Ok(MinkowskiBound { constant, exponents: (m1, m2), exact_height: hv.exact })
}
