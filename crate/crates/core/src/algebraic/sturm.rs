//! Sturm sequences and exact real-root isolation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ball::RealBall;
use super::dyadic::Dyadic;
use super::poly::{sign_of, IntPolynomial};
use super::AlgebraicError;

/// Sign of `p(x)` at a dyadic point, computed exactly.
pub fn sign_at_dyadic(p: &IntPolynomial, x: &Dyadic) -> i32 {
    let e = x.exponent();
    let m = x.mantissa();
    if e >= 0 {
        let v = m << (e as usize);
        return sign_of(&p.eval_int(&v));
    }
    // 2^(-e d) p(m 2^e) = sum c_i m^i 2^(-e (d - i))
    let s = (-e) as usize;
    let d = p.degree();
    let mut acc = BigInt::zero();
    let mut mpow = BigInt::one();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc += (c * &mpow) << (s * (d - i));
        }
        mpow *= m;
    }
    sign_of(&acc)
}

#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Build the canonical chain `p, p', -rem(...)`, each term rescaled by a
    /// positive constant so it stays integral.
    pub fn new(p: &IntPolynomial) -> Self {
        let mut chain = vec![positive_primitive(p)];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(positive_primitive(&d));
        }
        while chain.len() >= 2 {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            let r = a.to_q().rem(&b.to_q());
            if r.is_zero() {
                break;
            }
            let r = r.neg();
            let int = r.to_int_primitive();
            // to_int_primitive forces a positive leading coefficient; restore sign
            let int = if r.leading().is_negative() { int.neg() } else { int };
            chain.push(int);
        }
        SturmChain { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn variations_at(&self, x: &Dyadic) -> usize {
        count_variations(self.chain.iter().map(|q| sign_at_dyadic(q, x)))
    }

    /// Variations as `x -> +inf` (`positive`) or `x -> -inf`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.chain.iter().map(|q| {
            let s = sign_of(&q.leading());
            if !positive && q.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &Dyadic, b: &Dyadic) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

fn positive_primitive(p: &IntPolynomial) -> IntPolynomial {
    let c = p.content();
    IntPolynomial::new(p.coeffs().iter().map(|x| x / &c).collect())
}

fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

pub(crate) fn check_squarefree(p: &IntPolynomial) -> Result<(), AlgebraicError> {
    if p.is_zero() {
        return Err(AlgebraicError::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(AlgebraicError::NotSquarefree);
    }
    Ok(())
}

/// Disjoint enclosures of the real roots of a squarefree polynomial, in
/// increasing order, each of radius at most `2^-precision_bits`.
pub fn isolate_real_roots(p: &IntPolynomial, precision_bits: u32) -> Result<Vec<RealBall>, AlgebraicError> {
    check_squarefree(p)?;
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(p);
    let b = Dyadic::pow2(p.root_bound_log2());
    let mut pending = vec![(b.neg(), b)];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        let n = chain.count_in(&lo, &hi);
        match n {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = lo.add(&hi).mul_pow2(-1);
                pending.push((mid.clone(), hi));
                pending.push((lo, mid));
            }
        }
    }
    let target = Dyadic::pow2(1 - precision_bits as i64);
    let mut out: Vec<RealBall> = isolated
        .into_iter()
        .map(|(lo, hi)| refine(p, lo, hi, &target, precision_bits))
        .collect();
    out.sort_by(|a, b| a.mid().cmp(b.mid()));
    Ok(out)
}

/// Shrink an isolating interval `(lo, hi]` by sign bisection until its
/// width is at most `width`.
fn refine(p: &IntPolynomial, mut lo: Dyadic, mut hi: Dyadic, width: &Dyadic, prec: u32) -> RealBall {
    let s_hi = sign_at_dyadic(p, &hi);
    if s_hi == 0 {
        return RealBall::exact(hi, prec);
    }
    loop {
        let mid = lo.add(&hi).mul_pow2(-1);
        let s = sign_at_dyadic(p, &mid);
        if s == 0 {
            return RealBall::exact(mid, prec);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi.sub(&lo) <= *width {
            break;
        }
    }
    let mid = lo.add(&hi).mul_pow2(-1);
    let rad = hi.sub(&lo).mul_pow2(-1);
    RealBall::with_exact_mid(mid, rad, prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn golden_ratio_roots() {
        let r = isolate_real_roots(&p(&[-1, -1, 1]), 64).unwrap();
        assert_eq!(r.len(), 2);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((r[1].mid_f64() - phi).abs() < 1e-15);
        assert!((r[0].mid_f64() + 1.0 / phi).abs() < 1e-15);
        assert!(r[0].rad_f64() <= 2f64.powi(-64));
    }

    #[test]
    fn exact_and_error_cases() {
        let r = isolate_real_roots(&p(&[-5, 1]), 64).unwrap();
        assert_eq!(r, vec![RealBall::from_int(5, 64)]);
        let r = isolate_real_roots(&p(&[0, -1, 0, 1]), 32).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r[1].is_exact() && r[1].mid().is_zero());
        assert_eq!(isolate_real_roots(&IntPolynomial::zero(), 8), Err(AlgebraicError::ZeroPolynomial));
        assert_eq!(isolate_real_roots(&p(&[1, 2, 1]), 8), Err(AlgebraicError::NotSquarefree));
        assert!(isolate_real_roots(&p(&[1, 0, 1]), 8).unwrap().is_empty());
    }

    #[test]
    fn chain_counts() {
        let c = SturmChain::new(&p(&[-1, -1, 0, 1]));
        assert_eq!(c.count_real(), 1);
        let c = SturmChain::new(&p(&[1, 0, -10, 0, 1]));
        assert_eq!(c.count_real(), 4);
        assert_eq!(c.count_in(&Dyadic::zero(), &Dyadic::from_int(4)), 2);
    }
}
