use std::fmt;

use super::ball::RealBall;
use super::dyadic::Dyadic;

/// Rectangular complex enclosure: a product of two real balls.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexBall {
    pub re: RealBall,
    pub im: RealBall,
}

impl fmt::Debug for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + i{:?})", self.re, self.im)
    }
}

impl ComplexBall {
    pub fn new(re: RealBall, im: RealBall) -> Self {
        ComplexBall { re, im }
    }

    pub fn real(re: RealBall) -> Self {
        let p = re.prec();
        ComplexBall { re, im: RealBall::zero(p) }
    }

    pub fn zero(prec: u32) -> Self {
        Self::real(RealBall::zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::real(RealBall::one(prec))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_exact() && self.im.mid().is_zero()
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.re.overlaps(&other.re) && self.im.overlaps(&other.im)
    }

    pub fn conj(&self) -> Self {
        ComplexBall { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn neg(&self) -> Self {
        ComplexBall { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBall { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBall { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if o.is_real() {
            return self.mul_real(&o.re);
        }
        if self.is_real() {
            return o.mul_real(&self.re);
        }
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        ComplexBall { re, im }
    }

    pub fn mul_real(&self, r: &RealBall) -> Self {
        let im = if self.is_real() { self.im.clone() } else { self.im.mul(r) };
        ComplexBall { re: self.re.mul(r), im }
    }

    pub fn sqr(&self) -> Self {
        if self.is_real() {
            return Self::real(self.re.sqr());
        }
        let re = self.re.sqr().sub(&self.im.sqr());
        let im = self.re.mul(&self.im).mul_pow2(1);
        ComplexBall { re, im }
    }

    /// `|z|^2`
    pub fn norm_sqr(&self) -> RealBall {
        self.re.sqr().add(&self.im.sqr())
    }

    pub fn abs(&self) -> RealBall {
        if self.is_real() {
            return self.re.abs();
        }
        self.norm_sqr().sqrt().expect("norm is nonnegative")
    }

    /// Upper bound on `|z|` over the enclosure.
    pub fn abs_upper(&self) -> Dyadic {
        self.abs().hi()
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.is_real() {
            let inv = o.re.recip()?;
            return Some(self.mul_real(&inv));
        }
        let n = o.norm_sqr();
        if n.contains_zero() {
            return None;
        }
        let num = self.mul(&o.conj());
        Some(ComplexBall { re: num.re.div(&n)?, im: num.im.div(&n)? })
    }

    pub fn powi(&self, n: u64) -> Self {
        let mut result = Self::one(self.prec());
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        result
    }

    /// Widen both components by `r`, so the box contains the disc of radius `r`.
    pub fn inflate(&self, r: &Dyadic) -> Self {
        let im = if r.is_zero() { self.im.clone() } else { self.im.inflate(r) };
        ComplexBall { re: self.re.inflate(r), im }
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        ComplexBall { re: self.re.with_prec(prec), im: self.im.with_prec(prec) }
    }

    pub fn mid_f64(&self) -> (f64, f64) {
        (self.re.mid_f64(), self.im.mid_f64())
    }

    /// Largest component radius.
    pub fn radius(&self) -> Dyadic {
        self.re.rad().max(self.im.rad()).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_identities() {
        let p = 128;
        let i = ComplexBall::new(RealBall::zero(p), RealBall::one(p));
        let m1 = i.mul(&i);
        assert!(m1.re.contains(&Dyadic::from_int(-1)));
        assert!(m1.im.contains_zero());
        let z = ComplexBall::new(RealBall::from_int(3, p), RealBall::from_int(4, p));
        assert!(z.abs().contains(&Dyadic::from_int(5)));
        let q = z.div(&z).unwrap();
        assert!(q.re.contains(&Dyadic::one()) && q.im.contains_zero());
        assert!(z.powi(3).re.contains(&Dyadic::from_int(-117)));
    }
}
