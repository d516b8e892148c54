//! Arithmetic in `Q(theta)` for a monic irreducible defining polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ball::RealBall;
use super::complex::ComplexBall;
use super::dyadic::Dyadic;
use super::irreducible::{check_irreducible, Irreducibility};
use super::poly::{IntPolynomial, QPoly};
use super::roots::all_conjugates;
use super::{with_adaptive_precision, AlgebraicError, DEFAULT_PRECISION, PRECISION_CAP};

struct FieldData {
    poly: IntPolynomial,
    degree: usize,
    irreducibility: Irreducibility,
    /// `Tr(theta^i)` for `0 <= i < d`.
    power_traces: Vec<BigInt>,
    discriminant: BigInt,
    conjugates: Mutex<BTreeMap<u32, Arc<Vec<ComplexBall>>>>,
}

/// `Q(theta)` with `theta` the largest real root of the defining polynomial.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.0.poly)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.poly == other.0.poly
    }
}

impl Eq for NumberField {}

impl NumberField {
    pub fn new(poly: IntPolynomial) -> Result<Self, AlgebraicError> {
        Self::with_attestation(poly, false)
    }

    /// Like [`new`](Self::new); `assume_irreducible` skips the factor search
    /// for degrees where it is not run.
    pub fn with_attestation(poly: IntPolynomial, assume_irreducible: bool) -> Result<Self, AlgebraicError> {
        if poly.is_zero() {
            return Err(AlgebraicError::ZeroPolynomial);
        }
        if !poly.is_monic() {
            return Err(AlgebraicError::NotMonic);
        }
        let irreducibility = check_irreducible(&poly, assume_irreducible)?;
        if !irreducibility.is_irreducible() {
            return Err(AlgebraicError::Reducible);
        }
        let degree = poly.degree();
        let power_traces = newton_power_sums(&poly, degree);
        let discriminant = poly.discriminant();
        let field = NumberField(Arc::new(FieldData {
            poly,
            degree,
            irreducibility,
            power_traces,
            discriminant,
            conjugates: Mutex::new(BTreeMap::new()),
        }));
        let conj = field.conjugates(DEFAULT_PRECISION)?;
        if !conj[0].is_real() || conj[0].re.hi() <= Dyadic::one() {
            return Err(AlgebraicError::NoDistinguishedRoot);
        }
        Ok(field)
    }

    /// The field `Q` presented as `Q[x]/(x - n)` for an integer `n >= 2`.
    pub fn rational_integer(n: i64) -> Result<Self, AlgebraicError> {
        Self::new(IntPolynomial::linear(BigInt::from(n)))
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.0.poly
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn irreducibility(&self) -> &Irreducibility {
        &self.0.irreducibility
    }

    /// `Delta^2 = disc(g)`, an exact integer.
    pub fn discriminant(&self) -> &BigInt {
        &self.0.discriminant
    }

    pub fn power_traces(&self) -> &[BigInt] {
        &self.0.power_traces
    }

    /// Conjugate enclosures at (at least) `prec` bits; index 0 is `theta`.
    pub fn conjugates(&self, prec: u32) -> Result<Arc<Vec<ComplexBall>>, AlgebraicError> {
        let mut cache = self.0.conjugates.lock().expect("conjugate cache poisoned");
        if let Some((_, v)) = cache.range(prec..).next() {
            return Ok(v.clone());
        }
        let v = Arc::new(with_adaptive_precision(prec, PRECISION_CAP.max(prec), |p| {
            all_conjugates(&self.0.poly, p)
        })?);
        cache.insert(prec, v.clone());
        Ok(v)
    }

    /// Enclosure of `theta`.
    pub fn theta_interval(&self, prec: u32) -> RealBall {
        self.conjugates(prec).expect("certified at construction")[0].re.clone()
    }

    /// `theta` as a rational integer when the field has degree 1.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.0.degree == 1).then(|| -self.0.poly.coeff(0))
    }

    pub fn zero(&self) -> NumberFieldElement {
        NumberFieldElement::from_rational(self, BigRational::zero())
    }

    pub fn one(&self) -> NumberFieldElement {
        NumberFieldElement::from_rational(self, BigRational::one())
    }

    pub fn theta(&self) -> NumberFieldElement {
        if self.0.degree == 1 {
            return NumberFieldElement::from_rational(self, BigRational::from_integer(-self.0.poly.coeff(0)));
        }
        let mut c = vec![BigRational::zero(); self.0.degree];
        c[1] = BigRational::one();
        NumberFieldElement { field: self.clone(), coords: c }
    }

    pub fn element(&self, coords: Vec<BigRational>) -> NumberFieldElement {
        NumberFieldElement::from_qpoly(self, &QPoly::new(coords))
    }

    fn reduce(&self, p: &QPoly) -> Vec<BigRational> {
        let r = p.rem(&self.0.poly.to_q());
        let mut c = r.coeffs().to_vec();
        c.resize(self.0.degree, BigRational::zero());
        c
    }
}

/// `Tr(theta^k)` for `k < n` by Newton's identities.
fn newton_power_sums(g: &IntPolynomial, n: usize) -> Vec<BigInt> {
    let d = g.degree();
    // a_i is the coefficient of x^(d-i)
    let a = |i: usize| g.coeff(d - i);
    let mut s = vec![BigInt::from(d)];
    for k in 1..n {
        let mut v = BigInt::zero();
        for i in 1..=(k - 1).min(d) {
            v += a(i) * &s[k - i];
        }
        if k <= d {
            v += a(k) * BigInt::from(k);
        }
        s.push(-v);
    }
    s
}

#[derive(Clone)]
pub struct NumberFieldElement {
    field: NumberField,
    coords: Vec<BigRational>,
}

impl PartialEq for NumberFieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}

impl Eq for NumberFieldElement {}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] in {:?}", parts.join(", "), self.field)
    }
}

impl NumberFieldElement {
    pub fn from_rational(field: &NumberField, r: BigRational) -> Self {
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[0] = r;
        NumberFieldElement { field: field.clone(), coords }
    }

    pub fn from_int(field: &NumberField, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_qpoly(field: &NumberField, p: &QPoly) -> Self {
        NumberFieldElement { field: field.clone(), coords: field.reduce(p) }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn as_qpoly(&self) -> QPoly {
        QPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational, when it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coords[1..].iter().all(|c| c.is_zero()).then(|| self.coords[0].clone())
    }

    fn check(&self, o: &Self) -> Result<(), AlgebraicError> {
        if self.field == o.field {
            Ok(())
        } else {
            Err(AlgebraicError::FieldMismatch)
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o).expect("same field");
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect();
        NumberFieldElement { field: self.field.clone(), coords }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        NumberFieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o).expect("same field");
        Self::from_qpoly(&self.field, &self.as_qpoly().mul(&o.as_qpoly()))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        NumberFieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| c * r).collect() }
    }

    pub fn inverse(&self) -> Result<Self, AlgebraicError> {
        if self.is_zero() {
            return Err(AlgebraicError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, r.recip()));
        }
        let (g, s, _) = QPoly::ext_gcd(&self.as_qpoly(), &self.field.poly().to_q());
        if g.degree() != 0 {
            return Err(AlgebraicError::Reducible);
        }
        let inv = Self::from_qpoly(&self.field, &s);
        if !self.mul(&inv).is_one() {
            return Err(AlgebraicError::Reducible);
        }
        Ok(inv)
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgebraicError> {
        Ok(self.mul(&o.inverse()?))
    }

    pub fn pow(&self, n: i64) -> Result<Self, AlgebraicError> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut b = base;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// Exact trace to `Q`.
    pub fn trace(&self) -> BigRational {
        self.coords
            .iter()
            .zip(self.field.power_traces())
            .fold(BigRational::zero(), |acc, (c, s)| acc + c * BigRational::from_integer(s.clone()))
    }

    pub fn norm(&self) -> BigRational {
        let cp = self.char_poly();
        let c0 = cp.coeff(0);
        if self.field.degree() % 2 == 1 {
            -c0
        } else {
            c0
        }
    }

    /// Characteristic polynomial of multiplication by `self` (monic, degree `d`).
    pub fn char_poly(&self) -> QPoly {
        let d = self.field.degree();
        let mut power = self.field.one();
        let mut p = Vec::with_capacity(d + 1);
        p.push(BigRational::zero());
        for _ in 1..=d {
            power = power.mul(self);
            p.push(power.trace());
        }
        // Newton: k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i
        let mut e = vec![BigRational::one()];
        for k in 1..=d {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                let term = &e[k - i] * &p[i];
                if i % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            e.push(acc / BigRational::from_integer(BigInt::from(k)));
        }
        // x^d - e1 x^(d-1) + e2 x^(d-2) - ...
        let mut coeffs = vec![BigRational::zero(); d + 1];
        for (k, ek) in e.iter().enumerate() {
            let c = if k % 2 == 1 { -ek.clone() } else { ek.clone() };
            coeffs[d - k] = c;
        }
        QPoly::new(coeffs)
    }

    /// Minimal polynomial over `Q`, primitive with positive leading coefficient.
    ///
    /// The characteristic polynomial is a power of the minimal one, so the
    /// latter is its squarefree part; it is checked against an embedding.
    pub fn min_poly(&self) -> Result<IntPolynomial, AlgebraicError> {
        let m = self.char_poly().squarefree_part().to_int_primitive();
        let z = self.embed(1, 128)?;
        if !m.eval_complex(&z).contains_zero() {
            return Err(AlgebraicError::IrreducibilityUndecided { degree: m.degree() });
        }
        Ok(m)
    }

    /// Bits of headroom needed so that evaluating the coordinate polynomial on
    /// a `prec`-bit root enclosure still lands near `prec` bits.
    fn embed_margin(&self) -> u32 {
        let field = &self.field;
        let rb = field.poly().root_bound_log2().max(1) as u32;
        let coeff_bits = self
            .coords
            .iter()
            .map(|c| c.numer().bits() as i64 - c.denom().bits() as i64)
            .max()
            .unwrap_or(0)
            .max(0) as u32;
        16 + coeff_bits + rb * field.degree() as u32
    }

    /// Image under the embedding sending `theta` to the root with 1-based
    /// index `conjugate_index` (index 1 is the real embedding `theta -> theta`).
    pub fn embed(&self, conjugate_index: usize, prec: u32) -> Result<ComplexBall, AlgebraicError> {
        let d = self.field.degree();
        if conjugate_index == 0 || conjugate_index > d {
            return Err(AlgebraicError::IndexOutOfRange { index: conjugate_index, degree: d });
        }
        if let Some(r) = self.as_rational() {
            return Ok(ComplexBall::real(RealBall::from_rational(&r, prec)));
        }
        let work = prec + self.embed_margin();
        let roots = self.field.conjugates(work)?;
        let z = roots[conjugate_index - 1].with_prec(work);
        let mut acc = ComplexBall::zero(work);
        for c in self.coords.iter().rev() {
            acc = acc.mul(&z).add(&ComplexBall::real(RealBall::from_rational(c, work)));
        }
        Ok(acc)
    }

    /// The real embedding `theta -> theta`.
    pub fn embed_real(&self, prec: u32) -> RealBall {
        if let Some(r) = self.as_rational() {
            return RealBall::from_rational(&r, prec);
        }
        let work = prec + self.embed_margin();
        let t = self.field.theta_interval(work).with_prec(work);
        let mut acc = RealBall::zero(work);
        for c in self.coords.iter().rev() {
            acc = acc.mul(&t).add(&RealBall::from_rational(c, work));
        }
        acc
    }

    /// All embeddings at `prec` bits, index 0 first.
    pub fn embeddings(&self, prec: u32) -> Result<Vec<ComplexBall>, AlgebraicError> {
        (1..=self.field.degree()).map(|i| self.embed(i, prec)).collect()
    }

    /// Exact sign of the real embedding.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return if r.is_positive() { 1 } else { -1 };
        }
        let mut prec = 64;
        loop {
            let b = self.embed_real(prec);
            if b.is_positive() {
                return 1;
            }
            if b.is_negative() {
                return -1;
            }
            // a nonzero element has a nonzero real image, so this terminates
            prec *= 2;
        }
    }

    /// Exact comparison of real embeddings.
    pub fn cmp_real(&self, o: &Self) -> std::cmp::Ordering {
        self.sub(o).sign().cmp(&0)
    }

    pub fn cmp_rational(&self, r: &BigRational) -> std::cmp::Ordering {
        self.sub(&Self::from_rational(&self.field, r.clone())).sign().cmp(&0)
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*theta")?,
                _ => write!(f, "({c})*theta^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> NumberField {
        NumberField::new(IntPolynomial::from_i64(&[-1, -1, 1])).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_of_theta() {
        let k = golden();
        let t = k.theta();
        let inv = t.inverse().unwrap();
        assert_eq!(inv, k.element(vec![q(-1, 1), q(1, 1)]));
        assert!(t.mul(&inv).is_one());
        assert_eq!(NumberFieldElement::from_int(&k, 2).inverse().unwrap(), k.element(vec![q(1, 2)]));
        assert_eq!(k.zero().inverse(), Err(AlgebraicError::DivisionByZero));
    }

    #[test]
    fn minimal_polynomials() {
        let k = golden();
        assert_eq!(k.theta().min_poly().unwrap(), IntPolynomial::from_i64(&[-1, -1, 1]));
        let t1 = k.theta().add(&k.one());
        assert_eq!(t1.min_poly().unwrap(), IntPolynomial::from_i64(&[1, -3, 1]));
        assert_eq!(NumberFieldElement::from_int(&k, 3).min_poly().unwrap(), IntPolynomial::from_i64(&[-3, 1]));
    }

    #[test]
    fn embeddings_and_traces() {
        let k = golden();
        let t = k.theta();
        let e1 = t.embed(1, 128).unwrap();
        assert!((e1.re.mid_f64() - 1.618033988749895).abs() < 1e-15);
        let e2 = t.embed(2, 128).unwrap();
        assert!((e2.re.mid_f64() + 0.618033988749895).abs() < 1e-15);
        assert!(t.embed(3, 64).is_err());
        // Lucas numbers are traces of powers
        let p10 = t.pow(10).unwrap();
        assert_eq!(p10.trace(), q(123, 1));
        assert_eq!(k.discriminant(), &BigInt::from(5));
        assert_eq!(t.norm(), q(-1, 1));
        assert_eq!(t.pow(-3).unwrap().mul(&t.pow(3).unwrap()), k.one());
        assert_eq!(t.sign(), 1);
        assert_eq!(k.theta().sub(&NumberFieldElement::from_int(&k, 2)).sign(), -1);
    }

    #[test]
    fn cubic_field() {
        let k = NumberField::new(IntPolynomial::from_i64(&[-1, -1, 0, 1])).unwrap();
        assert_eq!(k.power_traces(), &[BigInt::from(3), BigInt::from(0), BigInt::from(2)]);
        let x = k.element(vec![q(1, 2), q(-3, 1), q(2, 5)]);
        let y = x.inverse().unwrap();
        assert_eq!(y.inverse().unwrap(), x);
        let m = x.min_poly().unwrap();
        for z in x.embeddings(128).unwrap() {
            assert!(m.eval_complex(&z).contains_zero());
        }
        assert!(NumberField::new(IntPolynomial::from_i64(&[-2, 1, 1])).is_err());
        assert!(NumberField::new(IntPolynomial::from_i64(&[-1, 2])).is_err());
    }
}
