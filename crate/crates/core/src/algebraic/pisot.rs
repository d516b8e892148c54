use super::ball::RealBall;
use super::dyadic::Dyadic;
use super::irreducible::{check_irreducible, is_reciprocal, Irreducibility};
use super::poly::IntPolynomial;
use super::roots::all_conjugates;
use super::{with_adaptive_precision, AlgebraicError, DEFAULT_PRECISION, PRECISION_CAP};

#[derive(Clone, Debug)]
pub struct PisotReport {
    pub is_pisot: bool,
    /// Enclosure of the largest real root, when one exists.
    pub theta: Option<RealBall>,
    /// Enclosure of the largest modulus among the other roots.
    pub max_conjugate_modulus: Option<RealBall>,
    pub reason: &'static str,
}

impl PisotReport {
    fn no(reason: &'static str, theta: Option<RealBall>, max_conj: Option<RealBall>) -> Self {
        PisotReport { is_pisot: false, theta, max_conjugate_modulus: max_conj, reason }
    }
}

pub fn is_pisot(p: &IntPolynomial) -> Result<PisotReport, AlgebraicError> {
    is_pisot_with(p, DEFAULT_PRECISION, false)
}

pub fn is_pisot_with(p: &IntPolynomial, precision: u32, assume_irreducible: bool) -> Result<PisotReport, AlgebraicError> {
    if p.is_zero() {
        return Err(AlgebraicError::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(AlgebraicError::NotMonic);
    }
    if p.degree() == 0 {
        return Ok(PisotReport::no("constant polynomial", None, None));
    }
    if let Irreducibility::Reducible(_) = check_irreducible(p, assume_irreducible)? {
        return Ok(PisotReport::no("reducible", None, None));
    }
    // An irreducible polynomial with a root on the unit circle is reciprocal,
    // so outside that case no modulus equals 1 and refinement terminates.
    let reciprocal = p.degree() >= 2 && is_reciprocal(p);
    let one = Dyadic::one();
    with_adaptive_precision(precision, PRECISION_CAP, |prec| {
        let roots = all_conjugates(p, prec)?;
        let first = &roots[0];
        if !first.is_real() {
            return Ok(PisotReport::no("no real root", None, None));
        }
        let theta = first.re.clone();
        let moduli: Vec<RealBall> = roots[1..].iter().map(|z| z.abs()).collect();
        let max_conj = moduli.iter().cloned().reduce(|a, b| a.max(&b));
        if theta.hi() <= one {
            return Ok(PisotReport::no("largest real root is not greater than 1", Some(theta), max_conj));
        }
        if reciprocal {
            return Ok(PisotReport::no("reciprocal polynomial has a conjugate of modulus >= 1", Some(theta), max_conj));
        }
        if theta.lo() <= one {
            return Err(AlgebraicError::CertificationFailure { precision: prec });
        }
        let mut undecided = false;
        for m in &moduli {
            if m.lo() >= one {
                return Ok(PisotReport::no("a conjugate has modulus >= 1", Some(theta), max_conj));
            }
            if m.hi() >= one {
                undecided = true;
            }
        }
        if undecided {
            return Err(AlgebraicError::CertificationFailure { precision: prec });
        }
        Ok(PisotReport { is_pisot: true, theta: Some(theta), max_conjugate_modulus: max_conj, reason: "pisot" })
    })
}
