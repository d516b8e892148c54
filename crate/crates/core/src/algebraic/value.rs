use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ball::RealBall;
use super::field::{NumberField, NumberFieldElement};
use super::AlgebraicError;

/// A real algebraic number given exactly: a rational, or an element of a
/// number field with its real embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebraic {
    Rational(BigRational),
    Field(NumberFieldElement),
}

impl Algebraic {
    pub fn int(n: i64) -> Self {
        Algebraic::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Algebraic::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Collapse field elements that happen to be rational.
    pub fn normalized(self) -> Self {
        match self {
            Algebraic::Field(x) => match x.as_rational() {
                Some(r) => Algebraic::Rational(r),
                None => Algebraic::Field(x),
            },
            r => r,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Algebraic::Rational(r) => Some(r.clone()),
            Algebraic::Field(x) => x.as_rational(),
        }
    }

    pub fn field(&self) -> Option<&NumberField> {
        match self {
            Algebraic::Rational(_) => None,
            Algebraic::Field(x) => Some(x.field()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Algebraic::Rational(r) => r.is_zero(),
            Algebraic::Field(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Algebraic::Rational(r) => r.is_one(),
            Algebraic::Field(x) => x.is_one(),
        }
    }

    /// Real roots of unity are exactly `+-1`; the real embedding decides.
    pub fn is_root_of_unity(&self) -> bool {
        match self.as_rational() {
            Some(r) => r.abs().is_one(),
            None => false,
        }
    }

    /// Express in `field`, when the value is rational or already lives there.
    pub fn in_field(&self, field: &NumberField) -> Option<NumberFieldElement> {
        match self {
            Algebraic::Rational(r) => Some(NumberFieldElement::from_rational(field, r.clone())),
            Algebraic::Field(x) if x.field() == field => Some(x.clone()),
            Algebraic::Field(x) => x.as_rational().map(|r| NumberFieldElement::from_rational(field, r)),
        }
    }

    /// A field containing both values, if one is available without building a compositum.
    pub fn common_field(a: &Self, b: &Self) -> Result<Option<NumberField>, AlgebraicError> {
        let a = a.clone().normalized();
        let b = b.clone().normalized();
        match (a.field(), b.field()) {
            (None, None) => Ok(None),
            (Some(f), None) | (None, Some(f)) => Ok(Some(f.clone())),
            (Some(f), Some(g)) if f == g => Ok(Some(f.clone())),
            _ => Err(AlgebraicError::FieldMismatch),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, AlgebraicError> {
        match Self::common_field(self, o)? {
            None => Ok(Algebraic::Rational(self.as_rational().unwrap() * o.as_rational().unwrap())),
            Some(f) => Ok(Algebraic::Field(self.in_field(&f).unwrap().mul(&o.in_field(&f).unwrap())).normalized()),
        }
    }

    pub fn pow(&self, n: i64) -> Result<Self, AlgebraicError> {
        match self {
            Algebraic::Rational(r) => {
                if r.is_zero() && n < 0 {
                    return Err(AlgebraicError::DivisionByZero);
                }
                let base = if n < 0 { r.recip() } else { r.clone() };
                Ok(Algebraic::Rational(num_traits::pow(base, n.unsigned_abs() as usize)))
            }
            Algebraic::Field(x) => Ok(Algebraic::Field(x.pow(n)?).normalized()),
        }
    }

    pub fn inverse(&self) -> Result<Self, AlgebraicError> {
        self.pow(-1)
    }

    /// Real value as an enclosure.
    pub fn to_ball(&self, prec: u32) -> RealBall {
        match self {
            Algebraic::Rational(r) => RealBall::from_rational(r, prec),
            Algebraic::Field(x) => x.embed_real(prec),
        }
    }

    pub fn sign(&self) -> i32 {
        match self {
            Algebraic::Rational(r) => {
                if r.is_positive() {
                    1
                } else if r.is_negative() {
                    -1
                } else {
                    0
                }
            }
            Algebraic::Field(x) => x.sign(),
        }
    }
}

impl From<BigRational> for Algebraic {
    fn from(r: BigRational) -> Self {
        Algebraic::Rational(r)
    }
}

impl From<NumberFieldElement> for Algebraic {
    fn from(x: NumberFieldElement) -> Self {
        Algebraic::Field(x).normalized()
    }
}

impl fmt::Display for Algebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebraic::Rational(r) => write!(f, "{r}"),
            Algebraic::Field(x) => write!(f, "{x}"),
        }
    }
}
