//! Exact polynomials, certified roots, number fields and the Pisot test.

pub mod ball;
pub mod complex;
pub mod dyadic;
pub mod field;
pub mod irreducible;
pub mod pisot;
pub mod poly;
pub mod roots;
pub mod sturm;
pub mod text;
pub mod value;

use thiserror::Error;

pub use ball::RealBall;
pub use complex::ComplexBall;
pub use dyadic::{Dyadic, Round};
pub use field::{NumberField, NumberFieldElement};
pub use irreducible::{check_irreducible, Irreducibility};
pub use pisot::{is_pisot, PisotReport};
pub use poly::{IntPolynomial, QPoly};
pub use roots::all_conjugates;
pub use sturm::{isolate_real_roots, SturmChain};
pub use value::Algebraic;

/// Working precision used when the caller does not choose one.
pub const DEFAULT_PRECISION: u32 = 256;
/// Hard ceiling for adaptive precision doubling.
pub const PRECISION_CAP: u32 = 16384;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraicError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("root enclosures could not be certified at {precision} bits")]
    CertificationFailure { precision: u32 },
    #[error("irreducibility undecided for degree {degree}; pass an explicit irreducibility attestation")]
    IrreducibilityUndecided { degree: usize },
    #[error("defining polynomial is reducible")]
    Reducible,
    #[error("field has no real root greater than 1")]
    NoDistinguishedRoot,
    #[error("division by zero")]
    DivisionByZero,
    #[error("conjugate index {index} out of range 1..={degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("precision cap of {cap} bits exhausted")]
    PrecisionExhausted { cap: u32 },
}

impl AlgebraicError {
    pub fn code(&self) -> &'static str {
        match self {
            AlgebraicError::ZeroPolynomial => "ZeroPolynomial",
            AlgebraicError::NotSquarefree => "NotSquarefree",
            AlgebraicError::NotMonic => "NotMonic",
            AlgebraicError::CertificationFailure { .. } => "CertificationFailure",
            AlgebraicError::IrreducibilityUndecided { .. } => "IrreducibilityUndecided",
            AlgebraicError::Reducible => "ReducibleDefiningPolynomial",
            AlgebraicError::NoDistinguishedRoot => "NoDistinguishedRoot",
            AlgebraicError::DivisionByZero => "DivisionByZero",
            AlgebraicError::IndexOutOfRange { .. } => "IndexOutOfRange",
            AlgebraicError::FieldMismatch => "FieldMismatch",
            AlgebraicError::PrecisionExhausted { .. } => "PrecisionExhausted",
        }
    }
}

/// Run `f` at `start` bits, doubling on certification failure up to `cap`.
pub fn with_adaptive_precision<T>(
    start: u32,
    cap: u32,
    mut f: impl FnMut(u32) -> Result<T, AlgebraicError>,
) -> Result<T, AlgebraicError> {
    let mut prec = start.max(16);
    loop {
        match f(prec) {
            Err(AlgebraicError::CertificationFailure { .. }) if prec < cap => prec = (prec * 2).min(cap),
            Err(AlgebraicError::CertificationFailure { .. }) => return Err(AlgebraicError::PrecisionExhausted { cap }),
            other => return other,
        }
    }
}
