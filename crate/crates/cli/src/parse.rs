//! Command-line value grammar.
//!
//! ```text
//! 1/5  -3  0.25                 exact rationals
//! [-1,-1,1]  x^2-x-1            integer polynomials
//! x^2-x-1@[0,1]                 element of Q(theta) by coordinates
//! pow:5:4..12                   the sequence 5^4, ..., 5^12
//! pow:x^2-x-1:100               theta^100
//! 3/7*pow:5:82                  products of the above
//! ```
//!
//! A bare polynomial used where a number is expected stands for its largest
//! real root `theta`.

use num_bigint::BigInt;
use num_rational::BigRational;
use pfl_core::algebraic::text::{parse_int, parse_polynomial, parse_rational, ParseError};
use pfl_core::algebraic::{Algebraic, IntPolynomial, NumberField, QPoly};
use pfl_core::roth::RootForm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(BigRational),
    Poly(IntPolynomial),
    Element { poly: IntPolynomial, coords: Vec<BigRational> },
    Sequence(Vec<(u64, BigRational)>),
}

fn looks_polynomial(t: &str) -> bool {
    t.starts_with('[') || t.contains('x')
}

pub fn parse_value(text: &str) -> Result<Value, ParseError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(ParseError::new(0, "empty value"));
    }
    if let Some(rest) = t.strip_prefix("pow:") {
        return parse_pow(rest, 4);
    }
    if let Some((p, c)) = t.split_once('@') {
        let poly = parse_polynomial(p)?;
        let coords = parse_rational_list(c, p.len() + 1)?;
        return Ok(Value::Element { poly, coords });
    }
    if looks_polynomial(t) {
        return Ok(Value::Poly(parse_polynomial(t)?));
    }
    Ok(Value::Rational(parse_rational(t)?))
}

fn parse_pow(rest: &str, offset: usize) -> Result<Value, ParseError> {
    let (base, exps) = rest
        .rsplit_once(':')
        .ok_or_else(|| ParseError::new(offset, "expected pow:<base>:<exponent> or pow:<base>:<lo>..<hi>"))?;
    let epos = offset + base.len() + 1;
    match exps.split_once("..") {
        Some((lo, hi)) => {
            let lo = parse_u64(lo, epos)?;
            let hi = parse_u64(hi, epos + lo.to_string().len() + 2)?;
            if lo > hi {
                return Err(ParseError::new(epos, "empty exponent range"));
            }
            let b = parse_rational(base).map_err(|e| ParseError::new(offset + e.position, "sequence base must be rational"))?;
            Ok(Value::Sequence((lo..=hi).map(|n| (n, pow_rational(&b, n))).collect()))
        }
        None => {
            let e = parse_u64(exps, epos)?;
            match parse_value(base).map_err(|e| ParseError::new(offset + e.position, e.message))? {
                Value::Rational(b) => Ok(Value::Rational(pow_rational(&b, e))),
                Value::Poly(poly) => {
                    let k = NumberField::new(poly.clone()).map_err(|err| ParseError::new(offset, err.to_string()))?;
                    let x = k.theta().pow(e as i64).map_err(|err| ParseError::new(offset, err.to_string()))?;
                    Ok(Value::Element { poly, coords: x.coords().to_vec() })
                }
                Value::Element { poly, coords } => {
                    let k = NumberField::new(poly.clone()).map_err(|err| ParseError::new(offset, err.to_string()))?;
                    let x = k.element(coords).pow(e as i64).map_err(|err| ParseError::new(offset, err.to_string()))?;
                    Ok(Value::Element { poly, coords: x.coords().to_vec() })
                }
                Value::Sequence(_) => Err(ParseError::new(offset, "nested sequence")),
            }
        }
    }
}

fn pow_rational(b: &BigRational, n: u64) -> BigRational {
    num_traits::pow(b.clone(), n as usize)
}

fn parse_u64(t: &str, pos: usize) -> Result<u64, ParseError> {
    t.trim().parse().map_err(|_| ParseError::new(pos, format!("expected a non-negative integer, found `{t}`")))
}

/// `[c0, c1, ...]` with rational entries.
pub fn parse_rational_list(text: &str, offset: usize) -> Result<Vec<BigRational>, ParseError> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| ParseError::new(offset, "expected a bracketed list"))?;
    let mut pos = offset + 1;
    let mut out = Vec::new();
    for part in inner.split(',') {
        out.push(parse_rational(part).map_err(|e| ParseError::new(pos + e.position, e.message))?);
        pos += part.len() + 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueError(pub String);

impl Value {
    /// The value as an exact algebraic number.
    pub fn algebraic(&self) -> Result<Algebraic, ValueError> {
        match self {
            Value::Rational(r) => Ok(Algebraic::Rational(r.clone())),
            Value::Poly(p) => {
                let k = NumberField::new(p.clone()).map_err(|e| ValueError(e.to_string()))?;
                Ok(Algebraic::from(k.theta()))
            }
            Value::Element { poly, coords } => {
                let k = NumberField::new(poly.clone()).map_err(|e| ValueError(e.to_string()))?;
                Ok(Algebraic::from(k.element(coords.clone())))
            }
            Value::Sequence(_) => Err(ValueError("expected a single number, found a sequence".into())),
        }
    }

    pub fn polynomial(&self) -> Result<IntPolynomial, ValueError> {
        match self {
            Value::Poly(p) => Ok(p.clone()),
            Value::Rational(r) if r.is_integer() => Ok(IntPolynomial::new(vec![-r.numer(), BigInt::from(1)])),
            _ => Err(ValueError("expected a polynomial".into())),
        }
    }

    pub fn sequence(&self) -> Result<Vec<(u64, BigRational)>, ValueError> {
        match self {
            Value::Sequence(s) => Ok(s.clone()),
            Value::Rational(r) => Ok(vec![(0, r.clone())]),
            _ => Err(ValueError("expected a rational sequence".into())),
        }
    }
}

/// A product of factors joined by `*pow:`.
pub fn parse_product(text: &str) -> Result<Algebraic, ParseError> {
    let mut parts = Vec::new();
    let mut rest = text.trim();
    let mut pos = text.len() - text.trim_start().len();
    while let Some(i) = rest[1..].find("*pow:").map(|i| i + 1) {
        parts.push((pos, &rest[..i]));
        pos += i + 1;
        rest = &rest[i + 1..];
    }
    parts.push((pos, rest));
    let mut acc = Algebraic::int(1);
    for (p, part) in parts {
        let v = parse_value(part).map_err(|e| ParseError::new(p + e.position, e.message))?;
        let x = v.algebraic().map_err(|e| ParseError::new(p, e.0))?;
        acc = acc.mul(&x).map_err(|e| ParseError::new(p, e.to_string()))?;
    }
    Ok(acc)
}

/// `identity`, an integer polynomial such as `4x^2+1`, or `root:<q>:<poly>`
/// for `P(u)^{1/q}` with `P` given by rational coefficients or in `x`.
pub fn parse_root_form(text: &str) -> Result<RootForm, ParseError> {
    let t = text.trim();
    if t == "identity" {
        return Ok(RootForm::identity());
    }
    let (q, body, off) = match t.strip_prefix("root:") {
        Some(rest) => {
            let (q, body) = rest.split_once(':').ok_or_else(|| ParseError::new(5, "expected root:<q>:<poly>"))?;
            let q = parse_int(q, 5)?;
            let q: u32 = q.try_into().map_err(|_| ParseError::new(5, "root index out of range"))?;
            if q == 0 {
                return Err(ParseError::new(5, "root index must be positive"));
            }
            (q, body, 6 + q.to_string().len())
        }
        None => (1, t, 0),
    };
    let coeffs = if body.trim_start().starts_with('[') {
        parse_rational_list(body, off)?
    } else {
        let p = parse_polynomial(body).map_err(|e| ParseError::new(off + e.position, e.message))?;
        p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
    };
    Ok(RootForm { p: QPoly::new(coeffs), q })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        assert_eq!(parse_value("1/5").unwrap(), Value::Rational(q(1, 5)));
        assert_eq!(parse_value("x^2-x-1").unwrap(), Value::Poly(IntPolynomial::from_i64(&[-1, -1, 1])));
        assert_eq!(
            parse_value("pow:5:4..6").unwrap(),
            Value::Sequence(vec![(4, q(625, 1)), (5, q(3125, 1)), (6, q(15625, 1))])
        );
        assert_eq!(parse_value("pow:2/3:2").unwrap(), Value::Rational(q(4, 9)));
        let phi2 = parse_value("pow:x^2-x-1:2").unwrap();
        assert_eq!(phi2, Value::Element { poly: IntPolynomial::from_i64(&[-1, -1, 1]), coords: vec![q(1, 1), q(1, 1)] });
    }

    #[test]
    fn products_and_forms() {
        assert_eq!(parse_product("3/7*pow:5:2").unwrap(), Algebraic::ratio(75, 7));
        let f = parse_root_form("root:2:[0,1,0,1]").unwrap();
        assert_eq!(f.q, 2);
        assert_eq!(parse_root_form("identity").unwrap(), RootForm::identity());
        assert_eq!(parse_root_form("4x^2+1").unwrap().p, QPoly::new(vec![q(1, 1), q(0, 1), q(4, 1)]));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_value("1/0").unwrap_err();
        assert_eq!(e.position, 2);
        assert!(parse_value("pow:5:7..3").is_err());
        let e = parse_value("x^2-x-1@[0,a]").unwrap_err();
        assert_eq!(e.position, 11);
    }
}
