//! Text forms for polynomials and rationals.
//!
//! Polynomials are written either as bracketed ascending coefficient lists,
//! `[-1,-1,1]`, or in the variable `x`, `x^2-x-1`. Rationals are `p/q`,
//! integers, or finite decimals (read exactly).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational, ParseError> {
    let t = text.trim();
    let offset = text.len() - text.trim_start().len();
    if t.is_empty() {
        return Err(ParseError::new(offset, "empty value"));
    }
    if let Some((n, d)) = t.split_once('/') {
        let num = parse_decimal(n.trim(), offset)?;
        let den = parse_decimal(d.trim(), offset + n.len() + 1)?;
        if den.is_zero() {
            return Err(ParseError::new(offset + n.len() + 1, "zero denominator"));
        }
        return Ok(num / den);
    }
    parse_decimal(t, offset)
}

fn parse_decimal(t: &str, offset: usize) -> Result<BigRational, ParseError> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ParseError::new(offset, "expected a number"));
    }
    let digits = format!("{int_part}{frac_part}");
    if let Some(pos) = digits.find(|c: char| !c.is_ascii_digit()) {
        let shift = if pos >= int_part.len() { 1 } else { 0 };
        return Err(ParseError::new(offset + usize::from(neg) + pos + shift, "unexpected character"));
    }
    let n: BigInt = digits.parse().map_err(|_| ParseError::new(offset, "expected a number"))?;
    let d = num_traits::pow(BigInt::from(10), frac_part.len());
    let r = BigRational::new(n, d);
    Ok(if neg { -r } else { r })
}

pub fn parse_int(text: &str, offset: usize) -> Result<BigInt, ParseError> {
    let t = text.trim();
    t.parse::<BigInt>().map_err(|_| ParseError::new(offset, format!("expected an integer, found `{t}`")))
}

pub fn parse_polynomial(text: &str) -> Result<IntPolynomial, ParseError> {
    let t = text.trim();
    let offset = text.len() - text.trim_start().len();
    if t.is_empty() {
        return Err(ParseError::new(offset, "empty polynomial"));
    }
    if let Some(inner) = t.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| ParseError::new(offset + t.len(), "missing `]`"))?;
        let mut coeffs = Vec::new();
        let mut pos = offset + 1;
        for part in inner.split(',') {
            coeffs.push(parse_int(part, pos)?);
            pos += part.len() + 1;
        }
        return Ok(IntPolynomial::new(coeffs));
    }
    parse_expression(t, offset)
}

/// Sum of monomials `c*x^k`, `c x^k`, `x^k`, `c`.
fn parse_expression(t: &str, offset: usize) -> Result<IntPolynomial, ParseError> {
    let bytes: Vec<char> = t.chars().collect();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_whitespace() {
            *i += 1;
        }
    };
    let mut first = true;
    while {
        skip_ws(&mut i);
        i < bytes.len()
    } {
        let mut sign = BigInt::one();
        if bytes[i] == '+' || bytes[i] == '-' {
            if bytes[i] == '-' {
                sign = -sign;
            }
            i += 1;
            skip_ws(&mut i);
        } else if !first {
            return Err(ParseError::new(offset + i, "expected `+` or `-`"));
        }
        first = false;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: Option<BigInt> = if i > start {
            Some(bytes[start..i].iter().collect::<String>().parse().expect("digits"))
        } else {
            None
        };
        skip_ws(&mut i);
        if i < bytes.len() && bytes[i] == '*' {
            if coeff.is_none() {
                return Err(ParseError::new(offset + i, "`*` without a coefficient"));
            }
            i += 1;
            skip_ws(&mut i);
        }
        let mut power = 0usize;
        if i < bytes.len() && bytes[i] == 'x' {
            i += 1;
            power = 1;
            skip_ws(&mut i);
            if i < bytes.len() && bytes[i] == '^' {
                i += 1;
                skip_ws(&mut i);
                let ps = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if ps == i {
                    return Err(ParseError::new(offset + i, "expected an exponent"));
                }
                power = bytes[ps..i].iter().collect::<String>().parse().map_err(|_| {
                    ParseError::new(offset + ps, "exponent too large")
                })?;
            }
        } else if coeff.is_none() {
            return Err(ParseError::new(offset + i, "expected a coefficient or `x`"));
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::zero());
        }
        coeffs[power] += sign * coeff.unwrap_or_else(BigInt::one);
    }
    if first {
        return Err(ParseError::new(offset, "empty polynomial"));
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Inverse of [`parse_polynomial`] in the bracket form.
pub fn format_polynomial(p: &IntPolynomial) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}
