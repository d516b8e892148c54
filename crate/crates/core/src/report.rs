//! Deterministic text forms: enclosures as outward-rounded decimal
//! intervals, CSV rows and JSON certificates.

use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::algebraic::{text, Dyadic, NumberFieldElement, RealBall};
use crate::approx::ApproximationCertificate;
use crate::fourier::ScanRow;
use crate::heights::HeightValue;
use crate::roth::{Kappa, RothRow, SProduct};

pub const DIGITS: u32 = 30;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Down,
    Up,
}

fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), n as usize)
}

/// `floor(log10 |x|)` for `x != 0`.
fn decimal_exponent(x: &BigRational) -> i64 {
    let a = x.abs();
    let digits = |n: &BigInt| n.to_string().len() as i64;
    let mut e = digits(a.numer()) - digits(a.denom());
    let ten = BigRational::from_integer(10.into());
    let scaled = |e: i64| {
        if e >= 0 {
            &a / num_traits::pow(ten.clone(), e as usize)
        } else {
            &a * num_traits::pow(ten.clone(), (-e) as usize)
        }
    };
    while scaled(e) < BigRational::one() {
        e -= 1;
    }
    while scaled(e) >= ten {
        e += 1;
    }
    e
}

fn format_rational(x: &BigRational, digits: u32, dir: Dir) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let e = decimal_exponent(x);
    let shift = digits as i64 - 1 - e;
    let scaled = if shift >= 0 {
        x * BigRational::from_integer(pow10(shift as u32))
    } else {
        x / BigRational::from_integer(pow10((-shift) as u32))
    };
    let m = match dir {
        Dir::Down => scaled.floor().to_integer(),
        Dir::Up => scaled.ceil().to_integer(),
    };
    let neg = m.is_negative();
    let s = m.abs().to_string();
    // rounding up may carry into an extra digit
    let e = e + (s.len() as i64 - digits as i64);
    let s = s.trim_end_matches('0');
    let (head, tail) = s.split_at(1);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(head);
    if !tail.is_empty() {
        out.push('.');
        out.push_str(tail);
    }
    if e != 0 {
        out.push_str(&format!("e{e}"));
    }
    out
}

pub fn format_down(x: &Dyadic) -> String {
    format_rational(&x.to_rational(), DIGITS, Dir::Down)
}

pub fn format_up(x: &Dyadic) -> String {
    format_rational(&x.to_rational(), DIGITS, Dir::Up)
}

/// `[lo, hi]` strings, rounded outward.
pub fn interval(b: &RealBall) -> [String; 2] {
    [format_down(&b.lo()), format_up(&b.hi())]
}

pub fn interval_string(b: &RealBall) -> String {
    let [lo, hi] = interval(b);
    format!("[{lo},{hi}]")
}

/// Exact value of a decimal such as `-1.25e-3`.
pub fn parse_decimal(s: &str) -> Result<BigRational, text::ParseError> {
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().map_err(|_| text::ParseError::new(i + 1, "bad exponent"))?),
        None => (s, 0),
    };
    let m = text::parse_rational(mant)?;
    let scale = BigRational::from_integer(pow10(exp.unsigned_abs() as u32));
    Ok(if exp >= 0 { m * scale } else { m / scale })
}

/// `[lo,hi]` back to exact endpoints.
pub fn parse_interval(s: &str) -> Result<(BigRational, BigRational), text::ParseError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| text::ParseError::new(0, "expected [lo,hi]"))?;
    let (lo, hi) = inner.split_once(',').ok_or_else(|| text::ParseError::new(1, "missing comma"))?;
    Ok((parse_decimal(lo.trim())?, parse_decimal(hi.trim())?))
}

pub fn interval_json(b: &RealBall) -> Value {
    let [lo, hi] = interval(b);
    json!([lo, hi])
}

pub fn height_json(h: &HeightValue) -> Value {
    let mut v = json!({
        "multiplicative": interval_json(&h.multiplicative),
        "logarithmic": interval_json(&h.logarithmic),
    });
    if let Some(e) = &h.exact {
        v["exact"] = json!(e.to_string());
    }
    v
}

pub fn coords_json(x: &NumberFieldElement) -> Value {
    Value::Array(x.coords().iter().map(|c| json!(c.to_string())).collect())
}

pub fn certificate_json(c: &ApproximationCertificate) -> Value {
    json!({
        "k": c.k,
        "ell": c.ell,
        "N": c.n,
        "certified": c.certified(),
        "policy": format!("{:?}", c.window.policy).to_lowercase(),
        "level_index_i": c.window.level_index_i,
        "alpha": coords_json(&c.alpha),
        "beta": coords_json(&c.beta),
        "err_alpha": interval_json(&c.err_alpha),
        "err_beta": interval_json(&c.err_beta),
        "H_alpha": interval_json(&c.h_alpha.multiplicative),
        "H_beta": interval_json(&c.h_beta.multiplicative),
        "diagnostics": {
            "C4_witness": interval_json(&c.side1.c4_witness),
            "C5_witness": interval_json(&c.side1.c5_witness),
            "C4_witness_beta": interval_json(&c.side2.c4_witness),
            "C5_witness_beta": interval_json(&c.side2.c5_witness),
            "C3_ratio": c.window.c3_ratio.to_string(),
            "recurrence_alpha": c.side1.recurrence.holds,
            "recurrence_beta": c.side2.recurrence.holds,
            "range_alpha": c.side1.in_range,
            "range_beta": c.side2.in_range,
        }
    })
}

pub const SCAN_HEADER: [&str; 7] = ["u", "g1_lo", "g1_hi", "g2_lo", "g2_hi", "prod_lo", "prod_hi"];

pub fn write_scan_csv<W: Write>(out: W, rows: &[ScanRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SCAN_HEADER)?;
    for r in rows {
        let [g1l, g1h] = interval(&r.g1_abs);
        let [g2l, g2h] = interval(&r.g2_abs);
        let [pl, ph] = interval(&r.product_abs);
        w.write_record([r.u.to_string(), g1l, g1h, g2l, g2h, pl, ph])?;
    }
    w.flush()?;
    Ok(())
}

pub const ROTH_HEADER: [&str; 15] = [
    "n", "u", "e1", "e2", "k", "ell", "t_num", "t_den", "H_t", "arch_err_hi", "S_product", "kappa_lo", "kappa_hi",
    "partition", "status",
];

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or(String::new(), |v| v.to_string())
}

pub fn roth_record(r: &RothRow) -> Vec<String> {
    let rat = r.t.as_ref().and_then(|t| t.as_rational());
    let (t_num, t_den) = match (&rat, &r.t) {
        (Some(q), _) => (q.numer().to_string(), q.denom().to_string()),
        (None, Some(t)) => (t.to_string(), String::new()),
        _ => (String::new(), String::new()),
    };
    let h = r.h_t.as_ref().map_or(String::new(), |h| match &h.exact {
        Some(e) => e.to_string(),
        None => interval_string(&h.multiplicative),
    });
    let s = match &r.s_product {
        Some(SProduct::Exact(q)) => q.to_string(),
        Some(SProduct::Ball(b)) => interval_string(b),
        None => String::new(),
    };
    let (klo, khi) = match &r.kappa {
        Some(Kappa::Finite(b)) => {
            let [lo, hi] = interval(b);
            (lo, hi)
        }
        Some(Kappa::PlusInfinity) => ("inf".into(), "inf".into()),
        Some(Kappa::Undefined) => ("undefined".into(), "undefined".into()),
        None => (String::new(), String::new()),
    };
    vec![
        r.n.to_string(),
        r.u.to_string(),
        opt(&r.e1),
        opt(&r.e2),
        opt(&r.k),
        opt(&r.ell),
        t_num,
        t_den,
        h,
        r.arch_error.as_ref().map_or(String::new(), |b| format_up(&b.hi())),
        s,
        klo,
        khi,
        r.partition.clone(),
        r.status.to_string(),
    ]
}

pub fn write_roth_csv<W: Write>(out: W, rows: &[RothRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(ROTH_HEADER)?;
    for r in rows {
        w.write_record(roth_record(r))?;
    }
    w.flush()?;
    Ok(())
}

/// `p/q` in lowest terms or an integer, as `text::parse_rational` reads it.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Whether the decimal endpoints enclose `b`.
pub fn interval_encloses(lo: &BigRational, hi: &BigRational, b: &RealBall) -> bool {
    lo <= &b.lo().to_rational() && &b.hi().to_rational() <= hi
}

pub fn gcd_free(r: &BigRational) -> bool {
    r.numer().gcd(r.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn outward_rounding() {
        assert_eq!(format_rational(&q(1, 3), 5, Dir::Down), "3.3333e-1");
        assert_eq!(format_rational(&q(1, 3), 5, Dir::Up), "3.3334e-1");
        assert_eq!(format_rational(&q(-1, 3), 5, Dir::Down), "-3.3334e-1");
        assert_eq!(format_rational(&q(999_999, 1), 3, Dir::Up), "1e6");
        assert_eq!(format_rational(&q(5, 1), 30, Dir::Up), "5");
        assert_eq!(format_rational(&q(1250, 1), 30, Dir::Down), "1.25e3");
    }

    #[test]
    fn interval_round_trip() {
        let b = RealBall::pi(128);
        let s = interval_string(&b);
        let (lo, hi) = parse_interval(&s).unwrap();
        assert!(interval_encloses(&lo, &hi, &b));
        assert_eq!(interval_string(&RealBall::from_rational(&q(1, 2), 64)), "[5e-1,5e-1]");
        assert_eq!(parse_decimal("-1.25e-3").unwrap(), q(-1, 800));
    }
}
