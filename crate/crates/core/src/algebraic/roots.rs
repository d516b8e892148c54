//! Certified enclosures of all complex roots.
//!
//! Real roots come from Sturm isolation. Non-real roots start from a
//! double-precision Aberth iteration, are polished by Newton steps at the
//! working precision and certified with the inclusion radii
//! `r_i = d |p(z_i)| / (|a_d| prod_{j != i} |z_i - z_j|)`: the discs of these
//! radii cover all roots, and pairwise-disjoint discs hold exactly one each.

use std::cmp::Ordering;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};

use super::ball::RealBall;
use super::complex::ComplexBall;
use super::dyadic::{Dyadic, Round};
use super::poly::IntPolynomial;
use super::sturm::{check_squarefree, isolate_real_roots};
use super::AlgebraicError;

/// All complex roots of a squarefree polynomial as disjoint enclosures.
///
/// Real roots carry an exactly-zero imaginary part. The largest real root
/// comes first, the rest follow by `(re, im)` of their midpoints.
pub fn all_conjugates(p: &IntPolynomial, precision_bits: u32) -> Result<Vec<ComplexBall>, AlgebraicError> {
    check_squarefree(p)?;
    let d = p.degree();
    if d == 0 {
        return Ok(Vec::new());
    }
    let reals = isolate_real_roots(p, precision_bits)?;
    let n_complex = d - reals.len();
    let mut roots: Vec<ComplexBall> = reals.iter().cloned().map(ComplexBall::real).collect();
    if n_complex > 0 {
        let upper = nonreal_roots(p, &reals, n_complex / 2, precision_bits)?;
        for z in upper {
            roots.push(z.conj());
            roots.push(z);
        }
    }
    order_roots(&mut roots);
    Ok(roots)
}

pub(crate) fn order_roots(roots: &mut [ComplexBall]) {
    let largest_real = roots
        .iter()
        .enumerate()
        .filter(|(_, z)| z.is_real())
        .max_by(|a, b| a.1.re.mid().cmp(b.1.re.mid()))
        .map(|(i, _)| i);
    if let Some(i) = largest_real {
        roots.swap(0, i);
    }
    let start = usize::from(largest_real.is_some());
    roots[start..].sort_by(|a, b| {
        a.re.mid().cmp(b.re.mid()).then_with(|| a.im.mid().cmp(b.im.mid()))
    });
}

/// Certified upper-half-plane roots.
fn nonreal_roots(
    p: &IntPolynomial,
    reals: &[RealBall],
    count: usize,
    prec: u32,
) -> Result<Vec<ComplexBall>, AlgebraicError> {
    let approx = aberth(p);
    let mut upper: Vec<Complex64> = approx.into_iter().filter(|z| z.im > 0.0).collect();
    upper.sort_by(|a, b| b.im.partial_cmp(&a.im).unwrap_or(Ordering::Equal));
    if upper.len() < count {
        return Err(AlgebraicError::CertificationFailure { precision: prec });
    }
    upper.truncate(count);

    let mut work = prec + 32;
    for _ in 0..4 {
        let polished: Vec<(Dyadic, Dyadic)> = upper.iter().map(|z| newton_polish(p, *z, work)).collect();
        if let Some(v) = certify(p, reals, &polished, prec, work) {
            return Ok(v);
        }
        work *= 2;
    }
    Err(AlgebraicError::CertificationFailure { precision: prec })
}

fn certify(
    p: &IntPolynomial,
    reals: &[RealBall],
    upper: &[(Dyadic, Dyadic)],
    prec: u32,
    work: u32,
) -> Option<Vec<ComplexBall>> {
    let d = p.degree() as i64;
    let mut centers: Vec<ComplexBall> = reals
        .iter()
        .map(|r| ComplexBall::real(RealBall::exact(r.mid().clone(), work)))
        .collect();
    for (re, im) in upper {
        let z = ComplexBall::new(RealBall::exact(re.clone(), work), RealBall::exact(im.clone(), work));
        centers.push(z.conj());
        centers.push(z);
    }
    let lead = RealBall::from_bigint(&p.leading().abs(), work);
    let target = Dyadic::pow2(-(prec as i64));
    let radius = |i: usize| -> Option<Dyadic> {
        let z = &centers[i];
        let mut denom = lead.clone();
        for (j, w) in centers.iter().enumerate() {
            if j != i {
                denom = denom.mul(&z.sub(w).abs());
            }
        }
        let num = p.eval_complex(z).abs().mul_int(d);
        Some(num.div(&denom)?.hi())
    };
    let mut real_discs = Vec::with_capacity(reals.len());
    for i in 0..reals.len() {
        real_discs.push((centers[i].re.mid().clone(), radius(i)?));
    }
    let mut out = Vec::with_capacity(upper.len());
    for i in (reals.len()..centers.len()).step_by(2).map(|i| i + 1) {
        let z = &centers[i];
        let r = radius(i)?;
        if r > target {
            return None;
        }
        // the disc must stay off the real axis so it cannot hold a real root
        if z.im.lo() <= r {
            return None;
        }
        for (c, rc) in &real_discs {
            let gap = z.sub(&ComplexBall::real(RealBall::exact(c.clone(), work))).abs().lo();
            if gap <= r.add(rc) {
                return None;
            }
        }
        out.push((z.clone(), r));
    }
    // pairwise disjoint discs, the conjugate discs included
    for a in 0..out.len() {
        for b in a + 1..out.len() {
            let gap = out[a].0.sub(&out[b].0).abs().lo();
            if gap <= out[a].1.add(&out[b].1) {
                return None;
            }
        }
    }
    Some(
        out.into_iter()
            .map(|(z, r)| {
                ComplexBall::new(
                    RealBall::with_exact_mid(z.re.mid().clone(), r.clone(), prec),
                    RealBall::with_exact_mid(z.im.mid().clone(), r, prec),
                )
            })
            .collect(),
    )
}

fn newton_polish(p: &IntPolynomial, z0: Complex64, work: u32) -> (Dyadic, Dyadic) {
    let dp = p.derivative();
    let to_d = |x: f64| Dyadic::from_f64(x).unwrap_or_else(Dyadic::zero);
    let mut re = to_d(z0.re);
    let mut im = to_d(z0.im);
    let steps = 4 + (32 - (work / 40).max(1).leading_zeros()) as usize;
    for _ in 0..steps {
        let z = ComplexBall::new(RealBall::exact(re.clone(), work), RealBall::exact(im.clone(), work));
        let Some(step) = p.eval_complex(&z).div(&dp.eval_complex(&z)) else {
            break;
        };
        re = re.sub(step.re.mid()).round(work, Round::Nearest);
        im = im.sub(step.im.mid()).round(work, Round::Nearest);
    }
    (re, im)
}

/// Simultaneous Aberth-Ehrlich iteration in double precision.
pub(crate) fn aberth(p: &IntPolynomial) -> Vec<Complex64> {
    let d = p.degree();
    let lead = p.leading().to_f64().unwrap_or(1.0);
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_f64().unwrap_or(0.0) / lead).collect();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for &ci in c.iter().rev() {
            dv = dv * z + v;
            v = v * z + ci;
        }
        (v, dv)
    };
    let bound = 1.0 + c[..d].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let r0 = bound.min(2.0f64.max(c[0].abs().powf(1.0 / d as f64)));
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / d as f64 + 0.4;
            Complex64::from_polar(r0, ang)
        })
        .collect();
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (v, dv) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// `(-1)^d c_0 / a_d` as an enclosure of the product of the roots.
pub fn root_product(roots: &[ComplexBall]) -> ComplexBall {
    let prec = roots.first().map_or(64, |z| z.prec());
    roots.iter().fold(ComplexBall::one(prec), |acc, z| acc.mul(z))
}
