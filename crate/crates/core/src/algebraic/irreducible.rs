//! Irreducibility over the rationals by exhaustive factor search.
//!
//! Any integer factor of degree `k` is, up to a divisor of the leading
//! coefficient, the product of `x - z` over some `k` roots. We enumerate root
//! subsets for `k <= d/2`, round the enclosed coefficients to integers when
//! the enclosures single one out, and confirm candidates by exact division.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::ball::RealBall;
use super::complex::ComplexBall;
use super::poly::IntPolynomial;
use super::roots::all_conjugates;
use super::AlgebraicError;

/// Degree above which the factor search is not run without an attestation.
pub const MAX_SEARCH_DEGREE: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// Assumed irreducible on the caller's word.
    Attested,
    Reducible(IntPolynomial),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        !matches!(self, Irreducibility::Reducible(_))
    }
}

pub fn check_irreducible(p: &IntPolynomial, assume_irreducible: bool) -> Result<Irreducibility, AlgebraicError> {
    if p.is_zero() {
        return Err(AlgebraicError::ZeroPolynomial);
    }
    let d = p.degree();
    if d == 0 {
        return Ok(Irreducibility::Reducible(p.clone()));
    }
    let c = p.content();
    if !c.is_one() {
        return Ok(Irreducibility::Reducible(IntPolynomial::constant(c)));
    }
    if d == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    if !p.is_squarefree() {
        let g = p.to_q().gcd(&p.derivative().to_q()).to_int_primitive();
        return Ok(Irreducibility::Reducible(g));
    }
    if d > MAX_SEARCH_DEGREE {
        return if assume_irreducible {
            Ok(Irreducibility::Attested)
        } else {
            Err(AlgebraicError::IrreducibilityUndecided { degree: d })
        };
    }
    let divisors = positive_divisors(&p.leading().abs())
        .ok_or(AlgebraicError::IrreducibilityUndecided { degree: d })?;
    let mut prec = 64;
    while prec <= 4096 {
        let roots = all_conjugates(p, prec).or_else(|e| match e {
            AlgebraicError::CertificationFailure { .. } => Ok(Vec::new()),
            e => Err(e),
        })?;
        if roots.len() == d {
            match search(p, &roots, &divisors) {
                Search::Found(f) => return Ok(Irreducibility::Reducible(f)),
                Search::None => return Ok(Irreducibility::Irreducible),
                Search::Ambiguous => {}
            }
        }
        prec *= 2;
    }
    Err(AlgebraicError::IrreducibilityUndecided { degree: d })
}

enum Search {
    Found(IntPolynomial),
    None,
    Ambiguous,
}

fn search(p: &IntPolynomial, roots: &[ComplexBall], divisors: &[BigInt]) -> Search {
    let d = roots.len();
    let mut ambiguous = false;
    for k in 1..=d / 2 {
        for subset in combinations(d, k) {
            let prec = roots[0].prec();
            let mut f = vec![ComplexBall::one(prec)];
            for &i in &subset {
                f = mul_linear(&f, &roots[i]);
            }
            for c in divisors {
                let cb = RealBall::from_bigint(c, prec);
                let mut coeffs = Vec::with_capacity(f.len());
                let mut ok = true;
                for z in &f {
                    if !z.im.contains_zero() {
                        ok = false;
                        break;
                    }
                    match unique_integer(&z.re.mul(&cb)) {
                        Some(Some(n)) => coeffs.push(n),
                        Some(None) => {
                            ok = false;
                            break;
                        }
                        None => {
                            ambiguous = true;
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    continue;
                }
                let cand = IntPolynomial::new(coeffs);
                if cand.degree() == k && p.div_exact(&cand).is_some() {
                    return Search::Found(cand.primitive());
                }
            }
        }
    }
    if ambiguous {
        Search::Ambiguous
    } else {
        Search::None
    }
}

/// `Some(Some(n))`: the ball holds exactly the integer `n`; `Some(None)`: no
/// integer; `None`: more than one candidate.
fn unique_integer(b: &RealBall) -> Option<Option<BigInt>> {
    let lo = b.lo().ceil();
    let hi = b.hi().floor();
    if lo > hi {
        Some(None)
    } else if lo == hi {
        Some(Some(lo))
    } else {
        None
    }
}

fn mul_linear(f: &[ComplexBall], z: &ComplexBall) -> Vec<ComplexBall> {
    let prec = z.prec();
    let mut out = vec![ComplexBall::zero(prec); f.len() + 1];
    for (i, c) in f.iter().enumerate() {
        out[i + 1] = out[i + 1].add(c);
        out[i] = out[i].sub(&c.mul(z));
    }
    out
}

fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let v = n.to_u64().filter(|&v| v <= 1_000_000)?;
    Some((1..=v).filter(|k| v % k == 0).map(BigInt::from).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `p(x) = +-x^d p(1/x)`
pub fn is_reciprocal(p: &IntPolynomial) -> bool {
    let r = p.reversed();
    r == *p || r == p.neg()
}
