//! Integer factorization and valuations for the finite places of `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1 << 16;

/// `v_p(n)` for `n != 0`.
pub fn valuation(n: &BigInt, p: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// Deterministic for `n < 3.3e24` with the fixed bases; probabilistic beyond.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'bases: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of `|n|` as sorted `(prime, exponent)` pairs.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u64)> {
    let mut out = Vec::new();
    let mut m = n.abs();
    if m.is_zero() {
        return out;
    }
    for p in (2..TRIAL_LIMIT).filter(|&p| p == 2 || p % 2 == 1) {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e > 0 {
            out.push((pb, e));
        }
    }
    if !m.is_one() {
        let mut stack = vec![m];
        while let Some(c) = stack.pop() {
            if c.is_one() {
                continue;
            }
            if is_prime(&c) || c.to_u64().is_some_and(|v| v < TRIAL_LIMIT * TRIAL_LIMIT) {
                push_prime(&mut out, c);
            } else {
                let f = pollard_rho(&c);
                stack.push(&c / &f);
                stack.push(f);
            }
        }
    }
    out.sort();
    out
}

fn push_prime(out: &mut Vec<(BigInt, u64)>, p: BigInt) {
    if let Some(entry) = out.iter_mut().find(|(q, _)| *q == p) {
        entry.1 += 1;
    } else {
        out.push((p, 1));
    }
}

/// A nontrivial factor of the odd composite `n` (Floyd cycle, increasing offsets).
fn pollard_rho(n: &BigInt) -> BigInt {
    let mut c = BigInt::one();
    loop {
        let f = |v: &BigInt| (v * v + &c) % n;
        let mut x = BigInt::from(2u32);
        let mut y = x.clone();
        let mut d = BigInt::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_and_valuations() {
        let n = BigInt::from(2u64.pow(5) * 3 * 49 * 1_000_003);
        let f = factor(&n);
        assert_eq!(
            f,
            vec![
                (BigInt::from(2), 5),
                (BigInt::from(3), 1),
                (BigInt::from(7), 2),
                (BigInt::from(1_000_003), 1)
            ]
        );
        assert_eq!(valuation(&BigInt::from(250), &BigInt::from(5)), 3);
        assert!(is_prime(&BigInt::from(1_000_003)));
        assert!(!is_prime(&BigInt::from(1_000_001)));
        // product of two primes beyond trial division
        let big = BigInt::from(4_294_967_311u64) * BigInt::from(4_294_967_357u64);
        assert_eq!(factor(&big).len(), 2);
    }
}
