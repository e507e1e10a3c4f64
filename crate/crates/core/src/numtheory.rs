//! Exact integer arithmetic used by the orbit-counting formulas.
//!
//! Small parameters (gcds, divisors, totients) live in `u64`; anything that
//! can grow with the size of an instance is an [`ExactInt`].

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Unbounded nonnegative integer holding every count produced by the crate.
pub type ExactInt = BigUint;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}

/// All positive divisors of `x` in ascending order.
pub fn divisors(x: u64) -> Result<Vec<u64>> {
    if x == 0 {
        return Err(Error::Domain("divisors of 0 are not defined".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= x {
        if x % d == 0 {
            small.push(d);
            if d != x / d {
                large.push(x / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Euler's totient, by trial-division factorization.
pub fn totient(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::Domain("totient(0) is not defined".into()));
    }
    let mut rest = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `a choose b`, zero outside `0 <= b <= a`.
pub fn binomial(a: u64, b: i64) -> ExactInt {
    if b < 0 || b as u64 > a {
        return ExactInt::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = ExactInt::one();
    for i in 0..b {
        // acc * (a - i) is divisible by (i + 1) at every step.
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// The `n`-th Catalan number; zero for negative `n`.
pub fn catalan(n: i64) -> ExactInt {
    if n < 0 {
        return ExactInt::zero();
    }
    let n = n as u64;
    binomial(2 * n, n as i64) / (n + 1)
}

/// Catalan number at the rational index `num / den`, zero when the index is
/// not a nonnegative integer.
pub fn catalan_at_ratio(num: i64, den: i64) -> ExactInt {
    if den == 0 || num % den != 0 {
        return ExactInt::zero();
    }
    catalan(num / den)
}

/// `numerator / denominator`, panicking if the division leaves a remainder.
///
/// Every closed form in [`crate::counting`] divides a Burnside sum by a group
/// order; a remainder means the sum itself is wrong.
pub(crate) fn div_exact(numerator: &ExactInt, denominator: u64, what: &str) -> ExactInt {
    let (q, r) = numerator.div_rem(&ExactInt::from(denominator));
    assert!(
        r.is_zero(),
        "inexact division in {what}: {numerator} / {denominator} leaves {r}"
    );
    q
}
