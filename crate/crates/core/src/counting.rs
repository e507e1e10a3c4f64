//! Closed-form counts of annular matchings, circular matchings and binary
//! necklaces, each obtained from a Burnside sum over a cyclic group.
//!
//! Parameters follow the half-circle indexing: `count_fixed_crosscuts(n, m, k)`
//! is the number of classes with `n` outer half-circles, `m` inner
//! half-circles and `k` cross-cuts, i.e. `|Ann_k(2n+k, 2m+k)|`.
//! [`count_ann`] and [`count_total`] take raw endpoint counts instead.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{binomial, catalan, catalan_at_ratio, divisors, div_exact, gcd, gcd3, is_prime, totient, ExactInt};

/// A count request in endpoint terms: `outer` and `inner` endpoints,
/// optionally restricted to exactly `crosscuts` cross-cuts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountQuery {
    pub outer: u64,
    pub inner: u64,
    pub crosscuts: Option<u64>,
}

impl CountQuery {
    /// Half-circle parameters `(n, m, k)` when the query is feasible.
    pub fn half_circles(&self, k: u64) -> Option<(u64, u64)> {
        if k > self.outer || k > self.inner {
            return None;
        }
        let (a, b) = (self.outer - k, self.inner - k);
        (a % 2 == 0 && b % 2 == 0).then_some((a / 2, b / 2))
    }

    pub fn count(&self) -> ExactInt {
        match self.crosscuts {
            Some(k) => match self.half_circles(k) {
                Some((n, m)) => count_fixed_crosscuts(n, m, k),
                None => ExactInt::zero(),
            },
            None => count_ann(self.outer, self.inner),
        }
    }
}

/// Sum of `phi(d) * term(d)` over the divisors `d` of `g` (`g >= 1`).
fn burnside_sum(g: u64, term: impl Fn(u64) -> ExactInt) -> ExactInt {
    divisors(g)
        .expect("gcd is positive here")
        .into_iter()
        .map(|d| term(d) * totient(d).expect("positive"))
        .sum()
}

/// `|Ann_k(2n+k, k)|`: matchings whose inner endpoints all belong to cross-cuts.
pub fn count_maximal(n: u64, k: u64) -> ExactInt {
    if n == 0 && k == 0 {
        return ExactInt::from(1u32);
    }
    let size = 2 * n + k;
    let sum = burnside_sum(gcd(size, n), |d| binomial(size / d, (n / d) as i64));
    div_exact(&sum, size, "count_maximal")
}

/// `count_maximal(n, p)` through the simplified prime-`p` form.
pub fn count_maximal_prime(n: u64, p: u64) -> Result<ExactInt> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let size = 2 * n + p;
    // p * C(2n+p, n) + (p-1)(2n+p) * Cat(n/p), all over p(2n+p)
    let numerator = binomial(size, n as i64) * p
        + catalan_at_ratio(n as i64, p as i64) * ((p - 1) * size);
    Ok(div_exact(&numerator, p * size, "count_maximal_prime"))
}

/// `|Ann_k(2n+k, 2m+k)|` for any `n, m, k`.
pub fn count_fixed_crosscuts(n: u64, m: u64, k: u64) -> ExactInt {
    if m == 0 {
        return count_maximal(n, k);
    }
    if n == 0 {
        return count_maximal(m, k);
    }
    if k == 0 {
        return count_maximal(n, 0) * count_maximal(m, 0);
    }
    let (outer, inner) = (2 * n + k, 2 * m + k);
    let sum = burnside_sum(gcd3(outer, n, m), |d| {
        binomial(outer / d, (n / d) as i64) * binomial(inner / d, (m / d) as i64)
    });
    div_exact(&(sum * k), outer * inner, "count_fixed_crosscuts")
}

/// `|Ann(a, b)|`: all matchings with `a` outer and `b` inner endpoints.
pub fn count_ann(a: u64, b: u64) -> ExactInt {
    if (a + b) % 2 == 1 {
        return ExactInt::zero();
    }
    (a % 2..=a.min(b))
        .step_by(2)
        .map(|k| count_fixed_crosscuts((a - k) / 2, (b - k) / 2, k))
        .sum()
}

/// `|Ann(N)|`: all matchings with `N` endpoints in total.
pub fn count_total(total: u64) -> ExactInt {
    if total % 2 == 1 {
        return ExactInt::zero();
    }
    (0..=total).map(|a| count_ann(a, total - a)).sum()
}

/// Circular non-crossing matchings of `2n` points up to rotation.
pub fn count_circular(n: u64) -> Result<ExactInt> {
    if n == 0 {
        return Err(Error::Domain("circular count starts at n = 1".into()));
    }
    let sum = burnside_sum(n, |d| binomial(2 * (n / d), (n / d) as i64));
    // multiply through by 2n: sum - n*C_n + n*C_{(n-1)/2}
    let mut scaled = BigInt::from(sum) - BigInt::from(catalan(n as i64) * n);
    if n % 2 == 1 {
        scaled += BigInt::from(catalan(((n - 1) / 2) as i64) * n);
    }
    assert!(!scaled.is_negative(), "negative circular count for n = {n}");
    let scaled = scaled.to_biguint().expect("nonnegative");
    Ok(div_exact(&scaled, 2 * n, "count_circular"))
}

/// `N_2(n1, n2)`: binary necklaces with `n1` black and `n2` white beads.
pub fn count_necklace(n1: u64, n2: u64) -> Result<ExactInt> {
    let size = n1 + n2;
    if size == 0 {
        return Err(Error::Domain("necklace with no beads".into()));
    }
    let sum = burnside_sum(gcd(n1, n2), |d| binomial(size / d, (n2 / d) as i64));
    Ok(div_exact(&sum, size, "count_necklace"))
}
