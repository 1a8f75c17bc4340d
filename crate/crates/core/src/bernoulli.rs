//! Classical Bernoulli numbers `B_n` (with `B_1 = -1/2`), Bernoulli polynomials,
//! the von Staudt–Clausen relation and the closed form of `denom(B_n)`.

use num_traits::{One, Zero};

use crate::arith::{binomial, binomial_row, is_prime, primes_up_to, rational, to_integer, Int, Poly, Rational};
use crate::error::{Error, Result};

/// Memo table of `B_0..=B_capacity`, built once and then read-only.
///
/// Built from `sum_{k=0}^{n} binom(n+1, k) B_k = 0`. Lookups past the
/// capacity fail with [`Error::CapacityExceeded`]; the table never grows.
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    values: Vec<Rational>,
}

impl BernoulliCache {
    pub fn new(capacity: usize) -> Self {
        let mut values: Vec<Rational> = Vec::with_capacity(capacity + 1);
        values.push(Rational::one());
        for n in 1..=capacity {
            let row = binomial_row(n as u64 + 1);
            let mut sum = Rational::zero();
            for (k, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    sum += b * Rational::from_integer(row[k].clone());
                }
            }
            values.push(-sum / Rational::from_integer(Int::from(n + 1)));
        }
        Self { values }
    }

    /// Largest index held.
    pub fn capacity(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&Rational> {
        self.values.get(n).ok_or(Error::CapacityExceeded {
            requested: n,
            capacity: self.capacity(),
        })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        self.get(n).map(|_| ())
    }
}

pub fn bernoulli_number(cache: &BernoulliCache, n: usize) -> Result<Rational> {
    cache.get(n).cloned()
}

/// `B_n(x) = sum_v binom(n, v) B_{n-v} x^v`.
pub fn bernoulli_polynomial(cache: &BernoulliCache, n: usize) -> Result<Poly> {
    cache.check(n)?;
    let row = binomial_row(n as u64);
    let coeffs = (0..=n)
        .map(|v| &cache.values[n - v] * Rational::from_integer(row[v].clone()))
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

/// `denom(B_n)` in closed form: `prod_{p-1 | n} p` for even `n >= 2`.
pub fn bernoulli_denominator(n: u64) -> Int {
    match n {
        0 => Int::one(),
        1 => Int::from(2),
        _ if n % 2 == 1 => Int::one(),
        _ => staudt_primes(n).into_iter().map(Int::from).product(),
    }
}

/// Primes `p` with `p - 1 | n`, for `n >= 1`.
pub(crate) fn staudt_primes(n: u64) -> Vec<u64> {
    primes_up_to(n + 1)
        .into_iter()
        .filter(|p| n.is_multiple_of(p - 1))
        .collect()
}

/// The integer `B_n + sum_{p-1 | n} 1/p` for even `n >= 2`.
pub fn von_staudt_clausen_witness(cache: &BernoulliCache, n: usize) -> Result<Int> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Domain(format!("n = {n} must be even and at least 2")));
    }
    let mut sum = cache.get(n)?.clone();
    for p in staudt_primes(n as u64) {
        sum += rational(1, p);
    }
    to_integer(&sum).ok_or_else(|| {
        Error::InvariantViolation(format!("B_{n} + sum 1/p = {sum} is not an integer"))
    })
}

/// `sum_{1 <= v <= m-1, p-1 | v} binom(m, v) mod p`; always 0.
pub fn hermite_stern_check(m: u64, p: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let step = (p - 1) as usize;
    let sum: Int = (step.max(1)..m as usize)
        .step_by(step)
        .map(|v| binomial(m, v as i64))
        .sum();
    let r = sum % Int::from(p);
    Ok(r.try_into().expect("residue below p"))
}
