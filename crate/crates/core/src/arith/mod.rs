//! Exact arithmetic substrate: big integers, reduced rationals, binomial
//! coefficients, small primes and dense rational polynomials.

mod binomial;
mod poly;
mod primes;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use binomial::{binomial, binomial_row};
pub use poly::Poly;
pub use primes::{factor_small, is_prime, primes_up_to};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Reduced fraction with positive denominator; zero is `0/1`.
pub type Rational = BigRational;

/// Builds `num/den` in lowest terms. Panics if `den` is zero.
pub fn rational(num: impl Into<Int>, den: impl Into<Int>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rational_int(n: impl Into<Int>) -> Rational {
    Rational::from_integer(n.into())
}

/// Smallest positive `d` with `d * q` integral.
pub fn denominator(q: &Rational) -> Int {
    q.denom().clone()
}

/// Returns `q` as an integer, or `None` if it has a nontrivial denominator.
pub fn to_integer(q: &Rational) -> Option<Int> {
    q.denom().is_one().then(|| q.numer().clone())
}

/// `(-1)^n` as a sign multiplier.
pub fn neg_one_pow(n: u64) -> i32 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Applies `(-1)^n` to `q`.
pub fn signed(q: Rational, n: u64) -> Rational {
    if n.is_multiple_of(2) {
        q
    } else {
        -q
    }
}

/// `sum_i c_i * q_i` over a common denominator, reduced once at the end.
pub fn integer_combination<'a, I>(terms: I) -> Rational
where
    I: IntoIterator<Item = (Int, &'a Rational)>,
{
    let terms: Vec<(Int, &Rational)> = terms.into_iter().filter(|(c, q)| !c.is_zero() && !q.is_zero()).collect();
    let common = terms.iter().fold(Int::one(), |l, (_, q)| l.lcm(q.denom()));
    let mut num = Int::zero();
    for (c, q) in terms {
        num += c * q.numer() * (&common / q.denom());
    }
    Rational::new(num, common)
}

/// Least positive residue `<x>_m`, the unique value in `1..=m` congruent to `x`.
///
/// Returns `m` rather than `0` when `m | x`. `x = 0` is rejected.
pub fn least_positive_residue(x: u64, m: u64) -> Result<u64> {
    if x == 0 {
        return Err(Error::Domain("least positive residue of 0 is not used".into()));
    }
    if m == 0 {
        return Err(Error::Domain("modulus must be positive".into()));
    }
    Ok((x - 1) % m + 1)
}

/// `true` iff `n` is zero or `p` divides it.
pub fn divides(p: u64, n: &Int) -> bool {
    (n % Int::from(p)).is_zero()
}
