use num_integer::Integer;
use num_traits::{One, Zero};

use super::Int;

/// All primes `<= bound` in increasing order (sieve of Eratosthenes).
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            for j in (i * i..=n).step_by(i) {
                composite[j] = true;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| !composite[k]).map(|k| k as u64).collect()
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Factors a positive `n` over the primes `<= bound`.
///
/// Returns `(p, exponent)` pairs in increasing order, or `None` if a cofactor
/// with larger prime factors remains.
pub fn factor_small(n: &Int, bound: u64) -> Option<Vec<(u64, u32)>> {
    if n.is_zero() {
        return None;
    }
    let mut rest = n.magnitude().clone();
    let mut out = Vec::new();
    for p in primes_up_to(bound) {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&p.into());
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    rest.is_one().then_some(out)
}
