//! The numbers `B_{r,s} = sum_{v=0}^{r} binom(r, v) B_{s+v}` and the polynomials
//! `B_{r,s}(x) = sum_{v=0}^{r} binom(r, v) B_{s+v}(x)`.
//!
//! Three independent routes produce the numbers: the defining sum
//! ([`bs_direct`]), the recurrence `B_{r+1,s} = B_{r,s} + B_{r,s+1}` seeded
//! by row 0 ([`bs_table_recursive`]) and iterated forward differences of
//! `(-1)^v B_v` ([`bs_via_difference`]).

use num_traits::{One, Zero};

use crate::arith::{binomial_row, integer_combination, signed, Int, Poly, Rational};
use crate::bernoulli::{bernoulli_polynomial, BernoulliCache};
use crate::error::{Error, Result};

/// Rank `r` and shift `s` of `B_{r,s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BsKey {
    pub r: usize,
    pub s: usize,
}

impl BsKey {
    pub fn new(r: usize, s: usize) -> Self {
        Self { r, s }
    }

    /// Index of the anti-diagonal the key lies on.
    pub fn weight(self) -> usize {
        self.r + self.s
    }

    pub fn swapped(self) -> Self {
        Self { r: self.s, s: self.r }
    }
}

/// Dense row-major grid of `B_{r,s}` for `0 <= r <= max_r`, `0 <= s <= max_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BsTable {
    max_r: usize,
    max_s: usize,
    entries: Vec<Rational>,
}

impl BsTable {
    pub fn max_r(&self) -> usize {
        self.max_r
    }

    pub fn max_s(&self) -> usize {
        self.max_s
    }

    /// Panics if the key is outside the table.
    pub fn get(&self, r: usize, s: usize) -> &Rational {
        assert!(r <= self.max_r && s <= self.max_s, "({r},{s}) outside table");
        &self.entries[r * (self.max_s + 1) + s]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        let w = self.max_s + 1;
        &self.entries[r * w..(r + 1) * w]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.max_s + 1)
    }
}

/// `B_{r,s}` from the defining binomial sum.
pub fn bs_direct(cache: &BernoulliCache, r: usize, s: usize) -> Result<Rational> {
    cache.check(r + s)?;
    let b = cache.values();
    Ok(integer_combination(
        binomial_row(r as u64).into_iter().zip(&b[s..=s + r]),
    ))
}

/// Fills the rectangle by `B_{r+1,s} = B_{r,s} + B_{r,s+1}` from `B_{0,s} = B_s`.
pub fn bs_table_recursive(cache: &BernoulliCache, max_r: usize, max_s: usize) -> Result<BsTable> {
    let width = max_r + max_s;
    cache.check(width)?;
    let mut entries = Vec::with_capacity((max_r + 1) * (max_s + 1));
    // current row r holds columns 0..=width - r
    let mut current: Vec<Rational> = cache.values()[..=width].to_vec();
    for r in 0..=max_r {
        entries.extend_from_slice(&current[..=max_s]);
        if r < max_r {
            current = current.windows(2).map(|w| &w[0] + &w[1]).collect();
        }
    }
    Ok(BsTable { max_r, max_s, entries })
}

/// `Delta^n f(x) = sum_v binom(n, v) (-1)^{n-v} f(x + v)`.
pub fn forward_difference<F>(n: usize, x: usize, mut f: F) -> Rational
where
    F: FnMut(usize) -> Rational,
{
    let values: Vec<Rational> = (0..=n).map(|v| f(x + v)).collect();
    integer_combination(
        binomial_row(n as u64)
            .into_iter()
            .enumerate()
            .map(|(v, c)| if (n - v).is_multiple_of(2) { c } else { -c })
            .zip(&values),
    )
}

/// `B_{r,s}` as `(-1)^{r+s} Delta^r g(s)` and as `Delta^s g(r)` with
/// `g(v) = (-1)^v B_v`. Both forms are evaluated and must agree.
pub fn bs_via_difference(cache: &BernoulliCache, r: usize, s: usize) -> Result<Rational> {
    cache.check(r + s)?;
    let b = cache.values();
    let g = |v: usize| signed(b[v].clone(), v as u64);
    let over_rank = signed(forward_difference(r, s, g), (r + s) as u64);
    let over_shift = forward_difference(s, r, g);
    if over_rank != over_shift {
        return Err(Error::InvariantViolation(format!(
            "difference forms disagree at ({r},{s}): {over_rank} vs {over_shift}"
        )));
    }
    Ok(over_rank)
}

/// Checks `B_{r+n,s} = sum_v binom(n, v) B_{r,s+v}`.
pub fn bs_shift_identity_check(cache: &BernoulliCache, r: usize, s: usize, n: usize) -> Result<bool> {
    cache.check(r + s + n)?;
    let lhs = bs_direct(cache, r + n, s)?;
    let mut rhs = Rational::zero();
    for (v, c) in binomial_row(n as u64).into_iter().enumerate() {
        rhs += bs_direct(cache, r, s + v)? * Rational::from_integer(c);
    }
    Ok(lhs == rhs)
}

/// `sum_{r+s=n} B_{r,s}`: 1 for `n = 0`, otherwise 0.
pub fn antidiagonal_sum(cache: &BernoulliCache, n: usize) -> Result<Rational> {
    cache.check(n)?;
    let mut sum = Rational::zero();
    for r in 0..=n {
        sum += bs_direct(cache, r, n - r)?;
    }
    Ok(sum)
}

/// `B_{r,s}(x)`, of degree exactly `r + s` with leading coefficient 1.
pub fn bs_polynomial(cache: &BernoulliCache, r: usize, s: usize) -> Result<Poly> {
    cache.check(r + s)?;
    let mut acc = Poly::zero();
    for (v, c) in binomial_row(r as u64).into_iter().enumerate() {
        let bp = bernoulli_polynomial(cache, s + v)?;
        acc = &acc + &bp.scale(&Rational::from_integer(c));
    }
    if acc.degree() != Some(r + s) || !acc.leading_coeff().is_some_and(One::is_one) {
        return Err(Error::InvariantViolation(format!(
            "B_{{{r},{s}}}(x) does not have monic degree {}",
            r + s
        )));
    }
    Ok(acc)
}

/// The Denneberg–Grabisch numbers `b_m^d = B_{m, d-m}`.
pub fn grabisch_b(cache: &BernoulliCache, m: usize, d: usize) -> Result<Rational> {
    if m > d {
        return Err(Error::Domain(format!("b_m^d needs m <= d, got m = {m}, d = {d}")));
    }
    bs_direct(cache, m, d - m)
}

/// `true` iff `(-1)^r B_{r,s} = (-1)^s B_{s,r}`.
pub fn reciprocity_holds(b_rs: &Rational, b_sr: &Rational, r: usize, s: usize) -> bool {
    signed(b_rs.clone(), r as u64) == signed(b_sr.clone(), s as u64)
}

/// `true` iff `(-1)^r B_{r,s}(x) = (-1)^s B_{s,r}(-x)` coefficientwise.
pub fn poly_reciprocity_holds(p_rs: &Poly, p_sr: &Poly, r: usize, s: usize) -> bool {
    let sign = |n: usize| Rational::from_integer(Int::from(crate::arith::neg_one_pow(n as u64)));
    p_rs.scale(&sign(r)) == p_sr.compose_neg().scale(&sign(s))
}

/// Keys where `B_{r,s}` vanishes: `(n, 0)` and `(0, n)` for odd `n >= 3`.
pub fn is_exceptional_zero(r: usize, s: usize) -> bool {
    let odd3 = |n: usize| n >= 3 && n % 2 == 1;
    (s == 0 && odd3(r)) || (r == 0 && odd3(s))
}
