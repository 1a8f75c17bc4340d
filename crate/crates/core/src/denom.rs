//! Denominators `D_{r,s} = denom(B_{r,s})`.
//!
//! `Psi_{r,s}(p)` sums `binom(r, v)` over `0 <= v <= r` with `s + v` even and
//! divisible by `p - 1`. For `r, s >= 2`,
//!
//! ```text
//! B_{r,s} + sum_p Psi_{r,s}(p) / p  is an integer,  D_{r,s} = prod_{p  does not divide Psi_{r,s}(p)} p,
//! ```
//!
//! and for `r, s >= 1` there is the residue form
//! `D_{r,s} = 2^e * 3 * prod { p : 5 <= p <= r+s+1, <r>_{p-1} + <s>_{p-1} >= p-1 }`.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{
    binomial, denominator, divides, factor_small, is_prime, least_positive_residue, primes_up_to,
    rational, to_integer, Int,
};
use crate::bernoulli::{bernoulli_denominator, BernoulliCache};
use crate::error::{Error, Result};
use crate::sweep;
use crate::umbral::{bs_direct, bs_table_recursive, is_exceptional_zero, BsKey};

/// `Psi_{r,s}(p)` together with the indices `v` that contribute to it.
///
/// The value vanishes for `p > r + s + 1` when `s >= 1`. For `s = 0` the index
/// `v = 0` qualifies for every prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiValue {
    pub r: u64,
    pub s: u64,
    pub p: u64,
    pub value: Int,
    pub index_set: Vec<u64>,
}

/// Squarefree `2^eps2 * prod primes`, with `primes` odd and increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenomFactorization {
    pub eps2: u8,
    pub primes: Vec<u64>,
    pub value: Int,
}

impl DenomFactorization {
    fn from_primes(eps2: bool, primes: Vec<u64>) -> Self {
        let value = primes.iter().map(|&p| Int::from(p)).product::<Int>() * if eps2 { 2u8 } else { 1 };
        Self {
            eps2: eps2 as u8,
            primes,
            value,
        }
    }

    /// Every prime factor including 2.
    pub fn all_primes(&self) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.primes.len() + 1);
        if self.eps2 == 1 {
            v.push(2);
        }
        v.extend_from_slice(&self.primes);
        v
    }
}

impl fmt::Display for DenomFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let primes = self.all_primes();
        if primes.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = primes.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(" * "))
    }
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn psi(r: u64, s: u64, p: u64) -> Result<PsiValue> {
    require_prime(p)?;
    let index_set: Vec<u64> = (0..=r)
        .filter(|v| {
            let n = s + v;
            n.is_multiple_of(2) && n.is_multiple_of(p - 1)
        })
        .collect();
    let value = index_set.iter().map(|&v| binomial(r, v as i64)).sum();
    Ok(PsiValue {
        r,
        s,
        p,
        value,
        index_set,
    })
}

/// The integer `B_{r,s} + sum_{2 <= p <= r+s+1} Psi_{r,s}(p) / p` for `r, s >= 2`.
pub fn integrality_witness(cache: &BernoulliCache, r: usize, s: usize) -> Result<Int> {
    if r < 2 || s < 2 {
        return Err(Error::Domain(format!("integrality relation needs r, s >= 2, got ({r},{s})")));
    }
    let mut sum = bs_direct(cache, r, s)?;
    for p in primes_up_to((r + s + 1) as u64) {
        let psi = psi(r as u64, s as u64, p)?;
        if !psi.value.is_zero() {
            sum += crate::arith::Rational::new(psi.value, Int::from(p));
        }
    }
    to_integer(&sum).ok_or_else(|| {
        Error::InvariantViolation(format!("integrality relation fails at ({r},{s}): {sum}"))
    })
}

/// `denom(B_{r,s})` read off the exact value.
pub fn denom_exact(cache: &BernoulliCache, r: usize, s: usize) -> Result<Int> {
    Ok(denominator(&bs_direct(cache, r, s)?))
}

/// `prod { p : 3 <= p <= r+s+1, p does not divide Psi_{r,s}(p) }` for `r, s >= 2`.
pub fn denom_via_psi(r: u64, s: u64) -> Result<Int> {
    if r < 2 || s < 2 {
        return Err(Error::Domain(format!("Psi product formula needs r, s >= 2, got ({r},{s})")));
    }
    let mut prod = Int::one();
    for p in primes_up_to(r + s + 1).into_iter().skip(1) {
        if !divides(p, &psi(r, s, p)?.value) {
            prod *= p;
        }
    }
    Ok(prod)
}

/// `<r>_{p-1} + <s>_{p-1} >= p - 1` for `r, s >= 1` and odd prime `p`.
pub fn residue_criterion(r: u64, s: u64, p: u64) -> Result<bool> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::Domain("residue criterion is stated for odd p".into()));
    }
    Ok(least_positive_residue(r, p - 1)? + least_positive_residue(s, p - 1)? >= p - 1)
}

/// Closed-form factorization of `D_{r,s}`.
///
/// For `r, s >= 1` this is the residue product; otherwise `D_{n,0} = D_{0,n} = D_n`.
pub fn denom_formula(r: u64, s: u64) -> DenomFactorization {
    if r == 0 || s == 0 {
        let n = r.max(s);
        let d = bernoulli_denominator(n);
        let factors = factor_small(&d, n + 1).expect("D_n has prime factors <= n + 1");
        let eps2 = factors.first().is_some_and(|&(p, _)| p == 2);
        let odd = factors.into_iter().map(|(p, _)| p).filter(|&p| p != 2).collect();
        return DenomFactorization::from_primes(eps2, odd);
    }
    let eps2 = (r == 1 || s == 1) && r != s;
    let mut primes = vec![3];
    primes.extend(
        primes_up_to(r + s + 1)
            .into_iter()
            .filter(|&p| p >= 5)
            .filter(|&p| residue_criterion(r, s, p).expect("odd prime, r, s >= 1")),
    );
    DenomFactorization::from_primes(eps2, primes)
}

/// `(-1)^r Psi_{r,s}(p) == (-1)^s Psi_{s,r}(p) (mod p)` for `r, s >= 1`.
pub fn psi_reciprocity_check(r: u64, s: u64, p: u64) -> Result<bool> {
    if r == 0 || s == 0 {
        return Err(Error::Domain(format!("Psi reciprocity needs r, s >= 1, got ({r},{s})")));
    }
    let a = psi(r, s, p)?.value;
    let b = psi(s, r, p)?.value;
    Ok(congruent_signed(&a, r, &b, s, p))
}

/// `(-1)^ea a == (-1)^eb b (mod p)`.
pub(crate) fn congruent_signed(a: &Int, ea: u64, b: &Int, eb: u64, p: u64) -> bool {
    let diff = if (ea + eb).is_multiple_of(2) { a - b } else { a + b };
    divides(p, &diff)
}

/// Shift-periodicity (exact) and rank-periodicity (mod `p`) of `Psi`.
///
/// Requires `r, r2 >= 1`, odd prime `p`, `s == s2` and `r == r2 (mod p-1)`.
pub fn psi_periodicity_check(r: u64, r2: u64, s: u64, s2: u64, p: u64) -> Result<bool> {
    require_prime(p)?;
    if p < 3 {
        return Err(Error::Domain("periodicity is stated for p >= 3".into()));
    }
    if r == 0 || r2 == 0 {
        return Err(Error::Domain(format!("ranks must be >= 1, got {r}, {r2}")));
    }
    let m = p - 1;
    if s % m != s2 % m || r % m != r2 % m {
        return Err(Error::Domain(format!(
            "need s == s' and r == r' (mod {m}), got r={r} r'={r2} s={s} s'={s2}"
        )));
    }
    let base = psi(r, s, p)?.value;
    let shift_exact = base == psi(r, s2, p)?.value && psi(r2, s, p)?.value == psi(r2, s2, p)?.value;
    let rank_mod = divides(p, &(&base - psi(r2, s, p)?.value))
        && divides(p, &(psi(r, s2, p)?.value - psi(r2, s2, p)?.value));
    Ok(shift_exact && rank_mod)
}

/// `(Psi_{r,s}(p))` for `1 <= r, s <= p - 2`, checked against its zero / one /
/// `binom(r, p-1-s)` structure around the anti-diagonal `r + s = p - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiMatrix {
    pub p: u64,
    entries: Vec<Vec<Int>>,
}

impl PsiMatrix {
    /// Dimension `p - 2`.
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 1-based `(r, s)`.
    pub fn get(&self, r: usize, s: usize) -> &Int {
        &self.entries[r - 1][s - 1]
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.entries
    }
}

pub fn psi_matrix(p: u64) -> Result<PsiMatrix> {
    require_prime(p)?;
    if p < 5 {
        return Err(Error::Domain(format!("Psi matrix needs p >= 5, got {p}")));
    }
    let n = p - 2;
    let mut entries = Vec::with_capacity(n as usize);
    for r in 1..=n {
        let mut row = Vec::with_capacity(n as usize);
        for s in 1..=n {
            let v = psi(r, s, p)?.value;
            let ok = match (r + s).cmp(&(p - 1)) {
                std::cmp::Ordering::Less => v.is_zero(),
                std::cmp::Ordering::Equal => v.is_one(),
                std::cmp::Ordering::Greater => {
                    v == binomial(r, (p - 1 - s) as i64) && !divides(p, &v)
                }
            };
            if !ok {
                return Err(Error::InvariantViolation(format!(
                    "Psi matrix structure fails at p={p} (r,s)=({r},{s}): {v}"
                )));
            }
            row.push(v);
        }
        entries.push(row);
    }
    Ok(PsiMatrix { p, entries })
}

/// The divisibility statements about `D_{r,s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem4Part {
    /// `D_{r,s} = D_{s,r}`
    Symmetry,
    /// `D_{0,s} = D_s`
    RowZero,
    /// `D_{1,s}` in terms of `D_s`, `D_{s+1}`
    RowOne,
    /// `2` does not divide `D_{r,s}` for `r, s >= 2`
    NoFactorTwo,
    /// `3 | D_{r,s}` for `r, s >= 1`
    FactorThree,
    /// `p | D_{r,s}` for even `r >= 2`, `p >= 3`, `p - 1 | r`
    RankPrimes,
    Squarefree,
    /// `D_{r,s} = 1` exactly on `(0,0)`, `(n,0)`, `(0,n)` with odd `n >= 3`
    UnitCases,
}

impl Theorem4Part {
    pub const ALL: [Theorem4Part; 8] = [
        Self::Symmetry,
        Self::RowZero,
        Self::RowOne,
        Self::NoFactorTwo,
        Self::FactorThree,
        Self::RankPrimes,
        Self::Squarefree,
        Self::UnitCases,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Self::Symmetry => "(i) symmetry",
            Self::RowZero => "(ii) D_{0,s} = D_s",
            Self::RowOne => "(iii) D_{1,s}",
            Self::NoFactorTwo => "(iv) 2 does not divide D_{r,s}, r,s >= 2",
            Self::FactorThree => "(v) 3 | D_{r,s}, r,s >= 1",
            Self::RankPrimes => "(vi) p | D_{r,s}, p-1 | r even",
            Self::Squarefree => "squarefree",
            Self::UnitCases => "D_{r,s} = 1 cases",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Theorem4Report {
    /// Instances checked per part, indexed like [`Theorem4Part::ALL`].
    pub checked: [usize; 8],
    pub failures: Vec<(Theorem4Part, BsKey)>,
}

impl Theorem4Report {
    pub fn checked(&self, part: Theorem4Part) -> usize {
        self.checked[part as usize]
    }

    pub fn total(&self) -> usize {
        self.checked.iter().sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every divisibility statement about `D_{r,s}` on `0..=max_r` x `0..=max_s`.
///
/// Needs `cache` capacity at least `2 * max(max_r, max_s)` for the symmetry part.
pub fn theorem4_divisibility_sweep(
    cache: &BernoulliCache,
    max_r: usize,
    max_s: usize,
    jobs: usize,
) -> Result<Theorem4Report> {
    let m = max_r.max(max_s);
    let table = bs_table_recursive(cache, m, m)?;
    let denoms: Vec<Vec<Int>> = (0..=m)
        .map(|r| table.row(r).iter().map(denominator).collect())
        .collect();
    let d = |r: usize, s: usize| &denoms[r][s];

    let keys = sweep::rectangle(0, max_r, 0, max_s);
    let per_key = sweep::map_keys(&keys, jobs, |&(r, s)| {
        let mut out: Vec<(Theorem4Part, bool)> = Vec::new();
        let dv = d(r, s);
        out.push((Theorem4Part::Symmetry, dv == d(s, r)));
        if r == 0 {
            out.push((Theorem4Part::RowZero, *dv == bernoulli_denominator(s as u64)));
        }
        if r == 1 {
            let expected = match s {
                0 => Int::from(2),
                1 => Int::from(3),
                _ if s % 2 == 0 => bernoulli_denominator(s as u64),
                _ => bernoulli_denominator(s as u64 + 1),
            };
            out.push((Theorem4Part::RowOne, *dv == expected));
        }
        if r >= 2 && s >= 2 {
            out.push((Theorem4Part::NoFactorTwo, !divides(2, dv)));
        }
        if r >= 1 && s >= 1 {
            out.push((Theorem4Part::FactorThree, divides(3, dv)));
        }
        if r >= 2 && r % 2 == 0 {
            for p in primes_up_to(r as u64 + 1).into_iter().skip(1) {
                if (r as u64).is_multiple_of(p - 1) {
                    out.push((Theorem4Part::RankPrimes, divides(p, dv)));
                }
            }
        }
        let squarefree = factor_small(dv, (r + s + 1) as u64).is_some_and(|f| f.iter().all(|&(_, e)| e == 1));
        out.push((Theorem4Part::Squarefree, squarefree));
        let unit_expected = (r == 0 && s == 0) || is_exceptional_zero(r, s);
        out.push((Theorem4Part::UnitCases, dv.is_one() == unit_expected));
        out
    });

    let mut report = Theorem4Report::default();
    for (&(r, s), checks) in keys.iter().zip(per_key) {
        for (part, ok) in checks {
            report.checked[part as usize] += 1;
            if !ok {
                report.failures.push((part, BsKey::new(r, s)));
            }
        }
    }
    Ok(report)
}

/// Exact `Psi_{r,s}(p) / p` summed over the primes `2 <= p <= r+s+1`, as a rational.
pub fn psi_fraction_sum(r: u64, s: u64) -> Result<crate::arith::Rational> {
    let mut sum = rational(0, 1);
    for p in primes_up_to(r + s + 1) {
        sum += crate::arith::Rational::new(psi(r, s, p)?.value, Int::from(p));
    }
    Ok(sum)
}
