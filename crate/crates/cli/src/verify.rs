//! Named verification sweeps. Each property walks a key range, counts the
//! instances it checked and collects a witness for every failure.

use std::time::{Duration, Instant};

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use umbral_bernoulli::arith::{denominator, divides, primes_up_to};
use umbral_bernoulli::bernoulli::{bernoulli_denominator, hermite_stern_check, von_staudt_clausen_witness};
use umbral_bernoulli::denom::{
    denom_formula, denom_via_psi, integrality_witness, psi, psi_matrix, theorem4_divisibility_sweep,
    Theorem4Part,
};
use umbral_bernoulli::sweep::{map_keys, rectangle};
use umbral_bernoulli::umbral::{
    antidiagonal_sum, bs_direct, bs_polynomial, bs_table_recursive, bs_via_difference,
    is_exceptional_zero, poly_reciprocity_holds, reciprocity_holds,
};
use umbral_bernoulli::BernoulliCache;

use crate::render::{csv_field, OutputFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    /// (-1)^r B_{r,s} = (-1)^s B_{s,r}
    Reciprocity,
    /// anti-diagonal sums vanish for n >= 1, n <= max_r + max_s
    Antidiagonal,
    /// direct sum, recurrence table and difference forms agree
    Paths,
    /// (-1)^r B_{r,s}(x) = (-1)^s B_{s,r}(-x)
    PolyReciprocity,
    /// B_{r,s} = 0 only at (n,0), (0,n) with odd n >= 3
    Nonvanishing,
    /// denom(B_{r,s}) = residue product = Psi product
    Denominators,
    /// B_{r,s} + sum_p Psi_{r,s}(p)/p is integral, r,s >= 2
    Integrality,
    /// Psi matrix structure for primes 5 <= p <= max_r + max_s + 1
    PsiMatrix,
    /// Psi periodicity and reciprocity mod p, 3 <= p <= max_r + max_s + 1
    PsiCongruences,
    /// binomial congruence for m <= max_r, p <= max_s
    HermiteStern,
    /// B_n + sum 1/p integral, closed-form D_n, n <= max_r + max_s
    StaudtClausen,
    /// divisibility properties of D_{r,s}
    Theorem4,
}

impl Property {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    pub fn names() -> Vec<String> {
        Self::value_variants().iter().map(|p| p.name()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub property: String,
    pub range: String,
    pub instances: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Plain => {
                let mut out = format!(
                    "property   {}\nrange      {}\ninstances  {}\nfailures   {}\ntime       {:.3} s\n",
                    self.property,
                    self.range,
                    self.instances,
                    self.failures.len(),
                    self.wall_time.as_secs_f64()
                );
                for n in &self.notes {
                    out.push_str(&format!("note       {n}\n"));
                }
                for w in &self.failures {
                    out.push_str(&format!("witness    {w}\n"));
                }
                out.push_str(if self.passed() { "PASS\n" } else { "FAIL\n" });
                out
            }
            OutputFormat::Csv => {
                let mut out = String::from("property,range,instances,failures,wall_us,witnesses\n");
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    csv_field(&self.property),
                    csv_field(&self.range),
                    self.instances,
                    self.failures.len(),
                    self.wall_time.as_micros(),
                    csv_field(&self.failures.join("; "))
                ));
                out
            }
            OutputFormat::Json => {
                #[derive(Serialize)]
                struct Record<'a> {
                    property: &'a str,
                    range: &'a str,
                    instances: usize,
                    failures: &'a [String],
                    notes: &'a [String],
                    wall_us: u128,
                    passed: bool,
                }
                let rec = Record {
                    property: &self.property,
                    range: &self.range,
                    instances: self.instances,
                    failures: &self.failures,
                    notes: &self.notes,
                    wall_us: self.wall_time.as_micros(),
                    passed: self.passed(),
                };
                serde_json::to_string(&rec).expect("in-memory json serialization") + "\n"
            }
            OutputFormat::Latex => format!(
                "{} & ${}$ & {} & {} \\\\\n",
                self.property,
                self.range.replace("<=", "\\le"),
                self.instances,
                self.failures.len()
            ),
        }
    }
}

/// Accumulates checks for one sweep.
#[derive(Default)]
struct Tally {
    instances: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    /// Merges per-key results produced by a parallel map.
    fn absorb(&mut self, keys: &[(usize, usize)], results: Vec<Vec<(bool, String)>>) {
        for (&(r, s), checks) in keys.iter().zip(results) {
            for (ok, what) in checks {
                self.check(ok, || format!("({r},{s}) {what}"));
            }
        }
    }
}

fn rect_range(r_lo: usize, max_r: usize, s_lo: usize, max_s: usize) -> String {
    format!("{r_lo} <= r <= {max_r}, {s_lo} <= s <= {max_s}")
}

/// Runs one property over `0..=max_r` x `0..=max_s` (or the property's own
/// reading of the two bounds) on `jobs` workers.
pub fn run(property: Property, max_r: usize, max_s: usize, jobs: usize) -> VerifyReport {
    let start = Instant::now();
    let capacity = max_r + max_s + 2;
    let mut t = Tally::default();
    let range;
    match property {
        Property::Reciprocity => {
            range = rect_range(0, max_r, 0, max_s);
            let cache = BernoulliCache::new(capacity);
            let keys = rectangle(0, max_r, 0, max_s);
            let res = map_keys(&keys, jobs, |&(r, s)| {
                let a = bs_direct(&cache, r, s).expect("within capacity");
                let b = bs_direct(&cache, s, r).expect("within capacity");
                vec![(reciprocity_holds(&a, &b, r, s), format!("{a} vs {b}"))]
            });
            t.absorb(&keys, res);
        }
        Property::Antidiagonal => {
            let top = max_r + max_s;
            range = format!("0 <= n <= {top}");
            let cache = BernoulliCache::new(capacity);
            let ns: Vec<usize> = (0..=top).collect();
            let sums = map_keys(&ns, jobs, |&n| antidiagonal_sum(&cache, n).expect("within capacity"));
            for (n, v) in ns.into_iter().zip(sums) {
                let ok = if n == 0 { v.is_one() } else { v.is_zero() };
                t.check(ok, || format!("n={n}: sum {v}"));
            }
        }
        Property::Paths => {
            range = rect_range(0, max_r, 0, max_s);
            let cache = BernoulliCache::new(capacity);
            let table = bs_table_recursive(&cache, max_r, max_s).expect("within capacity");
            let keys = rectangle(0, max_r, 0, max_s);
            let res = map_keys(&keys, jobs, |&(r, s)| {
                let direct = bs_direct(&cache, r, s).expect("within capacity");
                let diff = bs_via_difference(&cache, r, s);
                vec![
                    (&direct == table.get(r, s), format!("direct {direct} vs table {}", table.get(r, s))),
                    (diff.as_ref() == Ok(&direct), format!("direct {direct} vs difference {diff:?}")),
                ]
            });
            t.absorb(&keys, res);
        }
        Property::PolyReciprocity => {
            range = rect_range(0, max_r, 0, max_s);
            let cache = BernoulliCache::new(capacity);
            let keys = rectangle(0, max_r, 0, max_s);
            let res = map_keys(&keys, jobs, |&(r, s)| {
                let a = bs_polynomial(&cache, r, s);
                let b = bs_polynomial(&cache, s, r);
                let ok = matches!((&a, &b), (Ok(a), Ok(b)) if poly_reciprocity_holds(a, b, r, s));
                vec![(ok, "polynomial reciprocity".to_string())]
            });
            t.absorb(&keys, res);
        }
        Property::Nonvanishing => {
            range = rect_range(0, max_r, 0, max_s);
            let cache = BernoulliCache::new(capacity);
            let keys = rectangle(0, max_r, 0, max_s);
            let zero = map_keys(&keys, jobs, |&(r, s)| bs_direct(&cache, r, s).expect("within capacity").is_zero());
            let mut zeros = Vec::new();
            for (&(r, s), z) in keys.iter().zip(zero) {
                if z {
                    zeros.push(format!("({r},{s})"));
                }
                t.check(z == is_exceptional_zero(r, s), || format!("({r},{s}) zero={z}"));
            }
            t.notes.push(format!("{} zeros, all exceptional: {}", zeros.len(), zeros.join(" ")));
        }
        Property::Denominators => {
            range = rect_range(0, max_r, 0, max_s);
            let cache = BernoulliCache::new(capacity);
            let keys = rectangle(0, max_r, 0, max_s);
            let res = map_keys(&keys, jobs, |&(r, s)| {
                let (ru, su) = (r as u64, s as u64);
                let exact = denominator(&bs_direct(&cache, r, s).expect("within capacity"));
                let formula = denom_formula(ru, su);
                let mut checks = vec![
                    (exact == formula.value, format!("exact {exact} vs formula {}", formula.value)),
                    (formula.value == denom_formula(su, ru).value, "formula not symmetric".to_string()),
                ];
                if r >= 2 && s >= 2 {
                    let via_psi = denom_via_psi(ru, su).expect("r, s >= 2");
                    checks.push((exact == via_psi, format!("exact {exact} vs Psi product {via_psi}")));
                }
                checks
            });
            t.absorb(&keys, res);
        }
        Property::Integrality => {
            range = rect_range(2, max_r, 2, max_s);
            let cache = BernoulliCache::new(capacity);
            let keys = rectangle(2, max_r, 2, max_s);
            let res = map_keys(&keys, jobs, |&(r, s)| integrality_checks(&cache, r, s));
            t.absorb(&keys, res);
        }
        Property::PsiMatrix => {
            let top = (max_r + max_s + 1) as u64;
            range = format!("primes 5 <= p <= {top}");
            let primes: Vec<u64> = primes_up_to(top).into_iter().filter(|&p| p >= 5).collect();
            let res = map_keys(&primes, jobs, |&p| psi_matrix(p).map(|m| m.size() * m.size()));
            for (p, r) in primes.into_iter().zip(res) {
                match r {
                    Ok(n) => t.instances += n,
                    Err(e) => t.check(false, || format!("p={p}: {e}")),
                }
            }
        }
        Property::PsiCongruences => {
            let top = (max_r + max_s + 1) as u64;
            range = format!("{}, primes 3 <= p <= {top}", rect_range(1, max_r, 0, max_s));
            let primes: Vec<u64> = primes_up_to(top).into_iter().filter(|&p| p >= 3).collect();
            let res = map_keys(&primes, jobs, |&p| psi_congruences(p, max_r as u64, max_s as u64));
            for part in res {
                t.instances += part.instances;
                t.failures.extend(part.failures);
            }
        }
        Property::HermiteStern => {
            range = format!("1 <= m <= {max_r}, primes p <= {max_s}");
            for p in primes_up_to(max_s as u64) {
                for m in 1..=max_r as u64 {
                    let res = hermite_stern_check(m, p);
                    t.check(res == Ok(0), || format!("m={m} p={p}: {res:?}"));
                }
            }
        }
        Property::StaudtClausen => {
            let top = max_r + max_s;
            range = format!("0 <= n <= {top}");
            let cache = BernoulliCache::new(capacity);
            for n in 0..=top {
                if n >= 2 && n % 2 == 0 {
                    let w = von_staudt_clausen_witness(&cache, n);
                    t.check(w.is_ok(), || format!("n={n}: {w:?}"));
                }
                let exact = denominator(cache.get(n).expect("within capacity"));
                let closed = bernoulli_denominator(n as u64);
                t.check(exact == closed, || format!("n={n}: denom {exact} vs closed form {closed}"));
            }
        }
        Property::Theorem4 => {
            range = rect_range(0, max_r, 0, max_s);
            let cache = BernoulliCache::new(2 * max_r.max(max_s) + 2);
            let report = theorem4_divisibility_sweep(&cache, max_r, max_s, jobs).expect("within capacity");
            t.instances = report.total();
            for part in Theorem4Part::ALL {
                t.notes.push(format!("{}: {} checks", part.label(), report.checked(part)));
            }
            t.failures = report
                .failures
                .iter()
                .map(|(part, k)| format!("({},{}) {}", k.r, k.s, part.label()))
                .collect();
        }
    }
    VerifyReport {
        property: property.name(),
        range,
        instances: t.instances,
        failures: t.failures,
        notes: t.notes,
        wall_time: start.elapsed(),
    }
}

fn integrality_checks(cache: &BernoulliCache, r: usize, s: usize) -> Vec<(bool, String)> {
    let (ru, su) = (r as u64, s as u64);
    let witness = integrality_witness(cache, r, s);
    let exact = denominator(&bs_direct(cache, r, s).expect("within capacity"));
    let via_psi = denom_via_psi(ru, su).expect("r, s >= 2");
    let psi2 = psi(ru, su, 2).expect("prime").value;
    let psi3 = psi(ru, su, 3).expect("prime").value;
    let half = BigInt::from(2u8).pow(r as u32 - 1);
    let mut checks = vec![
        (witness.is_ok(), format!("integrality: {witness:?}")),
        (exact == via_psi, format!("denominator {exact} vs Psi product {via_psi}")),
        (divides(2, &psi2) && psi2 == half, format!("part (i): Psi(2) = {psi2}")),
        (!divides(3, &psi3) && psi3 == half, format!("part (ii): Psi(3) = {psi3}")),
    ];
    for p in primes_up_to(ru + su + 1).into_iter().filter(|&p| p >= 5) {
        if ru % (p - 1) == 0 || su % (p - 1) == 0 {
            let v = psi(ru, su, p).expect("prime").value;
            checks.push((!divides(p, &v), format!("part (iii): p={p} divides Psi = {v}")));
        }
    }
    checks
}

struct PartTally {
    instances: usize,
    failures: Vec<String>,
}

/// Shift periodicity (exact), rank periodicity (mod p) and reciprocity
/// (mod p) for one prime, from a precomputed grid of `Psi_{r,s}(p)`.
fn psi_congruences(p: u64, max_r: u64, max_s: u64) -> PartTally {
    let n = max_r.max(max_s);
    let m = p - 1;
    let grid: Vec<Vec<BigInt>> = (0..=n)
        .map(|r| (0..=n).map(|s| psi(r, s, p).expect("prime").value).collect())
        .collect();
    let modp = |v: &BigInt| v % BigInt::from(p);
    let mut out = PartTally {
        instances: 0,
        failures: Vec::new(),
    };
    let mut check = |ok: bool, w: String| {
        out.instances += 1;
        if !ok {
            out.failures.push(w);
        }
    };
    for r in 1..=max_r {
        for s in 0..=max_s {
            let v = &grid[r as usize][s as usize];
            for s2 in (s % m..=max_s).step_by(m as usize) {
                check(v == &grid[r as usize][s2 as usize], format!("p={p} shift r={r} s={s} s'={s2}"));
            }
            for r2 in (r % m..=max_r).step_by(m as usize).filter(|&x| x >= 1) {
                check(
                    modp(v) == modp(&grid[r2 as usize][s as usize]),
                    format!("p={p} rank r={r} r'={r2} s={s}"),
                );
            }
            if s >= 1 {
                let w = &grid[s as usize][r as usize];
                let diff = if (r + s) % 2 == 0 { v - w } else { v + w };
                check(divides(p, &diff), format!("p={p} reciprocity ({r},{s})"));
            }
        }
    }
    out
}
