//! Exact computation of the umbral Bernoulli numbers
//!
//! ```text
//! B_{r,s} = sum_{v=0}^{r} binom(r, v) B_{s+v}      (rank r >= 0, shift s >= 0)
//! ```
//!
//! together with their polynomial extension `B_{r,s}(x)`, the prime-indexed
//! sums `Psi_{r,s}(p)` and the denominators `D_{r,s}`.
//!
//! Every value is an exact rational. Most quantities can be reached through
//! more than one route (direct sum, recurrence table, forward differences,
//! residue product formula, `Psi` product formula) and the crate exposes all
//! of them so callers can cross-check.
//!
//! The layers are:
//!
//! - [`arith`]: binomials, primes, least positive residues, rational polynomials.
//! - [`bernoulli`]: the sealed [`BernoulliCache`], Bernoulli polynomials,
//!   von Staudt–Clausen and the closed form of `denom(B_n)`.
//! - [`umbral`]: `B_{r,s}` and `B_{r,s}(x)` with their structural identities.
//! - [`denom`]: `Psi_{r,s}(p)`, the integrality relation and the two
//!   denominator product formulas.
//! - [`sweep`]: range partitioning for parallel verification.
//!
//! ```
//! use umbral_bernoulli::{BernoulliCache, umbral, denom};
//!
//! let cache = BernoulliCache::new(16);
//! let b = umbral::bs_direct(&cache, 8, 8).unwrap();
//! assert_eq!(b.to_string(), "362624/36465");
//! assert_eq!(denom::denom_formula(8, 8).value, 36465u32.into());
//! ```

pub mod arith;
pub mod bernoulli;
pub mod denom;
mod error;
pub mod sweep;
pub mod umbral;

pub use arith::{Int, Poly, Rational};
pub use bernoulli::BernoulliCache;
pub use denom::{DenomFactorization, PsiValue};
pub use error::{Error, Result};
pub use umbral::{BsKey, BsTable};
