//! Exact and analytic evaluation of `v_p(T(N))`, the `p`-adic valuation of the
//! alternating sign matrix numbers
//!
//! ```text
//! T(N) = prod_{j=0}^{N-1} (3j+1)! / (N+j)!
//! ```
//!
//! The crate is split in three layers:
//!
//! - [`exact`]: integer ground truth. Digit sums, Legendre's formula and a
//!   big-integer evaluation of `T(N)` give three independent routes to the
//!   valuation.
//! - [`special`]: Bernoulli numbers, the Hurwitz zeta function (1-periodic in
//!   its second argument) and a real log-gamma.
//! - [`analytic`]: Fourier coefficients of the periodic fluctuations, the
//!   exact expansions for `p = 3`, `p ≡ 1 (mod 3)` and `p ≡ -1 (mod 3)`,
//!   Delange's digit-sum formula, the Dirichlet series `Λ_j(s)` and the
//!   identities tying the residue computation together.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line live in the `asmval` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analytic;
pub mod error;
pub mod exact;
mod math;
pub mod special;

pub use error::{Error, Result};
pub use exact::{Prime, ValuationQuery};
pub use special::ComplexValue;
