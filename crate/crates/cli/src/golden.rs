//! Frozen tail-envelope constants.
//!
//! The constants are measured once and stored as JSON so that later runs
//! compare against fixed numbers instead of re-fitting on the data they check.

use asmval_core::analytic::tail::{TailEnvelope, FIT_ORDER};
use asmval_core::analytic::{theorem_rhs, FourierCoefficientSet};
use asmval_core::exact::vp_t_legendre;
use asmval_core::{Prime, ValuationQuery};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Envelope constants for one prime, fitted over `1 ≤ k ≤ fit_order`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailConstants {
    pub prime: u64,
    pub fit_order: usize,
    pub phi_constant: f64,
    pub psi_constant: Option<f64>,
}

impl TailConstants {
    pub fn measure(p: Prime) -> Result<Self, CliError> {
        let env = TailEnvelope::fit(p, FIT_ORDER)?;
        Ok(Self {
            prime: p.get(),
            fit_order: FIT_ORDER,
            phi_constant: env.phi_constant,
            psi_constant: env.psi_constant,
        })
    }

    pub fn envelope(&self) -> TailEnvelope {
        TailEnvelope {
            phi_constant: self.phi_constant,
            psi_constant: self.psi_constant,
        }
    }
}

/// `max |v_p(T(N)) − expansion| / (√N log N)` over `n_min ≤ N ≤ n_max`.
pub fn residual_scale(
    set: &FourierCoefficientSet,
    n_min: u64,
    n_max: u64,
) -> Result<f64, CliError> {
    let p = set.prime();
    let mut worst: f64 = 0.0;
    for n in n_min.max(2)..=n_max {
        let q = ValuationQuery::new(p, n);
        let r = vp_t_legendre(&q)? as f64 - theorem_rhs(&q, set)?.total;
        let nf = n as f64;
        worst = worst.max(r.abs() / (nf.sqrt() * nf.ln()));
    }
    Ok(worst)
}

/// Rounds up to two significant digits.
pub fn round_up_two_digits(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let scale = 10f64.powi(x.log10().floor() as i32 - 1);
    let up = (x / scale).ceil() * scale;
    // snap to the shortest decimal so the stored value reads as two digits
    format!("{up:.1e}").parse().expect("formatted float parses")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenEntry {
    #[serde(flatten)]
    pub tail: TailConstants,
    /// `phi_bound` at the file's truncation order.
    pub phi_bound: f64,
    /// Frozen bound on the residual scale over the recorded range; absent for
    /// `p = 3`, whose expansion has no lower-order terms.
    pub residual_scale: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenFile {
    pub fourier_terms: usize,
    pub residual_n_min: u64,
    pub residual_n_max: u64,
    pub entries: Vec<GoldenEntry>,
}

impl GoldenFile {
    pub fn measure(
        primes: &[u64],
        fourier_terms: usize,
        residual_n_min: u64,
        residual_n_max: u64,
    ) -> Result<Self, CliError> {
        let mut entries = Vec::new();
        for &pv in primes {
            let p = Prime::new(pv)?;
            let tail = TailConstants::measure(p)?;
            let phi_bound = tail.envelope().phi_bound(fourier_terms);
            let residual_scale = if pv == 3 {
                None
            } else {
                let set = FourierCoefficientSet::build(p, fourier_terms)?;
                Some(round_up_two_digits(residual_scale(
                    &set,
                    residual_n_min,
                    residual_n_max,
                )?))
            };
            entries.push(GoldenEntry {
                tail,
                phi_bound,
                residual_scale,
            });
        }
        Ok(Self {
            fourier_terms,
            residual_n_min,
            residual_n_max,
            entries,
        })
    }

    pub fn entry(&self, prime: u64) -> Option<&GoldenEntry> {
        self.entries.iter().find(|e| e.tail.prime == prime)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_up_two_digits(0.01047), 0.011);
        assert_eq!(round_up_two_digits(0.0), 0.0);
        assert!((round_up_two_digits(123.0) - 130.0).abs() < 1e-9);
        assert!(round_up_two_digits(0.012) >= 0.012);
    }
}
