//! Envelopes for the Fourier truncation error.
//!
//! The coefficients decay like `|k|^{−3/2}` up to a logarithm. A constant `C`
//! with `|a_k| ≤ C k^{−3/2}` is fitted over `1 ≤ k ≤ k_max`; the sup-norm error
//! of truncating at `K` is then bounded by `2 C Σ_{k>K} k^{−3/2}`.

use super::fluctuation::FourierCoefficientSet;
use crate::error::Result;
use crate::exact::Prime;
use crate::math::{ln, powf, sqrt};

/// Terms summed explicitly before switching to the integral estimate.
const EXPLICIT_TAIL_TERMS: usize = 10_000;

/// Range of `k` used for the fitted constants.
pub const FIT_ORDER: usize = 1000;

/// `Σ_{k>K} k^{−3/2}`.
pub fn power_tail(order: usize) -> f64 {
    let end = order + EXPLICIT_TAIL_TERMS;
    let explicit: f64 = (order + 1..=end).rev().map(|k| powf(k as f64, -1.5)).sum();
    let x = end as f64 + 0.5;
    explicit + 2.0 / sqrt(x)
}

/// `Σ_{k>K} k^{−3/2} (1 + log k)`.
pub fn log_weighted_tail(order: usize) -> f64 {
    let end = order + EXPLICIT_TAIL_TERMS;
    let explicit: f64 = (order + 1..=end)
        .rev()
        .map(|k| {
            let kf = k as f64;
            powf(kf, -1.5) * (1.0 + ln(kf))
        })
        .sum();
    let x = end as f64 + 0.5;
    explicit + (2.0 * (1.0 + ln(x)) + 4.0) / sqrt(x)
}

/// Fitted decay constants for the `c_k` and (when present) `d_{k,j}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailEnvelope {
    pub phi_constant: f64,
    pub psi_constant: Option<f64>,
}

impl TailEnvelope {
    /// `max_k |a_k| k^{3/2}` over the whole set.
    pub fn from_set(set: &FourierCoefficientSet) -> Self {
        let scaled = |k: usize, v: f64| v * powf(k as f64, 1.5);
        let phi_constant = set
            .c_slice()
            .iter()
            .enumerate()
            .map(|(i, c)| scaled(i + 1, c.norm()))
            .fold(0.0, f64::max);
        let psi_constant = set.d_rows().map(|rows| {
            rows.iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().map(move |d| scaled(i + 1, d.norm())))
                .fold(0.0, f64::max)
        });
        Self {
            phi_constant,
            psi_constant,
        }
    }

    /// Fit over `1 ≤ k ≤ k_max`.
    pub fn fit(p: Prime, k_max: usize) -> Result<Self> {
        Ok(Self::from_set(&FourierCoefficientSet::build(p, k_max)?))
    }

    /// Bound on `sup_x |Φ(x) − Φ_K(x)|`.
    pub fn phi_bound(&self, order: usize) -> f64 {
        2.0 * self.phi_constant * power_tail(order)
    }

    /// Bound on `sup_x |ψ_j(x) − ψ_{j,K}(x)|`; zero when there are no `ψ_j`.
    pub fn psi_bound(&self, order: usize) -> f64 {
        self.psi_constant
            .map_or(0.0, |c| 2.0 * c * power_tail(order))
    }

    /// Bound on `|expansion − truncated expansion|` at `N`:
    /// `N·phi_bound + ((N+1/3) + (N−1/3) + N)·psi_bound`.
    pub fn residual_bound(&self, n: u64, order: usize) -> f64 {
        let nf = n as f64;
        nf * self.phi_bound(order) + 3.0 * nf * self.psi_bound(order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tails_match_long_direct_sums() {
        for &k in &[0usize, 25, 400] {
            let direct: f64 = (k + 1..=k + 2_000_000)
                .rev()
                .map(|i| (i as f64).powf(-1.5))
                .sum();
            let rest = 2.0 / ((k + 2_000_000) as f64 + 0.5).sqrt();
            assert!((power_tail(k) - (direct + rest)).abs() < 1e-10);
        }
        // ζ(3/2)
        assert!((power_tail(0) - 2.612_375_348_685_488).abs() < 1e-9);
        assert!(log_weighted_tail(400) > power_tail(400));
    }

    #[test]
    fn envelope_scales_with_order() {
        let env = TailEnvelope::fit(Prime::new(7).unwrap(), 200).unwrap();
        assert!(env.phi_constant > 0.0);
        assert!(env.psi_constant.unwrap() > 0.0);
        assert!(env.phi_bound(400) < env.phi_bound(200));
        let ratio = env.phi_bound(200) / env.phi_bound(400);
        assert!((ratio - 2f64.sqrt()).abs() < 0.01);
        let env3 = TailEnvelope::fit(Prime::new(3).unwrap(), 50).unwrap();
        assert_eq!(env3.psi_constant, None);
        assert_eq!(env3.psi_bound(10), 0.0);
    }
}
