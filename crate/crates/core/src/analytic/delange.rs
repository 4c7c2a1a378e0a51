use alloc::vec::Vec;

use super::coefficients::delange_coeff;
use super::corrections::delange_constant;
use super::fluctuation::real_series;
use crate::error::{Error, Result};
use crate::exact::Prime;
use crate::math::ln;
use crate::special::ComplexValue;

/// Right-hand side of Delange's formula
/// `Σ_{n<N} S_p(n) = ((p−1)/2) N log_p N + N c_0^{(1)} + N Φ^{(1)}(log_p N)`
/// with `Φ^{(1)}` truncated at a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct DelangeSeries {
    p: Prime,
    coeffs: Vec<ComplexValue>,
}

impl DelangeSeries {
    pub fn new(p: Prime, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("truncation order must be at least 1"));
        }
        let coeffs = (1..=order as i64)
            .map(|k| delange_coeff(k, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { p, coeffs })
    }

    pub fn coefficients(&self) -> &[ComplexValue] {
        &self.coeffs
    }

    /// Truncated `Φ^{(1)}(x)`.
    pub fn fluctuation(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFinite("fluctuation argument"));
        }
        real_series(x, self.coeffs.iter().copied())
    }

    pub fn eval(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::Domain("Delange's formula needs N >= 1"));
        }
        let nf = n as f64;
        let log_n = ln(nf) / ln(self.p.get() as f64);
        let pm1 = self.p.pred() as f64;
        Ok(
            pm1 / 2.0 * nf * log_n
                + nf * delange_constant(self.p)
                + nf * self.fluctuation(log_n)?,
        )
    }
}

/// One-shot [`DelangeSeries::eval`].
pub fn delange_rhs(n: u64, p: Prime, order: usize) -> Result<f64> {
    DelangeSeries::new(p, order)?.eval(n)
}
