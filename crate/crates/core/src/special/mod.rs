//! Special functions for the analytic formulas.

mod bernoulli;
mod gamma;
mod zeta;

pub use bernoulli::{bernoulli_numbers, BernoulliTable, MAX_BERNOULLI_COUNT};
pub use gamma::log_gamma_real;
pub use zeta::{
    euler_maclaurin_cutoff, hurwitz_zeta, hurwitz_zeta_with_cutoff, reduce_shift, riemann_zeta,
    within_accuracy_envelope, EULER_MACLAURIN_TAIL_TERMS, ZETA_IM_ENVELOPE,
};

use crate::error::{Error, Result};

/// Complex carrier for `s`, `χ_k` and every zeta or coefficient value.
pub type ComplexValue = num_complex::Complex64;

/// Rejects NaN and infinite components.
pub fn ensure_finite(z: ComplexValue, what: &'static str) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}
