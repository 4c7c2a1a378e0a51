//! Hurwitz zeta by Euler–Maclaurin summation.
//!
//! The shift is taken modulo 1: `ζ(s, α) = Σ_{n > −α} (n + α)^{−s}` is
//! 1-periodic in `α`, and integer `α` gives the Riemann zeta function.

use once_cell::race::OnceBox;

use alloc::boxed::Box;

use super::bernoulli::{bernoulli_numbers, rational_to_f64};
use super::{ensure_finite, ComplexValue};
use crate::error::{Error, Result};
use crate::math::{ceil, exp, floor, ln, sin_cos};

/// Number of Bernoulli correction terms `B_{2j}` used in the tail.
pub const EULER_MACLAURIN_TAIL_TERMS: usize = 24;

/// Above this `|Im s|` results are still returned but no longer meet the
/// documented accuracy; see [`within_accuracy_envelope`].
pub const ZETA_IM_ENVELOPE: f64 = 5000.0;

const MIN_CUTOFF: usize = 32;

/// `B_{2j} / (2j)!` for `j = 1..=EULER_MACLAURIN_TAIL_TERMS`.
fn tail_coefficients() -> &'static [f64; EULER_MACLAURIN_TAIL_TERMS] {
    static TAIL: OnceBox<[f64; EULER_MACLAURIN_TAIL_TERMS]> = OnceBox::new();
    TAIL.get_or_init(|| {
        let table = bernoulli_numbers(2 * EULER_MACLAURIN_TAIL_TERMS + 1)
            .expect("tail size is within the Bernoulli limit");
        let mut out = [0.0; EULER_MACLAURIN_TAIL_TERMS];
        let mut factorial = num_rational::BigRational::from_integer(1.into());
        let mut k = 0u64;
        for (j, slot) in out.iter_mut().enumerate() {
            let index = 2 * (j + 1);
            while k < index as u64 {
                k += 1;
                factorial *= num_rational::BigRational::from_integer(k.into());
            }
            *slot = rational_to_f64(&(table.as_slice()[index].clone() / factorial.clone()));
        }
        Box::new(out)
    })
}

/// Whether `s` is inside the range where the documented accuracy holds.
pub fn within_accuracy_envelope(s: ComplexValue) -> bool {
    s.im.abs() <= ZETA_IM_ENVELOPE
}

/// Maps `α` to the representative in `(0, 1]`.
pub fn reduce_shift(alpha: f64) -> f64 {
    let r = alpha - floor(alpha);
    if r == 0.0 {
        1.0
    } else {
        r
    }
}

/// Number of directly summed terms before the Euler–Maclaurin correction.
///
/// With `M ≥ |s|/π` the ratio of consecutive Bernoulli terms is at most about
/// `(|s| / 2πM)² ≤ 1/4`, so 24 terms reach double precision.
pub fn euler_maclaurin_cutoff(s: ComplexValue) -> usize {
    let by_size = ceil(s.norm() / core::f64::consts::PI) as usize + 16;
    by_size.max(MIN_CUTOFF)
}

/// `x^{−s}` for real `x > 0`.
#[inline]
fn real_pow_neg(x: f64, s: ComplexValue) -> ComplexValue {
    let l = ln(x);
    let mag = exp(-s.re * l);
    let (sin, cos) = sin_cos(-s.im * l);
    ComplexValue::new(mag * cos, mag * sin)
}

/// `ζ(s, α)` with `α` reduced modulo 1.
///
/// Relative accuracy is about `1e-12` for `|Im s| ≤ 100` and degrades slowly
/// (phase rounding of `t·log n`) to roughly `1e-10` near [`ZETA_IM_ENVELOPE`].
pub fn hurwitz_zeta(s: ComplexValue, alpha: f64) -> Result<ComplexValue> {
    hurwitz_zeta_with_cutoff(s, alpha, euler_maclaurin_cutoff(s))
}

/// [`hurwitz_zeta`] with an explicit direct-summation cutoff.
pub fn hurwitz_zeta_with_cutoff(
    s: ComplexValue,
    alpha: f64,
    cutoff: usize,
) -> Result<ComplexValue> {
    ensure_finite(s, "zeta argument")?;
    if !alpha.is_finite() {
        return Err(Error::NonFinite("zeta shift"));
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole { re: 1.0, im: 0.0 });
    }
    let a = reduce_shift(alpha);
    let one = ComplexValue::new(1.0, 0.0);

    let mut direct = ComplexValue::new(0.0, 0.0);
    for n in (0..cutoff).rev() {
        direct += real_pow_neg(n as f64 + a, s);
    }

    let x = cutoff as f64 + a;
    let x_pow = real_pow_neg(x, s);
    let integral = x_pow * x / (s - one);
    let half = x_pow * 0.5;

    // term_j = B_{2j}/(2j)! · s(s+1)…(s+2j−2) · x^{−s−2j+1}
    let inv_x2 = 1.0 / (x * x);
    let mut factor = s * x_pow / x;
    let mut tail = ComplexValue::new(0.0, 0.0);
    for (j, &coef) in tail_coefficients().iter().enumerate() {
        if j > 0 {
            let m = (2 * j) as f64;
            factor = factor * (s + (m - 1.0)) * (s + m) * inv_x2;
        }
        tail += factor * coef;
    }

    ensure_finite(direct + integral + half + tail, "zeta value")
}

/// `ζ(s) = ζ(s, 1)`.
pub fn riemann_zeta(s: ComplexValue) -> Result<ComplexValue> {
    hurwitz_zeta(s, 1.0)
}
