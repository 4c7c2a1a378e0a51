use core::f64::consts::PI;

use super::coefficients::{real_pow, Shift};
use super::CaseTag;
use crate::error::{Error, Result};
use crate::exact::{vp_integer, Prime};
use crate::math::{ln, round};
use crate::special::{ensure_finite, hurwitz_zeta, ComplexValue};

/// `Λ_j(s) = (ζ(s, j/3) + p^s ζ(s, uj/3)) / (p^{2s} − 1)` with `p ≡ u (mod 3)`.
///
/// Poles at `s = 1` and at the zeros of `p^{2s} − 1` (`s = kπi / log p`) are
/// rejected.
pub fn lambda_closed_form(s: ComplexValue, j: Shift, p: Prime) -> Result<ComplexValue> {
    let u = CaseTag::of(p)
        .u()
        .ok_or(Error::PrimeThree { what: "Lambda_j" })?;
    ensure_finite(s, "Lambda argument")?;
    let ln_p = ln(p.get() as f64);
    if s.re == 0.0 {
        let k = s.im * ln_p / PI;
        if (k - round(k)).abs() < 1e-12 {
            return Err(Error::Pole { re: s.re, im: s.im });
        }
    }
    let third = j.third();
    let num =
        hurwitz_zeta(s, third)? + real_pow(p.get() as f64, s) * hurwitz_zeta(s, u as f64 * third)?;
    let den = real_pow(p.get() as f64, s * 2.0) - 1.0;
    ensure_finite(num / den, "Lambda value")
}

/// Brute-force `Σ_{n > −j/3} v_p(3n + j) / (n + j/3)^s` over the first `terms`
/// admissible `n`, for `Re s > 1`.
///
/// The omitted tail is replaced by its mean-value estimate: `v_p(3n + j)` has
/// average `1/(p−1)` for `p ≠ 3`, so the tail is
/// `(1/(p−1)) ∫_{n_end − 1/2}^∞ (x + j/3)^{−s} dx` up to `O(log n_end / n_end^{Re s})`.
/// Zeta values are not used, which keeps this independent of
/// [`lambda_closed_form`].
pub fn lambda_dirichlet_series(
    s: ComplexValue,
    j: Shift,
    p: Prime,
    terms: u64,
) -> Result<ComplexValue> {
    if CaseTag::of(p) == CaseTag::Three {
        return Err(Error::PrimeThree { what: "Lambda_j" });
    }
    if s.re <= 1.0 {
        return Err(Error::Domain("the Dirichlet series needs Re s > 1"));
    }
    let jv = j.value() as i64;
    let first: u64 = if jv > 0 { 0 } else { 1 };
    let mut acc = ComplexValue::new(0.0, 0.0);
    for n in first..first + terms {
        let m = (3 * n as i64 + jv) as u64;
        let v = vp_integer(p, m)?;
        if v != 0 {
            let x = m as f64 / 3.0;
            acc += real_pow(x, -s) * v as f64;
        }
    }
    let end = (first + terms) as f64 - 0.5 + j.third();
    let tail = real_pow(end, ComplexValue::new(1.0, 0.0) - s) / (s - 1.0) / p.pred() as f64;
    ensure_finite(acc + tail, "Dirichlet series")
}
