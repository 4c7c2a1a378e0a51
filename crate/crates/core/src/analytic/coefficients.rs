use core::f64::consts::PI;

use super::CaseTag;
use crate::error::{Error, Result};
use crate::exact::Prime;
use crate::math::ln;
use crate::special::{hurwitz_zeta, riemann_zeta, ComplexValue};

/// Shift index `j ∈ {−1, 0, +1}` of `ψ_j` and `Λ_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shift {
    Minus,
    Zero,
    Plus,
}

impl Shift {
    pub const ALL: [Shift; 3] = [Shift::Minus, Shift::Zero, Shift::Plus];

    pub fn value(self) -> i8 {
        match self {
            Shift::Minus => -1,
            Shift::Zero => 0,
            Shift::Plus => 1,
        }
    }

    pub fn from_value(j: i8) -> Option<Self> {
        match j {
            -1 => Some(Shift::Minus),
            0 => Some(Shift::Zero),
            1 => Some(Shift::Plus),
            _ => None,
        }
    }

    /// `j / 3`
    pub fn third(self) -> f64 {
        self.value() as f64 / 3.0
    }

    pub(crate) fn index(self) -> usize {
        (self.value() + 1) as usize
    }
}

/// `χ_k = 2kπi / log p`.
pub fn chi(k: i64, p: Prime) -> Result<ComplexValue> {
    if k == 0 {
        return Err(Error::Domain("chi index must be nonzero"));
    }
    Ok(ComplexValue::new(
        0.0,
        2.0 * k as f64 * PI / ln(p.get() as f64),
    ))
}

/// `χ_{k/2} = kπi / log p`.
pub fn chi_half(k: i64, p: Prime) -> Result<ComplexValue> {
    if k == 0 {
        return Err(Error::Domain("chi index must be nonzero"));
    }
    Ok(ComplexValue::new(0.0, k as f64 * PI / ln(p.get() as f64)))
}

/// `b^z` for real `b > 0`.
#[inline]
pub(crate) fn real_pow(base: f64, z: ComplexValue) -> ComplexValue {
    (z * ln(base)).exp()
}

/// `χ (1 + χ) log p`
#[inline]
fn kernel(chi: ComplexValue, p: Prime) -> ComplexValue {
    chi * (chi + 1.0) * ln(p.get() as f64)
}

/// Fourier coefficient `c_k` of `Φ`.
///
/// For `p ≠ 3`: `(1 − 2^{1+χ_k} + 3^{χ_k}) ζ(χ_k) / (χ_k (1+χ_k) log p)`.
/// For `p = 3`: `2 (1 − 2^{χ_k}) ζ(χ_k) / (χ_k (1+χ_k) log 3)`.
pub fn coeff_c(k: i64, p: Prime) -> Result<ComplexValue> {
    let x = chi(k, p)?;
    let zeta = riemann_zeta(x)?;
    let two = real_pow(2.0, x);
    let factor = match CaseTag::of(p) {
        CaseTag::Three => (ComplexValue::new(1.0, 0.0) - two) * 2.0,
        _ => ComplexValue::new(1.0, 0.0) - two * 2.0 + real_pow(3.0, x),
    };
    Ok(factor * zeta / kernel(x, p))
}

/// Fourier coefficient `d_{k,j}` of `ψ_j` (`p ≠ 3`).
///
/// For `j = 0` the closed form is returned; it equals `d_{k,1} + d_{k,−1}`.
pub fn coeff_d(k: i64, j: Shift, p: Prime) -> Result<ComplexValue> {
    let case = CaseTag::of(p);
    match (case, j) {
        (CaseTag::Three, _) => Err(Error::PrimeThree { what: "d_{k,j}" }),
        (CaseTag::OneModThree, Shift::Zero) => {
            let x = chi(k, p)?;
            let zeta = riemann_zeta(x)?;
            Ok((real_pow(3.0, x) - 1.0) * zeta / kernel(x, p))
        }
        (CaseTag::OneModThree, _) => {
            let x = chi(k, p)?;
            Ok(hurwitz_zeta(x, j.third())? / kernel(x, p))
        }
        (CaseTag::MinusOneModThree, Shift::Zero) => {
            if k % 2 != 0 {
                return Ok(ComplexValue::new(0.0, 0.0));
            }
            let x = chi_half(k, p)?;
            let zeta = riemann_zeta(x)?;
            Ok((real_pow(3.0, x) - 1.0) * zeta / kernel(x, p))
        }
        (CaseTag::MinusOneModThree, _) => {
            let x = chi_half(k, p)?;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let num = hurwitz_zeta(x, j.third())? + hurwitz_zeta(x, -j.third())? * sign;
            Ok(num / (kernel(x, p) * 2.0))
        }
    }
}

/// Fourier coefficient `c_k^{(1)}` of Delange's fluctuation `Φ^{(1)}`:
/// `−((p−1)/log p) ζ(χ_k) / (χ_k (1+χ_k))`.
pub fn delange_coeff(k: i64, p: Prime) -> Result<ComplexValue> {
    let x = chi(k, p)?;
    let zeta = riemann_zeta(x)?;
    Ok(-zeta * p.pred() as f64 / kernel(x, p))
}

/// Fourier coefficient `c_k^{(2)}` of the residue fluctuation `Φ^{(2)}`:
/// `3^{χ_k} ζ(χ_k) / (χ_k (1+χ_k) log p)` (`p ≠ 3`).
pub fn phi2_coeff(k: i64, p: Prime) -> Result<ComplexValue> {
    if CaseTag::of(p) == CaseTag::Three {
        return Err(Error::PrimeThree { what: "c_k^(2)" });
    }
    let x = chi(k, p)?;
    let zeta = riemann_zeta(x)?;
    Ok(real_pow(3.0, x) * zeta / kernel(x, p))
}
