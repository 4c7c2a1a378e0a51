//! Cross-checks tying the pieces of the derivation together.
//!
//! Each function returns both sides of an identity; callers decide the
//! tolerance.

use super::coefficients::{chi, coeff_c, coeff_d, delange_coeff, phi2_coeff, real_pow, Shift};
use super::corrections::{
    delange_constant, f0, main_coefficient, remainder_constant, residue_f0, residue_n_coefficient,
};
use super::CaseTag;
use crate::error::Result;
use crate::exact::Prime;
use crate::math::ln;
use crate::special::ComplexValue;

/// `c_k` assembled from Delange's and the residue fluctuations, next to the
/// direct formula.
///
/// `p ≠ 3`: `(2^{1+χ_k} − 1) c_k^{(1)} / (p−1) + c_k^{(2)}`.
/// `p = 3`: `(2^{χ_k} − 1) c_k^{(1)}`, since `S_3(3j+1) = 1 + S_3(j)`.
pub fn coefficient_assembly(k: i64, p: Prime) -> Result<(ComplexValue, ComplexValue)> {
    let x = chi(k, p)?;
    let c1 = delange_coeff(k, p)?;
    let two_x = real_pow(2.0, x);
    let assembled = match CaseTag::of(p) {
        CaseTag::Three => (two_x - 1.0) * c1,
        _ => (two_x * 2.0 - 1.0) * c1 / p.pred() as f64 + phi2_coeff(k, p)?,
    };
    Ok((assembled, coeff_c(k, p)?))
}

/// Sum of the `N`-coefficients contributed by the digit-sum split, the
/// Mellin–Perron rewrite and the residue at `s = 0`, next to `log_p(2/√3)`.
pub fn constant_assembly(p: Prime) -> (f64, f64) {
    let pm1 = p.pred() as f64;
    let sum = ln(2.0) / ln(p.get() as f64)
        + delange_constant(p) / pm1
        + residue_n_coefficient(p)
        + 1.0 / (2.0 * pm1);
    (sum, main_coefficient(p))
}

/// `f_0(N) − f_0^{(2)}(N)` next to the remainder constant `2p / (9(p−1))`.
pub fn remainder_assembly(n: u64, p: Prime) -> Result<(f64, f64)> {
    Ok((f0(n, p)? - residue_f0(n, p)?, remainder_constant(p)?))
}

/// `d_{k,0}` from its closed form next to `d_{k,1} + d_{k,−1}`.
pub fn psi_pair_identity(k: i64, p: Prime) -> Result<(ComplexValue, ComplexValue)> {
    let closed = coeff_d(k, Shift::Zero, p)?;
    let sum = coeff_d(k, Shift::Plus, p)? + coeff_d(k, Shift::Minus, p)?;
    Ok((closed, sum))
}
