//! Scalar terms of the expansions: main coefficient, `g_j`, `f_0`, the
//! residue-side constants and the remainder constant.

use core::f64::consts::PI;

use super::coefficients::Shift;
use super::CaseTag;
use crate::error::{Error, Result};
use crate::exact::Prime;
use crate::math::{ln, ln_1p, sqrt};
use crate::special::log_gamma_real;

fn ln_p(p: Prime) -> f64 {
    ln(p.get() as f64)
}

fn reject_three(p: Prime, what: &'static str) -> Result<()> {
    if CaseTag::of(p) == CaseTag::Three {
        Err(Error::PrimeThree { what })
    } else {
        Ok(())
    }
}

/// Coefficient of `N` in the main term: `log_p(2/√3)`, written as
/// `log_3 2 − 1/2` for `p = 3`.
pub fn main_coefficient(p: Prime) -> f64 {
    match CaseTag::of(p) {
        CaseTag::Three => ln(2.0) / ln(3.0) - 0.5,
        _ => ln(2.0 / sqrt(3.0)) / ln_p(p),
    }
}

/// `g_j(N) = (1 + j/(3N)) · N · log_p(1 + j/(3N))` for `j = ±1`.
pub fn g_j(n: u64, j: Shift, p: Prime) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("g_j needs N >= 1"));
    }
    if j == Shift::Zero {
        return Err(Error::Domain("g_j is defined for j = +1 and j = -1"));
    }
    let nf = n as f64;
    let x = j.third() / nf;
    Ok((1.0 + x) * nf * ln_1p(x) / ln_p(p))
}

/// `lim_{N→∞} g_j(N) = j / (3 log p)`.
pub fn g_j_limit(j: Shift, p: Prime) -> f64 {
    j.third() / ln_p(p)
}

/// `(1/3) log_p(Γ(1/3) / Γ(2/3))`
fn gamma_ratio_term(p: Prime) -> Result<f64> {
    let ratio = log_gamma_real(1.0 / 3.0)? - log_gamma_real(2.0 / 3.0)?;
    Ok(ratio / (3.0 * ln_p(p)))
}

fn theorem_constant(p: Prime) -> f64 {
    let pf = p.get() as f64;
    (pf + 1.0) / (6.0 * (pf - 1.0))
}

/// Least-order term `f_0(N)`.
///
/// For `p ≡ 1 (mod 3)` this is
/// `(1/3) log_p(Γ(1/3)/Γ(2/3)) + (g_1(N) − g_{−1}(N))/6 − 1/(9 log p) + (p+1)/(6(p−1))`,
/// kept exact in `N`. For `p ≡ −1 (mod 3)` it is the constant `(p+1)/(6(p−1))`.
pub fn f0(n: u64, p: Prime) -> Result<f64> {
    match CaseTag::of(p) {
        CaseTag::Three => Err(Error::PrimeThree { what: "f_0" }),
        CaseTag::MinusOneModThree => Ok(theorem_constant(p)),
        CaseTag::OneModThree => {
            let g = g_j(n, Shift::Plus, p)? - g_j(n, Shift::Minus, p)?;
            Ok(gamma_ratio_term(p)? + g / 6.0 - 1.0 / (9.0 * ln_p(p)) + theorem_constant(p))
        }
    }
}

/// `lim_{N→∞} f_0(N)`.
pub fn f0_limit(p: Prime) -> Result<f64> {
    match CaseTag::of(p) {
        CaseTag::Three => Err(Error::PrimeThree { what: "f_0" }),
        CaseTag::MinusOneModThree => Ok(theorem_constant(p)),
        CaseTag::OneModThree => Ok(gamma_ratio_term(p)? + theorem_constant(p)),
    }
}

/// Delange's constant `c_0^{(1)} = ((p−1)/(2 log p))(log 2π − 1) − (p+1)/4`.
pub fn delange_constant(p: Prime) -> f64 {
    let pf = p.get() as f64;
    (pf - 1.0) / (2.0 * ln_p(p)) * (ln(2.0 * PI) - 1.0) - (pf + 1.0) / 4.0
}

/// Coefficient of `N` in the residue at `s = 0`:
/// `−(1/2) log_p 6π + 1/(2 log p) + 1/4`.
pub fn residue_n_coefficient(p: Prime) -> f64 {
    -0.5 * ln(6.0 * PI) / ln_p(p) + 1.0 / (2.0 * ln_p(p)) + 0.25
}

/// Coefficient `f_1^{(2)}` of `log_p N` from the residue at `s = 0`.
pub fn residue_f1(p: Prime) -> Result<f64> {
    match CaseTag::of(p) {
        CaseTag::Three => Err(Error::PrimeThree { what: "f_1^(2)" }),
        CaseTag::OneModThree => Ok(1.0 / 9.0),
        CaseTag::MinusOneModThree => Ok(0.0),
    }
}

/// Constant part `f_0^{(2)}` of the residue at `s = 0`; depends on `N` through
/// `g_{±1}` when `p ≡ 1 (mod 3)`.
pub fn residue_f0(n: u64, p: Prime) -> Result<f64> {
    let pf = p.get() as f64;
    let common = -1.0 / 18.0 - 1.0 / (9.0 * (1.0 - pf));
    match CaseTag::of(p) {
        CaseTag::Three => Err(Error::PrimeThree { what: "f_0^(2)" }),
        CaseTag::MinusOneModThree => Ok(common),
        CaseTag::OneModThree => {
            let g = g_j(n, Shift::Plus, p)? - g_j(n, Shift::Minus, p)?;
            Ok(gamma_ratio_term(p)? + g / 6.0 - 1.0 / (9.0 * ln_p(p)) + common)
        }
    }
}

/// The remainder integral left after the residues, `R = 2p / (9(p−1))`.
pub fn remainder_constant(p: Prime) -> Result<f64> {
    reject_three(p, "remainder constant")?;
    let pf = p.get() as f64;
    Ok(2.0 * pf / (9.0 * (pf - 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn remainder_values() {
        assert!((remainder_constant(p(2)).unwrap() - 4.0 / 9.0).abs() < 1e-15);
        assert!((remainder_constant(p(7)).unwrap() - 7.0 / 27.0).abs() < 1e-15);
        assert!(remainder_constant(p(3)).is_err());
        let mut last = f64::INFINITY;
        for &q in &[2u64, 5, 7, 11, 13, 101, 1_000_003] {
            let r = remainder_constant(p(q)).unwrap();
            assert!(r < last && r > 2.0 / 9.0);
            last = r;
        }
    }

    #[test]
    fn g_values() {
        let direct = (2.0f64 / 3.0) * (2.0f64 / 3.0).ln() / 7f64.ln();
        assert!((g_j(1, Shift::Minus, p(7)).unwrap() - direct).abs() < 1e-15);
        let big = g_j(1_000_000, Shift::Plus, p(7)).unwrap();
        assert!((big - g_j_limit(Shift::Plus, p(7))).abs() < 1e-5);
        for n in [1u64, 2, 10, 1000, 1 << 40] {
            assert!(g_j(n, Shift::Plus, p(7)).unwrap() > 0.0);
            assert!(g_j(n, Shift::Minus, p(7)).unwrap() < 0.0);
        }
        assert!(g_j(0, Shift::Plus, p(7)).is_err());
        assert!(g_j(5, Shift::Zero, p(7)).is_err());
    }

    #[test]
    fn f0_cases() {
        assert_eq!(f0(17, p(2)).unwrap(), 0.5);
        assert_eq!(f0(1, p(5)).unwrap(), 6.0 / 24.0);
        assert!(f0(1, p(3)).is_err());
        assert!(f0_limit(p(3)).is_err());
        let limit = f0_limit(p(7)).unwrap();
        let mut last_gap = f64::INFINITY;
        for n in [10u64, 100, 1000, 10_000] {
            let gap = (f0(n, p(7)).unwrap() - limit).abs();
            // g_1 − g_{−1} = 2/(3 log p) + O(1/N²), so the 1/(9 log p) cancels
            assert!(gap * (n as f64) < 0.1, "n={n} gap={gap}");
            assert!(gap < last_gap);
            last_gap = gap;
        }
    }

    #[test]
    fn main_coefficient_values() {
        assert!((main_coefficient(p(3)) - 0.130_929_753_571_457_4).abs() < 1e-15);
        assert!((main_coefficient(p(2)) - (2.0 / 3f64.sqrt()).log2()).abs() < 1e-15);
    }
}
