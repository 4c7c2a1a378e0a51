use alloc::vec::Vec;
use core::f64::consts::PI;

use super::coefficients::{chi, coeff_c, coeff_d, Shift};
use super::CaseTag;
use crate::error::{Error, Result};
use crate::exact::Prime;
use crate::math::{floor, ln, sin_cos};
use crate::special::{within_accuracy_envelope, ComplexValue};

/// Largest tolerated imaginary part of a truncated real Fourier series.
pub const IMAGINARY_TOLERANCE: f64 = 1e-9;

/// Coefficients `c_k` (and `d_{k,j}` for `p ≠ 3`) for `1 ≤ k ≤ K`.
///
/// Negative indices are served through Hermitian symmetry
/// `c_{−k} = conj(c_k)`, so the evaluated series are real by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficientSet {
    p: Prime,
    case: CaseTag,
    c: Vec<ComplexValue>,
    d: Option<Vec<[ComplexValue; 3]>>,
    outside_envelope: Vec<bool>,
}

impl FourierCoefficientSet {
    pub fn build(p: Prime, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("truncation order must be at least 1"));
        }
        let case = CaseTag::of(p);
        let mut c = Vec::with_capacity(order);
        let mut d = (case != CaseTag::Three).then(|| Vec::with_capacity(order));
        let mut outside_envelope = Vec::with_capacity(order);
        for k in 1..=order as i64 {
            c.push(coeff_c(k, p)?);
            if let Some(d) = d.as_mut() {
                let mut row = [ComplexValue::new(0.0, 0.0); 3];
                for j in Shift::ALL {
                    row[j.index()] = coeff_d(k, j, p)?;
                }
                d.push(row);
            }
            // |χ_{k/2}| < |χ_k|, so c_k decides
            outside_envelope.push(!within_accuracy_envelope(chi(k, p)?));
        }
        Ok(Self {
            p,
            case,
            c,
            d,
            outside_envelope,
        })
    }

    /// Assembles a set from already computed coefficients, e.g. values read
    /// back from a file. `d` must be present exactly when `p ≠ 3` and have the
    /// same length as `c`.
    pub fn from_parts(
        p: Prime,
        c: Vec<ComplexValue>,
        d: Option<Vec<[ComplexValue; 3]>>,
    ) -> Result<Self> {
        let case = CaseTag::of(p);
        if c.is_empty() {
            return Err(Error::Domain("truncation order must be at least 1"));
        }
        match (&d, case) {
            (Some(_), CaseTag::Three) => return Err(Error::PrimeThree { what: "d_{k,j}" }),
            (None, CaseTag::OneModThree | CaseTag::MinusOneModThree) => {
                return Err(Error::Domain("missing psi coefficients"))
            }
            (Some(d), _) if d.len() != c.len() => {
                return Err(Error::Domain("c and d have different truncation orders"))
            }
            _ => {}
        }
        let outside_envelope = (1..=c.len() as i64)
            .map(|k| chi(k, p).map(|x| !within_accuracy_envelope(x)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            p,
            case,
            c,
            d,
            outside_envelope,
        })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.c.len()
    }

    /// `c_k` for `1 ≤ |k| ≤ K`.
    pub fn c(&self, k: i64) -> Option<ComplexValue> {
        let v = *self.c.get(k.unsigned_abs().checked_sub(1)? as usize)?;
        Some(if k < 0 { v.conj() } else { v })
    }

    /// `d_{k,j}` for `1 ≤ |k| ≤ K`; `None` for `p = 3`.
    pub fn d(&self, k: i64, j: Shift) -> Option<ComplexValue> {
        let row = self
            .d
            .as_ref()?
            .get(k.unsigned_abs().checked_sub(1)? as usize)?;
        let v = row[j.index()];
        Some(if k < 0 { v.conj() } else { v })
    }

    pub fn c_slice(&self) -> &[ComplexValue] {
        &self.c
    }

    pub fn d_rows(&self) -> Option<&[[ComplexValue; 3]]> {
        self.d.as_deref()
    }

    /// Whether coefficient `k` needed a zeta value beyond the accuracy envelope.
    pub fn outside_envelope(&self, k: usize) -> bool {
        k >= 1 && self.outside_envelope.get(k - 1).copied().unwrap_or(false)
    }

    pub fn any_outside_envelope(&self) -> bool {
        self.outside_envelope.iter().any(|&b| b)
    }
}

fn fract(x: f64) -> f64 {
    x - floor(x)
}

/// `Σ_{1≤|k|≤K} a_k e^{2πik·phase}` with `a_{−k} = conj(a_k)`, pairs summed
/// for ascending `k`.
pub(crate) fn real_series(phase: f64, coeffs: impl Iterator<Item = ComplexValue>) -> Result<f64> {
    let phase = fract(phase);
    let mut re = 0.0;
    let mut im = 0.0;
    for (i, a) in coeffs.enumerate() {
        let k = (i + 1) as f64;
        let theta = 2.0 * PI * fract(k * phase);
        let (sin, cos) = sin_cos(theta);
        let e = ComplexValue::new(cos, sin);
        let pair = a * e + a.conj() * e.conj();
        re += pair.re;
        im += pair.im;
    }
    if !re.is_finite() {
        return Err(Error::NonFinite("Fourier series"));
    }
    if im.abs() > IMAGINARY_TOLERANCE {
        return Err(Error::ImaginaryResidue(im));
    }
    Ok(re)
}

/// Truncated `Φ(x) = Σ_{1≤|k|≤K} c_k e^{2kπix}`.
pub fn phi_eval(x: f64, coeffs: &FourierCoefficientSet) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite("fluctuation argument"));
    }
    real_series(x, coeffs.c.iter().copied())
}

fn psi_eval(x: f64, j: Shift, period: f64, rows: &[[ComplexValue; 3]]) -> Result<f64> {
    real_series(x / period, rows.iter().map(|r| r[j.index()]))
}

/// Truncated
/// `Ψ(N) = (N+1/3) ψ_1(log_p(N+1/3)) + (N−1/3) ψ_{−1}(log_p(N−1/3)) − N ψ_0(log_p N)`.
///
/// The `ψ_j` are 1-periodic for `p ≡ 1 (mod 3)` and 2-periodic (kernel
/// `e^{kπix}`) for `p ≡ −1 (mod 3)`.
pub fn psi_big_eval(n: u64, coeffs: &FourierCoefficientSet) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("Psi needs N >= 1"));
    }
    let (Some(rows), Some(period)) = (coeffs.d.as_deref(), coeffs.case.psi_period()) else {
        return Err(Error::PrimeThree { what: "Psi" });
    };
    let ln_p = ln(coeffs.p.get() as f64);
    let nf = n as f64;
    let mut total = 0.0;
    for j in [Shift::Plus, Shift::Minus] {
        let y = nf + j.third();
        total += y * psi_eval(ln(y) / ln_p, j, period, rows)?;
    }
    total -= nf * psi_eval(ln(nf) / ln_p, Shift::Zero, period, rows)?;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pv: u64, k: usize) -> FourierCoefficientSet {
        FourierCoefficientSet::build(Prime::new(pv).unwrap(), k).unwrap()
    }

    #[test]
    fn accessors_and_symmetry() {
        let s = set(7, 10);
        assert_eq!(s.order(), 10);
        assert_eq!(s.case(), CaseTag::OneModThree);
        assert_eq!(s.c(-3), s.c(3).map(|v| v.conj()));
        assert_eq!(s.c(0), None);
        assert_eq!(s.c(11), None);
        assert_eq!(s.d(-2, Shift::Plus), s.d(2, Shift::Plus).map(|v| v.conj()));
        assert!(set(3, 4).d(1, Shift::Plus).is_none());
        assert!(FourierCoefficientSet::build(Prime::new(2).unwrap(), 0).is_err());
    }

    #[test]
    fn phi_is_periodic_on_dyadic_points() {
        let s = set(2, 50);
        for &x in &[0.0, 0.125, 0.5, 0.8125, 3.375] {
            assert_eq!(phi_eval(x, &s).unwrap(), phi_eval(x + 1.0, &s).unwrap());
        }
    }

    #[test]
    fn phi_has_zero_mean() {
        let s = set(5, 40);
        let m = 10_000;
        let mean: f64 = (0..m)
            .map(|i| phi_eval(i as f64 / m as f64, &s).unwrap())
            .sum::<f64>()
            / m as f64;
        assert!(mean.abs() < 1e-6, "{mean}");
    }

    #[test]
    fn psi_requires_p_not_three() {
        assert_eq!(
            psi_big_eval(10, &set(3, 5)),
            Err(Error::PrimeThree { what: "Psi" })
        );
        assert!(psi_big_eval(0, &set(2, 5)).is_err());
        assert!(psi_big_eval(10, &set(2, 5)).unwrap().is_finite());
    }

    #[test]
    fn envelope_flags() {
        // p = 2: |χ_k| = 9.06 k crosses 5000 at k = 552
        let s = set(2, 560);
        assert!(!s.outside_envelope(551));
        assert!(s.outside_envelope(552));
        assert!(s.any_outside_envelope());
        assert!(!set(7, 100).any_outside_envelope());
    }

    #[test]
    fn from_parts_validation() {
        let s = set(2, 6);
        let rebuilt = FourierCoefficientSet::from_parts(
            s.prime(),
            s.c_slice().to_vec(),
            s.d_rows().map(|d| d.to_vec()),
        )
        .unwrap();
        assert_eq!(rebuilt, s);
        let p3 = Prime::new(3).unwrap();
        assert!(FourierCoefficientSet::from_parts(p3, s.c_slice().to_vec(), None).is_ok());
        assert!(FourierCoefficientSet::from_parts(s.prime(), s.c_slice().to_vec(), None).is_err());
    }
}
