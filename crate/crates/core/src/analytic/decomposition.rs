use super::corrections::{f0, main_coefficient, residue_f1};
use super::fluctuation::{phi_eval, psi_big_eval, FourierCoefficientSet};
use super::CaseTag;
use crate::error::{Error, Result};
use crate::exact::ValuationQuery;
use crate::math::ln;

/// Right-hand side of the exact expansion of `v_p(T(N))`, split into addends.
///
/// `total` is accumulated left to right as
/// `main_term + phi_term + psi_term + log_term + f0_term`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticDecomposition {
    pub main_term: f64,
    pub phi_term: f64,
    pub psi_term: f64,
    pub log_term: f64,
    pub f0_term: f64,
    pub total: f64,
}

/// Evaluates the case-appropriate expansion at `q` with the given truncated
/// coefficient set:
///
/// - `p = 3`: `N (log_3 2 − 1/2) + N Φ(log_3 N)`
/// - `p ≡ 1 (mod 3)`: `N log_p(2/√3) + N Φ(log_p N) + Ψ(N) + (1/9) log_p N + f_0(N)`
/// - `p ≡ −1 (mod 3)`: `N log_p(2/√3) + N Φ(log_p N) + Ψ(N) + (p+1)/(6(p−1))`
pub fn theorem_rhs(
    q: &ValuationQuery,
    coeffs: &FourierCoefficientSet,
) -> Result<AnalyticDecomposition> {
    if q.n == 0 {
        return Err(Error::Domain("the expansion needs N >= 1"));
    }
    if coeffs.prime() != q.p {
        return Err(Error::PrimeMismatch {
            expected: coeffs.prime().get(),
            actual: q.p.get(),
        });
    }
    let nf = q.n as f64;
    let log_n = ln(nf) / ln(q.p.get() as f64);
    let main_term = nf * main_coefficient(q.p);
    let phi_term = nf * phi_eval(log_n, coeffs)?;
    let (psi_term, log_term, f0_term) = match coeffs.case() {
        CaseTag::Three => (0.0, 0.0, 0.0),
        _ => (
            psi_big_eval(q.n, coeffs)?,
            residue_f1(q.p)? * log_n,
            f0(q.n, q.p)?,
        ),
    };
    let total = main_term + phi_term + psi_term + log_term + f0_term;
    Ok(AnalyticDecomposition {
        main_term,
        phi_term,
        psi_term,
        log_term,
        f0_term,
        total,
    })
}

/// [`theorem_rhs`] with a freshly built coefficient set of order `order`.
pub fn theorem_rhs_with_order(q: &ValuationQuery, order: usize) -> Result<AnalyticDecomposition> {
    theorem_rhs(q, &FourierCoefficientSet::build(q.p, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Prime;

    #[test]
    fn n_one_has_no_log_term() {
        let q = ValuationQuery::new(Prime::new(7).unwrap(), 1);
        let d = theorem_rhs_with_order(&q, 20).unwrap();
        assert_eq!(d.log_term, 0.0);
        for v in [d.main_term, d.phi_term, d.psi_term, d.f0_term, d.total] {
            assert!(v.is_finite());
        }
        assert_eq!(
            d.total,
            d.main_term + d.phi_term + d.psi_term + d.log_term + d.f0_term
        );
    }

    #[test]
    fn rejects_zero_and_mismatch() {
        let p2 = Prime::new(2).unwrap();
        let set = FourierCoefficientSet::build(p2, 5).unwrap();
        assert!(theorem_rhs(&ValuationQuery::new(p2, 0), &set).is_err());
        let q = ValuationQuery::new(Prime::new(5).unwrap(), 3);
        assert_eq!(
            theorem_rhs(&q, &set),
            Err(Error::PrimeMismatch {
                expected: 2,
                actual: 5
            })
        );
    }

    #[test]
    fn p_three_has_only_two_terms() {
        let q = ValuationQuery::new(Prime::new(3).unwrap(), 9);
        let d = theorem_rhs_with_order(&q, 50).unwrap();
        assert_eq!((d.psi_term, d.log_term, d.f0_term), (0.0, 0.0, 0.0));
    }
}
