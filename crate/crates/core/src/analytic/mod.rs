//! Closed-form analytic objects: Fourier coefficients of the periodic
//! fluctuations, correction terms, the exact expansions of `v_p(T(N))`, and
//! the identities that tie the residue computation back to them.
//!
//! Every Fourier series here is evaluated truncated at a caller-chosen order
//! `K`, pairing `+k` with `−k` and summing `k` upwards.

mod case;
mod coefficients;
mod corrections;
mod decomposition;
mod delange;
mod fluctuation;
pub mod identities;
mod lambda;
pub mod tail;

pub use case::CaseTag;
pub use coefficients::{chi, chi_half, coeff_c, coeff_d, delange_coeff, phi2_coeff, Shift};
pub use corrections::{
    delange_constant, f0, f0_limit, g_j, g_j_limit, main_coefficient, remainder_constant,
    residue_f0, residue_f1, residue_n_coefficient,
};
pub use decomposition::{theorem_rhs, theorem_rhs_with_order, AnalyticDecomposition};
pub use delange::{delange_rhs, DelangeSeries};
pub use fluctuation::{phi_eval, psi_big_eval, FourierCoefficientSet, IMAGINARY_TOLERANCE};
pub use lambda::{lambda_closed_form, lambda_dirichlet_series};

/// Truncation order used for the published fluctuation plots.
pub const DEFAULT_FOURIER_TERMS: usize = 400;
