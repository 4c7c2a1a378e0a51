use asmval_core::analytic::tail::{TailEnvelope, FIT_ORDER};
use asmval_core::analytic::{theorem_rhs, FourierCoefficientSet};
use asmval_core::exact::vp_t_legendre;
use asmval_core::ValuationQuery;
use serde::Serialize;

use super::CommandOutput;
use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::Table;

pub const COLUMNS: [&str; 10] = [
    "N",
    "exact",
    "main_term",
    "phi_term",
    "psi_term",
    "log_term",
    "f0_term",
    "analytic_total",
    "residual",
    "residual_over_N",
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComparisonRecord {
    #[serde(rename = "N")]
    pub n: u64,
    pub exact: u64,
    pub main_term: f64,
    pub phi_term: f64,
    pub psi_term: f64,
    pub log_term: f64,
    pub f0_term: f64,
    pub analytic_total: f64,
    pub residual: f64,
    pub residual_over_n: f64,
}

impl ComparisonRecord {
    pub fn compute(q: &ValuationQuery, set: &FourierCoefficientSet) -> Result<Self, CliError> {
        let exact = vp_t_legendre(q)?;
        let d = theorem_rhs(q, set)?;
        let residual = exact as f64 - d.total;
        Ok(Self {
            n: q.n,
            exact,
            main_term: d.main_term,
            phi_term: d.phi_term,
            psi_term: d.psi_term,
            log_term: d.log_term,
            f0_term: d.f0_term,
            analytic_total: d.total,
            residual,
            residual_over_n: residual / q.n as f64,
        })
    }
}

pub fn records(
    cfg: &RunConfig,
    set: &FourierCoefficientSet,
) -> Result<Vec<ComparisonRecord>, CliError> {
    cfg.n_range()
        .map(|n| ComparisonRecord::compute(&ValuationQuery::new(cfg.prime, n), set))
        .collect()
}

pub fn run(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let set = FourierCoefficientSet::build(cfg.prime, cfg.fourier_terms)?;
    let rows = records(cfg, &set)?;
    let mut table = Table::new(COLUMNS);
    let mut worst = (0.0f64, cfg.n_min);
    for r in &rows {
        if r.residual_over_n.abs() > worst.0 {
            worst = (r.residual_over_n.abs(), r.n);
        }
        table.push(vec![
            r.n.into(),
            r.exact.into(),
            r.main_term.into(),
            r.phi_term.into(),
            r.psi_term.into(),
            r.log_term.into(),
            r.f0_term.into(),
            r.analytic_total.into(),
            r.residual.into(),
            r.residual_over_n.into(),
        ]);
    }
    // residual_bound is linear in N, so the bound on residual/N is uniform
    let env = TailEnvelope::fit(cfg.prime, FIT_ORDER.max(cfg.fourier_terms))?;
    let bound = env.residual_bound(1, cfg.fourier_terms);
    table.summarize("max_abs_residual_over_N", worst.0);
    table.summarize("max_at_N", worst.1);
    table.summarize("tail_bound_over_N", bound);
    table.summarize("tail_bound_kind", "empirical");
    table.summarize("within_tail_bound", worst.0 <= bound);
    table.summarize("any_outside_zeta_envelope", set.any_outside_envelope());
    let mut out = CommandOutput::ok(table);
    if set.any_outside_envelope() {
        out.messages.push(format!(
            "warning: K = {} uses zeta values beyond the accuracy envelope for p = {}",
            cfg.fourier_terms, cfg.prime
        ));
    }
    Ok(out)
}
