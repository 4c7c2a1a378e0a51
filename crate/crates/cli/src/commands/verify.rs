//! Invariant suites behind `asmval verify`.
//!
//! Every check is recorded as an error next to its tolerance; a suite passes
//! when the largest `error / tolerance` ratio is at most 1.

use std::fmt;

use asmval_core::analytic::identities::{
    coefficient_assembly, constant_assembly, remainder_assembly,
};
use asmval_core::analytic::{
    lambda_closed_form, lambda_dirichlet_series, phi_eval, psi_big_eval, CaseTag, DelangeSeries,
    FourierCoefficientSet, Shift,
};
use asmval_core::exact::{
    digit_sum, digit_sum_step_identity_check, prefix_digit_sum, vp_factorial_legendre, vp_t_bignum,
    vp_t_legendre, DigitSumSweep, BIGNUM_N_CAP,
};
use asmval_core::special::{hurwitz_zeta, riemann_zeta};
use asmval_core::{ComplexValue, Prime, ValuationQuery};

use super::CommandOutput;
use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::Table;

pub const COLUMNS: [&str; 5] = ["suite", "status", "checks", "worst_error_ratio", "detail"];

const PERTURBATION: f64 = 1e-6;
const DIGIT_IDENTITY_LIMIT: u64 = 100_000;
const LAMBDA_TERMS: u64 = 1_000_000;
const DELANGE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub status: Status,
    pub checks: usize,
    pub worst_ratio: f64,
    pub detail: String,
}

#[derive(Default)]
struct Checks {
    count: usize,
    worst: f64,
    worst_label: String,
}

impl Checks {
    fn record(&mut self, label: impl FnOnce() -> String, error: f64, tolerance: f64) {
        self.count += 1;
        let ratio = if error.is_nan() {
            f64::INFINITY
        } else {
            error / tolerance
        };
        if ratio > self.worst || self.count == 1 {
            self.worst = ratio;
            self.worst_label = format!("{}: {error:.3e} vs {tolerance:.0e}", label());
        }
    }

    fn exact(&mut self, label: impl FnOnce() -> String, equal: bool) {
        self.record(label, if equal { 0.0 } else { f64::INFINITY }, 1.0);
    }

    fn finish(self, name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            status: if self.worst <= 1.0 {
                Status::Pass
            } else {
                Status::Fail
            },
            checks: self.count,
            worst_ratio: self.worst,
            detail: self.worst_label,
        }
    }
}

fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm()
}

fn skipped(name: &'static str, case: CaseTag) -> SuiteReport {
    SuiteReport {
        name,
        status: Status::Skipped,
        checks: 0,
        worst_ratio: 0.0,
        detail: format!("not defined for {}", case.name()),
    }
}

fn failed(name: &'static str, err: CliError) -> SuiteReport {
    SuiteReport {
        name,
        status: Status::Fail,
        checks: 0,
        worst_ratio: f64::INFINITY,
        detail: err.to_string(),
    }
}

fn oracle(cfg: &RunConfig) -> Result<Checks, CliError> {
    let mut checks = Checks::default();
    let count = (cfg.n_max - cfg.n_min + 1) as usize;
    for item in DigitSumSweep::starting_at(cfg.prime, cfg.n_min)?.take(count) {
        let (n, by_digits) = item?;
        let q = ValuationQuery::new(cfg.prime, n);
        let by_legendre = vp_t_legendre(&q)?;
        checks.exact(
            || format!("digit sums vs Legendre at N={n}"),
            by_digits == by_legendre,
        );
        if n <= BIGNUM_N_CAP {
            let big = vp_t_bignum(&q)?;
            checks.exact(|| format!("big integer at N={n}"), big == by_legendre);
        }
    }
    Ok(checks)
}

fn digit_identities(p: Prime) -> Result<Checks, CliError> {
    let mut checks = Checks::default();
    for m in 1..=DIGIT_IDENTITY_LIMIT {
        checks.exact(
            || format!("step identity at m={m}"),
            digit_sum_step_identity_check(p, m),
        );
        let two_form = vp_factorial_legendre(p, m) * p.pred() == m - digit_sum(p, m);
        checks.exact(|| format!("Legendre forms at m={m}"), two_form);
    }
    Ok(checks)
}

/// Deterministic points with `Re s ∈ [−1/2, 3]`, `|Im s| ≤ 500`.
fn zeta_sample_points() -> impl Iterator<Item = ComplexValue> {
    let golden = 0.618_033_988_749_894_9;
    let root2 = core::f64::consts::SQRT_2 - 1.0;
    (1..=100).map(move |i| {
        let a = (i as f64 * golden).fract();
        let b = (i as f64 * root2).fract();
        ComplexValue::new(-0.5 + 3.5 * a, -500.0 + 1000.0 * b)
    })
}

fn zeta() -> Result<Checks, CliError> {
    let mut checks = Checks::default();
    let pi = core::f64::consts::PI;
    let z2 = riemann_zeta(ComplexValue::new(2.0, 0.0))?;
    checks.record(
        || "zeta(2)".into(),
        rel(z2, ComplexValue::new(pi * pi / 6.0, 0.0)),
        1e-12,
    );
    for i in 1..=10 {
        let alpha = i as f64 / 10.0;
        let z = hurwitz_zeta(ComplexValue::new(0.0, 0.0), alpha)?;
        let err = (z - ComplexValue::new(0.5 - alpha, 0.0)).norm();
        checks.record(|| format!("zeta(0, {alpha})"), err, 1e-12);
    }
    for s in zeta_sample_points() {
        let z = riemann_zeta(s)?;
        let lhs = hurwitz_zeta(s, 1.0 / 3.0)? + hurwitz_zeta(s, 2.0 / 3.0)? + z;
        let rhs = (s * 3f64.ln()).exp() * z;
        checks.record(
            || format!("multiplication theorem at s={s}"),
            rel(lhs, rhs),
            1e-10,
        );
    }
    Ok(checks)
}

fn assembly(cfg: &RunConfig, set: &FourierCoefficientSet) -> Result<Checks, CliError> {
    let p = cfg.prime;
    let mut checks = Checks::default();
    for k in 1..=set.order().min(50) as i64 {
        let (assembled, _) = coefficient_assembly(k, p)?;
        let stored = set.c(k).expect("k within order");
        checks.record(|| format!("c_{k} assembly"), rel(stored, assembled), 1e-10);
    }
    if CaseTag::of(p) != CaseTag::Three {
        let (sum, target) = constant_assembly(p);
        checks.record(|| "constant assembly".into(), (sum - target).abs(), 1e-12);
        for n in [cfg.n_min, cfg.n_max] {
            let (diff, r) = remainder_assembly(n, p)?;
            checks.record(
                || format!("remainder assembly at N={n}"),
                (diff - r).abs(),
                1e-12,
            );
        }
    }
    Ok(checks)
}

fn psi_structure(set: &FourierCoefficientSet) -> Result<Checks, CliError> {
    let mut checks = Checks::default();
    let odd_vanish = set.case() == CaseTag::MinusOneModThree;
    for k in 1..=set.order() as i64 {
        let d = |j| set.d(k, j).expect("p != 3 and k within order");
        let pair = d(Shift::Plus) + d(Shift::Minus);
        checks.record(
            || format!("d_{k},0 pair sum"),
            (d(Shift::Zero) - pair).norm(),
            1e-10,
        );
        if odd_vanish && k % 2 == 1 {
            checks.record(|| format!("d_{k},0 parity"), d(Shift::Zero).norm(), 1e-10);
        }
    }
    Ok(checks)
}

fn realness(cfg: &RunConfig, set: &FourierCoefficientSet) -> Result<Checks, CliError> {
    let mut checks = Checks::default();
    let ln_p = (cfg.prime.get() as f64).ln();
    for n in cfg.n_range() {
        let x = (n as f64).ln() / ln_p;
        // imaginary residues surface as errors from the evaluators
        checks.exact(|| format!("Phi at N={n}"), phi_eval(x, set).is_ok());
        if set.d_rows().is_some() {
            let ok = psi_big_eval(n, set).is_ok();
            checks.exact(|| format!("Psi at N={n}"), ok);
        }
    }
    Ok(checks)
}

fn delange_points(p: Prime) -> Vec<u64> {
    let mut points = vec![p
        .get()
        .pow((DELANGE_LIMIT as f64).log(p.get() as f64) as u32)];
    points.extend((1..=20u64).map(|i| 1 + (i * 982_451) % DELANGE_LIMIT));
    points
}

fn delange(cfg: &RunConfig) -> Result<Checks, CliError> {
    let series = DelangeSeries::new(cfg.prime, cfg.fourier_terms)?;
    let mut checks = Checks::default();
    for n in delange_points(cfg.prime) {
        let exact = prefix_digit_sum(cfg.prime, n)? as f64;
        let err = (exact - series.eval(n)?).abs() / n as f64;
        checks.record(|| format!("prefix digit sum at N={n}"), err, 1e-2);
    }
    Ok(checks)
}

fn lambda(p: Prime) -> Result<Checks, CliError> {
    let s = ComplexValue::new(2.0, 0.0);
    let mut checks = Checks::default();
    for j in Shift::ALL {
        let closed = lambda_closed_form(s, j, p)?;
        let series = lambda_dirichlet_series(s, j, p, LAMBDA_TERMS)?;
        checks.record(
            || format!("Lambda_{} at s=2", j.value()),
            rel(series, closed),
            1e-6,
        );
    }
    Ok(checks)
}

fn perturbed(set: FourierCoefficientSet, k: usize) -> Result<FourierCoefficientSet, CliError> {
    if k == 0 || k > set.order() {
        return Err(CliError::Usage(format!(
            "--perturb-coefficient {k} is outside 1..={}",
            set.order()
        )));
    }
    let mut c = set.c_slice().to_vec();
    c[k - 1] *= 1.0 + PERTURBATION;
    Ok(FourierCoefficientSet::from_parts(
        set.prime(),
        c,
        set.d_rows().map(<[_]>::to_vec),
    )?)
}

/// Runs all suites in a fixed order.
pub fn suites(cfg: &RunConfig, perturb: Option<usize>) -> Result<Vec<SuiteReport>, CliError> {
    let p = cfg.prime;
    let case = CaseTag::of(p);
    let mut set = FourierCoefficientSet::build(p, cfg.fourier_terms)?;
    if let Some(k) = perturb {
        set = perturbed(set, k)?;
    }
    let finish = |name, r: Result<Checks, CliError>| match r {
        Ok(checks) => checks.finish(name),
        Err(e) => failed(name, e),
    };
    let mut out = vec![
        finish("oracle", oracle(cfg)),
        finish("digit_identities", digit_identities(p)),
        finish("zeta", zeta()),
        finish("assembly", assembly(cfg, &set)),
    ];
    out.push(match case {
        CaseTag::Three => skipped("psi_structure", case),
        _ => finish("psi_structure", psi_structure(&set)),
    });
    out.push(finish("realness", realness(cfg, &set)));
    out.push(finish("delange", delange(cfg)));
    out.push(match case {
        CaseTag::Three => skipped("lambda", case),
        _ => finish("lambda", lambda(p)),
    });
    Ok(out)
}

pub fn run(cfg: &RunConfig, perturb: Option<usize>) -> Result<CommandOutput, CliError> {
    let reports = suites(cfg, perturb)?;
    let mut table = Table::new(COLUMNS);
    let mut messages = Vec::new();
    for r in &reports {
        messages.push(format!(
            "{:<7} {:<17} {:>7} checks  {}",
            r.status.to_string().to_uppercase(),
            r.name,
            r.checks,
            r.detail
        ));
        table.push(vec![
            r.name.into(),
            r.status.to_string().into(),
            r.checks.into(),
            r.worst_ratio.into(),
            r.detail.clone().into(),
        ]);
    }
    let first = reports
        .iter()
        .find(|r| r.status == Status::Fail)
        .map(|r| r.name);
    table.summarize("passed", first.is_none());
    table.summarize("first_failure", first.unwrap_or(""));
    Ok(CommandOutput {
        table,
        messages,
        failure: first.map(|name| format!("suite {name} failed")),
    })
}
