use asmval_core::analytic::{main_coefficient, phi_eval, FourierCoefficientSet};
use asmval_core::exact::DigitSumSweep;

use super::CommandOutput;
use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::{Cell, Table};

pub const COLUMNS: [&str; 4] = ["series", "n", "log_p_n", "value"];

const MIN_CURVE_SAMPLES: usize = 1000;
const MAX_CURVE_SAMPLES: usize = 1_000_000;

/// Curve samples: at least [`MIN_CURVE_SAMPLES`], and two per period of the
/// highest harmonic over the covered range of `log_p N`.
pub fn curve_samples(span: f64, order: usize) -> usize {
    let by_resolution = (span * 2.0 * order as f64).ceil() as usize + 1;
    by_resolution.clamp(MIN_CURVE_SAMPLES, MAX_CURVE_SAMPLES)
}

pub fn run(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let p = cfg.prime;
    let ln_p = (p.get() as f64).ln();
    let set = FourierCoefficientSet::build(p, cfg.fourier_terms)?;
    let mut table = Table::new(COLUMNS);

    let count = (cfg.n_max - cfg.n_min + 1) as usize;
    for item in DigitSumSweep::starting_at(p, cfg.n_min)?.take(count) {
        let (n, v) = item?;
        let nf = n as f64;
        table.push(vec![
            "dots".into(),
            Cell::from(n),
            (nf.ln() / ln_p).into(),
            (v as f64 / nf).into(),
        ]);
    }

    let t0 = (cfg.n_min as f64).ln() / ln_p;
    let t1 = (cfg.n_max as f64).ln() / ln_p;
    let samples = curve_samples(t1 - t0, cfg.fourier_terms);
    let shift = main_coefficient(p);
    for i in 0..samples {
        let t = if samples == 1 {
            t0
        } else {
            t0 + (t1 - t0) * i as f64 / (samples - 1) as f64
        };
        table.push(vec![
            "curve".into(),
            (t * ln_p).exp().into(),
            t.into(),
            (shift + phi_eval(t, &set)?).into(),
        ]);
    }
    table.summarize("dots", count);
    table.summarize("curve_samples", samples);
    table.summarize("main_coefficient", shift);
    Ok(CommandOutput::ok(table))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_counts() {
        assert_eq!(curve_samples(0.0, 400), MIN_CURVE_SAMPLES);
        assert_eq!(curve_samples(10.0, 400), 8001);
        assert_eq!(curve_samples(1e9, 400), MAX_CURVE_SAMPLES);
    }
}
