use std::io::Read;

use asmval_core::analytic::tail::TailEnvelope;
use asmval_core::analytic::{FourierCoefficientSet, Shift};
use asmval_core::{ComplexValue, Prime};

use super::CommandOutput;
use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::Table;

const C_COLUMNS: [&str; 3] = ["k", "c_re", "c_im"];
const D_COLUMNS: [&str; 6] = [
    "d_minus_re",
    "d_minus_im",
    "d_zero_re",
    "d_zero_im",
    "d_plus_re",
    "d_plus_im",
];
const FLAG_COLUMN: &str = "outside_zeta_envelope";

pub fn columns(with_d: bool) -> Vec<&'static str> {
    let mut cols = C_COLUMNS.to_vec();
    if with_d {
        cols.extend(D_COLUMNS);
    }
    cols.push(FLAG_COLUMN);
    cols
}

pub fn table(set: &FourierCoefficientSet) -> Table {
    let with_d = set.d_rows().is_some();
    let mut table = Table::new(columns(with_d));
    for k in 1..=set.order() {
        let c = set.c(k as i64).expect("k within order");
        let mut row = vec![k.into(), c.re.into(), c.im.into()];
        if with_d {
            for j in [Shift::Minus, Shift::Zero, Shift::Plus] {
                let d = set.d(k as i64, j).expect("k within order");
                row.push(d.re.into());
                row.push(d.im.into());
            }
        }
        row.push(set.outside_envelope(k).into());
        table.push(row);
    }
    let env = TailEnvelope::from_set(set);
    table.summarize("order", set.order());
    table.summarize("case", set.case().name());
    table.summarize("any_outside_zeta_envelope", set.any_outside_envelope());
    table.summarize("phi_constant", env.phi_constant);
    if let Some(c) = env.psi_constant {
        table.summarize("psi_constant", c);
    }
    table
}

pub fn run(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let set = FourierCoefficientSet::build(cfg.prime, cfg.fourier_terms)?;
    let mut out = CommandOutput::ok(table(&set));
    if set.any_outside_envelope() {
        out.messages.push(format!(
            "warning: some coefficients needed zeta values beyond the accuracy envelope (p = {}, K = {})",
            cfg.prime,
            cfg.fourier_terms
        ));
    }
    Ok(out)
}

/// Reads a table written by the `coeffs` subcommand back into a coefficient set.
pub fn read_csv<R: Read>(p: Prime, input: R) -> Result<FourierCoefficientSet, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(input);
    let headers = reader.headers()?.clone();
    let with_d = headers.iter().any(|h| h == D_COLUMNS[0]);
    if headers.iter().ne(columns(with_d)) {
        return Err(CliError::Usage(
            "unexpected coefficient table header".into(),
        ));
    }
    let real = |record: &csv::StringRecord, i: usize| -> Result<f64, CliError> {
        record[i]
            .parse()
            .map_err(|_| CliError::Usage(format!("bad number {:?}", &record[i])))
    };
    let mut c = Vec::new();
    let mut d = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        if record[0].parse::<usize>().ok() != Some(i + 1) {
            return Err(CliError::Usage(format!("row {} is out of order", i + 1)));
        }
        c.push(ComplexValue::new(real(&record, 1)?, real(&record, 2)?));
        if with_d {
            let mut row = [ComplexValue::new(0.0, 0.0); 3];
            for (slot, col) in row.iter_mut().zip([3, 5, 7]) {
                *slot = ComplexValue::new(real(&record, col)?, real(&record, col + 1)?);
            }
            d.push(row);
        }
    }
    Ok(FourierCoefficientSet::from_parts(
        p,
        c,
        with_d.then_some(d),
    )?)
}
