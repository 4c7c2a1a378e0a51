use asmval_core::exact::{vp_t_legendre, DigitSumSweep};
use asmval_core::ValuationQuery;

use super::CommandOutput;
use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::Table;

pub const COLUMNS: [&str; 4] = ["N", "vp_T_digit_sum", "vp_T_legendre", "agree"];

pub fn run(cfg: &RunConfig) -> Result<CommandOutput, CliError> {
    let mut table = Table::new(COLUMNS);
    let sweep = DigitSumSweep::starting_at(cfg.prime, cfg.n_min)?;
    let count = (cfg.n_max - cfg.n_min + 1) as usize;
    let mut disagreements = 0u64;
    let mut first = None;
    for item in sweep.take(count) {
        let (n, by_digits) = item?;
        let by_legendre = vp_t_legendre(&ValuationQuery::new(cfg.prime, n))?;
        let agree = by_digits == by_legendre;
        if !agree {
            disagreements += 1;
            first.get_or_insert(n);
        }
        table.push(vec![
            n.into(),
            by_digits.into(),
            by_legendre.into(),
            agree.into(),
        ]);
    }
    table.summarize("rows", count);
    table.summarize("disagreements", disagreements);
    let mut out = CommandOutput::ok(table);
    out.failure = first.map(|n| format!("oracles disagree at N = {n}"));
    Ok(out)
}
