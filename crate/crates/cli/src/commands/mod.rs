pub mod coeffs;
pub mod compare;
pub mod exact;
pub mod figure;
pub mod verify;

use crate::table::Table;

/// Result of one subcommand: the table to emit, messages for stderr, and the
/// first failed check if any.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub table: Table,
    pub messages: Vec<String>,
    pub failure: Option<String>,
}

impl CommandOutput {
    pub fn ok(table: Table) -> Self {
        Self {
            table,
            messages: Vec::new(),
            failure: None,
        }
    }
}
