// Regenerates the upper-left 6×6 block of the `k_{Q_1}` table as CSV.

use std::error::Error;

use grqn::cli::{table, table_csv, CellOutcome, DEFAULT_CELL_LIMIT};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let rows = table(1, 6, 6, DEFAULT_CELL_LIMIT)?;
    print!("{}", table_csv(&rows)?);
    let computed = rows
        .iter()
        .filter(|r| matches!(r.outcome, CellOutcome::Computed(_)))
        .count();
    assert_eq!(computed, 36);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
