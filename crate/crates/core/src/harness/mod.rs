//! Sweeps, critical points, the critical-value table and CSV output.

mod config;
mod critical;
mod csv_out;
mod sweep;

pub use config::{p_grid, Engine, Measure, SweepConfig};
pub use critical::{
    find_critical_point, reproduce_table1, table1_columns, CriticalPoint, Table1, TableCell, TableColumn,
    BRACKET_WIDTH, DEFAULT_THRESHOLD, TABLE1_FLAG_POINTS, TABLE1_N, TABLE1_REFERENCE,
};
pub use csv_out::{emit_csv, format_significant, write_csv, CSV_HEADER, SIGNIFICANT_DIGITS};
pub use sweep::{run_sweep, LogNegativityEvaluator, SweepRecord, ENGINE_AGREEMENT_TOL};
