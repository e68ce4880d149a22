//! Batch front-end for the conformation simulator: run configuration,
//! seeded batch simulation, PDB I/O, and RMSD score reports.

pub mod analyze;
pub mod config;
pub mod evaluate;
pub mod pdb;
pub mod report;
pub mod simulate;

pub use config::{parse_config, ConfigError, RunConfig};
pub use evaluate::{evaluate, EvaluateError, EvaluateOutcome};
pub use pdb::{parse_pdb_calpha, write_pdb, PdbError, TargetStructure};
pub use report::{write_report, ReportRow};
pub use simulate::{simulate, GroupSummary, SimulateError, SimulationRow};
