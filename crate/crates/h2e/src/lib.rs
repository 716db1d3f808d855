//! Potential-energy and entanglement scans of the minimal-basis H2 model,
//! plot-ready figure tables, and numerical verification of every closed-form
//! integral. The physics lives in [`h2e_core`]; this crate adds threading,
//! units, file formats and the `h2e` command-line tool.

pub mod cli;
pub mod figure;
pub mod oracle;
pub mod output;
pub mod scan;
pub mod units;
pub mod verify;

pub use figure::{build_figure, Figure};
pub use output::{format_number, OutputFormat, Table};
pub use scan::{run_scan, ScanConfig, ScanError, ScanRecord};
pub use units::EnergyUnit;
