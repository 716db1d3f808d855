//! Distance sweeps over the CI model.

use std::num::NonZeroUsize;

use h2e_core::h2_ci::{ci_solve, E_1S};
use h2e_core::H22Variant;
use rayon::prelude::*;

use crate::output::{OutputFormat, Table};
use crate::units::EnergyUnit;

pub const DEFAULT_S_MIN: f64 = 0.5;
pub const DEFAULT_S_MAX: f64 = 10.0;
pub const DEFAULT_STEPS: usize = 400;

pub const SCAN_COLUMNS: [&str; 8] = ["s", "e_psi1", "e_psi2", "e_ci", "c1_sq", "c2_sq", "concurrence", "entropy"];

#[derive(Debug, thiserror::Error)]
pub enum ScanError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("model evaluation failed at s = {s}: {source}")]
    Model { s: f64, source: h2e_core::Error },
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Everything that determines a scan's output.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub s_min: f64,
    pub s_max: f64,
    pub steps: usize,
    pub unit: EnergyUnit,
    pub h22_variant: H22Variant,
    pub format: OutputFormat,
    pub parallel: NonZeroUsize,
    pub seed: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            s_min: DEFAULT_S_MIN,
            s_max: DEFAULT_S_MAX,
            steps: DEFAULT_STEPS,
            unit: EnergyUnit::default(),
            h22_variant: H22Variant::default(),
            format: OutputFormat::default(),
            parallel: NonZeroUsize::MIN,
            seed: 42,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), ScanError> {
        if !(self.s_min.is_finite() && self.s_min > 0.0) {
            return Err(ScanError::Config(format!("s-min must be positive, got {}", self.s_min)));
        }
        if !(self.s_max.is_finite() && self.s_max > self.s_min) {
            return Err(ScanError::Config(format!(
                "s-max ({}) must be finite and greater than s-min ({})",
                self.s_max, self.s_min
            )));
        }
        if self.steps < 2 {
            return Err(ScanError::Config(format!("steps must be at least 2, got {}", self.steps)));
        }
        Ok(())
    }

    /// Uniform grid from `s_min` to `s_max`, both endpoints included exactly.
    pub fn grid(&self) -> Vec<f64> {
        uniform_grid(self.s_min, self.s_max, self.steps)
    }
}

pub(crate) fn uniform_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let last = steps - 1;
    (0..steps).map(|i| if i == last { hi } else { lo + (hi - lo) * i as f64 / last as f64 }).collect()
}

/// One row of a sweep; energies are relative to two separated atoms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRecord {
    pub s: f64,
    pub e_psi1: f64,
    pub e_psi2: f64,
    pub e_ci: f64,
    pub c1_sq: f64,
    pub c2_sq: f64,
    pub concurrence: f64,
    pub entropy: f64,
}

impl ScanRecord {
    pub fn compute(s: f64, unit: EnergyUnit, variant: H22Variant) -> Result<Self, ScanError> {
        let sol = ci_solve(s, variant).map_err(|source| ScanError::Model { s, source })?;
        let rel = |e: f64| unit.from_hartree(e - 2.0 * E_1S);
        Ok(ScanRecord {
            s,
            e_psi1: rel(sol.e_psi1),
            e_psi2: rel(sol.e_psi2),
            e_ci: rel(sol.e_ground),
            c1_sq: sol.c1 * sol.c1,
            c2_sq: sol.c2 * sol.c2,
            concurrence: sol.concurrence(),
            entropy: sol.entropy(),
        })
    }

    pub fn values(&self) -> [f64; 8] {
        [self.s, self.e_psi1, self.e_psi2, self.e_ci, self.c1_sq, self.c2_sq, self.concurrence, self.entropy]
    }
}

/// Evaluates `f` on every grid point with `parallel` workers; output order
/// always follows the input order.
pub(crate) fn par_map<T: Send>(
    parallel: NonZeroUsize,
    points: &[f64],
    f: impl Fn(f64) -> Result<T, ScanError> + Sync + Send,
) -> Result<Vec<T>, ScanError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(parallel.get()).build()?;
    pool.install(|| points.par_iter().map(|&s| f(s)).collect())
}

pub fn run_scan(config: &ScanConfig) -> Result<Vec<ScanRecord>, ScanError> {
    config.validate()?;
    let grid = config.grid();
    log::info!(
        "scanning {} points on [{}, {}] with {} worker(s)",
        grid.len(),
        config.s_min,
        config.s_max,
        config.parallel
    );
    par_map(config.parallel, &grid, |s| ScanRecord::compute(s, config.unit, config.h22_variant))
}

pub fn records_table(records: &[ScanRecord]) -> Table {
    let mut t = Table::new(SCAN_COLUMNS.to_vec());
    for r in records {
        t.push(r.values().to_vec());
    }
    t
}
