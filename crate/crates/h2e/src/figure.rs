//! Plot-ready tables for the four standard figures: binding curves (1),
//! mixing weights (2), concurrence versus `c1` (3), and energy with
//! concurrence versus distance (4).

use std::f64::consts::FRAC_1_SQRT_2;

use crate::output::Table;
use crate::scan::{par_map, uniform_grid, ScanConfig, ScanError, ScanRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

impl Figure {
    pub fn columns(self) -> &'static [&'static str] {
        match self {
            Figure::Fig1 => &["s", "e_psi1", "e_ci"],
            Figure::Fig2 => &["s", "c1_sq", "c2_sq"],
            Figure::Fig3 => &["c1", "concurrence"],
            Figure::Fig4 => &["s", "e_ci", "concurrence"],
        }
    }
}

/// Grid of `c1` on `[0, 1]` with `steps` uniform points, plus the point of
/// maximal concurrence `1/sqrt(2)` so the peak is sampled exactly.
fn c1_grid(steps: usize) -> Vec<f64> {
    let mut grid = uniform_grid(0.0, 1.0, steps);
    if let Err(pos) = grid.binary_search_by(|c| c.total_cmp(&FRAC_1_SQRT_2)) {
        grid.insert(pos, FRAC_1_SQRT_2);
    }
    grid
}

pub fn build_figure(which: Figure, config: &ScanConfig) -> Result<Table, ScanError> {
    config.validate()?;
    let mut table = Table::new(which.columns().to_vec());
    if which == Figure::Fig3 {
        for c1 in c1_grid(config.steps) {
            let c2 = (1.0 - c1 * c1).max(0.0).sqrt();
            table.push(vec![c1, 2.0 * c1 * c2]);
        }
        return Ok(table);
    }
    let records =
        par_map(config.parallel, &config.grid(), |s| ScanRecord::compute(s, config.unit, config.h22_variant))?;
    for r in records {
        table.push(match which {
            Figure::Fig1 => vec![r.s, r.e_psi1, r.e_ci],
            Figure::Fig2 => vec![r.s, r.c1_sq, r.c2_sq],
            Figure::Fig4 => vec![r.s, r.e_ci, r.concurrence],
            Figure::Fig3 => unreachable!(),
        });
    }
    Ok(table)
}
