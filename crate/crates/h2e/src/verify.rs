//! Oracle suite: every closed-form integral against its independent numerical
//! evaluation, the exponential integral against quadrature, and the CI minimum
//! of the selected `H22` variant against the reference binding energy.

use std::fmt::Write as _;
use std::num::NonZeroUsize;

use h2e_core::h2_ci::{equilibrium, E_1S};
use h2e_core::{h2_integrals as closed, specfun, H22Variant};

use crate::oracle::{mc_two_electron, oracle_e1, quad_one_electron, OneElectron, OracleError, TwoElectron};
use crate::output::format_number;
use crate::units::EnergyUnit;

pub const CHECK_DISTANCES: [f64; 6] = [0.5, 1.0, 1.67, 2.0, 4.0, 8.0];
pub const QUADRATURE_TOLERANCE: f64 = 1e-8;
pub const MC_SIGMAS: f64 = 3.0;
pub const MC_MAX_STDERR: f64 = 1e-3;
pub const E1_POINTS: usize = 50;
pub const E1_RANGE: (f64, f64) = (1e-3, 50.0);
pub const E1_REL_TOLERANCE: f64 = 1e-12;
/// Reference minimum of the binding curve, Rydberg.
pub const REFERENCE_MINIMUM: f64 = -0.237;
pub const MINIMUM_TOLERANCE: f64 = 0.01;
/// Bracket searched for the equilibrium distance.
pub const EQUILIBRIUM_BRACKET: (f64, f64) = (1.0, 2.5);

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: u64,
    pub h22_variant: H22Variant,
    pub parallel: NonZeroUsize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 42, samples: 1_000_000, h22_variant: H22Variant::Corrected, parallel: NonZeroUsize::MIN }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("closed form failed: {0}")]
    Model(#[from] h2e_core::Error),
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// How a check's deviation is measured against its tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Criterion {
    Absolute(f64),
    Relative(f64),
    /// Within `sigmas` standard errors, with the standard error itself capped.
    Sigmas {
        sigmas: f64,
        max_stderr: f64,
        stderr: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub reference: f64,
    pub criterion: Criterion,
}

impl Check {
    pub fn deviation(&self) -> f64 {
        let diff = (self.value - self.reference).abs();
        match self.criterion {
            Criterion::Absolute(_) => diff,
            Criterion::Relative(_) => diff / self.reference.abs(),
            Criterion::Sigmas { stderr, .. } => diff / stderr,
        }
    }

    pub fn passed(&self) -> bool {
        let dev = self.deviation();
        match self.criterion {
            Criterion::Absolute(tol) | Criterion::Relative(tol) => dev <= tol,
            Criterion::Sigmas { sigmas, max_stderr, stderr } => dev <= sigmas && stderr <= max_stderr,
        }
    }

    fn tolerance_label(&self) -> String {
        match self.criterion {
            Criterion::Absolute(t) => format!("abs {}", format_number(t)),
            Criterion::Relative(t) => format!("rel {}", format_number(t)),
            Criterion::Sigmas { sigmas, stderr, .. } => {
                format!("{}sigma, sigma {}", format_number(sigmas), format_number(stderr))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Fixed-width table, one line per check, followed by a summary line.
    pub fn render(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:>20}  {:>20}  {:>12}  {:<34}  status",
            "check", "value", "reference", "deviation", "tolerance"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:>20}  {:>20}  {:>12}  {:<34}  {}",
                c.name,
                format_number(c.value),
                format_number(c.reference),
                format_number(c.deviation()),
                c.tolerance_label(),
                if c.passed() { "PASS" } else { "FAIL" }
            );
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} passed, {} failed", self.checks.len(), self.checks.len() - failed, failed);
        out
    }
}

pub fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| match i {
            0 => lo,
            _ if i == n - 1 => hi,
            _ => (a + (b - a) * i as f64 / (n - 1) as f64).exp(),
        })
        .collect()
}

pub fn quadrature_checks() -> Result<Vec<Check>, VerifyError> {
    let mut checks = Vec::new();
    for kind in OneElectron::ALL {
        for s in CHECK_DISTANCES {
            let reference = match kind {
                OneElectron::Overlap => closed::overlap(s)?,
                OneElectron::JPrime => closed::jprime(s)?,
                OneElectron::KPrime => closed::kprime(s)?,
            };
            checks.push(Check {
                name: format!("{}({})", kind.name(), format_number(s)),
                value: quad_one_electron(kind, s)?,
                reference,
                criterion: Criterion::Absolute(QUADRATURE_TOLERANCE),
            });
        }
    }
    Ok(checks)
}

fn mc_check(kind: TwoElectron, s: f64, reference: f64, config: &VerifyConfig) -> Result<Check, VerifyError> {
    let est = mc_two_electron(kind, s, config.samples, config.seed)?;
    log::debug!("{}({s}) = {} +- {}", kind.name(), est.mean, est.stderr);
    Ok(Check {
        name: format!("{}({})", kind.name(), format_number(s)),
        value: est.mean,
        reference,
        criterion: Criterion::Sigmas { sigmas: MC_SIGMAS, max_stderr: MC_MAX_STDERR, stderr: est.stderr },
    })
}

/// Monte-Carlo checks of `j`, `k`, `l` on [`CHECK_DISTANCES`] and of `m`.
/// Runs on the current rayon pool.
pub fn monte_carlo_checks(config: &VerifyConfig) -> Result<Vec<Check>, VerifyError> {
    let mut checks = Vec::new();
    for kind in [TwoElectron::J, TwoElectron::K, TwoElectron::L] {
        for s in CHECK_DISTANCES {
            let reference = match kind {
                TwoElectron::J => closed::coulomb_j(s)?,
                TwoElectron::K => closed::exchange_k(s)?,
                _ => closed::hybrid_l(s)?,
            };
            checks.push(mc_check(kind, s, reference, config)?);
        }
    }
    checks.push(mc_check(TwoElectron::M, 1.0, closed::one_center_m(), config)?);
    Ok(checks)
}

/// Worst relative deviation of the series/continued-fraction `E1` from
/// quadrature over the log-spaced certification grid.
pub fn e1_check() -> Result<Check, VerifyError> {
    let mut worst: Option<(f64, f64, f64)> = None;
    for x in log_spaced(E1_RANGE.0, E1_RANGE.1, E1_POINTS) {
        let value = specfun::exp_integral_e1(x)?;
        let reference = oracle_e1(x)?;
        let rel = (value - reference).abs() / reference;
        if worst.map_or(true, |(_, _, r)| rel > r) {
            worst = Some((value, reference, rel));
        }
    }
    let (value, reference, _) = worst.expect("non-empty grid");
    Ok(Check {
        name: format!("E1 worst of {E1_POINTS}"),
        value,
        reference,
        criterion: Criterion::Relative(E1_REL_TOLERANCE),
    })
}

/// Minimum of the binding curve, in Rydberg, for `variant`.
pub fn equilibrium_check(variant: H22Variant) -> Result<Check, VerifyError> {
    let sol = equilibrium(EQUILIBRIUM_BRACKET.0, EQUILIBRIUM_BRACKET.1, variant)?;
    let label = match variant {
        H22Variant::Corrected => "corrected",
        H22Variant::Printed => "printed",
    };
    Ok(Check {
        name: format!("minimum Ry, h22 {label}"),
        value: EnergyUnit::Rydberg.from_hartree(sol.e_ground - 2.0 * E_1S),
        reference: REFERENCE_MINIMUM,
        criterion: Criterion::Absolute(MINIMUM_TOLERANCE),
    })
}

pub fn run_verify(config: &VerifyConfig) -> Result<Report, VerifyError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.parallel.get()).build()?;
    let mut checks = quadrature_checks()?;
    checks.extend(pool.install(|| monte_carlo_checks(config))?);
    checks.push(e1_check()?);
    checks.push(equilibrium_check(config.h22_variant)?);
    Ok(Report { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_grid_hits_endpoints() {
        let g = log_spaced(1e-3, 50.0, 50);
        assert_eq!(g.len(), 50);
        assert_eq!(g[0], 1e-3);
        assert_eq!(g[49], 50.0);
        let ratio = g[1] / g[0];
        assert!(g.windows(2).all(|w| (w[1] / w[0] - ratio).abs() < 1e-12));
    }

    #[test]
    fn sigma_criterion_requires_small_stderr() {
        let mut c = Check {
            name: "x".into(),
            value: 1.0,
            reference: 1.001,
            criterion: Criterion::Sigmas { sigmas: 3.0, max_stderr: 1e-3, stderr: 5e-4 },
        };
        assert!(c.passed());
        c.criterion = Criterion::Sigmas { sigmas: 3.0, max_stderr: 1e-3, stderr: 2e-3 };
        assert!(!c.passed());
        c.value = 0.99;
        c.criterion = Criterion::Sigmas { sigmas: 3.0, max_stderr: 1e-3, stderr: 1e-3 };
        assert!(!c.passed());
    }

    #[test]
    fn quadrature_members_pass() {
        for c in quadrature_checks().unwrap() {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn e1_certified() {
        let c = e1_check().unwrap();
        assert!(c.passed(), "{c:?}");
    }

    #[test]
    fn variant_arbitration() {
        assert!(equilibrium_check(H22Variant::Corrected).unwrap().passed());
        assert!(!equilibrium_check(H22Variant::Printed).unwrap().passed());
    }

    #[test]
    fn report_marks_failures() {
        let report = Report {
            checks: vec![
                Check { name: "a".into(), value: 1.0, reference: 1.0, criterion: Criterion::Absolute(0.0) },
                Check { name: "b".into(), value: 1.0, reference: 2.0, criterion: Criterion::Absolute(0.5) },
            ],
        };
        assert!(!report.all_passed());
        let text = report.render();
        assert!(text.lines().nth(1).unwrap().ends_with("PASS"));
        assert!(text.lines().nth(2).unwrap().ends_with("FAIL"));
        assert!(text.ends_with("2 checks, 1 passed, 1 failed\n"));
    }
}
