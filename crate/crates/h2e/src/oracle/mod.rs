//! Independent numerical evaluation of every closed-form quantity.
//!
//! Nothing in here calls the closed forms of `h2e_core::h2_integrals`; the
//! integrals are computed straight from their defining integrands over the
//! hydrogen 1s orbital `phi(r) = e^{-r} / sqrt(pi)`.

mod e1;
mod mc;
mod one_electron;
pub mod quad;

pub use e1::oracle_e1;
pub use mc::{mc_two_electron, sample_radius, McEstimate, TwoElectron, MIN_SAMPLES, SHARD_SIZE};
pub use one_electron::{quad_one_electron, OneElectron};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("quadrature did not converge: error estimate {achieved:e} exceeds {requested:e}")]
    QuadratureNotConverged { achieved: f64, requested: f64 },
    #[error("{what} must be positive and finite, got {value}")]
    Domain { what: &'static str, value: f64 },
    #[error("at least {min} Monte-Carlo samples are required, got {found}")]
    TooFewSamples { min: u64, found: u64 },
}
