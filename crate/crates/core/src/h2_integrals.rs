//! Closed-form integrals over two hydrogen 1s orbitals `phi(r) = e^{-r}/sqrt(pi)`
//! centred a reduced distance `s` apart.
//!
//! Hartree atomic units throughout, so the charge and length prefactors of
//! the usual textbook expressions are all 1 and results are in Hartree.
//!
//! | symbol | integral                      |
//! |--------|-------------------------------|
//! | `S`    | `<a|b>`                       |
//! | `j'`   | `<a| 1/r_b |a>`               |
//! | `k'`   | `<a| 1/r_b |b>`               |
//! | `j`    | `(aa|bb)` Coulomb             |
//! | `k`    | `(ab|ab)` exchange            |
//! | `l`    | `(aa|ab)` hybrid              |
//! | `m`    | `(aa|aa)` one-centre          |

use crate::specfun::{exp_integral_e1_scaled, EULER_GAMMA};
use crate::{Error, Result};

/// One-centre repulsion `(aa|aa)`; also the `s -> 0` limit of `j`, `k`, `l`.
pub const ONE_CENTER: f64 = 0.625;

/// Below this distance the exchange integral is interpolated linearly between
/// its coincidence limit and the closed form evaluated at the threshold.
pub const EXCHANGE_S_MIN: f64 = 1e-3;

fn require_positive(what: &'static str, s: f64) -> Result<()> {
    if s.is_finite() && s > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain { what, value: s })
    }
}

fn require_nonneg(what: &'static str, s: f64) -> Result<()> {
    if s.is_finite() && s >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain { what, value: s })
    }
}

/// Overlap `S(s) = (1 + s + s^2/3) e^{-s}`.
pub fn overlap(s: f64) -> Result<f64> {
    require_nonneg("overlap", s)?;
    Ok((1.0 + s + s * s / 3.0) * libm::exp(-s))
}

/// `S'(s) = S(-s) = (1 - s + s^2/3) e^{s}`; defined for every real `s`.
pub fn s_prime(s: f64) -> f64 {
    (1.0 - s + s * s / 3.0) * libm::exp(s)
}

/// Attraction of a 1s density to the other nucleus,
/// `j'(s) = [1 - (1 + s) e^{-2s}] / s`.
pub fn jprime(s: f64) -> Result<f64> {
    require_positive("jprime", s)?;
    // 1 - e^{-2s} via expm1 keeps the s -> 0 limit of 1 accurate
    Ok((-libm::expm1(-2.0 * s) - s * libm::exp(-2.0 * s)) / s)
}

/// Resonance attraction `k'(s) = (1 + s) e^{-s}`.
pub fn kprime(s: f64) -> Result<f64> {
    require_nonneg("kprime", s)?;
    Ok((1.0 + s) * libm::exp(-s))
}

/// Coulomb integral `j(s) = 1/s - (1/s + 11/8 + 3s/4 + s^2/6) e^{-2s}`.
pub fn coulomb_j(s: f64) -> Result<f64> {
    require_positive("coulomb_j", s)?;
    let e2 = libm::exp(-2.0 * s);
    Ok(-libm::expm1(-2.0 * s) / s - (11.0 / 8.0 + 0.75 * s + s * s / 6.0) * e2)
}

/// Exchange (Sugiura) integral `k(s) = [A(s) - B(s)] / 5` with
///
/// ```text
/// A(s) = (6/s) [(gamma + ln s) S^2 - E1(4s) S'^2 + 2 E1(2s) S S']
/// B(s) = (-25/8 + 23s/4 + 3s^2 + s^3/3) e^{-2s}
/// ```
///
/// The `(6/s)(gamma + ln s)` divergence of `A` cancels against the `E1` terms;
/// for `s < EXCHANGE_S_MIN` the value is interpolated linearly towards the
/// coincidence limit 5/8 instead.
pub fn exchange_k(s: f64) -> Result<f64> {
    require_positive("exchange_k", s)?;
    if s < EXCHANGE_S_MIN {
        let edge = exchange_closed_form(EXCHANGE_S_MIN)?;
        return Ok(ONE_CENTER + (edge - ONE_CENTER) * (s / EXCHANGE_S_MIN));
    }
    exchange_closed_form(s)
}

fn exchange_closed_form(s: f64) -> Result<f64> {
    // S = p e^{-s}, S' = q e^{s}; both E1 terms then carry e^{-2s} once the
    // exponential factor of E1 is split off, so nothing overflows at large s.
    let p = 1.0 + s + s * s / 3.0;
    let q = 1.0 - s + s * s / 3.0;
    let e2 = libm::exp(-2.0 * s);
    let a = (6.0 / s)
        * ((EULER_GAMMA + libm::log(s)) * p * p * e2 - exp_integral_e1_scaled(4.0 * s)? * q * q * e2
            + 2.0 * exp_integral_e1_scaled(2.0 * s)? * p * q * e2);
    let b = (-25.0 / 8.0 + 23.0 / 4.0 * s + 3.0 * s * s + s * s * s / 3.0) * e2;
    Ok((a - b) / 5.0)
}

/// Hybrid integral
/// `l(s) = (1/2)[(2s + 1/4 + 5/(8s)) e^{-s} - (1/4 + 5/(8s)) e^{-3s}]`.
pub fn hybrid_l(s: f64) -> Result<f64> {
    require_positive("hybrid_l", s)?;
    let e1 = libm::exp(-s);
    let e3 = libm::exp(-3.0 * s);
    // the two 5/(8s) terms combine into e^{-s}(1 - e^{-2s}) / s
    let singular = -5.0 / (8.0 * s) * e1 * libm::expm1(-2.0 * s);
    Ok(0.5 * ((2.0 * s + 0.25) * e1 - 0.25 * e3 + singular))
}

pub fn one_center_m() -> f64 {
    ONE_CENTER
}

/// Every integral needed by the CI Hamiltonian at one distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralSet {
    pub s: f64,
    pub overlap: f64,
    pub jprime: f64,
    pub kprime: f64,
    pub j: f64,
    pub k: f64,
    pub l: f64,
    pub m: f64,
}

pub fn integral_set(s: f64) -> Result<IntegralSet> {
    require_positive("integral_set", s)?;
    Ok(IntegralSet {
        s,
        overlap: overlap(s)?,
        jprime: jprime(s)?,
        kprime: kprime(s)?,
        j: coulomb_j(s)?,
        k: exchange_k(s)?,
        l: hybrid_l(s)?,
        m: one_center_m(),
    })
}

impl IntegralSet {
    pub fn at(s: f64) -> Result<Self> {
        integral_set(s)
    }
}
