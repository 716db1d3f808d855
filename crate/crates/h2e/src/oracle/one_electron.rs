//! One-electron integrals in prolate-spheroidal coordinates.
//!
//! With nuclei a distance `R` apart, `xi = (r_a + r_b)/R in [1, inf)`,
//! `eta = (r_a - r_b)/R in [-1, 1]` and the azimuth integrated out,
//! `d tau = 2 pi (R/2)^3 (xi^2 - eta^2) d xi d eta`.

use std::cell::Cell;

use super::quad::{integrate, integrate_to_infinity, Tolerance};
use super::OracleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OneElectron {
    /// `<a|b>`
    Overlap,
    /// `<a| 1/r_b |a>`
    JPrime,
    /// `<a| 1/r_b |b>`
    KPrime,
}

impl OneElectron {
    pub const ALL: [OneElectron; 3] = [OneElectron::Overlap, OneElectron::JPrime, OneElectron::KPrime];

    pub fn name(self) -> &'static str {
        match self {
            OneElectron::Overlap => "S",
            OneElectron::JPrime => "j'",
            OneElectron::KPrime => "k'",
        }
    }
}

const INNER: Tolerance = Tolerance { abs: 1e-18, rel: 1e-14 };
const OUTER: Tolerance = Tolerance { abs: 1e-16, rel: 1e-13 };

/// Deterministic 2D quadrature of a one-electron integral at distance `s`.
pub fn quad_one_electron(kind: OneElectron, s: f64) -> Result<f64, OracleError> {
    if !(s.is_finite() && s > 0.0) {
        return Err(OracleError::Domain { what: "internuclear distance", value: s });
    }
    let r = s;
    // phi_a^2 = e^{-2 r_a}/pi, phi_a phi_b = e^{-(r_a + r_b)}/pi, 1/r_b = 2/(R (xi - eta));
    // the 2 pi azimuth cancels the 1/pi of the orbitals.
    let (prefactor, integrand): (f64, fn(f64, f64, f64) -> f64) = match kind {
        OneElectron::Overlap => (r * r * r / 4.0, |r, xi, eta| (-r * xi).exp() * (xi * xi - eta * eta)),
        OneElectron::JPrime => (r * r / 2.0, |r, xi, eta| (-r * (xi + eta)).exp() * (xi + eta)),
        OneElectron::KPrime => (r * r / 2.0, |r, xi, eta| (-r * xi).exp() * (xi + eta)),
    };
    let inner_failure = Cell::new(None);
    let outer = integrate_to_infinity(
        |xi| match integrate(|eta| integrand(r, xi, eta), -1.0, 1.0, INNER) {
            Ok(q) => q.value,
            Err(e) => {
                inner_failure.set(Some(e));
                0.0
            }
        },
        1.0,
        1.0 / r,
        OUTER,
    )?;
    if let Some(e) = inner_failure.take() {
        return Err(e);
    }
    Ok(prefactor * outer.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn normalisation_limit() {
        assert_abs_diff_eq!(quad_one_electron(OneElectron::Overlap, 1e-3).unwrap(), 1.0, epsilon = 1e-6);
    }

    #[test]
    fn point_charge_limit() {
        assert_abs_diff_eq!(quad_one_electron(OneElectron::JPrime, 20.0).unwrap(), 1.0 / 20.0, epsilon = 1e-6);
    }

    #[test]
    fn overlap_at_two() {
        // (1 + 2 + 4/3) e^{-2}
        assert_abs_diff_eq!(
            quad_one_electron(OneElectron::Overlap, 2.0).unwrap(),
            0.586_452_894_025_321_6,
            epsilon = 1e-12
        );
    }

    #[test]
    fn kprime_at_one() {
        assert_abs_diff_eq!(
            quad_one_electron(OneElectron::KPrime, 1.0).unwrap(),
            2.0 * (-1.0f64).exp(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn rejects_bad_distance() {
        assert!(quad_one_electron(OneElectron::Overlap, 0.0).is_err());
    }
}
