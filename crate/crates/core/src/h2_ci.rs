//! Two-configuration CI ground state of H2 in a minimal 1s basis.
//!
//! The configurations are the doubly occupied bonding and antibonding
//! molecular orbitals, both spin singlets:
//!
//! ```text
//! Psi1 = psi+ psi+ sigma,   psi+ = (phi_A + phi_B) / sqrt(2(1 + S))
//! Psi2 = psi- psi- sigma,   psi- = (phi_A - phi_B) / sqrt(2(1 - S))
//! Psi  = c1 Psi1 + c2 Psi2, c1^2 + c2^2 = 1
//! ```
//!
//! All energies are absolute, in Hartree, and include the nuclear repulsion
//! `1/s`; subtract `2 * E_1S` for the binding curve.

use crate::fermi_ent::{make_antisym, AntisymW};
use crate::h2_integrals::{integral_set, IntegralSet};
use crate::specfun::binary_entropy;
use crate::{Error, Result, C64};

/// Ground-state energy of a hydrogen atom.
pub const E_1S: f64 = -0.5;

/// How far `c1^2 + c2^2` may stray from 1 before inputs are rejected.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-10;

/// Agreement demanded between the analytic mixing formula and the eigenvector.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-10;

/// Which expression to use for `<Psi2|H|Psi2>`.
///
/// `Corrected` normalises the antibonding orbital with `1 - S`. `Printed`
/// keeps `1 + S` in both denominators, a form seen in some textbook
/// reproductions; it is retained only for comparison and is not variationally
/// consistent with the `Psi2` normalisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum H22Variant {
    #[default]
    Corrected,
    Printed,
}

/// Real symmetric CI Hamiltonian in the `{Psi1, Psi2}` basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianBlock {
    pub s: f64,
    pub h11: f64,
    pub h12: f64,
    pub h21: f64,
    pub h22: f64,
    pub variant: H22Variant,
}

fn h11_from(set: &IntegralSet) -> f64 {
    let plus = 1.0 + set.overlap;
    2.0 * E_1S + 1.0 / set.s - 2.0 * (set.jprime + set.kprime) / plus
        + (set.j + 2.0 * set.k + set.m + 4.0 * set.l) / (2.0 * plus * plus)
}

fn h12_from(set: &IntegralSet) -> f64 {
    (set.m - set.j) / (2.0 * (1.0 - set.overlap * set.overlap))
}

fn h22_from(set: &IntegralSet, variant: H22Variant) -> f64 {
    let d = match variant {
        H22Variant::Corrected => 1.0 - set.overlap,
        H22Variant::Printed => 1.0 + set.overlap,
    };
    2.0 * E_1S + 1.0 / set.s - 2.0 * (set.jprime - set.kprime) / d
        + (set.j + 2.0 * set.k + set.m - 4.0 * set.l) / (2.0 * d * d)
}

/// Energy of the single-configuration (molecular-orbital) state `Psi1`.
pub fn h11(s: f64) -> Result<f64> {
    Ok(h11_from(&integral_set(s)?))
}

pub fn hamiltonian_block(s: f64, variant: H22Variant) -> Result<HamiltonianBlock> {
    let set = integral_set(s)?;
    let h12 = h12_from(&set);
    Ok(HamiltonianBlock { s, h11: h11_from(&set), h12, h21: h12, h22: h22_from(&set, variant), variant })
}

impl HamiltonianBlock {
    /// Expectation value for `c1 = cos(omega)`, `c2 = sin(omega)`.
    pub fn energy_at_angle(&self, omega: f64) -> f64 {
        let (s, c) = libm::sincos(omega);
        self.h11 * c * c + (self.h12 + self.h21) * s * c + self.h22 * s * s
    }

    /// Analytic squares of the optimal mixing coefficients,
    ///
    /// ```text
    /// c1^2 = 1/2 + 1 / (2 sqrt(1 + (2 h12 / (h11 - h22))^2))
    /// c2^2 = 1/2 - 1 / (2 sqrt(1 + (2 h12 / (h11 - h22))^2))
    /// ```
    ///
    /// valid as written when `h11 <= h22`; otherwise the two are swapped.
    /// Returns `None` for the fully degenerate block `h12 = 0, h11 = h22`.
    pub fn closed_form_squares(&self) -> Option<(f64, f64)> {
        let diff = self.h11 - self.h22;
        if self.h12 == 0.0 && diff == 0.0 {
            return None;
        }
        let x = 2.0 * self.h12 / diff;
        let half_cos = 0.5 / libm::sqrt(1.0 + x * x);
        let (major, minor) = (0.5 + half_cos, 0.5 - half_cos);
        Some(if diff <= 0.0 { (major, minor) } else { (minor, major) })
    }
}

/// Optimal CI state at one distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CiSolution {
    pub s: f64,
    /// Weight of `Psi1`; never negative (global sign fixed so `c1 >= 0`).
    pub c1: f64,
    pub c2: f64,
    pub e_ground: f64,
    pub e_psi1: f64,
    pub e_psi2: f64,
    /// Set when `h12 = 0` and `h11 = h22`; `(c1, c2) = (1, 0)` is returned.
    pub degenerate: bool,
}

impl CiSolution {
    pub fn concurrence(&self) -> f64 {
        2.0 * libm::fabs(self.c1 * self.c2)
    }

    pub fn entropy(&self) -> f64 {
        ground_entropy(self.c1, self.c2).expect("solution is normalised")
    }

    pub fn binding_energy(&self) -> f64 {
        self.e_ground - 2.0 * E_1S
    }
}

pub fn ci_solve(s: f64, variant: H22Variant) -> Result<CiSolution> {
    ci_solve_block(&hamiltonian_block(s, variant)?)
}

/// Lowest eigenpair of a 2x2 CI block, cross-checked against
/// [`HamiltonianBlock::closed_form_squares`].
pub fn ci_solve_block(block: &HamiltonianBlock) -> Result<CiSolution> {
    let HamiltonianBlock { s, h11, h12, h22, .. } = *block;
    let mean = 0.5 * (h11 + h22);
    let half_gap = 0.5 * (h11 - h22);
    let radius = libm::hypot(half_gap, h12);
    let e_ground = mean - radius;

    let mut out = CiSolution { s, c1: 1.0, c2: 0.0, e_ground, e_psi1: h11, e_psi2: h22, degenerate: false };
    if radius == 0.0 {
        out.degenerate = true;
        return Ok(out);
    }

    // Two equivalent null vectors of (H - e); take the better conditioned.
    let a = h22 - e_ground; // >= 0
    let b = h11 - e_ground; // >= 0
    let (mut c1, mut c2) = if a >= b { (a, -h12) } else { (-h12, b) };
    let norm = libm::hypot(c1, c2);
    c1 /= norm;
    c2 /= norm;
    if c1 < 0.0 || (c1 == 0.0 && c2 < 0.0) {
        c1 = -c1;
        c2 = -c2;
    }
    // normalise signed zeros so output is stable byte-for-byte
    out.c1 = c1 + 0.0;
    out.c2 = c2 + 0.0;

    if let Some((c1_sq, c2_sq)) = block.closed_form_squares() {
        let deviation = libm::fmax(libm::fabs(c1_sq - c1 * c1), libm::fabs(c2_sq - c2 * c2));
        if deviation > CLOSED_FORM_TOLERANCE {
            return Err(Error::ClosedFormMismatch { deviation });
        }
    }
    Ok(out)
}

fn check_normalized(c1: f64, c2: f64) -> Result<()> {
    let norm_sq = c1 * c1 + c2 * c2;
    if libm::fabs(norm_sq - 1.0) > NORMALIZATION_TOLERANCE || !norm_sq.is_finite() {
        return Err(Error::Unnormalized { norm_sq });
    }
    Ok(())
}

/// Coefficient matrix of `c1 Psi1 + c2 Psi2` over the modes
/// `|A up>, |A down>, |B up>, |B down>`, with the atomic spin-orbitals treated
/// as orthonormal modes:
///
/// ```text
/// w12 =  w34 = (c1 + c2) / 4
/// w14 = -w23 = (c1 - c2) / 4
/// w13 =  w24 = 0
/// ```
pub fn w_from_ci(c1: f64, c2: f64) -> Result<AntisymW> {
    check_normalized(c1, c2)?;
    let sum = 0.25 * (c1 + c2);
    let diff = 0.25 * (c1 - c2);
    let zero = C64::new(0.0, 0.0);
    // upper triangle order: 12, 13, 14, 23, 24, 34
    let upper = [C64::new(sum, 0.0), zero, C64::new(diff, 0.0), C64::new(-diff, 0.0), zero, C64::new(sum, 0.0)];
    make_antisym(&upper, 4)
}

/// Concurrence of the CI ground state, `2 |c1 c2|`.
pub fn ground_concurrence(c1: f64, c2: f64) -> Result<f64> {
    check_normalized(c1, c2)?;
    Ok(2.0 * libm::fabs(c1 * c2))
}

/// Single-particle entropy of the CI ground state, `1 + H2(c1^2)` bits.
pub fn ground_entropy(c1: f64, c2: f64) -> Result<f64> {
    check_normalized(c1, c2)?;
    let p = (c1 * c1 / (c1 * c1 + c2 * c2)).clamp(0.0, 1.0);
    Ok(1.0 + binary_entropy(p)?)
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Minimises the CI ground energy over `s` in `[lo, hi]` by golden-section
/// search. Assumes a single minimum in the bracket.
pub fn equilibrium(lo: f64, hi: f64, variant: H22Variant) -> Result<CiSolution> {
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::Domain { what: "equilibrium bracket", value: lo });
    }
    let energy = |s: f64| ci_solve(s, variant).map(|c| c.e_ground);
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (energy(x1)?, energy(x2)?);
    while b - a > 1e-9 {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = energy(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = energy(x2)?;
        }
    }
    ci_solve(0.5 * (a + b), variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermi_ent::concurrence4;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::FRAC_1_SQRT_2;

    fn block(h11: f64, h12: f64, h22: f64) -> HamiltonianBlock {
        HamiltonianBlock { s: 1.0, h11, h12, h21: h12, h22, variant: H22Variant::Corrected }
    }

    #[test]
    fn decoupled_block() {
        let sol = ci_solve_block(&block(-1.0, 0.0, 0.5)).unwrap();
        assert_eq!((sol.c1, sol.c2), (1.0, 0.0));
        assert!(!sol.degenerate);
        assert_eq!(sol.e_ground, -1.0);
    }

    #[test]
    fn fully_degenerate_block_is_flagged() {
        let sol = ci_solve_block(&block(0.3, 0.0, 0.3)).unwrap();
        assert!(sol.degenerate);
        assert_eq!((sol.c1, sol.c2), (1.0, 0.0));
        assert_eq!(sol.e_ground, 0.3);
    }

    #[test]
    fn symmetric_mixing() {
        let sol = ci_solve_block(&block(0.2, 0.1, 0.2)).unwrap();
        assert_abs_diff_eq!(sol.c1 * sol.c1, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(sol.c2 * sol.c2, 0.5, epsilon = 1e-15);
        assert!(sol.c2 < 0.0);
        assert_abs_diff_eq!(sol.e_ground, 0.1, epsilon = 1e-15);
    }

    #[test]
    fn inverted_block_still_matches_closed_form() {
        let b = block(0.5, 0.2, -0.3);
        let sol = ci_solve_block(&b).unwrap();
        let (c1_sq, _) = b.closed_form_squares().unwrap();
        assert!(c1_sq < 0.5);
        assert_abs_diff_eq!(sol.c1 * sol.c1, c1_sq, epsilon = 1e-12);
    }

    #[test]
    fn repulsive_wall() {
        assert!(h11(0.1).unwrap() > h11(1.0).unwrap());
    }

    #[test]
    fn mo_energy_near_equilibrium() {
        assert_abs_diff_eq!(h11(1.67).unwrap() - 2.0 * E_1S, -0.098, epsilon = 1e-3);
    }

    #[test]
    fn h12_symmetric_and_positive() {
        for i in 1..=200 {
            let b = hamiltonian_block(0.05 * i as f64, H22Variant::Corrected).unwrap();
            assert_eq!(b.h12, b.h21);
            assert!(b.h12 > 0.0);
        }
    }

    #[test]
    fn variants_agree_at_long_range() {
        let c = hamiltonian_block(20.0, H22Variant::Corrected).unwrap();
        let p = hamiltonian_block(20.0, H22Variant::Printed).unwrap();
        assert_abs_diff_eq!(c.h22, p.h22, epsilon = 1e-5);
    }

    #[test]
    fn w_from_ci_examples() {
        let w = w_from_ci(1.0, 0.0).unwrap();
        for (i, j, v) in [(0, 1, 0.25), (2, 3, 0.25), (0, 3, 0.25), (1, 2, -0.25), (0, 2, 0.0), (1, 3, 0.0)] {
            assert_abs_diff_eq!(w.get(i, j).re, v, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(concurrence4(&w).unwrap(), 0.0, epsilon = 1e-15);

        let w = w_from_ci(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap();
        assert_abs_diff_eq!(w.get(0, 1).re, 0.5 * FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(w.get(0, 3).re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(concurrence4(&w).unwrap(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn unnormalized_coefficients_are_rejected() {
        assert!(matches!(w_from_ci(1.0, 0.1), Err(Error::Unnormalized { .. })));
        assert!(ground_concurrence(0.5, 0.5).is_err());
        assert!(ground_entropy(2.0, 0.0).is_err());
        assert!(ground_entropy(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn ground_measures_at_extremes() {
        assert_eq!(ground_concurrence(1.0, 0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(ground_concurrence(FRAC_1_SQRT_2, -FRAC_1_SQRT_2).unwrap(), 1.0, epsilon = 1e-15);
        assert_eq!(ground_entropy(1.0, 0.0).unwrap(), 1.0);
        assert_abs_diff_eq!(ground_entropy(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn equilibrium_bracket_validation() {
        assert!(equilibrium(2.0, 1.0, H22Variant::Corrected).is_err());
        assert!(equilibrium(0.0, 1.0, H22Variant::Corrected).is_err());
    }
}
