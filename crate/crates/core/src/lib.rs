//! Minimal-basis LCAO + CI treatment of the hydrogen molecule together with
//! entanglement measures for pure states of two identical fermions.
//!
//! Everything here is pure arithmetic: the crate is `no_std` and only needs
//! `alloc` for the dynamically sized coefficient matrices. Energies are in
//! Hartree atomic units and distances are the reduced distance `s = R / a0`.
//!
//! * [`specfun`] - exponential integral `E1`, Euler's constant, binary entropy.
//! * [`fermi_ent`] - antisymmetric coefficient matrices, Slater decomposition,
//!   concurrence, one-particle density matrix and von Neumann entropy.
//! * [`h2_integrals`] - closed-form two-centre integrals over hydrogen 1s orbitals.
//! * [`h2_ci`] - the 2x2 configuration-interaction problem and its ground state.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod fermi_ent;
pub mod h2_ci;
pub mod h2_integrals;
pub mod linalg;
pub mod specfun;

pub use error::{Error, Result};
pub use fermi_ent::{AntisymW, DensityMatrix, SlaterSpectrum};
pub use h2_ci::{CiSolution, H22Variant, HamiltonianBlock};
pub use h2_integrals::IntegralSet;

/// Complex scalar used for fermionic amplitudes.
pub type C64 = num_complex::Complex<f64>;
