//! Entanglement of pure states of two identical fermions.
//!
//! A two-fermion state `|w> = sum_ij w_ij f_i^dagger f_j^dagger |0>` is fixed by
//! an antisymmetric complex matrix `w`. With the convention used throughout,
//! `sum_ij |w_ij|^2 = 1/2` makes `<w|w> = 1`. A unitary change of modes
//! brings `w` to blocks `[[0, z_k], [-z_k, 0]]`; the `|z_k|` form the Slater
//! spectrum and the number of non-zero ones is the Slater rank.

use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::hermitian_eigenvalues;
use crate::specfun::plog2p;
use crate::{Error, Result, C64};

/// Target value of `sum_ij |w_ij|^2` for a normalised state.
pub const NORM_SQ: f64 = 0.5;

/// Maximum allowed gap between the two members of a Slater pair.
pub const PAIRING_TOLERANCE: f64 = 1e-8;

/// Eigenvalues below this are treated as exact zeros before taking logs.
pub const ZERO_CLAMP: f64 = 1e-14;

const NORM_DRIFT: f64 = 1e-10;

/// Normalised antisymmetric coefficient matrix of a two-fermion pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct AntisymW {
    n: usize,
    // row-major n x n
    entries: Vec<C64>,
}

impl AntisymW {
    /// Builds the full matrix from its strict upper triangle and rescales it
    /// so that `sum_ij |w_ij|^2 = 1/2`.
    ///
    /// `upper` lists `w_ij` for `i < j` row by row: `(0,1), (0,2), .., (1,2), ..`.
    pub fn from_upper(upper: &[C64], n: usize) -> Result<Self> {
        if n < 2 || n % 2 != 0 {
            return Err(Error::OddDimension(n));
        }
        let expected = n * (n - 1) / 2;
        if upper.len() != expected {
            return Err(Error::EntryCount { expected, found: upper.len() });
        }
        let raw_norm_sq: f64 = 2.0 * upper.iter().map(|z| z.norm_sqr()).sum::<f64>();
        if !raw_norm_sq.is_finite() || raw_norm_sq == 0.0 {
            return Err(Error::ZeroState);
        }
        let scale = libm::sqrt(NORM_SQ / raw_norm_sq);
        let mut entries = vec![C64::new(0.0, 0.0); n * n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in (i + 1)..n {
                let z = *it.next().expect("length checked") * scale;
                entries[i * n + j] = z;
                entries[j * n + i] = -z;
            }
        }
        Ok(Self { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry `w_ij`, zero-based.
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.entries
    }

    pub fn norm_sq(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Coefficients after the mode change `f_i = sum_j U_ij f'_j`, i.e.
    /// `w' = U^dagger w U^*`. `u` is row-major and must be unitary; a
    /// non-unitary `u` shows up as norm drift and is rejected.
    pub fn in_basis(&self, u: &[C64]) -> Result<Self> {
        let n = self.n;
        if u.len() != n * n {
            return Err(Error::EntryCount { expected: n * n, found: u.len() });
        }
        // t = w U^*
        let mut t = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                t[i * n + j] = (0..n).map(|k| self.entries[i * n + k] * u[k * n + j].conj()).sum();
            }
        }
        let mut entries = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let z: C64 = (0..n).map(|k| u[k * n + i].conj() * t[k * n + j]).sum();
                entries[i * n + j] = z;
                entries[j * n + i] = -z;
            }
        }
        let out = Self { n, entries };
        let norm_sq = out.norm_sq();
        if libm::fabs(norm_sq - NORM_SQ) > NORM_DRIFT {
            return Err(Error::Unnormalized { norm_sq: 2.0 * norm_sq });
        }
        Ok(out)
    }

    /// `(w^dagger w)_{ij}`, row-major.
    fn gram(&self) -> Vec<C64> {
        let n = self.n;
        let mut g = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                g[i * n + j] = (0..n).map(|k| self.entries[k * n + i].conj() * self.entries[k * n + j]).sum();
            }
        }
        g
    }
}

/// See [`AntisymW::from_upper`].
pub fn make_antisym(upper: &[C64], n: usize) -> Result<AntisymW> {
    AntisymW::from_upper(upper, n)
}

/// Slater coefficients `|z_k|`, sorted descending, one per 2x2 block
/// (`n / 2` entries, trailing zeros included).
#[derive(Debug, Clone, PartialEq)]
pub struct SlaterSpectrum {
    z: Vec<f64>,
    n: usize,
}

impl SlaterSpectrum {
    pub fn coefficients(&self) -> &[f64] {
        &self.z
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self, tol: f64) -> usize {
        slater_rank(self, tol)
    }

    /// `sum_k z_k^2`; equals 1/4 for a normalised state.
    pub fn weight(&self) -> f64 {
        self.z.iter().map(|z| z * z).sum()
    }
}

/// Slater decomposition from the Hermitian eigenproblem of `w^dagger w`.
///
/// Every eigenvalue `|z_k|^2` appears twice. Eigenvalues are sorted and paired
/// greedily; partners further apart than [`PAIRING_TOLERANCE`] indicate a
/// corrupted input and are reported rather than averaged away.
pub fn slater_decompose(w: &AntisymW) -> Result<SlaterSpectrum> {
    let mut eig = hermitian_eigenvalues(&w.gram(), w.n)?;
    eig.reverse();
    let mut z = Vec::with_capacity(w.n / 2);
    for pair in eig.chunks_exact(2) {
        let mismatch = libm::fabs(pair[0] - pair[1]);
        if mismatch > PAIRING_TOLERANCE {
            return Err(Error::UnpairedSpectrum { mismatch });
        }
        let mean = 0.5 * (pair[0] + pair[1]);
        z.push(if mean < ZERO_CLAMP { 0.0 } else { libm::sqrt(mean) });
    }
    Ok(SlaterSpectrum { z, n: w.n })
}

/// Number of Slater coefficients above `tol`.
pub fn slater_rank(spectrum: &SlaterSpectrum, tol: f64) -> usize {
    spectrum.z.iter().filter(|&&z| z > tol).count()
}

/// Fermionic concurrence `8 |w12 w34 + w13 w42 + w14 w23|` of a state with
/// four single-particle modes. Zero exactly for single Slater determinants.
pub fn concurrence4(w: &AntisymW) -> Result<f64> {
    if w.n != 4 {
        return Err(Error::Dimension { expected: 4, found: w.n });
    }
    let pf = w.get(0, 1) * w.get(2, 3) + w.get(0, 2) * w.get(3, 1) + w.get(0, 3) * w.get(1, 2);
    Ok(8.0 * pf.norm())
}

/// One-particle reduced density matrix `rho_{nu mu} = 2 (w^dagger w)_{mu nu}`.
pub fn reduced_density(w: &AntisymW) -> DensityMatrix {
    let n = w.n;
    let g = w.gram();
    let mut rho = vec![C64::new(0.0, 0.0); n * n];
    for nu in 0..n {
        for mu in 0..n {
            rho[nu * n + mu] = g[mu * n + nu] * 2.0;
        }
    }
    DensityMatrix { n, entries: rho }
}

/// Single-particle entropy `-1 - 4 sum_k z_k^2 log2(z_k^2)`, in `[1, log2 n]`.
pub fn von_neumann_entropy(spectrum: &SlaterSpectrum) -> f64 {
    let sum: f64 = spectrum.z.iter().map(|z| z * z).filter(|&p| p >= ZERO_CLAMP).map(|p| p * libm::log2(p)).sum();
    -1.0 - 4.0 * sum
}

/// Hermitian, unit-trace one-particle density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n: usize,
    entries: Vec<C64>,
}

impl DensityMatrix {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.entries
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self.entries[i * self.n + i]).sum()
    }

    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.entries, self.n)
    }

    /// `-Tr rho log2 rho`, computed from the eigenvalues.
    pub fn entropy(&self) -> Result<f64> {
        Ok(self.eigenvalues()?.into_iter().filter(|&p| p >= ZERO_CLAMP).map(plog2p).sum())
    }
}
