//! Dense eigenvalue routines for the small matrices met in this crate.
//!
//! The matrices are at most a few dozen rows, so a cyclic Jacobi sweep is
//! both accurate to a few ulps and simple enough to carry in `no_std`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result, C64};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric `n x n` matrix (row-major), ascending.
///
/// Only the upper triangle is read.
pub fn symmetric_eigenvalues(a: &[f64], n: usize) -> Result<Vec<f64>> {
    if a.len() != n * n {
        return Err(Error::EntryCount { expected: n * n, found: a.len() });
    }
    let mut m = vec![0.0; n * n];
    for p in 0..n {
        for q in p..n {
            m[p * n + q] = a[p * n + q];
            m[q * n + p] = a[p * n + q];
        }
    }
    jacobi_in_place(&mut m, n)?;
    let mut eig: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Eigenvalues of a complex Hermitian `n x n` matrix (row-major), ascending.
///
/// Solved through the real symmetric embedding `[[X, -Y], [Y, X]]` of
/// `H = X + iY`, whose spectrum is that of `H` with every value doubled.
pub fn hermitian_eigenvalues(h: &[C64], n: usize) -> Result<Vec<f64>> {
    if h.len() != n * n {
        return Err(Error::EntryCount { expected: n * n, found: h.len() });
    }
    let m = 2 * n;
    let mut emb = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            // symmetrise so tiny non-Hermitian rounding cannot bias the result
            let z = (h[i * n + j] + h[j * n + i].conj()) * 0.5;
            emb[i * m + j] = z.re;
            emb[(i + n) * m + (j + n)] = z.re;
            emb[i * m + (j + n)] = -z.im;
            emb[(i + n) * m + j] = z.im;
        }
    }
    jacobi_in_place(&mut emb, m)?;
    let mut doubled: Vec<f64> = (0..m).map(|i| emb[i * m + i]).collect();
    doubled.sort_by(f64::total_cmp);
    Ok(doubled.chunks_exact(2).map(|pair| 0.5 * (pair[0] + pair[1])).collect())
}

fn off_diagonal_sq(m: &[f64], n: usize) -> f64 {
    let mut off = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            off += m[p * n + q] * m[p * n + q];
        }
    }
    off
}

fn jacobi_in_place(m: &mut [f64], n: usize) -> Result<()> {
    let frob_sq: f64 = m.iter().map(|x| x * x).sum();
    if frob_sq == 0.0 {
        return Ok(());
    }
    // entries this small perturb the spectrum by less than rounding already does
    let negligible = f64::EPSILON * libm::sqrt(frob_sq) / n as f64;
    let target = negligible * negligible;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_sq(m, n) <= target {
            return Ok(());
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[p * n + q];
                if libm::fabs(apq) <= negligible {
                    m[p * n + q] = 0.0;
                    m[q * n + p] = 0.0;
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if libm::fabs(theta) > 1e150 {
                    0.5 / theta
                } else {
                    let t = 1.0 / (libm::fabs(theta) + libm::sqrt(theta * theta + 1.0));
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                m[p * n + p] = app - t * apq;
                m[q * n + q] = aqq + t * apq;
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = m[r * n + p];
                    let arq = m[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    m[r * n + p] = new_rp;
                    m[p * n + r] = new_rp;
                    m[r * n + q] = new_rq;
                    m[q * n + r] = new_rq;
                }
            }
        }
    }
    let off = off_diagonal_sq(m, n);
    if off <= target {
        Ok(())
    } else {
        Err(Error::EigenNoConvergence { sweeps: MAX_SWEEPS, off_diagonal: libm::sqrt(off) })
    }
}
