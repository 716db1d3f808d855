use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of the function.
    Domain { what: &'static str, value: f64 },
    /// Single-particle dimension must be even and at least 2.
    OddDimension(usize),
    /// Operation defined only for a specific dimension.
    Dimension { expected: usize, found: usize },
    /// Wrong number of upper-triangle entries (or matrix elements).
    EntryCount { expected: usize, found: usize },
    /// All amplitudes are zero; the state cannot be normalised.
    ZeroState,
    /// CI coefficients do not satisfy `c1^2 + c2^2 = 1`.
    Unnormalized { norm_sq: f64 },
    /// Jacobi sweeps exhausted before the off-diagonal mass vanished.
    EigenNoConvergence { sweeps: usize, off_diagonal: f64 },
    /// Eigenvalues of `w^dagger w` failed to come in degenerate pairs.
    UnpairedSpectrum { mismatch: f64 },
    /// The analytic coefficient formula disagrees with the eigenvector.
    ClosedFormMismatch { deviation: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::Domain { what, value } => write!(f, "{what}: argument {value} outside domain"),
            Error::OddDimension(n) => write!(f, "single-particle dimension {n} must be even and >= 2"),
            Error::Dimension { expected, found } => {
                write!(f, "expected dimension {expected}, found {found}")
            }
            Error::EntryCount { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            Error::ZeroState => f.write_str("all amplitudes are zero"),
            Error::Unnormalized { norm_sq } => {
                write!(f, "coefficients not normalised: c1^2 + c2^2 = {norm_sq}")
            }
            Error::EigenNoConvergence { sweeps, off_diagonal } => {
                write!(f, "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})")
            }
            Error::UnpairedSpectrum { mismatch } => {
                write!(f, "eigenvalues of w^dagger w are not pairwise degenerate (mismatch {mismatch:e})")
            }
            Error::ClosedFormMismatch { deviation } => {
                write!(f, "closed-form CI coefficients deviate from eigenvector by {deviation:e}")
            }
        }
    }
}

impl core::error::Error for Error {}
