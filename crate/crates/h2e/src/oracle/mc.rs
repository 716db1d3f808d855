//! Importance-sampled Monte-Carlo estimates of the two-electron integrals.
//!
//! Electron positions are drawn exactly from normalised 1s densities
//! `e^{-2r}/pi`: the radius by inverting the closed-form radial CDF, the
//! direction uniformly on the sphere. Integrals whose integrand contains the
//! overlap density `phi_a phi_b` are sampled from the mixture
//! `(phi_a^2 + phi_b^2)/2` per electron and reweighted exactly.
//!
//! Samples are split into fixed shards of [`SHARD_SIZE`]; shard `i` draws from
//! a ChaCha8 stream `i` keyed by the user seed, and shard sums are combined in
//! shard order. Results therefore depend only on `(kind, s, n_samples, seed)`,
//! never on how many worker threads ran the shards.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::OracleError;

pub const MIN_SAMPLES: u64 = 10_000;
pub const SHARD_SIZE: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoElectron {
    /// `(aa|bb)`
    J,
    /// `(ab|ab)`
    K,
    /// `(aa|ab)`
    L,
    /// `(aa|aa)`
    M,
}

impl TwoElectron {
    pub const ALL: [TwoElectron; 4] = [TwoElectron::J, TwoElectron::K, TwoElectron::L, TwoElectron::M];

    pub fn name(self) -> &'static str {
        match self {
            TwoElectron::J => "j",
            TwoElectron::K => "k",
            TwoElectron::L => "l",
            TwoElectron::M => "m",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub n_samples: u64,
    pub seed: u64,
}

impl McEstimate {
    /// `|mean - value|` in units of the standard error.
    pub fn z_score(&self, value: f64) -> f64 {
        (self.mean - value).abs() / self.stderr
    }
}

/// Radius distributed as `4 r^2 e^{-2r}`, i.e. the radial density of a
/// hydrogen 1s electron, obtained by solving `F(r) = u` with safeguarded
/// Newton iteration on the closed-form CDF
/// `F(r) = 1 - e^{-2r}(1 + 2r + 2r^2)`.
pub fn sample_radius(u: f64) -> f64 {
    // work in x = 2r: tail Q(x) = e^{-x}(1 + x + x^2/2), density x^2 e^{-x}/2
    let q = 1.0 - u;
    if u <= 0.0 {
        return 0.0;
    }
    if q <= 0.0 {
        return f64::INFINITY;
    }
    let (mut lo, mut hi) = (0.0f64, 800.0f64);
    // rough start: cube-root law near the origin, logarithmic tail beyond
    let mut x = if u < 0.5 { (6.0 * u).cbrt() } else { -q.ln() + (1.0 - q.ln()).ln() + 1.0 };
    x = x.clamp(1e-300, hi);
    for _ in 0..100 {
        let poly = 1.0 + x + 0.5 * x * x;
        // choose the better-conditioned residual: CDF near 0, log tail beyond
        let (residual, slope) = if u < 0.5 {
            let cdf = -(-x).exp_m1() - x * (-x).exp() * (1.0 + 0.5 * x);
            (cdf - u, 0.5 * x * x * (-x).exp())
        } else {
            (poly.ln() - x - q.ln(), -(0.5 * x * x) / poly)
        };
        // both residuals increase with x in the CDF branch and decrease in the tail branch
        let increasing = u < 0.5;
        if (residual > 0.0) == increasing {
            hi = x;
        } else {
            lo = x;
        }
        let mut next = x - residual / slope;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-15 * x {
            x = next;
            break;
        }
        x = next;
    }
    0.5 * x
}

fn sample_1s(rng: &mut ChaCha8Rng, center_z: f64) -> [f64; 3] {
    let r = sample_radius(rng.gen::<f64>());
    let cos_theta = 2.0 * rng.gen::<f64>() - 1.0;
    let sin_theta = (1.0 - cos_theta * cos_theta).max(0.0).sqrt();
    let (sin_phi, cos_phi) = (std::f64::consts::TAU * rng.gen::<f64>()).sin_cos();
    [r * sin_theta * cos_phi, r * sin_theta * sin_phi, center_z + r * cos_theta]
}

fn sample_mixture(rng: &mut ChaCha8Rng, s: f64) -> [f64; 3] {
    let center = if rng.gen::<bool>() { s } else { 0.0 };
    sample_1s(rng, center)
}

/// Distances of a point to nucleus A at the origin and B at `(0, 0, s)`.
fn nuclear_distances(p: &[f64; 3], s: f64) -> (f64, f64) {
    let rho_sq = p[0] * p[0] + p[1] * p[1];
    ((rho_sq + p[2] * p[2]).sqrt(), (rho_sq + (p[2] - s) * (p[2] - s)).sqrt())
}

fn distance(p: &[f64; 3], q: &[f64; 3]) -> f64 {
    ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2) + (p[2] - q[2]).powi(2)).sqrt()
}

/// `phi_a phi_b / mixture = 1 / cosh(r_a - r_b)`.
fn overlap_weight(p: &[f64; 3], s: f64) -> f64 {
    let (ra, rb) = nuclear_distances(p, s);
    1.0 / (ra - rb).cosh()
}

/// `phi_a^2 / mixture = 1 + tanh(r_b - r_a)`.
fn density_a_weight(p: &[f64; 3], s: f64) -> f64 {
    let (ra, rb) = nuclear_distances(p, s);
    1.0 + (rb - ra).tanh()
}

fn draw(kind: TwoElectron, rng: &mut ChaCha8Rng, s: f64) -> f64 {
    match kind {
        TwoElectron::M => {
            let (x1, x2) = (sample_1s(rng, 0.0), sample_1s(rng, 0.0));
            1.0 / distance(&x1, &x2)
        }
        TwoElectron::J => {
            let (x1, x2) = (sample_1s(rng, 0.0), sample_1s(rng, s));
            1.0 / distance(&x1, &x2)
        }
        TwoElectron::K => {
            let (x1, x2) = (sample_mixture(rng, s), sample_mixture(rng, s));
            overlap_weight(&x1, s) * overlap_weight(&x2, s) / distance(&x1, &x2)
        }
        TwoElectron::L => {
            let (x1, x2) = (sample_mixture(rng, s), sample_mixture(rng, s));
            density_a_weight(&x1, s) * overlap_weight(&x2, s) / distance(&x1, &x2)
        }
    }
}

/// Monte-Carlo estimate of a two-electron integral at distance `s`.
///
/// Shards run on the current rayon pool.
pub fn mc_two_electron(kind: TwoElectron, s: f64, n_samples: u64, seed: u64) -> Result<McEstimate, OracleError> {
    if !(s.is_finite() && s > 0.0) {
        return Err(OracleError::Domain { what: "internuclear distance", value: s });
    }
    if n_samples < MIN_SAMPLES {
        return Err(OracleError::TooFewSamples { min: MIN_SAMPLES, found: n_samples });
    }
    let n_shards = n_samples.div_ceil(SHARD_SIZE);
    let sums: Vec<(f64, f64)> = (0..n_shards)
        .into_par_iter()
        .map(|shard| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(shard);
            let count = SHARD_SIZE.min(n_samples - shard * SHARD_SIZE);
            let (mut sum, mut sum_sq) = (0.0, 0.0);
            for _ in 0..count {
                let v = draw(kind, &mut rng, s);
                sum += v;
                sum_sq += v * v;
            }
            (sum, sum_sq)
        })
        .collect();
    let (sum, sum_sq) = sums.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let n = n_samples as f64;
    let mean = sum / n;
    let variance = ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0);
    Ok(McEstimate { mean, stderr: (variance / n).sqrt(), n_samples, seed })
}
