//! Adaptive Gauss-Kronrod (7/15) quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::OracleError;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7]
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const MAX_INTERVALS: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    fn target(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

/// Integral estimate with its (conservative) error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
}

struct Interval {
    a: f64,
    b: f64,
    value: f64,
    /// Truncation error estimate; drives which interval is split next.
    error: f64,
    /// Rounding level of the interval's rule sum, below which `error` means nothing.
    noise: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> Interval {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut fv = [0.0; 15];
    fv[7] = fc;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv[i] = f1;
        fv[14 - i] = f2;
        kronrod += WGK[i] * (f1 + f2);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    let weight = |i: usize| WGK[i.min(14 - i)];
    let mean = 0.5 * kronrod;
    let abs_sum: f64 = (0..15).map(|i| weight(i) * fv[i].abs()).sum();
    let asc_sum: f64 = (0..15).map(|i| weight(i) * (fv[i] - mean).abs()).sum();
    let (res_abs, res_asc) = (abs_sum * half.abs(), asc_sum * half.abs());
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        // QUADPACK scaling of the raw Gauss/Kronrod difference
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    Interval { a, b, value: kronrod * half, error, noise: 50.0 * f64::EPSILON * res_abs }
}

/// Globally adaptive integration of `f` over the finite interval `[a, b]`.
///
/// Converges once the summed error estimate meets `tol`, or once it has
/// fallen to the rounding level of the sum itself.
pub fn integrate(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: Tolerance) -> Result<Quadrature, OracleError> {
    let mut heap = BinaryHeap::new();
    let first = gk15(&mut f, a, b);
    let (mut value, mut error, mut noise) = (first.value, first.error, first.noise);
    heap.push(first);
    while error > tol.target(value) && error > noise {
        let worst = heap.pop().expect("heap never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if heap.len() + 1 >= MAX_INTERVALS || mid <= worst.a || mid >= worst.b {
            return Err(OracleError::QuadratureNotConverged { achieved: error, requested: tol.target(value) });
        }
        let left = gk15(&mut f, worst.a, mid);
        let right = gk15(&mut f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        noise += left.noise + right.noise - worst.noise;
        heap.push(left);
        heap.push(right);
    }
    // re-sum to shed the drift accumulated by incremental updates
    let value: f64 = heap.iter().map(|iv| iv.value).sum();
    let error: f64 = heap.iter().map(|iv| iv.error.max(iv.noise)).sum();
    if !(value.is_finite() && error.is_finite()) {
        return Err(OracleError::QuadratureNotConverged { achieved: error, requested: tol.target(value) });
    }
    Ok(Quadrature { value, error })
}

/// Integrates an integrand that decays at least like `e^{-x / scale}` over
/// `[a, inf)` by summing adaptive panels `[a + scale(2^k - 1), a + scale(2^{k+1} - 1)]`
/// until the panel end lies `TAIL_SCALES` decay lengths out and the last
/// panel is below tolerance.
pub fn integrate_to_infinity(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    scale: f64,
    tol: Tolerance,
) -> Result<Quadrature, OracleError> {
    const TAIL_SCALES: f64 = 80.0;
    const MAX_PANELS: u32 = 60;
    let mut total = Quadrature { value: 0.0, error: 0.0 };
    let mut width = scale;
    let mut lo = a;
    for _ in 0..MAX_PANELS {
        let hi = lo + width;
        let panel = integrate(&mut f, lo, hi, tol)?;
        total.value += panel.value;
        total.error += panel.error;
        if hi - a >= TAIL_SCALES * scale && panel.value.abs() <= tol.target(total.value) {
            return Ok(total);
        }
        lo = hi;
        width *= 2.0;
    }
    Err(OracleError::QuadratureNotConverged { achieved: total.error, requested: tol.target(total.value) })
}
