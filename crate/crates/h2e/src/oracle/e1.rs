use super::quad::{integrate_to_infinity, Tolerance};
use super::OracleError;

/// `E1(x)` by direct quadrature of its defining integral.
///
/// With `z = x (1 + t)`, `E1(x) = e^{-x} \int_0^\infty e^{-x t} / (1 + t) dt`; the
/// remaining integral is O(1) to O(ln 1/x), so a tight relative tolerance on
/// it carries over to `E1` itself.
pub fn oracle_e1(x: f64) -> Result<f64, OracleError> {
    if !(x.is_finite() && x > 0.0) {
        return Err(OracleError::Domain { what: "oracle_e1 argument", value: x });
    }
    let tol = Tolerance { abs: 1e-17, rel: 1e-15 };
    let q = integrate_to_infinity(|t| (-x * t).exp() / (1.0 + t), 0.0, 1.0 / x, tol)?;
    Ok((-x).exp() * q.value)
}
