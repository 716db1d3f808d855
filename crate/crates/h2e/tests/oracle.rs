use approx::assert_abs_diff_eq;
use h2e::oracle::{mc_two_electron, oracle_e1, quad_one_electron, OneElectron, TwoElectron};
use h2e_core::h2_integrals::{exchange_k, overlap};
use h2e_core::specfun::{exp_integral_e1, EULER_GAMMA};

#[test]
fn stderr_scales_as_inverse_root_n() {
    for kind in [TwoElectron::J, TwoElectron::K, TwoElectron::L] {
        let small = mc_two_electron(kind, 1.67, 100_000, 5).unwrap();
        let large = mc_two_electron(kind, 1.67, 1_000_000, 5).unwrap();
        let ratio = small.stderr / large.stderr;
        let ideal = 10f64.sqrt();
        assert!(ratio > ideal / 2.0 && ratio < ideal * 2.0, "{}: ratio {ratio}", kind.name());
    }
}

#[test]
fn variance_is_finite_at_short_distance() {
    // a finite variance shows up as a per-sample spread that settles with n
    for kind in TwoElectron::ALL {
        let spread = |n: u64| {
            let est = mc_two_electron(kind, 0.5, n, 11).unwrap();
            est.stderr * (n as f64).sqrt()
        };
        let (a, b) = (spread(100_000), spread(1_000_000));
        assert!(a.is_finite() && b.is_finite());
        assert!((a / b - 1.0).abs() < 0.25, "{}: spread {a} vs {b}", kind.name());
    }
}

#[test]
fn exchange_cancellation_near_coincidence() {
    let s = 1e-2;
    // 50-digit evaluation of the same closed form
    assert_abs_diff_eq!(exchange_k(s).unwrap(), 0.624_975_001_034_906, epsilon = 1e-12);
    let est = mc_two_electron(TwoElectron::K, s, 1_000_000, 42).unwrap();
    assert!(est.z_score(exchange_k(s).unwrap()) <= 3.0, "{est:?}");
}

#[test]
fn quadrature_limits() {
    assert_abs_diff_eq!(quad_one_electron(OneElectron::Overlap, 1e-3).unwrap(), 1.0, epsilon = 1e-6);
    assert_abs_diff_eq!(quad_one_electron(OneElectron::JPrime, 20.0).unwrap(), 0.05, epsilon = 1e-6);
    assert_abs_diff_eq!(quad_one_electron(OneElectron::Overlap, 2.0).unwrap(), overlap(2.0).unwrap(), epsilon = 1e-8);
}

#[test]
fn e1_small_argument_and_reference() {
    assert_abs_diff_eq!(oracle_e1(1.0).unwrap(), 0.219_383_934_4, epsilon = 1e-10);
    assert!((oracle_e1(10.0).unwrap() - 4.1570e-6).abs() < 1e-10);
    for x in [1e-3, 1e-4] {
        let v = oracle_e1(x).unwrap();
        assert!((v + EULER_GAMMA + f64::ln(x) - x).abs() < x * x);
        assert!((v - exp_integral_e1(x).unwrap()).abs() < 1e-12 * v);
    }
}

#[test]
fn estimates_reproduce_bit_for_bit() {
    let a = mc_two_electron(TwoElectron::L, 2.0, 50_000, 3).unwrap();
    let b = mc_two_electron(TwoElectron::L, 2.0, 50_000, 3).unwrap();
    assert_eq!(a, b);
    let c = mc_two_electron(TwoElectron::L, 2.0, 50_000, 4).unwrap();
    assert_ne!(a.mean, c.mean);
}
