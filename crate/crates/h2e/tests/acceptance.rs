//! Acceptance suite. Every criterion prints one `PASS`/`FAIL` line; run with
//! `cargo test -p h2e --test acceptance -- --nocapture --test-threads 1` to
//! see them in order.

use std::f64::consts::FRAC_1_SQRT_2;
use std::process::Command;
use std::time::{Duration, Instant};

use h2e::oracle::{mc_two_electron, TwoElectron};
use h2e::scan::{run_scan, ScanConfig, ScanRecord};
use h2e::verify::{e1_check, monte_carlo_checks, quadrature_checks, VerifyConfig};
use h2e::EnergyUnit;
use h2e_core::fermi_ent::{concurrence4, make_antisym, slater_decompose, slater_rank, von_neumann_entropy};
use h2e_core::h2_ci::{ci_solve_block, equilibrium, ground_concurrence, hamiltonian_block, w_from_ci, E_1S};
use h2e_core::h2_integrals::one_center_m;
use h2e_core::specfun::binary_entropy;
use h2e_core::{H22Variant, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 42;
const SAMPLES: u64 = 1_000_000;

fn verdict(id: u32, title: &str, pass: bool, detail: String) {
    println!("{} criterion {id:>2} {title}: {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {id} ({title}) failed: {detail}");
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

#[test]
fn criterion_01_equilibrium_energy() {
    let (sol, took) = timed(|| equilibrium(1.0, 2.5, H22Variant::Corrected).unwrap());
    let e_ry = EnergyUnit::Rydberg.from_hartree(sol.binding_energy());
    let pass = (e_ry + 0.237).abs() <= 0.010 && (sol.s - 1.67).abs() <= 0.05 && took < Duration::from_secs(1);
    verdict(1, "equilibrium energy", pass, format!("E_min = {e_ry:.6} Ry at s = {:.5}, {took:?}", sol.s));
}

#[test]
fn criterion_02_equilibrium_concurrence() {
    let (con, took) = timed(|| {
        let sol = equilibrium(1.0, 2.5, H22Variant::Corrected).unwrap();
        ground_concurrence(sol.c1, sol.c2).unwrap()
    });
    let pass = (con - 0.2378).abs() <= 0.010 && took < Duration::from_secs(1);
    verdict(2, "equilibrium concurrence", pass, format!("C = {con:.6}, target 0.2378 +- 0.010, {took:?}"));
}

#[test]
fn criterion_03_large_distance_entanglement() {
    let records = run_scan(&ScanConfig::default()).unwrap();
    let far: Vec<&ScanRecord> = records.iter().filter(|r| r.s >= 8.0).collect();
    let worst = far.iter().map(|r| r.concurrence).fold(f64::INFINITY, f64::min);
    let pass = !far.is_empty() && worst >= 0.98;
    verdict(
        3,
        "large-distance entanglement",
        pass,
        format!("min C = {worst:.6} over {} points with s >= 8", far.len()),
    );
}

#[test]
fn criterion_04_one_center_integral() {
    let exact = one_center_m() == 0.625;
    let est = mc_two_electron(TwoElectron::M, 1.0, SAMPLES, SEED).unwrap();
    let z = est.z_score(0.625);
    verdict(
        4,
        "one-centre integral",
        exact && z <= 3.0,
        format!("m = {}, MC {:.6} +- {:.2e} ({z:.2} sigma)", one_center_m(), est.mean, est.stderr),
    );
}

#[test]
fn criterion_05_integral_oracle_suite() {
    let config = VerifyConfig { seed: SEED, samples: SAMPLES, ..VerifyConfig::default() };
    let (checks, took) = timed(|| {
        let mut checks = quadrature_checks().unwrap();
        checks.extend(monte_carlo_checks(&config).unwrap());
        checks
    });
    // the one-centre row belongs to criterion 4
    let checks: Vec<_> = checks.into_iter().filter(|c| !c.name.starts_with("m(")).collect();
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed()).map(|c| c.name.clone()).collect();
    let pass = checks.len() == 36 && failed.is_empty() && took < Duration::from_secs(120);
    verdict(5, "integral oracle suite", pass, format!("{} checks, failed {failed:?}, {took:?}", checks.len()));
}

#[test]
fn criterion_06_dissociation() {
    let r = ScanRecord::compute(20.0, EnergyUnit::Hartree, H22Variant::Corrected).unwrap();
    let e_ci_ok = (-2e-3..=2e-3).contains(&r.e_ci);
    let plateau_ok = (r.e_psi1 - 5.0 / 16.0).abs() <= 1e-3;
    let mix_ok = (r.c1_sq - 0.5).abs() <= 1e-3 && (r.c2_sq - 0.5).abs() <= 1e-3;
    verdict(
        6,
        "dissociation",
        e_ci_ok && plateau_ok && mix_ok,
        format!(
            "e_ci = {:.3e} Eh [{}], e_psi1 = {:.6} Eh vs 0.3125 [{}], c1^2 = {:.6} c2^2 = {:.6} [{}]",
            r.e_ci,
            ok(e_ci_ok),
            r.e_psi1,
            ok(plateau_ok),
            r.c1_sq,
            r.c2_sq,
            ok(mix_ok)
        ),
    );
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "off"
    }
}

#[test]
fn criterion_07_measure_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut worst_c, mut worst_s) = (0.0f64, 0.0f64);
    for _ in 0..100 {
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let (c2, c1) = theta.sin_cos();
        let w = w_from_ci(c1, c2).unwrap();
        let spectrum = slater_decompose(&w).unwrap();
        let z = spectrum.coefficients();
        let c4 = concurrence4(&w).unwrap();
        let direct = 2.0 * (c1 * c2).abs();
        worst_c = worst_c.max((c4 - direct).abs()).max((8.0 * z[0] * z[1] - direct).abs());
        let s_expected = 1.0 + binary_entropy(c1 * c1).unwrap();
        worst_s = worst_s.max((von_neumann_entropy(&spectrum) - s_expected).abs());
    }
    verdict(
        7,
        "measure chain",
        worst_c <= 1e-12 && worst_s <= 1e-10,
        format!("max |dC| = {worst_c:.2e}, max |dS| = {worst_s:.2e}"),
    );
}

#[test]
fn criterion_08_closed_form_vs_eigensolver() {
    let config = ScanConfig::default();
    let (mut worst_sq, mut worst_grad) = (0.0f64, 0.0f64);
    for variant in [H22Variant::Corrected, H22Variant::Printed] {
        for s in config.grid() {
            let block = hamiltonian_block(s, variant).unwrap();
            let sol = ci_solve_block(&block).unwrap();
            // lower eigenvector of the symmetric 2x2 block, written out by hand
            let mean = 0.5 * (block.h11 + block.h22);
            let half_gap = (0.25 * (block.h11 - block.h22).powi(2) + block.h12 * block.h12).sqrt();
            let lambda = mean - half_gap;
            let (a, b) = if block.h11 <= block.h22 {
                (block.h22 - lambda, -block.h12)
            } else {
                (-block.h12, block.h11 - lambda)
            };
            let norm_sq = a * a + b * b;
            let (eig1, eig2) = (a * a / norm_sq, b * b / norm_sq);
            let (cf1, cf2) = block.closed_form_squares().unwrap();
            worst_sq = worst_sq.max((cf1 - eig1).abs()).max((cf2 - eig2).abs());
            worst_sq = worst_sq.max((sol.c1 * sol.c1 - eig1).abs());
            let omega = sol.c2.atan2(sol.c1);
            let h = 1e-5;
            let grad = (block.energy_at_angle(omega + h) - block.energy_at_angle(omega - h)) / (2.0 * h);
            worst_grad = worst_grad.max(grad.abs());
        }
    }
    verdict(
        8,
        "closed form vs eigensolver",
        worst_sq <= 1e-10 && worst_grad < 1e-8,
        format!("max |d c^2| = {worst_sq:.2e}, max |dE/domega| = {worst_grad:.2e}"),
    );
}

#[test]
fn criterion_09_fermionic_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cplx = || C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let (mut c_range, mut weight, mut iff, mut s_range) = (true, 0.0f64, true, true);
    let mut slaters = 0;
    for i in 0..10_000 {
        let upper: Vec<C64> = if i % 10 == 0 {
            // a single determinant u ^ v in a random basis
            let (u, v): (Vec<C64>, Vec<C64>) = (0..4).map(|_| (cplx(), cplx())).unzip();
            let mut up = Vec::with_capacity(6);
            for a in 0..4 {
                for b in (a + 1)..4 {
                    up.push(u[a] * v[b] - u[b] * v[a]);
                }
            }
            up
        } else {
            (0..6).map(|_| cplx()).collect()
        };
        let w = make_antisym(&upper, 4).unwrap();
        let spectrum = slater_decompose(&w).unwrap();
        let c = concurrence4(&w).unwrap();
        c_range &= (0.0..=1.0).contains(&c);
        weight = weight.max((spectrum.weight() - 0.25).abs());
        let rank_one = slater_rank(&spectrum, 1e-8) == 1;
        slaters += usize::from(rank_one);
        iff &= (c < 1e-8) == rank_one;
        let s = von_neumann_entropy(&spectrum);
        s_range &= (1.0 - 1e-12..=2.0 + 1e-12).contains(&s);
    }
    verdict(
        9,
        "fermionic invariants",
        c_range && weight <= 1e-12 && iff && s_range && slaters >= 1000,
        format!(
            "C in [0,1]: {c_range}, max |sum z^2 - 1/4| = {weight:.2e}, C~0 <=> rank 1: {iff} ({slaters} determinants), S in [1,2]: {s_range}"
        ),
    );
}

#[test]
fn criterion_10_special_function() {
    let (check, took) = timed(|| e1_check().unwrap());
    verdict(
        10,
        "exponential integral",
        check.passed() && took < Duration::from_secs(10),
        format!("worst relative error {:.2e} over 50 points, {took:?}", check.deviation()),
    );
}

#[test]
fn criterion_11_figure_regression() {
    let bin = env!("CARGO_BIN_EXE_h2e");
    let render = |which: &str, parallel: &str| {
        let out = Command::new(bin)
            .args(["figure", "--which", which, "--parallel", parallel])
            .env_remove("H2E_PARALLEL")
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let mut identical = true;
    for which in ["fig1", "fig2", "fig3", "fig4"] {
        let base = render(which, "1");
        identical &= render(which, "1") == base && render(which, "4") == base;
    }
    let fig3 = String::from_utf8(render("fig3", "1")).unwrap();
    let (c1_peak, c_peak) = fig3
        .lines()
        .skip(1)
        .map(|l| {
            let (a, b) = l.split_once(',').unwrap();
            (a.parse::<f64>().unwrap(), b.parse::<f64>().unwrap())
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    let spacing = 1.0 / 399.0;
    let peak_ok = (c1_peak - FRAC_1_SQRT_2).abs() <= spacing && 1.0 - c_peak <= 1e-6;
    verdict(
        11,
        "figure regression",
        identical && peak_ok,
        format!("byte-identical: {identical}, fig3 peak C = {c_peak} at c1 = {c1_peak}"),
    );
}

#[test]
fn dissociation_reference_is_the_separated_atoms() {
    // sanity for criterion 6: energies are measured from 2 E_1s
    let far = ScanRecord::compute(1e4, EnergyUnit::Hartree, H22Variant::Corrected).unwrap();
    assert!(far.e_ci.abs() < 1e-3);
    assert_eq!(2.0 * E_1S, -1.0);
}
