//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::f64::consts::PI;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sdkp_core::algebra::{self, max_abs, trace_identity, IndexString, Mat5};
use sdkp_core::amplitudes::{compton_msq, moller_msq};
use sdkp_core::cross_sections::{
    compton_closed_form, compton_dcs_lab, compton_dcs_unpolarized, coulomb_dcs, moller_closed_form, moller_dcs_cm,
};
use sdkp_core::cross_sections::{Polarization, PolarizationChoice};
use sdkp_core::distributions::{dkp_feynman, fix_gauge_constant, singular_order, split, DistributionDescriptor};
use sdkp_core::kinematics::{cm_elastic, compton_lab, polarization_basis, FourVector};
use sdkp_core::spinors::{projector, solve_u, Frequency};
use sdkp_core::{coupling_from_alpha, Complex64, Tolerances, DEFAULT_ALPHA};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

fn random_string(rng: &mut ChaCha8Rng, len: usize) -> IndexString {
    IndexString::new((0..len).map(|_| rng.random_range(0..4)).collect()).unwrap()
}

fn random_on_shell(rng: &mut ChaCha8Rng, m: f64, ratio: f64) -> FourVector {
    let pmag = m * (ratio * ratio - 1.0).sqrt();
    let cos_t: f64 = rng.random_range(-1.0..1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let sin_t = (1.0 - cos_t * cos_t).sqrt();
    FourVector::on_shell(m, pmag * sin_t * phi.cos(), pmag * sin_t * phi.sin(), pmag * cos_t)
}

fn dkp_algebra() -> Outcome {
    let start = Instant::now();
    let beta = algebra::build_beta_representation();
    let triples = beta.algebra_residual();
    let eta = beta.eta0_residual();
    let herm = beta.hermiticity_residual();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        triples < 1e-12 && eta == 0.0 && herm == 0.0 && secs < 1.0,
        format!("triples {triples:.1e}, eta0 {eta:.1e}, hermiticity {herm:.1e}, {secs:.3}s"),
    )
}

fn trace_oracle() -> Outcome {
    let start = Instant::now();
    let beta = algebra::standard();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut odd = 0.0_f64;
    let mut even = 0.0_f64;
    for _ in 0..500 {
        let len = 2 * rng.random_range(0..4) + 1;
        let s = random_string(&mut rng, len);
        odd = odd.max(trace_identity(&s).norm()).max(beta.product(&s).trace().norm());
        let len = 2 * rng.random_range(1..5);
        let s = random_string(&mut rng, len);
        even = even.max((trace_identity(&s) - beta.product(&s).trace()).norm());
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        odd < 1e-12 && even < 1e-10 && secs < 10.0,
        format!("odd max {odd:.1e}, even max {even:.1e}, {secs:.3}s"),
    )
}

fn projector_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut worst = 0.0_f64;
    let mut failures = 0;
    for _ in 0..200 {
        let m: f64 = rng.random_range(0.1..10.0);
        let ratio: f64 = rng.random_range(1.0..100.0);
        let p = random_on_shell(&mut rng, m, ratio);
        match (solve_u(&p, Frequency::Negative, m), projector(&p, m)) {
            (Ok(u), Ok(proj)) => worst = worst.max(max_abs(&(u.outer() - proj))),
            _ => failures += 1,
        }
    }
    outcome(
        worst < 1e-10 && failures == 0,
        format!("200 momenta, max entry {worst:.1e}, {failures} errors"),
    )
}

fn singular_orders() -> Outcome {
    let d0 = DistributionDescriptor::massless_jordan_pauli();
    let dm = DistributionDescriptor::jordan_pauli(1.0);
    let s = DistributionDescriptor::dkp_commutator(1.0);
    let orders: Vec<i32> = [&d0, &dm, &s]
        .iter()
        .map(|d| singular_order(d).unwrap().value())
        .collect();
    let constants: Vec<usize> = [&d0, &dm, &s]
        .iter()
        .map(|d| split(d).unwrap().free_constants())
        .collect();
    let matrix_slot = split(&s)
        .unwrap()
        .retarded
        .constants
        .iter()
        .all(|c| c.kind == sdkp_core::distributions::SlotKind::Matrix);
    outcome(
        orders == [-2, -2, 0] && constants == [0, 0, 1] && matrix_slot,
        format!("ω = {orders:?}, free constants = {constants:?}"),
    )
}

fn gauge_constant() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let beta = algebra::standard();
    let mut c_dev = 0.0_f64;
    let mut prop_dev = 0.0_f64;
    let mut n = 0;
    while n < 200 {
        let m: f64 = rng.random_range(0.1..10.0);
        let c = fix_gauge_constant(m).unwrap();
        c_dev = c_dev.max(max_abs(&(c * Complex64::from(m) - Mat5::identity())));
        let q = FourVector::new(
            rng.random_range(-20.0..20.0),
            rng.random_range(-20.0..20.0),
            rng.random_range(-20.0..20.0),
            rng.random_range(-20.0..20.0),
        );
        if ((q.norm_sq() - m * m) / (m * m)).abs() < 1e-2 {
            continue;
        }
        let s = beta.slash(&q);
        let lhs = (s - Mat5::identity() * Complex64::from(m)) * dkp_feynman(&q, m, &Mat5::zeros()).unwrap().matrix;
        let rhs = -s / Complex64::from(m);
        prop_dev = prop_dev.max(max_abs(&(lhs - rhs)) / max_abs(&rhs));
        n += 1;
    }
    // C·m is one rounded division and one rounded product away from I
    outcome(
        c_dev <= f64::EPSILON && prop_dev < 1e-10,
        format!("|C·m − I| {c_dev:.1e}, propagator identity {prop_dev:.1e} over 200 q"),
    )
}

fn coulomb() -> Outcome {
    let e = coupling_from_alpha(DEFAULT_ALPHA);
    let m = 1.0;
    let mut worst = 0.0_f64;
    let mut errors = 0;
    for ratio in linspace(1.1, 10.0, 10) {
        let energy = ratio * m;
        let p = (energy * energy - m * m).sqrt();
        for deg in linspace(10.0, 170.0, 10) {
            match coulomb_dcs(1.0, energy, p, deg.to_radians(), e) {
                Ok(pair) => worst = worst.max(rel(pair.from_amplitude, pair.closed_form)),
                Err(_) => errors += 1,
            }
        }
    }
    outcome(
        worst < 1e-8 && errors == 0,
        format!("10×10 grid, max relative {worst:.1e}, {errors} errors"),
    )
}

fn moller() -> Outcome {
    let alpha = DEFAULT_ALPHA;
    let tol = Tolerances::default();
    let m = 1.0;
    let mut worst = 0.0_f64;
    let mut errors = 0;
    for s in linspace(5.0, 100.0, 10) {
        for deg in linspace(10.0, 170.0, 10) {
            let proc = cm_elastic(s * m * m, deg.to_radians(), m)
                .unwrap()
                .with_coupling(coupling_from_alpha(alpha));
            match (moller_msq(&proc, &tol), proc.mandelstam()) {
                (Ok(msq), Ok(mand)) => {
                    let energy = proc.p_in.t;
                    let from_trace = 4.0 * PI * PI * energy * energy / 4.0 * msq.trace;
                    worst = worst.max(rel(from_trace, moller_closed_form(mand.s, mand.t, mand.u, alpha)));
                }
                _ => errors += 1,
            }
        }
    }
    let s = 1e6 * m * m;
    let spot = moller_dcs_cm(s, PI / 2.0, m, alpha).map(|p| rel(p.value(), 9.0 * alpha * alpha / s));
    let spot = spot.unwrap_or(f64::INFINITY);
    outcome(
        worst < 1e-8 && errors == 0 && spot < 1e-4,
        format!("trace vs closed form max {worst:.1e}, 9α²/s spot {spot:.1e}, {errors} errors"),
    )
}

fn compton() -> Outcome {
    let tol = Tolerances::default();
    let (m, alpha) = (1.0, DEFAULT_ALPHA);
    let mut pole = 0.0_f64;
    let mut cross = 0.0_f64;
    let mut dcs = 0.0_f64;
    let mut points = 0;
    let mut errors = 0;
    let pols = [Polarization::InPlane, Polarization::OutOfPlane];
    for w in [1e-3, 0.05, 0.3, 1.0, 2.5, 10.0, 100.0] {
        for deg in linspace(0.0, 180.0, 8) {
            let theta = deg.to_radians();
            let proc = compton_lab(w, theta, m)
                .unwrap()
                .with_coupling(coupling_from_alpha(alpha));
            let bi = polarization_basis(&proc.partner_in.unwrap()).unwrap();
            let bf = polarization_basis(&proc.partner_out.unwrap()).unwrap();
            let c = fix_gauge_constant(m).unwrap();
            points += 1;
            // |M_a|² with parallel unit polarizations sets the scale for vanishing terms
            let omega_f = proc.partner_out.unwrap().t;
            let e2 = proc.coupling * proc.coupling;
            let scale = e2 * e2 / (64.0 * PI.powi(4) * w * omega_f * m * proc.p_out.t);
            for (i, ei) in bi.iter().enumerate() {
                for (f, ef) in bf.iter().enumerate() {
                    match compton_msq(&proc, ei, ef, &c, &tol) {
                        Ok(parts) => {
                            let a2 = parts.seagull_sq.value().max(scale);
                            pole = pole.max(parts.pole_sq.value() / a2);
                            cross = cross.max(parts.cross.value().abs() / a2);
                        }
                        Err(_) => errors += 1,
                    }
                    let choice = PolarizationChoice {
                        initial: pols[i],
                        final_: pols[f],
                    };
                    match compton_dcs_lab(w, theta, m, choice, alpha) {
                        Ok(pair) => {
                            let reference = compton_closed_form(w, omega_f, 1.0, m, alpha);
                            dcs = dcs
                                .max((pair.from_amplitude - pair.closed_form).abs() / pair.closed_form.max(reference));
                        }
                        Err(_) => errors += 1,
                    }
                }
            }
        }
    }
    let mut thomson = 0.0_f64;
    let mut worst_deg = 0.0;
    for deg in linspace(0.0, 180.0, 19) {
        let theta = deg.to_radians();
        let limit = alpha * alpha / (2.0 * m * m) * (1.0 + theta.cos().powi(2));
        let r = compton_dcs_unpolarized(1e-4 * m, theta, m, alpha)
            .map(|p| rel(p.value(), limit))
            .unwrap_or(f64::INFINITY);
        if r > thomson {
            thomson = r;
            worst_deg = deg;
        }
    }
    outcome(
        pole < 1e-10 && cross < 1e-10 && dcs < 1e-8 && thomson < 1e-4 && errors == 0 && points >= 50,
        format!(
            "{points} points × 4 polarizations: |M_b|²/|M_a|² {pole:.1e}, cross {cross:.1e}, dσ vs closed form {dcs:.1e}; \
             low-energy limit max {thomson:.1e} at θ={worst_deg}°, {errors} errors"
        ),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_sdkp");
    let args = [
        "xsec",
        "moller",
        "--s",
        "10,50",
        "--theta-min",
        "10",
        "--theta-max",
        "170",
        "--steps",
        "41",
    ];
    let mut outputs = Vec::new();
    for name in ["a.csv", "b.csv"] {
        let path = dir.path().join(name);
        let status = Command::new(bin)
            .args(args)
            .arg("--out")
            .arg(&path)
            .status()
            .expect("run sdkp");
        if !status.success() {
            return outcome(false, format!("sdkp exited with {status}"));
        }
        outputs.push(std::fs::read(&path).unwrap());
    }
    outcome(
        outputs[0] == outputs[1] && !outputs[0].is_empty(),
        format!("{} bytes, identical: {}", outputs[0].len(), outputs[0] == outputs[1]),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("dkp algebra", dkp_algebra),
        ("trace oracle", trace_oracle),
        ("projector oracle", projector_oracle),
        ("singular orders", singular_orders),
        ("gauge constant", gauge_constant),
        ("coulomb", coulomb),
        ("moller", moller),
        ("compton", compton),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {} {name}: {} ({})",
            n + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("acceptance: {} of 9 passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
