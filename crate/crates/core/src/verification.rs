//! Invariant suites run by `sdkp verify`.
//!
//! Algebra and trace suites take the β set as input so a deliberately broken
//! representation can be checked to fail.

use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{self, max_abs, trace_identity, BetaSet, IndexString, Mat5};
use crate::cross_sections::{compton_dcs_unpolarized, coulomb_dcs, moller_dcs_cm};
use crate::distributions::{dkp_feynman, fix_gauge_constant, split, DistributionDescriptor};
use crate::kinematics::FourVector;
use crate::spinors::{projector, solve_u, Frequency};
use crate::{coupling_from_alpha, Tolerances, DEFAULT_ALPHA};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub detail: String,
}

impl SuiteResult {
    fn new(name: &'static str, max_residual: f64, tolerance: f64, detail: String) -> Self {
        SuiteResult {
            name,
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
            detail,
        }
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} residual {:.1e} {}",
            self.name,
            self.max_residual,
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suites: Vec<SuiteResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Copy of the standard set with one entry of β¹ perturbed.
pub fn corrupted_beta_set() -> BetaSet {
    let mut betas = *algebra::standard().betas();
    betas[1][(0, 2)] += Complex64::new(1e-3, 0.0);
    BetaSet::from_matrices(betas)
}

fn random_string(rng: &mut ChaCha8Rng, len: usize) -> IndexString {
    IndexString::new((0..len).map(|_| rng.random_range(0..4)).collect()).expect("indices in range")
}

pub fn algebra_suite(beta: &BetaSet, tol: &Tolerances) -> SuiteResult {
    let r = beta
        .algebra_residual()
        .max(beta.eta0_residual())
        .max(beta.hermiticity_residual());
    SuiteResult::new("algebra", r, tol.algebra_abs, "64 triples, η⁰, hermiticity".into())
}

/// Closed-form traces against explicit matrix products for `count` random
/// odd and even strings.
pub fn trace_suite(beta: &BetaSet, count: usize, seed: u64, tol: &Tolerances) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0_f64;
    for _ in 0..count {
        let odd = 2 * rng.random_range(0..4) + 1;
        let s = random_string(&mut rng, odd);
        worst = worst.max(beta.product(&s).trace().norm());
        let even = 2 * rng.random_range(1..5);
        let s = random_string(&mut rng, even);
        worst = worst.max((beta.product(&s).trace() - trace_identity(&s)).norm());
    }
    SuiteResult::new(
        "traces",
        worst,
        tol.algebra_abs,
        format!("{count} odd + {count} even strings"),
    )
}

fn random_momentum(rng: &mut ChaCha8Rng, m: f64, max_ratio: f64) -> FourVector {
    let gamma: f64 = rng.random_range(1.0..max_ratio);
    let pmag = m * (gamma * gamma - 1.0).sqrt();
    let cos_t: f64 = rng.random_range(-1.0..1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let sin_t = (1.0 - cos_t * cos_t).sqrt();
    FourVector::on_shell(m, pmag * sin_t * phi.cos(), pmag * sin_t * phi.sin(), pmag * cos_t)
}

/// u⁻ ⊗ ū⁻ against p̸(p̸ + m)/(2mp⁰).
pub fn projector_suite(count: usize, seed: u64, tol: &Tolerances) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0_f64;
    for _ in 0..count {
        let m: f64 = rng.random_range(0.2..3.0);
        let p = random_momentum(&mut rng, m, 100.0);
        let r = match (solve_u(&p, Frequency::Negative, m), projector(&p, m)) {
            (Ok(u), Ok(proj)) => max_abs(&(u.outer() - proj)),
            _ => f64::INFINITY,
        };
        worst = worst.max(r);
    }
    SuiteResult::new(
        "projector",
        worst,
        tol.identity_rel,
        format!("{count} momenta, p0/m up to 100"),
    )
}

/// ω of D₀, D_m and Ŝ, and the size of the splitting ambiguity.
pub fn singular_order_suite() -> SuiteResult {
    let cases = [
        ("D0", DistributionDescriptor::massless_jordan_pauli(), -2, 0),
        ("Dm", DistributionDescriptor::jordan_pauli(1.0), -2, 0),
        ("S", DistributionDescriptor::dkp_commutator(1.0), 0, 1),
    ];
    let mut mismatches = 0.0;
    let mut found = Vec::new();
    for (name, d, omega, constants) in cases {
        match split(&d) {
            Ok(r) => {
                if r.order.value() != omega || r.free_constants() != constants {
                    mismatches += 1.0;
                }
                found.push(format!("ω[{name}]={} constants={}", r.order, r.free_constants()));
            }
            Err(e) => {
                mismatches += 1.0;
                found.push(format!("{name}: {e}"));
            }
        }
    }
    SuiteResult::new("singular orders", mismatches, 0.0, found.join(", "))
}

/// C·m = I and (q̸ − m) S̃(q) = −q̸/m for off-shell q.
pub fn gauge_suite(count: usize, seed: u64, tol: &Tolerances) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let beta = algebra::standard();
    let mut worst = 0.0_f64;
    for _ in 0..count {
        let m: f64 = rng.random_range(0.3..3.0);
        let c = match fix_gauge_constant(m) {
            Ok(c) => c,
            Err(_) => return SuiteResult::new("gauge constant", f64::INFINITY, 0.0, String::new()),
        };
        worst = worst.max(max_abs(&(c * Complex64::from(m) - Mat5::identity())));
        let q = FourVector::new(
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
        );
        if ((q.norm_sq() - m * m) / (m * m)).abs() < 1e-3 {
            continue;
        }
        let s = beta.slash(&q);
        let r = match dkp_feynman(&q, m, &Mat5::zeros()) {
            Ok(prop) => {
                let lhs = (s - Mat5::identity() * Complex64::from(m)) * prop.matrix;
                let rhs = -s / Complex64::from(m);
                max_abs(&(lhs - rhs)) / max_abs(&rhs).max(1e-300)
            }
            Err(_) => f64::INFINITY,
        };
        worst = worst.max(r);
    }
    SuiteResult::new(
        "gauge constant",
        worst,
        tol.identity_rel,
        format!("{count} off-shell momenta"),
    )
}

/// Spot checks of amplitude against closed form for all three processes.
pub fn cross_section_suite(tol: &Tolerances) -> SuiteResult {
    let alpha = DEFAULT_ALPHA;
    let e = coupling_from_alpha(alpha);
    let checks = [
        coulomb_dcs(1.0, 2.0, 3.0_f64.sqrt(), std::f64::consts::FRAC_PI_2, e),
        moller_dcs_cm(10.0, std::f64::consts::FRAC_PI_3, 1.0, alpha),
        compton_dcs_unpolarized(1.0, 1.0, 1.0, alpha),
    ];
    let worst = checks
        .iter()
        .map(|c| c.as_ref().map(|p| p.spread).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    SuiteResult::new(
        "cross sections",
        worst,
        tol.pipeline_rel,
        "coulomb, moller, compton".into(),
    )
}

/// Run every suite against the given β set.
pub fn run_all(beta: &BetaSet, tol: &Tolerances) -> VerificationReport {
    VerificationReport {
        suites: vec![
            algebra_suite(beta, tol),
            trace_suite(beta, 500, 1, tol),
            projector_suite(200, 2, tol),
            singular_order_suite(),
            gauge_suite(200, 3, tol),
            cross_section_suite(tol),
        ],
    }
}
