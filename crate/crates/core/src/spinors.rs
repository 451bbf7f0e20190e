//! Momentum-space DKP amplitudes u±(p).
//!
//! u⁻ multiplies e^{−ipx} and solves (p̸ − m)u⁻ = 0; u⁺ multiplies e^{+ipx}
//! and solves (p̸ + m)u⁺ = 0. Both are obtained as numerical null vectors,
//! then normalized to ū^± β⁰ u^± = ∓1 with ū = u†η⁰, and phased so that the
//! scalar slot is real and positive.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, Mat5, Row5, Vec5};
use crate::error::{Error, Result};
use crate::kinematics::FourVector;

/// Relative on-shell slack accepted by [`solve_u`] and [`projector`].
const ON_SHELL_REL: f64 = 1e-9;
/// Singular values below this fraction of the operator scale count as zero.
const NULL_REL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Frequency {
    /// Particle solution, e^{−ipx}.
    Negative,
    /// Antiparticle solution, e^{+ipx}.
    Positive,
}

impl Frequency {
    /// Target value of ū β⁰ u.
    pub fn norm_sign(self) -> f64 {
        match self {
            Frequency::Negative => 1.0,
            Frequency::Positive => -1.0,
        }
    }

    /// Sign s in (p̸ + s·m) u = 0.
    fn mass_sign(self) -> f64 {
        match self {
            Frequency::Negative => -1.0,
            Frequency::Positive => 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DkpSpinor {
    components: Vec5,
    momentum: FourVector,
    mass: f64,
    frequency: Frequency,
}

impl DkpSpinor {
    pub fn components(&self) -> &Vec5 {
        &self.components
    }

    pub fn momentum(&self) -> FourVector {
        self.momentum
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn frequency(&self) -> Frequency {
        self.frequency
    }

    /// ū = u†η⁰.
    pub fn bar(&self) -> Row5 {
        bar(&self.components)
    }

    /// u ⊗ ū.
    pub fn outer(&self) -> Mat5 {
        self.components * self.bar()
    }

    /// ū M u.
    pub fn sandwich(&self, m: &Mat5) -> Complex64 {
        (self.bar() * m * self.components)[(0, 0)]
    }
}

/// Dirac-style conjugate u†η⁰ of an arbitrary five-component column.
pub fn bar(u: &Vec5) -> Row5 {
    u.adjoint() * algebra::standard().eta0()
}

fn check_on_shell(p: &FourVector, m: f64) -> Result<()> {
    if !(m > 0.0) {
        return Err(Error::InvalidParameter {
            name: "mass",
            value: m,
            reason: "must be positive",
        });
    }
    if !(p.t > 0.0) {
        return Err(Error::InvalidParameter {
            name: "p0",
            value: p.t,
            reason: "energy must be positive",
        });
    }
    let residual = p.norm_sq() - m * m;
    if residual.abs() > ON_SHELL_REL * (m * m).max(p.t * p.t) {
        return Err(Error::OffShell { residual });
    }
    Ok(())
}

/// Solve the momentum-space DKP equation for an on-shell p with p⁰ > 0.
pub fn solve_u(p: &FourVector, frequency: Frequency, m: f64) -> Result<DkpSpinor> {
    check_on_shell(p, m)?;
    let beta = algebra::standard();
    let op = beta.slash(p) + Mat5::identity() * Complex64::from(frequency.mass_sign() * m);

    let svd = op.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let scale = algebra::max_abs(&op).max(m);
    let null: Vec<usize> = (0..5).filter(|&i| svd.singular_values[i] <= NULL_REL * scale).collect();
    if null.len() != 1 {
        return Err(Error::DegenerateNullSpace { dimension: null.len() });
    }
    let mut u: Vec5 = v_t.row(null[0]).adjoint();

    // phase: scalar slot real positive
    let lead = u[0];
    if lead.norm() == 0.0 {
        return Err(Error::DegenerateNullSpace { dimension: 0 });
    }
    u *= lead.conj() / lead.norm();

    let norm = (bar(&u) * beta.beta(0) * u)[(0, 0)].re;
    if norm.signum() != frequency.norm_sign() {
        return Err(Error::DegenerateNullSpace { dimension: 1 });
    }
    u /= Complex64::from(norm.abs().sqrt());
    u[0] = Complex64::new(u[0].re, 0.0);

    Ok(DkpSpinor {
        components: u,
        momentum: *p,
        mass: m,
        frequency,
    })
}

/// p̸(p̸ + m) / (2 m p⁰), equal to u⁻(p) ⊗ ū⁻(p).
pub fn projector(p: &FourVector, m: f64) -> Result<Mat5> {
    check_on_shell(p, m)?;
    Ok(projector_unchecked(p, m))
}

pub(crate) fn projector_unchecked(p: &FourVector, m: f64) -> Mat5 {
    let s = algebra::standard().slash(p);
    s * (s + Mat5::identity() * Complex64::from(m)) / Complex64::from(2.0 * m * p.t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::max_abs;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_on_shell(rng: &mut ChaCha8Rng, m: f64, max_gamma: f64) -> FourVector {
        let gamma: f64 = rng.random_range(1.0..max_gamma);
        let pmag = m * (gamma * gamma - 1.0).sqrt();
        let cos_t: f64 = rng.random_range(-1.0..1.0);
        let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let sin_t = (1.0 - cos_t * cos_t).sqrt();
        FourVector::on_shell(m, pmag * sin_t * phi.cos(), pmag * sin_t * phi.sin(), pmag * cos_t)
    }

    #[test]
    fn rest_frame_particle_lives_in_scalar_and_time_slots() {
        let m = 1.3;
        let u = solve_u(&FourVector::new(m, 0.0, 0.0, 0.0), Frequency::Negative, m).unwrap();
        let c = u.components();
        // brute-force null vector of β⁰m − m: (1, 1, 0, 0, 0)/√2
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for (i, want) in [h, h, 0.0, 0.0, 0.0].into_iter().enumerate() {
            assert!((c[i] - Complex64::from(want)).norm() < 1e-15, "slot {i}: {}", c[i]);
        }
        assert!((u.sandwich(algebra::standard().beta(0)) - Complex64::from(1.0)).norm() < 1e-15);
    }

    #[test]
    fn normalization_signs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b0 = *algebra::standard().beta(0);
        for _ in 0..50 {
            let m = 0.7;
            let p = random_on_shell(&mut rng, m, 20.0);
            let um = solve_u(&p, Frequency::Negative, m).unwrap();
            let up = solve_u(&p, Frequency::Positive, m).unwrap();
            assert!((um.sandwich(&b0).re - 1.0).abs() < 1e-12);
            assert!((up.sandwich(&b0).re + 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn spinors_solve_their_equations() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let beta = algebra::standard();
        for _ in 0..50 {
            let m = 1.0;
            let p = random_on_shell(&mut rng, m, 50.0);
            let s = beta.slash(&p);
            let um = solve_u(&p, Frequency::Negative, m).unwrap();
            let up = solve_u(&p, Frequency::Positive, m).unwrap();
            let r1 = (s - Mat5::identity()) * um.components();
            let r2 = (s + Mat5::identity()) * up.components();
            assert!(r1.camax() < 1e-10 * p.t && r2.camax() < 1e-10 * p.t);
        }
    }

    #[test]
    fn off_shell_and_negative_energy_are_rejected() {
        let p = FourVector::new(2.0, 0.0, 0.0, 0.5);
        assert!(matches!(
            solve_u(&p, Frequency::Negative, 1.0),
            Err(Error::OffShell { .. })
        ));
        let q = FourVector::new(-1.0, 0.0, 0.0, 0.0);
        assert!(solve_u(&q, Frequency::Negative, 1.0).is_err());
        assert!(projector(&p, 1.0).is_err());
    }

    #[test]
    fn solving_twice_is_deterministic() {
        let p = FourVector::on_shell(1.0, 0.4, -2.0, 3.1);
        let a = solve_u(&p, Frequency::Negative, 1.0).unwrap();
        let b = solve_u(&p, Frequency::Negative, 1.0).unwrap();
        assert_eq!(a.components(), b.components());
        assert!(a.components()[0].im == 0.0 && a.components()[0].re > 0.0);
    }

    #[test]
    fn bar_is_antilinear() {
        let p = FourVector::on_shell(1.0, 0.4, -2.0, 3.1);
        let u = solve_u(&p, Frequency::Negative, 1.0).unwrap();
        let z = Complex64::new(0.3, -1.7);
        let lhs = bar(&(u.components() * z));
        let rhs = u.bar() * z.conj();
        assert!((lhs - rhs).camax() < 1e-15);
    }

    #[test]
    fn slash_sandwich_is_real() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let p = random_on_shell(&mut rng, 1.0, 10.0);
            let u = solve_u(&p, Frequency::Negative, 1.0).unwrap();
            let v = u.sandwich(&algebra::standard().slash(&p));
            assert!(v.re.is_finite() && v.im.abs() < 1e-12 * v.re.abs().max(1.0));
        }
    }

    #[test]
    fn rest_frame_projector() {
        let m = 2.0;
        let p = FourVector::new(m, 0.0, 0.0, 0.0);
        let b0 = *algebra::standard().beta(0);
        let explicit = b0 * (b0 + Mat5::identity()) * Complex64::from(m * m / (2.0 * m * m));
        assert!(max_abs(&(projector(&p, m).unwrap() - explicit)) < 1e-15);
    }

    #[test]
    fn projector_is_outer_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let m: f64 = rng.random_range(0.2..3.0);
            let p = random_on_shell(&mut rng, m, 100.0);
            let proj = projector(&p, m).unwrap();
            let u = solve_u(&p, Frequency::Negative, m).unwrap();
            assert!(max_abs(&(proj - u.outer())) < 1e-10);
            let tr = (algebra::standard().beta(0) * proj).trace();
            assert!((tr - Complex64::from(1.0)).norm() < 1e-12);
        }
    }
}
