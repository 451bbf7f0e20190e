//! Four-vectors and 2→2 scattering configurations.
//!
//! Every process scatters in the x–z plane with the incoming beam along +z.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Tolerances;

/// Contravariant four-vector (t, x, y, z) in natural units.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const ZERO: FourVector = FourVector {
        t: 0.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector { t, x, y, z }
    }

    /// Massive vector with positive energy and the given spatial momentum.
    pub fn on_shell(m: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector::new((m * m + x * x + y * y + z * z).sqrt(), x, y, z)
    }

    pub fn components(&self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Minkowski product a·b = a⁰b⁰ − a·b.
    #[inline]
    pub fn dot(&self, other: &FourVector) -> f64 {
        self.t * other.t - self.x * other.x - self.y * other.y - self.z * other.z
    }

    #[inline]
    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn spatial_dot(&self, other: &FourVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn spatial_norm(&self) -> f64 {
        self.spatial_dot(self).sqrt()
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.components().iter().fold(0.0_f64, |a, c| a.max(c.abs()))
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, o: FourVector) -> FourVector {
        FourVector::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, o: FourVector) -> FourVector {
        FourVector::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, k: f64) -> FourVector {
        FourVector::new(self.t * k, self.x * k, self.y * k, self.z * k)
    }
}

impl fmt::Display for FourVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.t, self.x, self.y, self.z)
    }
}

/// Mandelstam invariants of a 2→2 process.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MandelstamSet {
    pub s: f64,
    pub t: f64,
    pub u: f64,
}

impl MandelstamSet {
    pub fn sum(&self) -> f64 {
        self.s + self.t + self.u
    }
}

/// s = (p_i + q_i)², t = (p_i − p_f)², u = (p_i − q_f)².
pub fn mandelstam(p_i: &FourVector, q_i: &FourVector, p_f: &FourVector, q_f: &FourVector) -> Result<MandelstamSet> {
    check_conservation(
        &[*p_i, *q_i],
        &[*p_f, *q_f],
        Tolerances::default().kinematics_rel * 100.0,
    )?;
    Ok(MandelstamSet {
        s: (*p_i + *q_i).norm_sq(),
        t: (*p_i - *p_f).norm_sq(),
        u: (*p_i - *q_f).norm_sq(),
    })
}

fn check_conservation(incoming: &[FourVector], outgoing: &[FourVector], rel: f64) -> Result<()> {
    let total_in = incoming.iter().fold(FourVector::ZERO, |a, p| a + *p);
    let total_out = outgoing.iter().fold(FourVector::ZERO, |a, p| a + *p);
    let scale = incoming
        .iter()
        .chain(outgoing)
        .fold(0.0_f64, |a, p| a.max(p.max_abs()))
        .max(f64::MIN_POSITIVE);
    let residual = (total_in - total_out).max_abs() / scale;
    if residual > rel {
        return Err(Error::Conservation { residual });
    }
    Ok(())
}

/// Real linear photon polarization ε = (0, ε⃗) with ε⃗·k⃗ = 0 and |ε⃗| = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarizationVector {
    pub epsilon: FourVector,
    pub k: FourVector,
}

impl PolarizationVector {
    /// Wrap a spatial direction, checking transversality and unit norm.
    pub fn new(direction: [f64; 3], k: FourVector) -> Result<Self> {
        let eps = FourVector::new(0.0, direction[0], direction[1], direction[2]);
        let k_norm = k.spatial_norm();
        if k_norm == 0.0 {
            return Err(Error::ZeroSpatialMomentum);
        }
        let transverse = eps.spatial_dot(&k).abs() / k_norm;
        let unit = (eps.spatial_dot(&eps) - 1.0).abs();
        if transverse > 1e-12 || unit > 1e-12 {
            return Err(Error::InvalidParameter {
                name: "polarization",
                value: transverse.max(unit),
                reason: "must be a unit vector transverse to k",
            });
        }
        Ok(PolarizationVector { epsilon: eps, k })
    }

    /// Spatial overlap ε⃗_a·ε⃗_b.
    pub fn overlap(&self, other: &PolarizationVector) -> f64 {
        self.epsilon.spatial_dot(&other.epsilon)
    }
}

/// Two mutually orthogonal transverse polarizations for photon momentum k.
///
/// The first is ŷ × k̂, which lies in the scattering plane when k does; the
/// second is k̂ × first. For k ∝ ẑ this gives x̂ and ŷ.
pub fn polarization_basis(k: &FourVector) -> Result<[PolarizationVector; 2]> {
    let norm = k.spatial_norm();
    if norm == 0.0 {
        return Err(Error::ZeroSpatialMomentum);
    }
    let kh = [k.x / norm, k.y / norm, k.z / norm];
    let mut first = cross([0.0, 1.0, 0.0], kh);
    if norm3(first) < 1e-6 {
        first = cross(kh, [0.0, 0.0, 1.0]);
        if norm3(first) < 1e-6 {
            first = cross([1.0, 0.0, 0.0], kh);
        }
    }
    let n = norm3(first);
    let first = [first[0] / n, first[1] / n, first[2] / n];
    let second = cross(kh, first);
    Ok([
        PolarizationVector::new(first, *k)?,
        PolarizationVector::new(second, *k)?,
    ])
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3(a: [f64; 3]) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProcessKind {
    Coulomb,
    Moller,
    Compton,
}

impl ProcessKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProcessKind::Coulomb => "coulomb",
            ProcessKind::Moller => "moller",
            ProcessKind::Compton => "compton",
        }
    }
}

impl fmt::Display for ProcessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Frame {
    Lab,
    Cm,
}

/// Kinematic configuration of one scattering event.
///
/// `p_in`/`p_out` are always the (first) massive scalar. `partner_in` /
/// `partner_out` hold the second scalar for Moller and the photon for
/// Compton; Coulomb scattering has no partner.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatterProcess {
    pub kind: ProcessKind,
    pub frame: Frame,
    pub mass: f64,
    pub coupling: f64,
    pub p_in: FourVector,
    pub p_out: FourVector,
    pub partner_in: Option<FourVector>,
    pub partner_out: Option<FourVector>,
    pub polarizations: Option<(PolarizationVector, PolarizationVector)>,
}

impl ScatterProcess {
    /// Validate the invariants of the configuration: massive legs on shell,
    /// photon legs null, four-momentum (energy only, for Coulomb) conserved.
    pub fn validate(&self) -> Result<()> {
        let rel = Tolerances::default().kinematics_rel;
        let m2 = self.mass * self.mass;
        let mut massive = vec![self.p_in, self.p_out];
        if self.kind == ProcessKind::Moller {
            massive.extend(self.partner_in);
            massive.extend(self.partner_out);
        }
        for p in &massive {
            let residual = p.norm_sq() - m2;
            if residual.abs() > rel * m2.max(p.t * p.t) || p.t <= 0.0 {
                return Err(Error::OffShell { residual });
            }
        }
        if self.kind == ProcessKind::Compton {
            for k in self.partner_in.iter().chain(self.partner_out.iter()) {
                let residual = k.norm_sq();
                if residual.abs() > rel * k.t * k.t {
                    return Err(Error::OffShell { residual });
                }
            }
        }
        match self.kind {
            ProcessKind::Coulomb => {
                let residual = (self.p_in.t - self.p_out.t).abs() / self.p_in.t;
                if residual > rel {
                    return Err(Error::Conservation { residual });
                }
            }
            _ => {
                let pi = self.partner_in.ok_or(Error::WrongProcess {
                    expected: "two-body initial state",
                    found: self.kind.name(),
                })?;
                let pf = self.partner_out.ok_or(Error::WrongProcess {
                    expected: "two-body final state",
                    found: self.kind.name(),
                })?;
                check_conservation(&[self.p_in, pi], &[self.p_out, pf], rel)?;
            }
        }
        Ok(())
    }

    pub fn with_coupling(mut self, e: f64) -> Self {
        self.coupling = e;
        self
    }

    pub fn with_polarizations(mut self, initial: PolarizationVector, final_: PolarizationVector) -> Self {
        self.polarizations = Some((initial, final_));
        self
    }

    /// Mandelstam invariants for two-body processes.
    pub fn mandelstam(&self) -> Result<MandelstamSet> {
        match (self.partner_in, self.partner_out) {
            (Some(qi), Some(qf)) => mandelstam(&self.p_in, &qi, &self.p_out, &qf),
            _ => Err(Error::WrongProcess {
                expected: "two-body process",
                found: self.kind.name(),
            }),
        }
    }
}

fn default_coupling() -> f64 {
    crate::coupling_from_alpha(crate::DEFAULT_ALPHA)
}

fn check_mass(m: f64) -> Result<()> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "mass",
            value: m,
            reason: "must be positive",
        });
    }
    Ok(())
}

fn check_open_angle(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta < std::f64::consts::PI) {
        return Err(Error::AngleOutOfDomain {
            theta,
            domain: "(0, π)",
        });
    }
    Ok(())
}

/// Identical-particle elastic scattering in the centre-of-mass frame.
///
/// Incoming pair back to back along z with |p|² = s/4 − m²; the outgoing pair
/// is rotated by `theta` in the x–z plane.
pub fn cm_elastic(s: f64, theta: f64, m: f64) -> Result<ScatterProcess> {
    check_mass(m)?;
    let threshold = 4.0 * m * m;
    if !(s >= threshold) {
        return Err(Error::BelowThreshold { s, threshold });
    }
    check_open_angle(theta)?;
    let energy = 0.5 * s.sqrt();
    let p = (0.25 * s - m * m).max(0.0).sqrt();
    let (sin, cos) = theta.sin_cos();
    let p_in = FourVector::new(energy, 0.0, 0.0, p);
    let q_in = FourVector::new(energy, 0.0, 0.0, -p);
    let p_out = FourVector::new(energy, p * sin, 0.0, p * cos);
    let q_out = FourVector::new(energy, -p * sin, 0.0, -p * cos);
    let proc = ScatterProcess {
        kind: ProcessKind::Moller,
        frame: Frame::Cm,
        mass: m,
        coupling: default_coupling(),
        p_in,
        p_out,
        partner_in: Some(q_in),
        partner_out: Some(q_out),
        polarizations: None,
    };
    proc.validate()?;
    Ok(proc)
}

/// Outgoing photon energy for a target at rest, ω_f = ω_i / (1 + (ω_i/m)(1 − cos θ)).
pub fn compton_omega_f(omega_i: f64, theta: f64, m: f64) -> f64 {
    omega_i / (1.0 + (omega_i / m) * (1.0 - theta.cos()))
}

/// Photon–scalar scattering with the scalar at rest, photon along +z.
pub fn compton_lab(omega_i: f64, theta: f64, m: f64) -> Result<ScatterProcess> {
    check_mass(m)?;
    if !(omega_i > 0.0 && omega_i.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "omega_i",
            value: omega_i,
            reason: "must be positive",
        });
    }
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(Error::AngleOutOfDomain {
            theta,
            domain: "[0, π]",
        });
    }
    let omega_f = compton_omega_f(omega_i, theta, m);
    let (sin, cos) = theta.sin_cos();
    let p_in = FourVector::new(m, 0.0, 0.0, 0.0);
    let k_in = FourVector::new(omega_i, 0.0, 0.0, omega_i);
    let k_out = FourVector::new(omega_f, omega_f * sin, 0.0, omega_f * cos);
    let spatial = p_in + k_in - k_out;
    // energy from the mass shell; conservation is then checked, not imposed
    let p_out = FourVector::on_shell(m, spatial.x, spatial.y, spatial.z);
    let proc = ScatterProcess {
        kind: ProcessKind::Compton,
        frame: Frame::Lab,
        mass: m,
        coupling: default_coupling(),
        p_in,
        p_out,
        partner_in: Some(k_in),
        partner_out: Some(k_out),
        polarizations: None,
    };
    proc.validate()?;
    Ok(proc)
}

/// Elastic scattering off a static field: energy `energy`, deflection `theta`.
/// θ = π is allowed; only the forward direction is a pole.
pub fn coulomb_elastic(energy: f64, theta: f64, m: f64) -> Result<ScatterProcess> {
    check_mass(m)?;
    if !(energy > m) {
        return Err(Error::InvalidParameter {
            name: "energy",
            value: energy,
            reason: "must exceed the mass (|p| > 0)",
        });
    }
    if !(theta > 0.0 && theta <= std::f64::consts::PI) {
        return Err(Error::AngleOutOfDomain {
            theta,
            domain: "(0, π]",
        });
    }
    let p = (energy * energy - m * m).sqrt();
    let (sin, cos) = theta.sin_cos();
    let proc = ScatterProcess {
        kind: ProcessKind::Coulomb,
        frame: Frame::Lab,
        mass: m,
        coupling: default_coupling(),
        p_in: FourVector::new(energy, 0.0, 0.0, p),
        p_out: FourVector::new(energy, p * sin, 0.0, p * cos),
        partner_in: None,
        partner_out: None,
        polarizations: None,
    };
    proc.validate()?;
    Ok(proc)
}
