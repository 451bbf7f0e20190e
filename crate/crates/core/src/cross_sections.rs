//! Differential cross sections, closed forms and tabulation.
//!
//! Cross sections are in natural units (1/mass²). [`Units::Millibarn`]
//! rescales by a conversion constant, 0.3894 mb·GeV² by default, reading
//! masses and energies as GeV.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Mat5;
use crate::amplitudes::{compton_msq, coulomb_field, coulomb_msq, moller_msq};
use crate::distributions::fix_gauge_constant;
use crate::error::{Error, Result};
use crate::kinematics::{cm_elastic, compton_lab, compton_omega_f, coulomb_elastic, polarization_basis, ProcessKind};
use crate::{coupling_from_alpha, relative_spread, Tolerances};

/// Default conversion from GeV⁻² to millibarn.
pub const MB_GEV2: f64 = 0.3894;

/// dσ/dΩ from the squared amplitude and from the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DcsPair {
    pub from_amplitude: f64,
    pub closed_form: f64,
    pub spread: f64,
}

impl DcsPair {
    fn new(from_amplitude: f64, closed_form: f64, floor: f64, tolerance: f64, quantity: &'static str) -> Result<Self> {
        let spread = relative_spread(&[from_amplitude, closed_form], floor);
        if !(spread <= tolerance) || !from_amplitude.is_finite() {
            return Err(Error::PipelineMismatch {
                quantity,
                spread,
                tolerance,
            });
        }
        Ok(DcsPair {
            from_amplitude,
            closed_form,
            spread,
        })
    }

    pub fn value(&self) -> f64 {
        self.from_amplitude
    }
}

/// Z²e⁴E²/(4|𝐩|⁴ sin⁴(θ/2)).
pub fn coulomb_closed_form(z: f64, energy: f64, p_mag: f64, theta: f64, e: f64) -> f64 {
    let s = (0.5 * theta).sin();
    z * z * e.powi(4) * energy * energy / (4.0 * p_mag.powi(4) * s.powi(4))
}

/// Scattering of a scalar with energy `energy` and momentum `p_mag` off a point charge Ze.
pub fn coulomb_dcs(z: f64, energy: f64, p_mag: f64, theta: f64, e: f64) -> Result<DcsPair> {
    coulomb_dcs_with(z, energy, p_mag, theta, e, &Tolerances::default())
}

pub fn coulomb_dcs_with(z: f64, energy: f64, p_mag: f64, theta: f64, e: f64, tol: &Tolerances) -> Result<DcsPair> {
    if !(p_mag > 0.0 && energy > p_mag) {
        return Err(Error::InvalidParameter {
            name: "p_mag",
            value: p_mag,
            reason: "need 0 < |p| < E",
        });
    }
    let m = (energy * energy - p_mag * p_mag).sqrt();
    let proc = coulomb_elastic(energy, theta, m)?.with_coupling(e);
    let msq = coulomb_msq(&proc, &coulomb_field(z, e), tol)?;
    let from_amplitude = 4.0 * PI * PI * energy * energy * msq.value();
    let closed = coulomb_closed_form(z, energy, p_mag, theta, e);
    DcsPair::new(from_amplitude, closed, 0.0, tol.pipeline_rel, "coulomb dσ/dΩ")
}

/// (α²/4s)|(s − t)/u + (s − u)/t|².
pub fn moller_closed_form(s: f64, t: f64, u: f64, alpha: f64) -> f64 {
    let x = (s - t) / u + (s - u) / t;
    alpha * alpha / (4.0 * s) * x * x
}

/// Identical-scalar scattering in the centre-of-mass frame.
pub fn moller_dcs_cm(s: f64, theta: f64, m: f64, alpha: f64) -> Result<DcsPair> {
    moller_dcs_cm_with(s, theta, m, alpha, &Tolerances::default())
}

pub fn moller_dcs_cm_with(s: f64, theta: f64, m: f64, alpha: f64, tol: &Tolerances) -> Result<DcsPair> {
    let proc = cm_elastic(s, theta, m)?.with_coupling(coupling_from_alpha(alpha));
    let msq = moller_msq(&proc, tol)?;
    let energy = proc.p_in.t;
    let from_amplitude = 4.0 * PI * PI * energy * energy / 4.0 * msq.value();
    let mand = proc.mandelstam()?;
    let closed = moller_closed_form(mand.s, mand.t, mand.u, alpha);
    DcsPair::new(from_amplitude, closed, 0.0, tol.pipeline_rel, "moller dσ/dΩ")
}

/// Photon polarization relative to the scattering (x–z) plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polarization {
    InPlane,
    OutOfPlane,
}

impl Polarization {
    fn index(self) -> usize {
        match self {
            Polarization::InPlane => 0,
            Polarization::OutOfPlane => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizationChoice {
    pub initial: Polarization,
    pub final_: Polarization,
}

/// α²ω_f²(ε_i·ε_f)²/(m²ω_i²).
pub fn compton_closed_form(omega_i: f64, omega_f: f64, overlap: f64, m: f64, alpha: f64) -> f64 {
    alpha * alpha * omega_f * omega_f * overlap * overlap / (m * m * omega_i * omega_i)
}

/// Photon scattering off a scalar at rest with definite polarizations.
pub fn compton_dcs_lab(omega_i: f64, theta: f64, m: f64, choice: PolarizationChoice, alpha: f64) -> Result<DcsPair> {
    compton_dcs_lab_with(omega_i, theta, m, choice, alpha, &Tolerances::default())
}

pub fn compton_dcs_lab_with(
    omega_i: f64,
    theta: f64,
    m: f64,
    choice: PolarizationChoice,
    alpha: f64,
    tol: &Tolerances,
) -> Result<DcsPair> {
    let proc = compton_lab(omega_i, theta, m)?.with_coupling(coupling_from_alpha(alpha));
    let (ki, kf) = (proc.partner_in.unwrap(), proc.partner_out.unwrap());
    let eps_i = polarization_basis(&ki)?[choice.initial.index()];
    let eps_f = polarization_basis(&kf)?[choice.final_.index()];
    let c: Mat5 = fix_gauge_constant(m)?;
    let parts = compton_msq(&proc, &eps_i, &eps_f, &c, tol)?;
    let omega_f = kf.t;
    let flux = 4.0 * PI * PI * omega_f.powi(3) * proc.p_out.t / (m * omega_i);
    let from_amplitude = flux * parts.msq();
    let closed = compton_closed_form(omega_i, omega_f, eps_i.overlap(&eps_f), m, alpha);
    let floor = 1e-14 * compton_closed_form(omega_i, omega_f, 1.0, m, alpha);
    DcsPair::new(from_amplitude, closed, floor, tol.pipeline_rel, "compton dσ/dΩ")
}

/// Average over initial and sum over final photon polarizations.
pub fn compton_dcs_unpolarized(omega_i: f64, theta: f64, m: f64, alpha: f64) -> Result<DcsPair> {
    compton_dcs_unpolarized_with(omega_i, theta, m, alpha, &Tolerances::default())
}

pub fn compton_dcs_unpolarized_with(omega_i: f64, theta: f64, m: f64, alpha: f64, tol: &Tolerances) -> Result<DcsPair> {
    let mut amp = 0.0;
    let mut closed = 0.0;
    for initial in [Polarization::InPlane, Polarization::OutOfPlane] {
        for final_ in [Polarization::InPlane, Polarization::OutOfPlane] {
            let pair = compton_dcs_lab_with(omega_i, theta, m, PolarizationChoice { initial, final_ }, alpha, tol)?;
            amp += 0.5 * pair.from_amplitude;
            closed += 0.5 * pair.closed_form;
        }
    }
    let omega_f = compton_omega_f(omega_i, theta, m);
    let floor = 1e-14 * compton_closed_form(omega_i, omega_f, 1.0, m, alpha);
    DcsPair::new(amp, closed, floor, tol.pipeline_rel, "compton unpolarized dσ/dΩ")
}

// ---------------------------------------------------------------------------
// Tabulation

/// Process and fixed parameters for a scan. The grid's energy list supplies
/// E (Coulomb), s (Moller) or ω_i (Compton).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "process", rename_all = "kebab-case")]
pub enum ProcessConfig {
    Coulomb {
        charge_number: f64,
        mass: f64,
        alpha: f64,
    },
    Moller {
        mass: f64,
        alpha: f64,
    },
    Compton {
        mass: f64,
        alpha: f64,
        /// `None` averages over polarizations.
        polarization: Option<PolarizationChoice>,
    },
}

impl ProcessConfig {
    pub fn kind(&self) -> ProcessKind {
        match self {
            ProcessConfig::Coulomb { .. } => ProcessKind::Coulomb,
            ProcessConfig::Moller { .. } => ProcessKind::Moller,
            ProcessConfig::Compton { .. } => ProcessKind::Compton,
        }
    }

    /// Name of the scanned energy-like parameter.
    pub fn energy_label(&self) -> &'static str {
        match self {
            ProcessConfig::Coulomb { .. } => "energy",
            ProcessConfig::Moller { .. } => "s",
            ProcessConfig::Compton { .. } => "omega_i",
        }
    }

    fn mass(&self) -> f64 {
        match *self {
            ProcessConfig::Coulomb { mass, .. }
            | ProcessConfig::Moller { mass, .. }
            | ProcessConfig::Compton { mass, .. } => mass,
        }
    }

    /// dσ/dΩ at one grid point.
    pub fn evaluate(&self, energy: f64, theta: f64, tol: &Tolerances) -> Result<DcsPair> {
        match *self {
            ProcessConfig::Coulomb {
                charge_number,
                mass,
                alpha,
            } => {
                let p = (energy * energy - mass * mass).max(0.0).sqrt();
                coulomb_dcs_with(charge_number, energy, p, theta, coupling_from_alpha(alpha), tol)
            }
            ProcessConfig::Moller { mass, alpha } => moller_dcs_cm_with(energy, theta, mass, alpha, tol),
            ProcessConfig::Compton {
                mass,
                alpha,
                polarization: Some(choice),
            } => compton_dcs_lab_with(energy, theta, mass, choice, alpha, tol),
            ProcessConfig::Compton {
                mass,
                alpha,
                polarization: None,
            } => compton_dcs_unpolarized_with(energy, theta, mass, alpha, tol),
        }
    }
}

/// Angular grid in degrees (inclusive, `steps` points) crossed with an energy list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub theta_min_deg: f64,
    pub theta_max_deg: f64,
    pub steps: usize,
    pub energies: Vec<f64>,
    /// Angles closer than this to a pole (θ = 0 for Coulomb, θ = 0 and 180° for Moller) are refused.
    pub min_angle_deg: f64,
}

impl GridSpec {
    pub fn new(theta_min_deg: f64, theta_max_deg: f64, steps: usize, energies: Vec<f64>) -> Self {
        GridSpec {
            theta_min_deg,
            theta_max_deg,
            steps,
            energies,
            min_angle_deg: 1.0,
        }
    }

    pub fn single(theta_deg: f64, energy: f64) -> Self {
        GridSpec::new(theta_deg, theta_deg, 1, vec![energy])
    }

    pub fn angles_deg(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.theta_min_deg];
        }
        let h = (self.theta_max_deg - self.theta_min_deg) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.theta_max_deg
                } else {
                    self.theta_min_deg + h * i as f64
                }
            })
            .collect()
    }

    fn validate(&self, kind: ProcessKind) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::Grid("steps must be at least 1".into()));
        }
        if self.energies.is_empty() {
            return Err(Error::Grid("energy list is empty".into()));
        }
        if !(self.theta_min_deg <= self.theta_max_deg) {
            return Err(Error::Grid(format!(
                "theta_min {} exceeds theta_max {}",
                self.theta_min_deg, self.theta_max_deg
            )));
        }
        if self.theta_min_deg < 0.0 || self.theta_max_deg > 180.0 {
            return Err(Error::Grid("angles must lie in [0, 180] degrees".into()));
        }
        let cut = self.min_angle_deg;
        let near_forward = matches!(kind, ProcessKind::Coulomb | ProcessKind::Moller) && self.theta_min_deg < cut;
        let near_backward = kind == ProcessKind::Moller && self.theta_max_deg > 180.0 - cut;
        if near_forward || near_backward {
            return Err(Error::Grid(format!(
                "{kind} grid must stay {cut}° away from the forward{} pole",
                if kind == ProcessKind::Moller {
                    " and backward"
                } else {
                    ""
                }
            )));
        }
        Ok(())
    }
}

/// Output scale for cross sections.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "unit", rename_all = "kebab-case")]
pub enum Units {
    /// 1/mass².
    Natural,
    /// Millibarn, masses in GeV.
    Millibarn { conversion: f64 },
}

impl Units {
    pub fn factor(&self) -> f64 {
        match self {
            Units::Natural => 1.0,
            Units::Millibarn { conversion } => *conversion,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Units::Natural => "1/mass^2",
            Units::Millibarn { .. } => "mb",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub energy: f64,
    pub theta_deg: f64,
    pub from_amplitude: Option<f64>,
    pub closed_form: Option<f64>,
    pub spread: Option<f64>,
    /// `ok` or the error message for this point.
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossSectionTable {
    pub config: ProcessConfig,
    pub grid: GridSpec,
    pub units: Units,
    pub tolerances: Tolerances,
    pub rows: Vec<TableRow>,
}

/// Evaluate every grid point. Points are computed in parallel; rows come back
/// energy-major in grid order. Per-point failures land in the status column.
pub fn tabulate(config: &ProcessConfig, grid: &GridSpec, units: Units, tol: &Tolerances) -> Result<CrossSectionTable> {
    grid.validate(config.kind())?;
    if !(config.mass() > 0.0) {
        return Err(Error::InvalidParameter {
            name: "mass",
            value: config.mass(),
            reason: "must be positive",
        });
    }
    let angles = grid.angles_deg();
    let points: Vec<(f64, f64)> = grid
        .energies
        .iter()
        .flat_map(|&e| angles.iter().map(move |&a| (e, a)))
        .collect();
    let factor = units.factor();
    let rows = points
        .par_iter()
        .map(
            |&(energy, theta_deg)| match config.evaluate(energy, theta_deg.to_radians(), tol) {
                Ok(p) => TableRow {
                    energy,
                    theta_deg,
                    from_amplitude: Some(p.from_amplitude * factor),
                    closed_form: Some(p.closed_form * factor),
                    spread: Some(p.spread),
                    status: "ok".into(),
                },
                Err(e) => TableRow {
                    energy,
                    theta_deg,
                    from_amplitude: None,
                    closed_form: None,
                    spread: None,
                    status: e.to_string(),
                },
            },
        )
        .collect();
    Ok(CrossSectionTable {
        config: *config,
        grid: grid.clone(),
        units,
        tolerances: *tol,
        rows,
    })
}

fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_float).unwrap_or_default()
}

impl CrossSectionTable {
    pub fn max_spread(&self) -> f64 {
        self.rows.iter().filter_map(|r| r.spread).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.status != "ok").count()
    }

    /// Fixed parameters as (name, value) pairs.
    pub fn parameters(&self) -> Vec<(&'static str, f64)> {
        match self.config {
            ProcessConfig::Coulomb {
                charge_number,
                mass,
                alpha,
            } => vec![("Z", charge_number), ("mass", mass), ("alpha", alpha)],
            ProcessConfig::Moller { mass, alpha } | ProcessConfig::Compton { mass, alpha, .. } => {
                vec![("mass", mass), ("alpha", alpha)]
            }
        }
    }

    /// CSV with 17 significant digits, one row per grid point.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let params = self.parameters();
        let mut header: Vec<&str> = params.iter().map(|(n, _)| *n).collect();
        header.extend([
            self.config.energy_label(),
            "theta_deg",
            "dcs_amplitude",
            "dcs_closed_form",
            "spread",
            "status",
        ]);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&header).map_err(io)?;
        for r in &self.rows {
            let mut rec: Vec<String> = params.iter().map(|(_, v)| fmt_float(*v)).collect();
            rec.extend([
                fmt_float(r.energy),
                fmt_float(r.theta_deg),
                fmt_opt(r.from_amplitude),
                fmt_opt(r.closed_form),
                fmt_opt(r.spread),
                r.status.clone(),
            ]);
            w.write_record(&rec).map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
    }

    /// JSON document with run metadata.
    pub fn to_json(&self) -> Result<String> {
        let doc = serde_json::json!({
            "process": self.config.kind().name(),
            "version": env!("CARGO_PKG_VERSION"),
            "parameters": self.config,
            "grid": self.grid,
            "units": self.units.label(),
            "unit_conversion": self.units,
            "tolerances": self.tolerances,
            "max_spread": self.max_spread(),
            "rows": self.rows,
        });
        serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let _ = write!(
            s,
            "{} points, {} failed, max spread {:.3e}",
            self.rows.len(),
            self.failures(),
            self.max_spread()
        );
        s
    }
}
