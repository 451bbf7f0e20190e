//! Squared matrix elements for Coulomb, Moller and Compton scattering.
//!
//! Each process is evaluated twice: by contracting explicit spinors with β
//! matrices and propagators, and by the trace form obtained from
//! u⁻ ⊗ ū⁻ = p̸(p̸ + m)/(2mp⁰). Moller and Compton also have closed forms.
//! Amplitudes keep the (2π) powers of a (2π)^{-3/2}-per-leg normalization so
//! the flux factors in [`crate::cross_sections`] apply verbatim.

use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, Mat5, MetricTensor};
use crate::distributions::{self, dkp_feynman_with, fix_gauge_constant, photon_feynman_with};
use crate::error::{Error, Result};
use crate::kinematics::{Frame, PolarizationVector, ProcessKind, ScatterProcess};
use crate::spinors::{projector, solve_u, DkpSpinor, Frequency};
use crate::{relative_spread, Tolerances};

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pipeline {
    Spinor,
    Trace,
    ClosedForm,
}

/// Complex amplitude M together with the route that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeValue {
    pub value: Complex64,
    pub pipeline: Pipeline,
}

/// |M|² along each available route. [`SquaredAmplitude::value`] is the spinor result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SquaredAmplitude {
    pub spinor: f64,
    pub trace: f64,
    pub closed_form: Option<f64>,
    pub spread: f64,
}

impl SquaredAmplitude {
    fn new(spinor: f64, trace: f64, closed_form: Option<f64>, floor: f64) -> Self {
        let mut values = vec![spinor, trace];
        values.extend(closed_form);
        SquaredAmplitude {
            spinor,
            trace,
            closed_form,
            spread: relative_spread(&values, floor),
        }
    }

    pub fn value(&self) -> f64 {
        self.spinor
    }

    fn check(self, quantity: &'static str, tolerance: f64) -> Result<Self> {
        if self.spread > tolerance || !self.spinor.is_finite() {
            return Err(Error::PipelineMismatch {
                quantity,
                spread: self.spread,
                tolerance,
            });
        }
        Ok(self)
    }
}

fn require(proc: &ScatterProcess, kind: ProcessKind) -> Result<()> {
    if proc.kind != kind {
        return Err(Error::WrongProcess {
            expected: kind.name(),
            found: proc.kind.name(),
        });
    }
    proc.validate()
}

fn particle(p: &crate::kinematics::FourVector, m: f64) -> Result<DkpSpinor> {
    solve_u(p, Frequency::Negative, m)
}

/// Current ū_f β^μ u_i for μ = 0..3 (upper index).
fn current(out: &DkpSpinor, inc: &DkpSpinor) -> [Complex64; 4] {
    let beta = algebra::standard();
    let bar = out.bar();
    std::array::from_fn(|mu| (bar * beta.beta(mu) * inc.components())[(0, 0)])
}

fn contract(a: &[Complex64; 4], b: &[Complex64; 4]) -> Complex64 {
    let g = MetricTensor::MINKOWSKI;
    (0..4).map(|mu| a[mu] * b[mu] * g.get(mu, mu)).sum()
}

// ---------------------------------------------------------------------------
// External field

/// One row of a tabulated field: spatial momentum and lower-index Â_μ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub momentum: [f64; 3],
    pub amplitude: [Complex64; 4],
}

/// Fourier amplitude Â_μ(𝐩) of a static external potential.
#[derive(Debug, Clone, PartialEq)]
pub enum ExternalFieldProfile {
    /// Point charge Ze: Â⁰(𝐩) = √(2/π) Ze/|𝐩|², spatial components zero.
    Coulomb {
        charge_number: f64,
        coupling: f64,
    },
    Tabulated(Vec<FieldSample>),
}

/// Built-in Coulomb profile.
pub fn coulomb_field(charge_number: f64, coupling: f64) -> ExternalFieldProfile {
    ExternalFieldProfile::Coulomb {
        charge_number,
        coupling,
    }
}

fn same_point(a: [f64; 3], b: [f64; 3]) -> bool {
    let scale = a.iter().chain(&b).fold(1.0_f64, |acc, x| acc.max(x.abs()));
    a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= 1e-9 * scale)
}

impl ExternalFieldProfile {
    /// Â_μ(𝐩) with a lower Lorentz index.
    pub fn amplitude(&self, p: [f64; 3]) -> Result<[Complex64; 4]> {
        match self {
            ExternalFieldProfile::Coulomb {
                charge_number,
                coupling,
            } => {
                let p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
                if p2 == 0.0 {
                    return Err(Error::ZeroMomentumTransfer);
                }
                let a0 = (2.0 / PI).sqrt() * charge_number * coupling / p2;
                Ok([
                    Complex64::from(a0),
                    Complex64::default(),
                    Complex64::default(),
                    Complex64::default(),
                ])
            }
            ExternalFieldProfile::Tabulated(samples) => {
                if let Some(s) = samples.iter().find(|s| same_point(s.momentum, p)) {
                    return Ok(s.amplitude);
                }
                let minus = [-p[0], -p[1], -p[2]];
                if let Some(s) = samples.iter().find(|s| same_point(s.momentum, minus)) {
                    return Ok(s.amplitude.map(|z| z.conj()));
                }
                Err(Error::MissingFieldSample(p[0], p[1], p[2]))
            }
        }
    }

    /// Parse a whitespace-separated table: `px py pz  Re Â₀ Im Â₀ … Re Â₃ Im Â₃`.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn from_table(text: &str) -> Result<Self> {
        let mut samples = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let values: Vec<f64> = line
                .split_whitespace()
                .map(|tok| tok.parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::FieldTable {
                    line: n + 1,
                    message: e.to_string(),
                })?;
            if values.len() != 11 {
                return Err(Error::FieldTable {
                    line: n + 1,
                    message: format!("expected 11 columns, found {}", values.len()),
                });
            }
            samples.push(FieldSample {
                momentum: [values[0], values[1], values[2]],
                amplitude: std::array::from_fn(|mu| Complex64::new(values[3 + 2 * mu], values[4 + 2 * mu])),
            });
        }
        check_hermitian(&samples)?;
        Ok(ExternalFieldProfile::Tabulated(samples))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_table(&std::fs::read_to_string(path)?)
    }
}

/// A real potential needs Â_μ(−𝐩) = Â_μ(𝐩)* wherever both are sampled.
fn check_hermitian(samples: &[FieldSample]) -> Result<()> {
    for (i, a) in samples.iter().enumerate() {
        let minus = a.momentum.map(|x| -x);
        for b in &samples[i + 1..] {
            if !same_point(b.momentum, minus) {
                continue;
            }
            let scale = a.amplitude.iter().fold(1e-300_f64, |acc, z| acc.max(z.norm()));
            let bad = a
                .amplitude
                .iter()
                .zip(&b.amplitude)
                .any(|(x, y)| (x.conj() - y).norm() > 1e-9 * scale);
            if bad {
                return Err(Error::FieldTable {
                    line: i + 1,
                    message: "field is not hermitian under p → −p".into(),
                });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Coulomb

/// Spinor route: M = (ie/√(2π)) ū(𝐩_f) β^μ u(𝐩_i) Â_μ(𝐩_f − 𝐩_i).
pub fn coulomb_amplitude(proc: &ScatterProcess, field: &ExternalFieldProfile) -> Result<AmplitudeValue> {
    require(proc, ProcessKind::Coulomb)?;
    let m = proc.mass;
    let u_i = particle(&proc.p_in, m)?;
    let u_f = particle(&proc.p_out, m)?;
    let q = (proc.p_out - proc.p_in).spatial();
    let a = field.amplitude(q)?;
    let j = current(&u_f, &u_i);
    let sum: Complex64 = (0..4).map(|mu| j[mu] * a[mu]).sum();
    Ok(AmplitudeValue {
        value: I * proc.coupling / (2.0 * PI).sqrt() * sum,
        pipeline: Pipeline::Spinor,
    })
}

/// |M|² for scattering off a static field, spinor and trace routes.
pub fn coulomb_msq(proc: &ScatterProcess, field: &ExternalFieldProfile, tol: &Tolerances) -> Result<SquaredAmplitude> {
    let spinor = coulomb_amplitude(proc, field)?.value.norm_sqr();

    let m = proc.mass;
    let beta = algebra::standard();
    let proj_i = projector(&proc.p_in, m)?;
    let proj_f = projector(&proc.p_out, m)?;
    let q = (proc.p_out - proc.p_in).spatial();
    let a_plus = field.amplitude(q)?;
    let a_minus = field.amplitude(q.map(|x| -x))?;
    let mut trace = Complex64::default();
    for mu in 0..4 {
        for nu in 0..4 {
            let w = a_plus[mu] * a_minus[nu];
            if w == Complex64::default() {
                continue;
            }
            trace += (proj_f * beta.beta(mu) * proj_i * beta.beta(nu)).trace() * w;
        }
    }
    let trace = (trace * proc.coupling * proc.coupling / (2.0 * PI)).re;
    SquaredAmplitude::new(spinor, trace, None, 0.0).check("coulomb |M|²", tol.coulomb_pipeline_rel)
}

// ---------------------------------------------------------------------------
// Moller

fn require_moller(proc: &ScatterProcess) -> Result<()> {
    require(proc, ProcessKind::Moller)?;
    if proc.frame != Frame::Cm {
        return Err(Error::WrongProcess {
            expected: "moller in the centre-of-mass frame",
            found: "moller in the lab frame",
        });
    }
    Ok(())
}

/// Spinor route: t- and u-channel photon exchange between two identical scalars.
pub fn moller_amplitude(proc: &ScatterProcess, tol: &Tolerances) -> Result<AmplitudeValue> {
    require_moller(proc)?;
    let m = proc.mass;
    let (pi, pf) = (proc.p_in, proc.p_out);
    let (qi, qf) = (proc.partner_in.unwrap(), proc.partner_out.unwrap());
    let (u_pi, u_pf, u_qi, u_qf) = (
        particle(&pi, m)?,
        particle(&pf, m)?,
        particle(&qi, m)?,
        particle(&qf, m)?,
    );

    let direct = contract(&current(&u_pf, &u_pi), &current(&u_qf, &u_qi));
    let exchange = contract(&current(&u_pf, &u_qi), &current(&u_qf, &u_pi));
    let d_t = photon_feynman_with(&(qf - qi), tol)?;
    let d_u = photon_feynman_with(&(qf - pi), tol)?;
    let e2 = proc.coupling * proc.coupling;
    Ok(AmplitudeValue {
        value: -I * e2 / (4.0 * PI * PI) * (direct * d_t + exchange * d_u),
        pipeline: Pipeline::Spinor,
    })
}

/// The four trace terms of |M|² for Moller scattering, including propagator denominators.
fn moller_trace(proc: &ScatterProcess) -> Result<f64> {
    let m = proc.mass;
    let (pi, pf) = (proc.p_in, proc.p_out);
    let (qi, qf) = (proc.partner_in.unwrap(), proc.partner_out.unwrap());
    let (ppi, ppf, pqi, pqf) = (
        projector(&pi, m)?,
        projector(&pf, m)?,
        projector(&qi, m)?,
        projector(&qf, m)?,
    );
    let beta = algebra::standard();
    let g = MetricTensor::MINKOWSKI;
    let t = (qf - qi).norm_sq();
    let u = (qf - pi).norm_sq();

    let mut direct = Complex64::default();
    let mut interference_a = Complex64::default();
    let mut interference_b = Complex64::default();
    let mut exchange = Complex64::default();
    for a in 0..4 {
        for w in 0..4 {
            let sign = g.get(a, a) * g.get(w, w);
            let (ba, bw) = (beta.beta(a), beta.beta(w));
            direct += (ppf * ba * ppi * bw).trace() * (pqf * ba * pqi * bw).trace() * sign;
            interference_a += (ppf * ba * ppi * bw * pqf * ba * pqi * bw).trace() * sign;
            interference_b += (ppf * ba * pqi * bw * pqf * ba * ppi * bw).trace() * sign;
            exchange += (ppf * ba * pqi * bw).trace() * (pqf * ba * ppi * bw).trace() * sign;
        }
    }
    let sum = direct / (t * t) + interference_a / (t * u) + interference_b / (u * t) + exchange / (u * u);
    let e4 = proc.coupling.powi(4);
    Ok(e4 / (2.0 * PI).powi(4) * sum.re)
}

/// e⁴/(2π)⁴ · 1/(16E⁴) · |(s − t)/u + (s − u)/t|², E the energy per particle.
pub fn moller_closed_form(s: f64, t: f64, u: f64, e: f64) -> f64 {
    let energy = 0.5 * s.sqrt();
    let x = (s - t) / u + (s - u) / t;
    e.powi(4) / (2.0 * PI).powi(4) / (16.0 * energy.powi(4)) * x * x
}

/// |M|² for identical-scalar scattering in the centre-of-mass frame.
pub fn moller_msq(proc: &ScatterProcess, tol: &Tolerances) -> Result<SquaredAmplitude> {
    let spinor = moller_amplitude(proc, tol)?.value.norm_sqr();
    let trace = moller_trace(proc)?;
    let mand = proc.mandelstam()?;
    let closed = moller_closed_form(mand.s, mand.t, mand.u, proc.coupling);
    SquaredAmplitude::new(spinor, trace, Some(closed), 0.0).check("moller |M|²", tol.pipeline_rel)
}

// ---------------------------------------------------------------------------
// Compton

/// Break-down of the Compton amplitude into the contact (seagull) part M_a,
/// generated by the splitting constant C, and the propagator part M_b.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComptonParts {
    pub seagull: AmplitudeValue,
    pub pole: AmplitudeValue,
    /// |M_a|² along spinor, trace and (for C = I/m) closed-form routes.
    pub seagull_sq: SquaredAmplitude,
    /// |M_b|², spinor and trace routes.
    pub pole_sq: SquaredAmplitude,
    /// M_a*M_b + M_b*M_a, spinor and trace routes.
    pub cross: SquaredAmplitude,
    /// |M_a + M_b|², spinor and trace routes.
    pub total: SquaredAmplitude,
    /// (p_i − k_f)² − m² evaluated directly and as −2mω_f.
    pub u_denominator: (f64, f64),
    /// (p_i + k_i)² − m² evaluated directly and as 2mω_i.
    pub s_denominator: (f64, f64),
}

impl ComptonParts {
    pub fn msq(&self) -> f64 {
        self.total.value()
    }
}

/// ε̸ for a polarization vector.
fn eps_slash(eps: &PolarizationVector) -> Mat5 {
    algebra::standard().slash(&eps.epsilon)
}

/// η⁰ X† η⁰, the matrix whose sandwich is the complex conjugate of ū X u.
fn dkp_adjoint(x: &Mat5) -> Mat5 {
    let eta = algebra::standard().eta0();
    eta * x.adjoint() * eta
}

fn require_lab_compton(proc: &ScatterProcess) -> Result<()> {
    require(proc, ProcessKind::Compton)?;
    if proc.frame != Frame::Lab || proc.p_in.spatial_norm() != 0.0 {
        return Err(Error::NotLabFrame);
    }
    Ok(())
}

/// Compton |M|² with the gauge-fixed contact constant; `c` must equal I/m.
pub fn compton_msq(
    proc: &ScatterProcess,
    eps_i: &PolarizationVector,
    eps_f: &PolarizationVector,
    c: &Mat5,
    tol: &Tolerances,
) -> Result<ComptonParts> {
    let fixed = fix_gauge_constant(proc.mass)?;
    let deviation = algebra::max_abs(&(c - fixed));
    if deviation > tol.algebra_abs * fixed[(0, 0)].re.max(1.0) {
        return Err(Error::GaugeConstantMismatch { deviation });
    }
    compton_msq_with_constant(proc, eps_i, eps_f, c, tol)
}

/// Compton amplitude for an arbitrary contact constant `c`.
///
/// Used to show that the contact term carries the whole lab-frame amplitude:
/// with `c = 0` nothing survives. The closed-form seagull value is only
/// reported when `c` is the gauge-fixed I/m.
pub fn compton_msq_with_constant(
    proc: &ScatterProcess,
    eps_i: &PolarizationVector,
    eps_f: &PolarizationVector,
    c: &Mat5,
    tol: &Tolerances,
) -> Result<ComptonParts> {
    require_lab_compton(proc)?;
    let m = proc.mass;
    let (pi, pf) = (proc.p_in, proc.p_out);
    let (ki, kf) = (proc.partner_in.unwrap(), proc.partner_out.unwrap());
    let (wi, wf) = (ki.t, kf.t);

    let u_denominator = ((pi - kf).norm_sq() - m * m, -2.0 * m * wf);
    let s_denominator = ((pi + ki).norm_sq() - m * m, 2.0 * m * wi);
    for (direct, reduced) in [u_denominator, s_denominator] {
        if (direct - reduced).abs() > tol.identity_rel * reduced.abs().max(m * m) {
            return Err(Error::NotLabFrame);
        }
    }

    let ei = eps_slash(eps_i);
    let ef = eps_slash(eps_f);
    let zero = Mat5::zeros();
    let prop_u = dkp_feynman_with(&(pi - kf), m, &zero, tol)?.matrix;
    let prop_s = dkp_feynman_with(&(pi + ki), m, &zero, tol)?.matrix;
    let seagull_matrix = ei * c * ef + ef * c * ei;
    let pole_matrix = ei * prop_u * ef + ef * prop_s * ei;

    let e2 = proc.coupling * proc.coupling;
    let pref = I * e2 / (4.0 * PI * PI * 2.0 * (wi * wf).sqrt());
    let norm = pref.norm_sqr();

    let u_i = particle(&pi, m)?;
    let u_f = particle(&pf, m)?;
    let m_a = pref * (u_f.bar() * seagull_matrix * u_i.components())[(0, 0)];
    let m_b = pref * (u_f.bar() * pole_matrix * u_i.components())[(0, 0)];

    let proj_i = projector(&pi, m)?;
    let proj_f = projector(&pf, m)?;
    let a_bar = dkp_adjoint(&seagull_matrix);
    let b_bar = dkp_adjoint(&pole_matrix);
    let tr_aa = (proj_f * seagull_matrix * proj_i * a_bar).trace().re * norm;
    let tr_bb = (proj_f * pole_matrix * proj_i * b_bar).trace().re * norm;
    let tr_ab = 2.0 * (a_bar * proj_f * pole_matrix * proj_i).trace().re * norm;

    let energy_f = pf.t;
    let overlap = eps_i.overlap(eps_f);
    let scale = e2 * e2 / (64.0 * PI.powi(4) * wi * wf * m * energy_f);
    let closed = if algebra::max_abs(&(c - fix_gauge_constant(m)?)) <= tol.algebra_abs / m {
        Some(scale * overlap * overlap)
    } else {
        None
    };
    // round-off noise floor relative to the aligned-polarization seagull
    let floor = 1e-14 * scale;

    let cross_spinor = 2.0 * (m_a.conj() * m_b).re;
    let total_spinor = (m_a + m_b).norm_sqr();
    let parts = ComptonParts {
        seagull: AmplitudeValue {
            value: m_a,
            pipeline: Pipeline::Spinor,
        },
        pole: AmplitudeValue {
            value: m_b,
            pipeline: Pipeline::Spinor,
        },
        seagull_sq: SquaredAmplitude::new(m_a.norm_sqr(), tr_aa, closed, floor)
            .check("compton |M_a|²", tol.pipeline_rel)?,
        pole_sq: SquaredAmplitude::new(m_b.norm_sqr(), tr_bb, None, floor).check("compton |M_b|²", tol.pipeline_rel)?,
        cross: SquaredAmplitude::new(cross_spinor, tr_ab, None, floor).check("compton cross term", tol.pipeline_rel)?,
        total: SquaredAmplitude::new(total_spinor, tr_aa + tr_bb + tr_ab, None, floor)
            .check("compton |M|²", tol.pipeline_rel)?,
        u_denominator,
        s_denominator,
    };
    Ok(parts)
}

/// One null-trace check: label and |value| relative to the magnitude of its factors.
#[derive(Debug, Clone, PartialEq)]
pub struct NullTrace {
    pub label: &'static str,
    pub residual: f64,
}

/// The vanishing products and traces behind the Compton cancellations.
///
/// With p_i = (m, 0) and transverse ε: the products ε̸ p̸_i ε̸ vanish as
/// matrices, and every trace in the interference and |M_b|² expansions that
/// contains one of them vanishes.
pub fn compton_null_traces(
    proc: &ScatterProcess,
    eps_i: &PolarizationVector,
    eps_f: &PolarizationVector,
) -> Result<Vec<NullTrace>> {
    require_lab_compton(proc)?;
    let beta = algebra::standard();
    let m = proc.mass;
    let id = Mat5::identity();
    let mm = Complex64::from(m);
    let (pi, pf) = (proc.p_in, proc.p_out);
    let (ki, kf) = (proc.partner_in.unwrap(), proc.partner_out.unwrap());
    let ei = eps_slash(eps_i);
    let ef = eps_slash(eps_f);
    let spi = beta.slash(&pi);
    let num = |q: &crate::kinematics::FourVector| {
        let s = beta.slash(q);
        s * (s + id * mm)
    };
    let (npf, npi, nu, ns) = (num(&pf), num(&pi), num(&(pi - kf)), num(&(pi + ki)));
    let sym = ei * ef + ef * ei;

    let rel = |x: Mat5, factors: &[&Mat5]| -> f64 {
        let scale: f64 = factors.iter().map(|f| algebra::max_abs(f).max(1e-300)).product();
        algebra::max_abs(&x) / scale
    };
    let rel_tr = |x: Mat5, factors: &[&Mat5]| -> f64 {
        let scale: f64 = factors.iter().map(|f| algebra::max_abs(f).max(1e-300)).product();
        x.trace().norm() / scale
    };

    Ok(vec![
        NullTrace {
            label: "eps_i p_i eps_i",
            residual: rel(ei * spi * ei, &[&ei, &spi, &ei]),
        },
        NullTrace {
            label: "eps_f p_i eps_i",
            residual: rel(ef * spi * ei, &[&ef, &spi, &ei]),
        },
        NullTrace {
            label: "eps_i p_i eps_f",
            residual: rel(ei * spi * ef, &[&ei, &spi, &ef]),
        },
        NullTrace {
            label: "eps_f p_i eps_f",
            residual: rel(ef * spi * ef, &[&ef, &spi, &ef]),
        },
        NullTrace {
            label: "interference, u-channel",
            residual: rel_tr(sym * npf * ei * nu * ef * npi, &[&sym, &npf, &ei, &nu, &ef, &npi]),
        },
        NullTrace {
            label: "interference, s-channel",
            residual: rel_tr(sym * npf * ef * ns * ei * npi, &[&sym, &npf, &ef, &ns, &ei, &npi]),
        },
        NullTrace {
            label: "pole squared, uu",
            residual: rel_tr(
                npf * ei * nu * ef * npi * ef * nu * ei,
                &[&npf, &ei, &nu, &ef, &npi, &ef, &nu, &ei],
            ),
        },
        NullTrace {
            label: "pole squared, us",
            residual: rel_tr(
                npf * ei * nu * ef * npi * ei * ns * ef,
                &[&npf, &ei, &nu, &ef, &npi, &ei, &ns, &ef],
            ),
        },
        NullTrace {
            label: "pole squared, su",
            residual: rel_tr(
                npf * ef * ns * ei * npi * ef * nu * ei,
                &[&npf, &ef, &ns, &ei, &npi, &ef, &nu, &ei],
            ),
        },
        NullTrace {
            label: "pole squared, ss",
            residual: rel_tr(
                npf * ef * ns * ei * npi * ei * ns * ef,
                &[&npf, &ef, &ns, &ei, &npi, &ei, &ns, &ef],
            ),
        },
    ])
}

/// Re-export for callers that only deal with amplitudes.
pub use distributions::fix_gauge_constant as gauge_constant;
