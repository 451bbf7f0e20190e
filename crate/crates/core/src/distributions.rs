//! Causal distributions in momentum space and their splitting.
//!
//! A descriptor is a (possibly matrix-valued) polynomial in p multiplying
//! the mass-shell factor δ(p² − m²) and a frequency factor. Scaling
//! p → p/α turns the δ into α²δ(p² − α²m²), so a polynomial of degree d has
//! singular order ω = d − 2 in four dimensions.
//!
//! Splitting is kept symbolic. ω < 0 means the retarded part is the
//! Heaviside-truncated distribution; ω ≥ 0 leaves one undetermined constant
//! per monomial of degree ≤ ω. For the matrix-valued DKP commutator at ω = 0
//! that is a single 5×5 matrix, fixed later by gauge invariance to I/m.
//!
//! Sign conventions: the DKP Feynman propagator is returned as
//! −(1/m) q̸(q̸ + m)/(q² − m²) + C. This is the single source of sign truth for
//! the Compton amplitude; with it the propagator and contact terms share one
//! prefactor and the lab-frame cross section comes out as the seagull term.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, Mat5, MetricTensor};
use crate::error::{Error, Result};
use crate::kinematics::FourVector;
use crate::Tolerances;

/// Frequency factor multiplying the mass-shell δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrequencyFactor {
    /// sgn(p⁰): the full commutator distribution.
    Sign,
    /// Θ(p⁰): positive-frequency part.
    StepPositive,
    /// Θ(−p⁰): negative-frequency part.
    StepNegative,
}

/// Which support factor the polynomial multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Support {
    /// δ(p² − m²) × frequency factor.
    MassShell,
    /// Bare polynomial, no δ factor. Outside the power-counting family.
    Polynomial,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Coefficient {
    Scalar(Complex64),
    Matrix(Mat5),
}

/// coefficient × p_{μ₁}…p_{μ_d}; an empty index list is the constant term.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyTerm {
    pub indices: Vec<usize>,
    pub coefficient: Coefficient,
}

impl PolyTerm {
    pub fn degree(&self) -> usize {
        self.indices.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistributionDescriptor {
    pub name: String,
    pub terms: Vec<PolyTerm>,
    pub mass: f64,
    pub frequency: FrequencyFactor,
    pub support: Support,
    pub prefactor: Complex64,
}

impl DistributionDescriptor {
    /// D̂_m(p) = (i/2π) δ(p² − m²) sgn(p⁰).
    pub fn jordan_pauli(m: f64) -> Self {
        DistributionDescriptor {
            name: if m == 0.0 { "D0".into() } else { "Dm".into() },
            terms: vec![PolyTerm {
                indices: vec![],
                coefficient: Coefficient::Scalar(Complex64::from(1.0)),
            }],
            mass: m,
            frequency: FrequencyFactor::Sign,
            support: Support::MassShell,
            prefactor: Complex64::new(0.0, 1.0 / (2.0 * std::f64::consts::PI)),
        }
    }

    /// Massless Jordan–Pauli distribution D̂₀, the Moller numerical part.
    pub fn massless_jordan_pauli() -> Self {
        Self::jordan_pauli(0.0)
    }

    /// Ŝ(p) = (1/m) p̸(p̸ + m) D̂_m(p), the Compton numerical part.
    ///
    /// The polynomial is spelled out in components: β^μβ^ν p_μ p_ν + m β^μ p_μ.
    pub fn dkp_commutator(m: f64) -> Self {
        let beta = algebra::standard();
        let mut terms = Vec::with_capacity(20);
        for mu in 0..4 {
            for nu in 0..4 {
                terms.push(PolyTerm {
                    indices: vec![mu, nu],
                    coefficient: Coefficient::Matrix(beta.beta(mu) * beta.beta(nu)),
                });
            }
        }
        for mu in 0..4 {
            terms.push(PolyTerm {
                indices: vec![mu],
                coefficient: Coefficient::Matrix(beta.beta(mu) * Complex64::from(m)),
            });
        }
        DistributionDescriptor {
            name: "S".into(),
            terms,
            mass: m,
            frequency: FrequencyFactor::Sign,
            support: Support::MassShell,
            prefactor: Complex64::new(0.0, 1.0 / (2.0 * std::f64::consts::PI * m)),
        }
    }

    /// Scalar descriptor whose polynomial is (p⁰)^degree; used for power-counting probes.
    pub fn scalar_monomial(degree: usize, m: f64, frequency: FrequencyFactor) -> Self {
        DistributionDescriptor {
            name: format!("deg{degree}"),
            terms: vec![PolyTerm {
                indices: vec![0; degree],
                coefficient: Coefficient::Scalar(Complex64::from(1.0)),
            }],
            mass: m,
            frequency,
            support: Support::MassShell,
            prefactor: Complex64::from(1.0),
        }
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(PolyTerm::degree).max().unwrap_or(0)
    }

    pub fn is_matrix_valued(&self) -> bool {
        self.terms
            .iter()
            .any(|t| matches!(t.coefficient, Coefficient::Matrix(_)))
    }

    /// Value of the polynomial factor at p (scalar terms times the identity).
    pub fn polynomial_at(&self, p: &FourVector) -> Mat5 {
        let lowered = MetricTensor::MINKOWSKI.lower(p.components());
        let mut out = Mat5::zeros();
        for term in &self.terms {
            let monomial: f64 = term.indices.iter().map(|&mu| lowered[mu]).product();
            let c = Complex64::from(monomial);
            match &term.coefficient {
                Coefficient::Scalar(z) => out += Mat5::identity() * (z * c),
                Coefficient::Matrix(mat) => out += mat * c,
            }
        }
        out
    }

    fn validate(&self) -> Result<()> {
        if self.support != Support::MassShell {
            return Err(Error::UnsupportedDistribution(format!(
                "{}: no mass-shell δ factor",
                self.name
            )));
        }
        if self.terms.is_empty() {
            return Err(Error::UnsupportedDistribution(format!(
                "{}: empty polynomial",
                self.name
            )));
        }
        if !(self.mass >= 0.0) {
            return Err(Error::UnsupportedDistribution(format!(
                "{}: negative mass {}",
                self.name, self.mass
            )));
        }
        Ok(())
    }
}

/// Singular order ω of a distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SingularOrder(pub i32);

impl SingularOrder {
    pub fn value(self) -> i32 {
        self.0
    }

    pub fn is_regular(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for SingularOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// ω = deg − 2 for polynomial × δ(p² − m²) in four dimensions.
pub fn singular_order(d: &DistributionDescriptor) -> Result<SingularOrder> {
    d.validate()?;
    Ok(SingularOrder(d.degree() as i32 - 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitClass {
    Regular,
    Singular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlotKind {
    Scalar,
    Matrix,
}

/// One undetermined constant C_l multiplying monomials of degree l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantSlot {
    pub degree: usize,
    pub kind: SlotKind,
}

/// Symbolic retarded part: the original distribution times a step-function
/// marker, plus the polynomial ambiguity.
#[derive(Debug, Clone, PartialEq)]
pub struct RetardedPart {
    pub base: DistributionDescriptor,
    pub heaviside: bool,
    pub constants: Vec<ConstantSlot>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SplitResult {
    pub order: SingularOrder,
    pub class: SplitClass,
    pub retarded: RetardedPart,
}

impl SplitResult {
    pub fn free_constants(&self) -> usize {
        self.retarded.constants.len()
    }
}

/// Number of monomials of degree exactly l in four variables.
fn monomial_count(l: usize) -> usize {
    (l + 1) * (l + 2) * (l + 3) / 6
}

/// Classify the splitting of `d` and list its undetermined constants.
///
/// Regular distributions (ω < 0) split with the Heaviside step and carry no
/// constants. A matrix-valued descriptor at ω = 0 collapses the constant
/// ledger into one 5×5 matrix; beyond that each monomial p_{μ₁}…p_{μ_l},
/// l ≤ ω, gets its own slot.
pub fn split(d: &DistributionDescriptor) -> Result<SplitResult> {
    let order = singular_order(d)?;
    if order.is_regular() {
        return Ok(SplitResult {
            order,
            class: SplitClass::Regular,
            retarded: RetardedPart {
                base: d.clone(),
                heaviside: true,
                constants: Vec::new(),
            },
        });
    }
    let kind = if d.is_matrix_valued() {
        SlotKind::Matrix
    } else {
        SlotKind::Scalar
    };
    let mut constants = Vec::new();
    for l in 0..=order.0 as usize {
        for _ in 0..monomial_count(l) {
            constants.push(ConstantSlot { degree: l, kind });
        }
    }
    Ok(SplitResult {
        order,
        class: SplitClass::Singular,
        retarded: RetardedPart {
            base: d.clone(),
            heaviside: false,
            constants,
        },
    })
}

/// Evaluated propagator: a 5×5 matrix (DKP) or a scalar (photon).
#[derive(Debug, Clone, PartialEq)]
pub struct PropagatorValue {
    pub matrix: Mat5,
    pub momentum: FourVector,
}

fn pole_check(distance: f64, m: f64, tol: &Tolerances) -> Result<()> {
    let guard = tol.pole_guard * (m * m).max(1.0);
    if distance.abs() < guard || !distance.is_finite() {
        return Err(Error::Pole {
            distance: distance.abs(),
            guard,
        });
    }
    Ok(())
}

/// Photon Feynman propagator −1/(q² + i0).
///
/// At tree level the denominator is real and away from zero, so the +i0 is
/// bookkeeping only; near-pole momenta are rejected.
pub fn photon_feynman(q: &FourVector) -> Result<Complex64> {
    photon_feynman_with(q, &Tolerances::default())
}

pub fn photon_feynman_with(q: &FourVector, tol: &Tolerances) -> Result<Complex64> {
    let q2 = q.norm_sq();
    pole_check(q2, 0.0, tol)?;
    Ok(Complex64::from(-1.0 / q2))
}

/// DKP Feynman propagator with contact constant `c`:
/// −(1/m) q̸(q̸ + m)/(q² − m²) + c.
pub fn dkp_feynman(q: &FourVector, m: f64, c: &Mat5) -> Result<PropagatorValue> {
    dkp_feynman_with(q, m, c, &Tolerances::default())
}

pub fn dkp_feynman_with(q: &FourVector, m: f64, c: &Mat5, tol: &Tolerances) -> Result<PropagatorValue> {
    if !(m > 0.0) {
        return Err(Error::InvalidParameter {
            name: "mass",
            value: m,
            reason: "DKP propagator needs m > 0",
        });
    }
    let denom = q.norm_sq() - m * m;
    pole_check(denom, m, tol)?;
    let s = algebra::standard().slash(q);
    let numerator = s * (s + Mat5::identity() * Complex64::from(m));
    Ok(PropagatorValue {
        matrix: numerator * Complex64::from(-1.0 / (m * denom)) + c,
        momentum: *q,
    })
}

/// Contact constant fixed by second-order gauge invariance.
///
/// The δ'-terms in the divergence of the two-point distribution carry the
/// coefficient (C − 1/m); requiring it to vanish gives C = I/m.
pub fn fix_gauge_constant(m: f64) -> Result<Mat5> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "mass",
            value: m,
            reason: "gauge constant needs m > 0",
        });
    }
    Ok(Mat5::identity() * Complex64::from(1.0 / m))
}

/// Local part of the propagator equation of motion,
/// (q̸ − m)·S̃(q) + m·C = q̸ (C − I/m).
///
/// This is the momentum-space coefficient of ∂̸δ in the divergence of the
/// Compton two-point distribution; gauge invariance requires it to vanish.
pub fn gauge_remainder(q: &FourVector, m: f64, c: &Mat5) -> Result<Mat5> {
    let s = algebra::standard().slash(q);
    let prop = dkp_feynman(q, m, c)?.matrix;
    Ok((s - Mat5::identity() * Complex64::from(m)) * prop + c * Complex64::from(m))
}

/// Parse the descriptor mini-grammar `delta m=<mass> deg=<degree> <sgn|pos|neg>`.
impl FromStr for DistributionDescriptor {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let mut mass: Option<f64> = None;
        let mut degree: Option<usize> = None;
        let mut frequency: Option<FrequencyFactor> = None;
        let mut saw_head = false;

        for (position, token) in tokens(src) {
            let err = |message: String| Error::Parse { position, message };
            if !saw_head {
                if token != "delta" {
                    return Err(err(format!("expected `delta`, found `{token}`")));
                }
                saw_head = true;
                continue;
            }
            if let Some((key, value)) = token.split_once('=') {
                let vpos = position + key.len() + 1;
                match key {
                    "m" => {
                        let v: f64 = value.parse().map_err(|_| Error::Parse {
                            position: vpos,
                            message: format!("invalid mass `{value}`"),
                        })?;
                        if !(v >= 0.0) {
                            return Err(Error::Parse {
                                position: vpos,
                                message: "mass must be non-negative".into(),
                            });
                        }
                        mass = Some(v);
                    }
                    "deg" => {
                        degree = Some(value.parse().map_err(|_| Error::Parse {
                            position: vpos,
                            message: format!("invalid degree `{value}`"),
                        })?);
                    }
                    _ => return Err(err(format!("unknown key `{key}`"))),
                }
            } else {
                frequency = Some(match token {
                    "sgn" => FrequencyFactor::Sign,
                    "pos" => FrequencyFactor::StepPositive,
                    "neg" => FrequencyFactor::StepNegative,
                    _ => return Err(err(format!("unknown token `{token}`"))),
                });
            }
        }
        let end = src.len();
        if !saw_head {
            return Err(Error::Parse {
                position: 0,
                message: "empty descriptor".into(),
            });
        }
        let missing = |what: &str| Error::Parse {
            position: end,
            message: format!("missing {what}"),
        };
        let mass = mass.ok_or_else(|| missing("m=<mass>"))?;
        let degree = degree.ok_or_else(|| missing("deg=<degree>"))?;
        let frequency = frequency.ok_or_else(|| missing("frequency tag (sgn|pos|neg)"))?;
        let mut d = DistributionDescriptor::scalar_monomial(degree, mass, frequency);
        d.name = src.trim().to_string();
        Ok(d)
    }
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - src.as_ptr() as usize, tok))
}
