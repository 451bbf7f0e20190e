//! Tree-level observables of scalar Duffin–Kemmer–Petiau electrodynamics.
//!
//! Every observable is computed along two independent routes: explicit
//! 5×5 β-matrix and spinor contractions, and reduced trace / closed-form
//! expressions. The two must agree before a value is handed back.
//!
//! Modules, bottom-up:
//!
//! - [`algebra`]: the spin-0 β representation, slashes, traces.
//! - [`kinematics`]: four-vectors, Mandelstam invariants, 2→2 frames, photon polarizations.
//! - [`spinors`]: on-shell DKP amplitudes u±(p), conjugation, projectors.
//! - [`distributions`]: singular-order power counting, splitting classification,
//!   Feynman propagators and the gauge-fixed contact constant.
//! - [`amplitudes`]: squared matrix elements for Coulomb, Moller and Compton scattering.
//! - [`cross_sections`]: flux factors, closed forms, tabulation and CSV/JSON output.
//! - [`verification`]: the invariant suites behind `sdkp verify`.

pub mod algebra;
pub mod amplitudes;
pub mod cross_sections;
pub mod distributions;
pub mod kinematics;
pub mod spinors;
pub mod verification;

mod error;
mod tolerance;

pub use error::{Error, Result};
pub use tolerance::{relative_spread, Tolerances};

pub use num_complex::Complex64;

/// Fine-structure constant used when no coupling is given.
pub const DEFAULT_ALPHA: f64 = 1.0 / 137.035999;

/// Elementary charge for a given fine-structure constant, α = e²/(4π).
pub fn coupling_from_alpha(alpha: f64) -> f64 {
    (4.0 * std::f64::consts::PI * alpha).sqrt()
}

/// Inverse of [`coupling_from_alpha`].
pub fn alpha_from_coupling(e: f64) -> f64 {
    e * e / (4.0 * std::f64::consts::PI)
}
