use serde::{Deserialize, Serialize};

/// Numerical thresholds shared by the pipelines.
///
/// Algebraic identities on O(1) matrix entries use an absolute bound; anything
/// that involves momenta is compared relatively.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Absolute bound for β-algebra residuals.
    pub algebra_abs: f64,
    /// Relative bound for momentum-dependent matrix identities.
    pub identity_rel: f64,
    /// Agreement required between the spinor and trace routes for Coulomb scattering.
    pub coulomb_pipeline_rel: f64,
    /// Agreement required between amplitude and closed-form routes.
    pub pipeline_rel: f64,
    /// Relative on-shell / conservation slack for constructed kinematics.
    pub kinematics_rel: f64,
    /// Propagator pole guard: |q² − m²| < guard · max(1, m²) is rejected.
    pub pole_guard: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            algebra_abs: 1e-12,
            identity_rel: 1e-10,
            coulomb_pipeline_rel: 1e-10,
            pipeline_rel: 1e-8,
            kinematics_rel: 1e-12,
            pole_guard: 1e-9,
        }
    }
}

/// Largest pairwise relative difference among `values`.
///
/// Values whose magnitude is below `floor` count as zero, so two routes that
/// both produce round-off noise for an exactly vanishing quantity agree.
pub fn relative_spread(values: &[f64], floor: f64) -> f64 {
    let clean: Vec<f64> = values.iter().map(|v| if v.abs() <= floor { 0.0 } else { *v }).collect();
    let scale = clean.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    let mut spread = 0.0_f64;
    for (i, a) in clean.iter().enumerate() {
        for b in &clean[i + 1..] {
            spread = spread.max((a - b).abs() / scale);
        }
    }
    spread
}
