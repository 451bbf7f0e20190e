//! Run defaults, optionally overridden by a `key = value` file.

use std::fmt;
use std::path::{Path, PathBuf};

use sdkp_core::cross_sections::MB_GEV2;
use sdkp_core::{Tolerances, DEFAULT_ALPHA};

/// Environment variable naming the directory for output files when `--out` is absent.
pub const OUTPUT_DIR_ENV: &str = "SDKP_OUTPUT_DIR";

#[derive(Debug, Clone, PartialEq)]
pub struct Defaults {
    pub alpha: f64,
    pub mass: f64,
    pub min_angle_deg: f64,
    pub theta_min_deg: f64,
    pub theta_max_deg: f64,
    pub steps: usize,
    pub mb_gev2: f64,
    pub tolerances: Tolerances,
    pub output_dir: Option<PathBuf>,
}

impl Default for Defaults {
    fn default() -> Self {
        Defaults {
            alpha: DEFAULT_ALPHA,
            mass: 1.0,
            min_angle_deg: 1.0,
            theta_min_deg: 10.0,
            theta_max_deg: 170.0,
            steps: 17,
            mb_gev2: MB_GEV2,
            tolerances: Tolerances::default(),
            output_dir: None,
        }
    }
}

#[derive(Debug)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config line {}: {}", self.line, self.message)
    }
}

impl Defaults {
    /// Built-in defaults, then the output directory from the environment.
    pub fn from_env() -> Self {
        let mut d = Defaults::default();
        if let Some(dir) = std::env::var_os(OUTPUT_DIR_ENV) {
            d.output_dir = Some(PathBuf::from(dir));
        }
        d
    }

    pub fn apply_file(&mut self, path: &Path) -> std::io::Result<Result<(), ConfigError>> {
        let text = std::fs::read_to_string(path)?;
        Ok(self.apply_str(&text))
    }

    pub fn apply_str(&mut self, text: &str) -> Result<(), ConfigError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ConfigError { line: n + 1, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected key = value, got `{line}`")))?;
            self.set(key.trim(), value.trim()).map_err(err)?;
        }
        Ok(())
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let float = || value.parse::<f64>().map_err(|e| format!("{key}: {e}"));
        let t = &mut self.tolerances;
        match key {
            "alpha" => self.alpha = float()?,
            "mass" => self.mass = float()?,
            "min_angle_deg" => self.min_angle_deg = float()?,
            "theta_min_deg" => self.theta_min_deg = float()?,
            "theta_max_deg" => self.theta_max_deg = float()?,
            "steps" => self.steps = value.parse().map_err(|e| format!("{key}: {e}"))?,
            "mb_gev2" => self.mb_gev2 = float()?,
            "algebra_abs" => t.algebra_abs = float()?,
            "identity_rel" => t.identity_rel = float()?,
            "coulomb_pipeline_rel" => t.coulomb_pipeline_rel = float()?,
            "pipeline_rel" => t.pipeline_rel = float()?,
            "kinematics_rel" => t.kinematics_rel = float()?,
            "pole_guard" => t.pole_guard = float()?,
            "output_dir" => self.output_dir = Some(PathBuf::from(value)),
            _ => return Err(format!("unknown key `{key}`")),
        }
        Ok(())
    }
}

impl fmt::Display for Defaults {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.tolerances;
        writeln!(f, "alpha = {}", self.alpha)?;
        writeln!(f, "mass = {}", self.mass)?;
        writeln!(f, "min_angle_deg = {}", self.min_angle_deg)?;
        writeln!(f, "theta_min_deg = {}", self.theta_min_deg)?;
        writeln!(f, "theta_max_deg = {}", self.theta_max_deg)?;
        writeln!(f, "steps = {}", self.steps)?;
        writeln!(f, "mb_gev2 = {}", self.mb_gev2)?;
        writeln!(f, "algebra_abs = {:e}", t.algebra_abs)?;
        writeln!(f, "identity_rel = {:e}", t.identity_rel)?;
        writeln!(f, "coulomb_pipeline_rel = {:e}", t.coulomb_pipeline_rel)?;
        writeln!(f, "pipeline_rel = {:e}", t.pipeline_rel)?;
        writeln!(f, "kinematics_rel = {:e}", t.kinematics_rel)?;
        writeln!(f, "pole_guard = {:e}", t.pole_guard)?;
        match &self.output_dir {
            Some(d) => writeln!(f, "output_dir = {}", d.display()),
            None => writeln!(f, "# output_dir unset, writing to stdout"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_through_display() {
        let mut d = Defaults::default();
        d.apply_str("alpha = 0.01\nsteps=5 # comment\n\npipeline_rel = 1e-6\n")
            .unwrap();
        assert_eq!(d.alpha, 0.01);
        assert_eq!(d.steps, 5);
        assert_eq!(d.tolerances.pipeline_rel, 1e-6);
        let mut e = Defaults::default();
        e.apply_str(&d.to_string()).unwrap();
        assert_eq!(d, e);
    }

    #[test]
    fn bad_lines_report_position() {
        let mut d = Defaults::default();
        let e = d.apply_str("alpha = 0.1\nbogus = 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(d.apply_str("mass 3").is_err());
        assert!(d.apply_str("mass = x").is_err());
    }
}
