//! Run configuration: a single JSON document describing one problem plus
//! evaluation and output settings.
//!
//! Rational inputs are JSON strings (`"4/3"`) so exact data never passes
//! through floats. A minimal document:
//!
//! ```json
//! {
//!   "problem": {
//!     "a": "5", "b": "2", "c": "-1", "n": 2,
//!     "mode": "constant", "d": 1,
//!     "phi": "(v)",
//!     "order": 8, "iters": 8
//!   },
//!   "lambda_value": 0.1
//! }
//! ```
//!
//! `mode` is `"constant"` or `"exponential"` (with optional rational rate
//! `"k"`, default `"1"`); `phi` and the optional `source` lines use the
//! canonical text forms of the algebra module.

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, parse_ring, parse_series, DerivationMode};
use crate::engine::ProblemSpec;
use crate::oracle::GridParams;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub problem: ProblemConfig,
    #[serde(default)]
    pub grid: Option<GridConfig>,
    /// Numeric value of `lambda` for constant-mode evaluation.
    #[serde(default = "default_lambda")]
    pub lambda_value: f64,
    #[serde(default)]
    pub outputs: OutputsConfig,
    /// Comparison trust horizon; defaults to the grid's `t_max`.
    #[serde(default)]
    pub t_trust: Option<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProblemConfig {
    /// Diffusion coefficient, rational string (`"5"`, `"1/2"`).
    pub a: String,
    /// Linear coefficient.
    pub b: String,
    /// Nonlinear coefficient of `-c u^n`.
    pub c: String,
    /// Nonlinearity power.
    pub n: u32,
    /// `"constant"` or `"exponential"`.
    pub mode: String,
    /// Exponential rate `k` (rational string); ignored in constant mode.
    #[serde(default)]
    pub k: Option<String>,
    /// Surd discriminant.
    #[serde(default = "default_disc")]
    pub d: u64,
    /// Initial condition in canonical ring-element text.
    pub phi: String,
    /// Optional source series, canonical `t^j: (...)` lines.
    #[serde(default)]
    pub source: Option<String>,
    /// Truncation order `N`.
    pub order: usize,
    /// Iteration count `K`.
    pub iters: usize,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct GridConfig {
    pub x_min: f64,
    pub x_max: f64,
    pub nx: usize,
    pub t_max: f64,
    pub nt: usize,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct OutputsConfig {
    #[serde(default = "yes")]
    pub series_dump: bool,
    #[serde(default)]
    pub csv: bool,
    #[serde(default)]
    pub plot_script: bool,
    #[serde(default = "yes")]
    pub verify_report: bool,
}

fn yes() -> bool {
    true
}

fn default_lambda() -> f64 {
    0.1
}

fn default_disc() -> u64 {
    1
}

impl Default for OutputsConfig {
    fn default() -> Self {
        OutputsConfig {
            series_dump: true,
            csv: false,
            plot_script: false,
            verify_report: true,
        }
    }
}

/// Benchmark-figure defaults: `lambda = 0.1`, `x in [-5, 5]`,
/// `t in [0, 0.5]`, a 101 x 101 point grid.
pub fn default_grid() -> GridConfig {
    GridConfig {
        x_min: -5.0,
        x_max: 5.0,
        nx: 101,
        t_max: 0.5,
        nt: 100,
    }
}

impl From<GridConfig> for GridParams {
    fn from(g: GridConfig) -> Self {
        GridParams {
            x_min: g.x_min,
            x_max: g.x_max,
            nx: g.nx,
            t_max: g.t_max,
            nt: g.nt,
        }
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!(
                "config line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Validates and lowers the problem block into a [`ProblemSpec`].
    pub fn build_spec(&self) -> Result<ProblemSpec> {
        let p = &self.problem;
        let mode = match p.mode.to_ascii_lowercase().as_str() {
            "constant" => DerivationMode::Constant,
            "exponential" => {
                let k = match &p.k {
                    Some(k) => parse_rational(k)
                        .map_err(|e| Error::Parse(format!("field problem.k: {e}")))?,
                    None => num::BigRational::from(num::BigInt::from(1)),
                };
                DerivationMode::Exponential(k)
            }
            other => {
                return Err(Error::Parse(format!(
                    "field problem.mode: expected \"constant\" or \"exponential\", got \"{other}\""
                )))
            }
        };
        let a = parse_rational(&p.a).map_err(|e| Error::Parse(format!("field problem.a: {e}")))?;
        let b = parse_rational(&p.b).map_err(|e| Error::Parse(format!("field problem.b: {e}")))?;
        let c = parse_rational(&p.c).map_err(|e| Error::Parse(format!("field problem.c: {e}")))?;
        let phi = parse_ring(&p.phi, &mode)
            .map_err(|e| Error::Parse(format!("field problem.phi: {e}")))?;
        let source = match &p.source {
            Some(text) => parse_series(text, &mode, p.order)
                .map_err(|e| Error::Parse(format!("field problem.source: {e}")))?,
            None => crate::algebra::TimeSeries::zero(mode.clone(), p.order),
        };
        ProblemSpec::new(a, b, c, p.n, mode, p.d, phi, source, p.order, p.iters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cases::{preset, CaseId};

    #[test]
    fn minimal_config_builds_case1() {
        let cfg = RunConfig::from_json(
            r#"{"problem": {"a": "5", "b": "2", "c": "-1", "n": 2,
                 "mode": "constant", "phi": "(v)", "order": 4, "iters": 2}}"#,
        )
        .unwrap();
        let spec = cfg.build_spec().unwrap();
        assert_eq!(spec, preset(CaseId::I, 4, 2).unwrap());
        assert_eq!(cfg.lambda_value, 0.1);
        assert!(cfg.outputs.series_dump);
    }

    #[test]
    fn exponential_mode_with_surd() {
        let cfg = RunConfig::from_json(
            r#"{"problem": {"a": "1", "b": "2", "c": "3", "n": 3,
                 "mode": "exponential", "d": 6,
                 "phi": "(1/3*sqrt(6)*v)/(1 + v)", "order": 3, "iters": 3}}"#,
        )
        .unwrap();
        let spec = cfg.build_spec().unwrap();
        assert_eq!(spec, preset(CaseId::III, 3, 3).unwrap());
    }

    #[test]
    fn negative_diffusion_is_rejected_with_a_diagnostic() {
        let cfg = RunConfig::from_json(
            r#"{"problem": {"a": "-1", "b": "2", "c": "3", "n": 2,
                 "mode": "constant", "phi": "(v)", "order": 4, "iters": 2}}"#,
        )
        .unwrap();
        let err = cfg.build_spec().unwrap_err();
        assert!(err.to_string().contains("must be positive"));
    }

    #[test]
    fn malformed_json_reports_location() {
        let err = RunConfig::from_json("{").unwrap_err();
        assert!(err.to_string().contains("line"));
    }
}
