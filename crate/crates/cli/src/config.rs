//! `key = value` run configuration.
//!
//! Blank lines and `#` comments are ignored, unknown or repeated keys are
//! errors, and every error names the line it came from. Command-line
//! overrides go through [`ConfigSource::set`] before [`ConfigSource::build`].

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use geodesic_core::continuum::{OdeConfig, DEFAULT_DRIFT_TOLERANCE};
use geodesic_core::solver::DEFAULT_MAX_DESCENT_ITERS;
use geodesic_core::{Axes, MetricField, Minkowski, Predictor, Schwarzschild, SolverConfig};

const REQUIRED: [&str; 8] = ["metric", "a", "delta_cm", "x0_cm", "y0_cm", "vx_c", "vy_c", "steps"];

const OPTIONAL: [&str; 9] = [
    "m_cm",
    "axes",
    "predictor",
    "max_descent_iters",
    "velocity_bound_check",
    "ode_ds_cm",
    "ode_drift_tol",
    "ode_h_cm",
    "output_dir",
];

/// Help text listing every key and its default.
pub const KEYS_HELP: &str = "\
config keys (key = value, '#' starts a comment):
  metric                schwarzschild | minkowski             (required)
  m_cm                  mass parameter m = 2GM/c^2 in cm     (required for schwarzschild)
  delta_cm              cell size in cm                      (required)
  a                     timeline multiplier, tau = a*delta   (required)
  x0_cm, y0_cm          start position in cm                 (required)
  vx_c, vy_c            start velocity in units of c         (required)
  steps                 points computed after the first two  (required)
  axes                  all | spatial                        [all]
  predictor             acceleration | velocity              [acceleration]
  max_descent_iters     descent move budget per step         [1000000]
  velocity_bound_check  true | false                         [true]
  ode_ds_cm             reference proper-time step in cm     [tau/10]
  ode_drift_tol         allowed |v.g.v - 1| in the reference [1e-6]
  ode_h_cm              metric derivative step in cm         [field default]
  output_dir            directory for written files          [.]";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    /// 1-based line in the config text; `None` for whole-file problems and overrides.
    pub line: Option<usize>,
    pub message: String,
}

impl ConfigError {
    fn at(line: Option<usize>, message: impl Into<String>) -> Self {
        Self { line, message: message.into() }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {n}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricSpec {
    Minkowski,
    Schwarzschild { m_cm: f64 },
}

impl MetricSpec {
    pub fn field(&self) -> Box<dyn MetricField<3>> {
        match *self {
            MetricSpec::Minkowski => Box::new(Minkowski::<3>),
            // m was validated when the config was built
            MetricSpec::Schwarzschild { m_cm } => Box::new(Schwarzschild::new(m_cm).expect("validated mass")),
        }
    }

    pub fn mass(&self) -> Option<f64> {
        match *self {
            MetricSpec::Minkowski => None,
            MetricSpec::Schwarzschild { m_cm } => Some(m_cm),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub metric: MetricSpec,
    pub delta_cm: f64,
    pub a: i64,
    pub x0_cm: f64,
    pub y0_cm: f64,
    pub vx_c: f64,
    pub vy_c: f64,
    pub steps: usize,
    pub axes: Axes,
    pub predictor: Predictor,
    pub max_descent_iters: u64,
    pub velocity_bound_check: bool,
    pub ode_ds_cm: Option<f64>,
    pub ode_drift_tol: f64,
    pub ode_h_cm: Option<f64>,
    pub output_dir: PathBuf,
}

impl RunConfig {
    pub fn solver(&self) -> SolverConfig {
        let mut cfg = SolverConfig::new(self.a, self.delta_cm);
        cfg.axes = self.axes;
        cfg.predictor = self.predictor;
        cfg.max_descent_iters = self.max_descent_iters;
        cfg.velocity_bound_check = self.velocity_bound_check;
        cfg
    }

    pub fn tau(&self) -> f64 {
        self.a as f64 * self.delta_cm
    }

    pub fn ode(&self) -> OdeConfig {
        let mut cfg = OdeConfig::new(self.ode_ds_cm.unwrap_or(self.tau() / 10.0));
        cfg.drift_tolerance = self.ode_drift_tol;
        cfg.h = self.ode_h_cm;
        cfg
    }
}

/// Raw entries, before validation.
#[derive(Debug, Clone, Default)]
pub struct ConfigSource {
    entries: BTreeMap<String, (Option<usize>, String)>,
}

fn known(key: &str) -> bool {
    REQUIRED.contains(&key) || OPTIONAL.contains(&key)
}

impl ConfigSource {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut src = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = Some(i + 1);
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(ConfigError::at(line, format!("expected `key = value`, got `{content}`")));
            };
            let (key, value) = (key.trim(), value.trim());
            if !known(key) {
                return Err(ConfigError::at(line, format!("unknown key `{key}`")));
            }
            if value.is_empty() {
                return Err(ConfigError::at(line, format!("`{key}` has no value")));
            }
            if let Some((first, _)) = src.entries.get(key) {
                let first = first.map_or(String::new(), |n| format!(" (first set on line {n})"));
                return Err(ConfigError::at(line, format!("`{key}` set twice{first}")));
            }
            src.entries.insert(key.to_string(), (line, value.to_string()));
        }
        Ok(src)
    }

    /// Overrides (or adds) a key, as from the command line.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let key = key.trim();
        if !known(key) {
            return Err(ConfigError::at(None, format!("unknown key `{key}`")));
        }
        self.entries.insert(key.to_string(), (None, value.trim().to_string()));
        Ok(())
    }

    /// Parses a `key=value` override.
    pub fn set_pair(&mut self, pair: &str) -> Result<(), ConfigError> {
        let Some((key, value)) = pair.split_once('=') else {
            return Err(ConfigError::at(None, format!("override `{pair}` is not key=value")));
        };
        self.set(key, value)
    }

    fn raw(&self, key: &str) -> Option<(Option<usize>, &str)> {
        self.entries.get(key).map(|(line, v)| (*line, v.as_str()))
    }

    fn line(&self, key: &str) -> Option<usize> {
        self.entries.get(key).and_then(|(line, _)| *line)
    }

    fn get<T>(&self, key: &str, parse: impl Fn(&str) -> Option<T>, expected: &str) -> Result<Option<T>, ConfigError> {
        match self.raw(key) {
            None => Ok(None),
            Some((line, v)) => parse(v)
                .map(Some)
                .ok_or_else(|| ConfigError::at(line, format!("`{key}` must be {expected}, got `{v}`"))),
        }
    }

    fn require<T>(&self, key: &str, parse: impl Fn(&str) -> Option<T>, expected: &str) -> Result<T, ConfigError> {
        // presence was checked up front
        Ok(self.get(key, parse, expected)?.expect("required key present"))
    }

    pub fn build(&self) -> Result<RunConfig, ConfigError> {
        let missing: Vec<&str> = REQUIRED.iter().copied().filter(|k| !self.entries.contains_key(*k)).collect();
        if !missing.is_empty() {
            return Err(ConfigError::at(None, format!("missing required keys: {}", missing.join(", "))));
        }

        let metric = match self.require("metric", |v| Some(v.to_ascii_lowercase()), "a metric name")?.as_str() {
            "minkowski" => {
                if self.entries.contains_key("m_cm") {
                    return Err(ConfigError::at(self.line("m_cm"), "`m_cm` only applies to the schwarzschild metric"));
                }
                MetricSpec::Minkowski
            }
            "schwarzschild" => {
                let m = self
                    .get("m_cm", parse_f64, "a number")?
                    .ok_or_else(|| ConfigError::at(self.line("metric"), "schwarzschild needs `m_cm`"))?;
                if !(m > 0.0) {
                    return Err(ConfigError::at(self.line("m_cm"), "`m_cm` must be positive"));
                }
                MetricSpec::Schwarzschild { m_cm: m }
            }
            other => {
                return Err(ConfigError::at(
                    self.line("metric"),
                    format!("unknown metric `{other}` (expected schwarzschild or minkowski)"),
                ))
            }
        };

        let delta_cm = self.require("delta_cm", parse_f64, "a number")?;
        if !(delta_cm > 0.0) {
            return Err(ConfigError::at(self.line("delta_cm"), "`delta_cm` must be positive"));
        }
        let a = self.require("a", parse_int, "an integer")?;
        if a < 1 {
            return Err(ConfigError::at(self.line("a"), "`a` must be at least 1"));
        }
        let x0_cm = self.require("x0_cm", parse_f64, "a number")?;
        let y0_cm = self.require("y0_cm", parse_f64, "a number")?;
        let vx_c = self.require("vx_c", parse_f64, "a number")?;
        let vy_c = self.require("vy_c", parse_f64, "a number")?;
        let speed = vx_c.hypot(vy_c);
        if !(speed < 1.0) {
            let line = self.line("vy_c").max(self.line("vx_c"));
            return Err(ConfigError::at(line, format!("initial speed {speed} c: speed ≥ c")));
        }
        let steps = self.require("steps", |v| parse_int(v).and_then(|n| usize::try_from(n).ok()), "a non-negative integer")?;

        let axes = self
            .get(
                "axes",
                |v| match v {
                    "all" => Some(Axes::All),
                    "spatial" => Some(Axes::Spatial),
                    _ => None,
                },
                "`all` or `spatial`",
            )?
            .unwrap_or_default();
        let predictor = self
            .get(
                "predictor",
                |v| match v {
                    "acceleration" => Some(Predictor::ConstantAcceleration),
                    "velocity" => Some(Predictor::ConstantVelocity),
                    _ => None,
                },
                "`acceleration` or `velocity`",
            )?
            .unwrap_or_default();
        let max_descent_iters = self
            .get("max_descent_iters", |v| parse_int(v).and_then(|n| u64::try_from(n).ok()).filter(|&n| n > 0), "a positive integer")?
            .unwrap_or(DEFAULT_MAX_DESCENT_ITERS);
        let velocity_bound_check = self
            .get("velocity_bound_check", |v| v.parse::<bool>().ok(), "`true` or `false`")?
            .unwrap_or(true);
        let positive = |v: &str| parse_f64(v).filter(|x| *x > 0.0);
        let ode_ds_cm = self.get("ode_ds_cm", positive, "a positive number")?;
        let ode_drift_tol = self.get("ode_drift_tol", positive, "a positive number")?.unwrap_or(DEFAULT_DRIFT_TOLERANCE);
        let ode_h_cm = self.get("ode_h_cm", positive, "a positive number")?;
        let output_dir = self.get("output_dir", |v| Some(PathBuf::from(v)), "a path")?.unwrap_or_else(|| PathBuf::from("."));

        Ok(RunConfig {
            metric,
            delta_cm,
            a,
            x0_cm,
            y0_cm,
            vx_c,
            vy_c,
            steps,
            axes,
            predictor,
            max_descent_iters,
            velocity_bound_check,
            ode_ds_cm,
            ode_drift_tol,
            ode_h_cm,
            output_dir,
        })
    }
}

fn parse_f64(v: &str) -> Option<f64> {
    v.parse::<f64>().ok().filter(|x| x.is_finite())
}

/// Integers, also written as an exact float such as `1e7`.
fn parse_int(v: &str) -> Option<i64> {
    if let Ok(n) = v.parse::<i64>() {
        return Some(n);
    }
    let x = parse_f64(v)?;
    (x.fract() == 0.0 && x.abs() < 9.0e15).then_some(x as i64)
}

/// Parses and validates config text.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    ConfigSource::parse(text)?.build()
}
