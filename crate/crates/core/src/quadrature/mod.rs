//! Quadrature for `∫_R |f(x)|^(-2/n) dx`.

mod power;
mod tanh_sinh;

pub use power::{gaussian_check, integrate_power, integrate_power_with, GaussianCheck};
pub use tanh_sinh::{tanh_sinh, tanh_sinh_endpoints, QuadEstimate, DEFAULT_MAX_LEVEL};

use serde::Serialize;

use crate::{Error, Result};

/// Environment variable overriding the tanh-sinh level cap.
pub const MAX_LEVEL_ENV: &str = "DISQ_MAX_LEVEL";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureOptions {
    pub max_level: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            max_level: DEFAULT_MAX_LEVEL,
        }
    }
}

impl QuadratureOptions {
    /// Defaults, with the level cap taken from `DISQ_MAX_LEVEL` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_LEVEL_ENV) {
            Ok(v) => Self::with_max_level_str(&v),
            Err(_) => Ok(Self::default()),
        }
    }

    fn with_max_level_str(v: &str) -> Result<Self> {
        let max_level: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("{MAX_LEVEL_ENV}={v:?} is not a level count")))?;
        if !(3..=20).contains(&max_level) {
            return Err(Error::Config(format!(
                "{MAX_LEVEL_ENV}={max_level} outside 3..=20"
            )));
        }
        Ok(Self { max_level })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntegralResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub levels_used: usize,
    pub pieces: usize,
}
