//! Seeded verification sweeps.
//!
//! Every random quantity comes from a `ChaCha8Rng` seeded by the sweep
//! configuration and is drawn sequentially before any work is farmed out,
//! so trials may run in parallel while the emitted records stay identical
//! from run to run and in trial-index order.

mod cubic;
mod explore;

pub use cubic::{cubic_trial, predicted_value, run_cubic_sweep, CubicSummary, SweepReport};
pub use explore::{
    explore_one, explore_orbit, invariant_exponent, run_exploration, ExplorationReport,
    ExploreRecord, ExploreSummary, OrbitCheck, PRange, ORBIT_TOLERANCE,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exact_poly::Polynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub count: usize,
    pub seed: u64,
    /// Integer coefficients are drawn from `[-coeff_range, coeff_range]`.
    pub coeff_range: i64,
    pub n: usize,
    pub tol: f64,
}

impl SweepConfig {
    pub fn cubic(count: usize, seed: u64) -> Self {
        Self {
            count,
            seed,
            coeff_range: 9,
            n: 3,
            tol: 1e-10,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::Config("count must be at least 1".into()));
        }
        if self.coeff_range < 1 {
            return Err(Error::Config("coefficient range must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Divergent,
    TolFail,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Divergent => "divergent",
            Status::TolFail => "tol_fail",
        }
    }
}

/// One cubic trial: left-hand side by quadrature, right-hand side from the
/// discriminant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRecord {
    pub trial: usize,
    pub coeffs: Polynomial,
    pub n: usize,
    #[serde(rename = "D")]
    pub discriminant: String,
    #[serde(rename = "sign_D")]
    pub sign_d: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_error: Option<f64>,
    pub status: Status,
}

/// Integer polynomial of degree `n` with coefficients uniform in
/// `[-range, range]` and nonzero leading coefficient.
pub(crate) fn random_integer_poly(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Polynomial {
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut lead = 0;
    while lead == 0 {
        lead = rng.gen_range(-range..=range);
    }
    coeffs.push(lead);
    for _ in 0..n {
        coeffs.push(rng.gen_range(-range..=range));
    }
    Polynomial::new(
        coeffs
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect(),
    )
    .expect("nonzero leading coefficient")
}

fn quantile_summary(mut values: Vec<f64>) -> (Option<f64>, Option<f64>) {
    if values.is_empty() {
        return (None, None);
    }
    values.sort_by(f64::total_cmp);
    let max = *values.last().expect("nonempty");
    let mid = values.len() / 2;
    let median = if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    };
    (Some(max), Some(median))
}

fn csv_opt(v: Option<f64>) -> String {
    v.map(|x| serde_json::to_string(&x).expect("finite"))
        .unwrap_or_default()
}
