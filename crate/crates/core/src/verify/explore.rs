use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{random_integer_poly, Status, SweepConfig};
use crate::exact_poly::{discriminant, Polynomial};
use crate::quadrature::{integrate_power_with, QuadratureOptions};
use crate::rational::{format_rational, sign, to_f64};
use crate::roots::count_real_roots;
use crate::{Error, Result};

/// Largest deviation accepted across an orbit.
pub const ORBIT_TOLERANCE: f64 = 1e-6;

/// `1/(n(n−1))`, the power of `|D|` that makes `I·|D|^e` scale-free.
pub fn invariant_exponent(n: usize) -> f64 {
    1.0 / (n * (n - 1)) as f64
}

fn invariant(value: f64, d: &BigRational, n: usize) -> f64 {
    value * to_f64(d).abs().powf(invariant_exponent(n))
}

/// Deviation of `P = I·|D|^(1/(n(n−1)))` over random images of one
/// polynomial under translation, `x`-scaling, overall scaling and reversal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitCheck {
    pub size: usize,
    pub base_p: f64,
    /// Relative to `base_p`, or absolute when `base_p` is zero.
    pub max_deviation: f64,
    pub relative: bool,
    pub passed: bool,
}

fn ratio(rng: &mut ChaCha8Rng, num: std::ops::RangeInclusive<i64>, den: i64) -> BigRational {
    let p = rng.gen_range(num);
    let q = rng.gen_range(1..=den);
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn signed_nonzero(rng: &mut ChaCha8Rng, max: i64, den: i64) -> BigRational {
    let r = ratio(rng, 1..=max, den);
    if rng.gen_bool(0.5) {
        -r
    } else {
        r
    }
}

fn orbit_element(base: &Polynomial, rng: &mut ChaCha8Rng) -> Polynomial {
    let t = ratio(rng, -2..=2, 2);
    let s = signed_nonzero(rng, 3, 3);
    let lambda = signed_nonzero(rng, 4, 4);
    let mut g = base.translate(&t).scale_x(&s).scale(&lambda);
    if rng.gen_bool(0.5) && !g.trailing().is_zero() {
        g = g.reverse();
    }
    g
}

/// Integrates `size` random images of `base` and compares their invariant
/// with that of `base`.
pub fn explore_orbit(
    base: &Polynomial,
    n: usize,
    size: usize,
    seed: u64,
    tol: f64,
    opts: &QuadratureOptions,
) -> Result<OrbitCheck> {
    let d = discriminant(base)?;
    let base_p = invariant(integrate_power_with(base, n, tol, opts)?.value, &d, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let images: Vec<Polynomial> = (0..size).map(|_| orbit_element(base, &mut rng)).collect();
    let values = images
        .par_iter()
        .map(|g| {
            let dg = discriminant(g)?;
            Ok(invariant(
                integrate_power_with(g, n, tol, opts)?.value,
                &dg,
                n,
            ))
        })
        .collect::<Result<Vec<f64>>>()?;
    let relative = base_p != 0.0;
    let max_deviation = values
        .iter()
        .map(|p| {
            let diff = (p - base_p).abs();
            if relative {
                diff / base_p.abs()
            } else {
                diff
            }
        })
        .fold(0.0, f64::max);
    Ok(OrbitCheck {
        size,
        base_p,
        max_deviation,
        relative,
        passed: max_deviation <= ORBIT_TOLERANCE,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExploreRecord {
    pub trial: usize,
    pub coeffs: Polynomial,
    pub n: usize,
    #[serde(rename = "D")]
    pub discriminant: String,
    #[serde(rename = "sign_D")]
    pub sign_d: i32,
    pub real_roots: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_invariant: Option<f64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitCheck>,
}

/// Range of `P` among nondegenerate trials with the same number of distinct
/// real roots.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PRange {
    pub real_roots: usize,
    pub trials: usize,
    pub p_min: f64,
    pub p_max: f64,
    /// `p_max / p_min − 1`.
    pub spread: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExploreSummary {
    pub summary: bool,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub range: i64,
    pub ok: usize,
    pub divergent: usize,
    pub tol_fail: usize,
    pub p_ranges: Vec<PRange>,
    pub orbits_checked: usize,
    pub orbit_max_deviation: f64,
    pub orbits_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExplorationReport {
    pub records: Vec<ExploreRecord>,
    pub summary: ExploreSummary,
}

impl ExplorationReport {
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("serializable"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary).expect("serializable"));
        out.push('\n');
        out
    }
}

/// `P` for one polynomial plus, when `orbit_size > 0` and the integral is
/// finite, an orbit check seeded by `orbit_seed`.
pub fn explore_one(
    trial: usize,
    f: &Polynomial,
    n: usize,
    orbit_size: usize,
    orbit_seed: u64,
    tol: f64,
    opts: &QuadratureOptions,
) -> Result<ExploreRecord> {
    let d = discriminant(f)?;
    let mut record = ExploreRecord {
        trial,
        coeffs: f.clone(),
        n,
        discriminant: format_rational(&d),
        sign_d: sign(&d),
        real_roots: count_real_roots(f)?,
        integral: None,
        p_invariant: None,
        status: Status::Ok,
        orbit: None,
    };
    match integrate_power_with(f, n, tol, opts) {
        Ok(res) => {
            record.integral = Some(res.value);
            record.p_invariant = Some(invariant(res.value, &d, n));
            if orbit_size > 0 {
                record.orbit = explore_orbit(f, n, orbit_size, orbit_seed, tol, opts).ok();
            }
        }
        Err(Error::RepeatedRootDivergence { .. }) => record.status = Status::Divergent,
        Err(_) => record.status = Status::TolFail,
    }
    Ok(record)
}

/// Random integer polynomials of degree 4 or 5: `P` per trial, its spread
/// per real-root count, and an orbit check for every finite trial. Draws
/// with `D = 0` are kept; they are either divergent or have `P = 0`.
pub fn run_exploration(
    cfg: &SweepConfig,
    orbit_size: usize,
    opts: &QuadratureOptions,
) -> Result<ExplorationReport> {
    cfg.validate()?;
    if !(4..=5).contains(&cfg.n) {
        return Err(Error::BadDegree {
            found: cfg.n,
            expected: "4 or 5".into(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let trials: Vec<(Polynomial, u64)> = (0..cfg.count)
        .map(|_| {
            let f = random_integer_poly(&mut rng, cfg.n, cfg.coeff_range);
            (f, rng.gen())
        })
        .collect();

    let records = trials
        .par_iter()
        .enumerate()
        .map(|(i, (f, s))| explore_one(i, f, cfg.n, orbit_size, *s, cfg.tol, opts))
        .collect::<Result<Vec<_>>>()?;

    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    let mut p_ranges = Vec::new();
    for real_roots in 0..=cfg.n {
        let ps: Vec<f64> = records
            .iter()
            .filter(|r| r.real_roots == real_roots && r.sign_d != 0)
            .filter_map(|r| r.p_invariant)
            .collect();
        if ps.is_empty() {
            continue;
        }
        let p_min = ps.iter().copied().fold(f64::INFINITY, f64::min);
        let p_max = ps.iter().copied().fold(0.0, f64::max);
        p_ranges.push(PRange {
            real_roots,
            trials: ps.len(),
            p_min,
            p_max,
            spread: p_max / p_min - 1.0,
        });
    }
    let orbits: Vec<&OrbitCheck> = records.iter().filter_map(|r| r.orbit.as_ref()).collect();
    let summary = ExploreSummary {
        summary: true,
        n: cfg.n,
        count: records.len(),
        seed: cfg.seed,
        range: cfg.coeff_range,
        ok: count(Status::Ok),
        divergent: count(Status::Divergent),
        tol_fail: count(Status::TolFail),
        p_ranges,
        orbits_checked: orbits.len(),
        orbit_max_deviation: orbits.iter().map(|o| o.max_deviation).fold(0.0, f64::max),
        orbits_passed: orbits.iter().all(|o| o.passed),
    };
    Ok(ExplorationReport { records, summary })
}
