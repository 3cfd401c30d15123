use std::fmt::Write as _;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{csv_opt, quantile_summary, random_integer_poly, Status, SweepConfig, SweepRecord};
use crate::exact_poly::{discriminant, Polynomial};
use crate::quadrature::{integrate_power_with, QuadratureOptions};
use crate::rational::{format_rational, sign, to_f64};
use crate::specfun::{constant_c_minus, constant_c_plus};
use crate::{Error, Result};

/// `C₋/|D|^(1/6)` for `D < 0`, `C₊/D^(1/6)` for `D > 0`, nothing for `D = 0`.
pub fn predicted_value(d_sign: i32, d_abs: f64) -> Option<f64> {
    let c = match d_sign {
        -1 => constant_c_minus(),
        1 => constant_c_plus(),
        _ => return None,
    };
    Some(c / d_abs.powf(1.0 / 6.0))
}

/// Runs one cubic trial; failures become statuses, never errors, except a
/// polynomial that is not a cubic.
pub fn cubic_trial(
    trial: usize,
    f: &Polynomial,
    tol: f64,
    opts: &QuadratureOptions,
) -> Result<SweepRecord> {
    if f.degree() != 3 {
        return Err(Error::BadDegree {
            found: f.degree(),
            expected: "3".into(),
        });
    }
    let d = discriminant(f)?;
    let sign_d = sign(&d);
    let predicted = predicted_value(sign_d, to_f64(&d).abs());
    let mut record = SweepRecord {
        trial,
        coeffs: f.clone(),
        n: 3,
        discriminant: format_rational(&d),
        sign_d,
        integral: None,
        error_estimate: None,
        predicted,
        rel_error: None,
        status: Status::Ok,
    };
    match integrate_power_with(f, 3, tol, opts) {
        Ok(res) => {
            record.integral = Some(res.value);
            record.error_estimate = Some(res.abs_error_estimate);
            record.rel_error = predicted.map(|p| (res.value - p).abs() / p);
        }
        Err(Error::RepeatedRootDivergence { .. }) => record.status = Status::Divergent,
        Err(_) => record.status = Status::TolFail,
    }
    Ok(record)
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct StratumSummary {
    pub trials: usize,
    pub ok: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rel_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median_rel_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubicSummary {
    pub summary: bool,
    pub count: usize,
    pub seed: u64,
    pub range: i64,
    pub tol: f64,
    /// Draws with `D = 0`, skipped and redrawn.
    pub skipped_degenerate: usize,
    pub ok: usize,
    pub divergent: usize,
    pub tol_fail: usize,
    pub negative_discriminant: StratumSummary,
    pub positive_discriminant: StratumSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rel_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub records: Vec<SweepRecord>,
    pub summary: CubicSummary,
}

impl SweepReport {
    /// One JSON object per record, then the summary object.
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

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("trial,a0,a1,a2,a3,D,sign_D,integral,predicted,rel_error,status\n");
        for r in &self.records {
            let coeffs: Vec<String> = r.coeffs.coeffs().iter().map(format_rational).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.trial,
                coeffs.join(","),
                r.discriminant,
                r.sign_d,
                csv_opt(r.integral),
                csv_opt(r.predicted),
                csv_opt(r.rel_error),
                r.status.as_str()
            );
        }
        out
    }
}

/// Random integer cubics, `D = 0` draws skipped, each integral compared with
/// `C_sign / |D|^(1/6)`.
pub fn run_cubic_sweep(cfg: &SweepConfig, opts: &QuadratureOptions) -> Result<SweepReport> {
    cfg.validate()?;
    if cfg.n != 3 {
        return Err(Error::BadDegree {
            found: cfg.n,
            expected: "3".into(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut polys = Vec::with_capacity(cfg.count);
    let mut skipped = 0;
    let max_draws = cfg.count.saturating_mul(1000).max(1000);
    let mut draws = 0;
    while polys.len() < cfg.count {
        draws += 1;
        if draws > max_draws {
            return Err(Error::Config(
                "coefficient box produces only zero discriminants".into(),
            ));
        }
        let f = random_integer_poly(&mut rng, 3, cfg.coeff_range);
        if discriminant(&f)?.is_zero() {
            skipped += 1;
            continue;
        }
        polys.push(f);
    }

    let records = polys
        .par_iter()
        .enumerate()
        .map(|(i, f)| cubic_trial(i, f, cfg.tol, opts))
        .collect::<Result<Vec<_>>>()?;
    let summary = summarize(cfg, skipped, &records);
    Ok(SweepReport { records, summary })
}

fn stratum(records: &[SweepRecord], sign_d: i32) -> StratumSummary {
    let members: Vec<&SweepRecord> = records.iter().filter(|r| r.sign_d == sign_d).collect();
    let errors: Vec<f64> = members.iter().filter_map(|r| r.rel_error).collect();
    let (max_rel_error, median_rel_error) = quantile_summary(errors);
    StratumSummary {
        trials: members.len(),
        ok: members.iter().filter(|r| r.status == Status::Ok).count(),
        max_rel_error,
        median_rel_error,
    }
}

fn summarize(cfg: &SweepConfig, skipped: usize, records: &[SweepRecord]) -> CubicSummary {
    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    let negative = stratum(records, -1);
    let positive = stratum(records, 1);
    let max_rel_error = [negative.max_rel_error, positive.max_rel_error]
        .into_iter()
        .flatten()
        .reduce(f64::max);
    CubicSummary {
        summary: true,
        count: records.len(),
        seed: cfg.seed,
        range: cfg.coeff_range,
        tol: cfg.tol,
        skipped_degenerate: skipped,
        ok: count(Status::Ok),
        divergent: count(Status::Divergent),
        tol_fail: count(Status::TolFail),
        negative_discriminant: negative,
        positive_discriminant: positive,
        max_rel_error,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_single_trials() {
        let opts = QuadratureOptions::default();
        let f = Polynomial::from_i64(&[1, 0, 1, 0]).unwrap();
        let r = cubic_trial(0, &f, 1e-10, &opts).unwrap();
        assert_eq!((r.sign_d, r.discriminant.as_str()), (-1, "-4"));
        assert!(r.rel_error.unwrap() <= 1e-8);
        let g = Polynomial::from_i64(&[1, 0, -1, 0]).unwrap();
        let r = cubic_trial(0, &g, 1e-10, &opts).unwrap();
        assert_eq!(r.sign_d, 1);
        assert!(r.rel_error.unwrap() <= 1e-8);
    }

    #[test]
    fn degenerate_cubic_is_divergent_without_prediction() {
        let f = Polynomial::from_i64(&[1, 0, -3, 2]).unwrap();
        let r = cubic_trial(0, &f, 1e-10, &QuadratureOptions::default()).unwrap();
        assert_eq!(r.status, Status::Divergent);
        assert!(r.predicted.is_none() && r.rel_error.is_none());
    }

    #[test]
    fn small_sweep_is_deterministic() {
        let cfg = SweepConfig::cubic(8, 42);
        let opts = QuadratureOptions::default();
        let a = run_cubic_sweep(&cfg, &opts).unwrap().to_json_lines();
        let b = run_cubic_sweep(&cfg, &opts).unwrap().to_json_lines();
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 9);
    }

    #[test]
    fn csv_has_one_row_per_record() {
        let report =
            run_cubic_sweep(&SweepConfig::cubic(3, 5), &QuadratureOptions::default()).unwrap();
        let csv = report.to_csv();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.lines().nth(1).unwrap().split(',').count() == 11);
    }

    #[test]
    fn rejects_other_degrees() {
        let mut cfg = SweepConfig::cubic(3, 5);
        cfg.n = 4;
        assert!(run_cubic_sweep(&cfg, &QuadratureOptions::default()).is_err());
    }
}
