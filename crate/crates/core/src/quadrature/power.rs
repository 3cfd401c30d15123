//! The integral `∫_R |f(x)|^(-2/n) dx` for `deg f = n`.
//!
//! `f` is factored as `c · ∏ (x − r)^m · ∏ q_i(x)^i`, where the `r` are the
//! real roots (certified isolation, then refinement) and each `q_i` is a
//! square-free factor deflated by its real roots, so it has no real zeros.
//! The line is cut at every real root and at `±L`, `L = max|r| + 1`; each
//! bounded piece goes to tanh-sinh with the root factors evaluated from the
//! exact endpoint distances. The tails are folded onto `(0, 1]` by
//! `x = ±(L − 1 + 1/t)` and written in terms of `u = 1/x`:
//!
//! ```text
//!     |f(x)|^(-2/n) dx = |c|^(-2/n) (1 + (L−1)t)^(-2)
//!                        · ∏ |1 − r u|^(-2m/n) · ∏ |q_i^rev(u)|^(-2i/n) dt,
//! ```
//!
//! which is regular at `t = 0` and never forms `x^n` for huge `x`.

use std::f64::consts::PI;

use serde::Serialize;

use super::tanh_sinh::integrate_levels;
use super::{IntegralResult, QuadratureOptions};
use crate::exact_poly::{horner_f64, Polynomial};
use crate::rational::{from_f64, to_f64};
use crate::roots::{isolate, refine};
use crate::{Error, Result};

const MIN_TOL: f64 = 1e-13;
const MAX_TOL: f64 = 1e-4;

/// Relative accuracy requested from root refinement.
const ROOT_EPS: f64 = 1e-14;

pub fn integrate_power(f: &Polynomial, n: usize, tol: f64) -> Result<IntegralResult> {
    integrate_power_with(f, n, tol, &QuadratureOptions::default())
}

pub fn integrate_power_with(
    f: &Polynomial,
    n: usize,
    tol: f64,
    opts: &QuadratureOptions,
) -> Result<IntegralResult> {
    if n < 3 {
        return Err(Error::BadDegree {
            found: n,
            expected: ">= 3".into(),
        });
    }
    engine(f, n, tol, opts)
}

fn engine(f: &Polynomial, n: usize, tol: f64, opts: &QuadratureOptions) -> Result<IntegralResult> {
    if f.is_zero() || f.degree() != n {
        return Err(Error::BadDegree {
            found: f.degree(),
            expected: format!("{n} (the declared n)"),
        });
    }
    if !(MIN_TOL..=MAX_TOL).contains(&tol) {
        return Err(Error::ToleranceOutOfRange(tol));
    }
    let integrand = FactoredIntegrand::new(f, n)?;
    integrand.integrate(tol, opts.max_level)
}

struct FactoredIntegrand {
    scale: f64,
    /// Ascending real roots.
    roots: Vec<f64>,
    /// `2m/n` for each root.
    root_pow: Vec<f64>,
    /// Deflated factors (highest degree first) with their exponent `2i/n`.
    smooth: Vec<(Vec<f64>, f64)>,
}

impl FactoredIntegrand {
    fn new(f: &Polynomial, n: usize) -> Result<Self> {
        let (lead, factors) = f.square_free_decomposition()?;
        let iso = isolate(f)?;
        let expo = 2.0 / n as f64;

        let mut roots = Vec::with_capacity(iso.len());
        let mut root_pow = Vec::with_capacity(iso.len());
        let mut by_factor: Vec<Vec<f64>> = vec![Vec::new(); factors.len()];
        for (iv, &m) in iso.intervals.iter().zip(&iso.multiplicities) {
            let scale = to_f64(&iv.lo).abs().max(to_f64(&iv.hi).abs()).max(1.0);
            let r = refine(&factors[m - 1], iv, ROOT_EPS * scale)?;
            if 2 * m >= n {
                return Err(Error::RepeatedRootDivergence {
                    root: r,
                    multiplicity: m,
                    half: n as f64 / 2.0,
                });
            }
            roots.push(r);
            root_pow.push(expo * m as f64);
            by_factor[m - 1].push(r);
        }

        let smooth = factors
            .iter()
            .zip(by_factor)
            .enumerate()
            .filter_map(|(i, (p, rs))| {
                let q = deflate(p.to_f64_coeffs(), &rs);
                (q.len() > 1).then(|| (q, expo * (i + 1) as f64))
            })
            .collect();

        Ok(Self {
            scale: to_f64(&lead).abs().powf(-expo),
            roots,
            root_pow,
            smooth,
        })
    }

    fn interior(&self, x: f64, da: f64, db: f64, left: Option<usize>, right: Option<usize>) -> f64 {
        let mut v = self.scale;
        for (k, (&r, &pw)) in self.roots.iter().zip(&self.root_pow).enumerate() {
            let d = if left == Some(k) {
                da
            } else if right == Some(k) {
                db
            } else {
                (x - r).abs()
            };
            v *= d.powf(-pw);
        }
        for (q, pw) in &self.smooth {
            v *= horner_f64(q, x).abs().powf(-pw);
        }
        v
    }

    /// Tail integrand in `t ∈ (0, 1]`; `side` is `+1` for `[L, ∞)`.
    fn tail(&self, t: f64, shift: f64, side: f64) -> f64 {
        let den = 1.0 + shift * t;
        let u = side * t / den;
        let mut v = self.scale / (den * den);
        for (&r, &pw) in self.roots.iter().zip(&self.root_pow) {
            v *= (1.0 - r * u).abs().powf(-pw);
        }
        for (q, pw) in &self.smooth {
            let rev = q.iter().rev().fold(0.0, |acc, &c| acc * u + c);
            v *= rev.abs().powf(-pw);
        }
        v
    }

    fn integrate(&self, tol: f64, max_level: usize) -> Result<IntegralResult> {
        let edge = self.roots.iter().fold(0.0f64, |m, r| m.max(r.abs())) + 1.0;
        let shift = edge - 1.0;

        // Breakpoints with the index of the root sitting there, if any.
        let mut points: Vec<(f64, Option<usize>)> = vec![(-edge, None)];
        points.extend(self.roots.iter().enumerate().map(|(k, &r)| (r, Some(k))));
        points.push((edge, None));

        let pieces = points.len() - 1 + 2;
        let piece_tol = tol / pieces as f64;

        let mut value = 0.0;
        let mut error = 0.0;
        let mut levels_used = 0;
        let mut converged = true;
        let mut account = |est: super::QuadEstimate| {
            converged &= est.error <= piece_tol * est.value.abs().max(1.0);
            value += est.value;
            error += est.error;
            levels_used = levels_used.max(est.level);
        };

        account(integrate_levels(
            &|_, t, _| self.tail(t, shift, -1.0),
            0.0,
            1.0,
            piece_tol,
            max_level,
        )?);
        for w in points.windows(2) {
            let ((a, left), (b, right)) = (w[0], w[1]);
            account(integrate_levels(
                &|x, da, db| self.interior(x, da, db, left, right),
                a,
                b,
                piece_tol,
                max_level,
            )?);
        }
        account(integrate_levels(
            &|_, t, _| self.tail(t, shift, 1.0),
            0.0,
            1.0,
            piece_tol,
            max_level,
        )?);

        if !converged || !value.is_finite() {
            return Err(Error::ToleranceNotReached {
                value,
                abs_error_estimate: error,
                levels_used,
                pieces,
            });
        }
        Ok(IntegralResult {
            value,
            abs_error_estimate: error,
            levels_used,
            pieces,
        })
    }
}

/// Synthetic division by `(x − r)` for each root, smallest magnitude first;
/// remainders are dropped.
fn deflate(mut coeffs: Vec<f64>, roots: &[f64]) -> Vec<f64> {
    let mut order: Vec<f64> = roots.to_vec();
    order.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    for r in order {
        let mut q = Vec::with_capacity(coeffs.len() - 1);
        let mut acc = 0.0;
        for &c in &coeffs[..coeffs.len() - 1] {
            acc = acc * r + c;
            q.push(acc);
        }
        coeffs = q;
    }
    coeffs
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianCheck {
    pub numeric: f64,
    pub closed_form: f64,
    pub abs_error_estimate: f64,
}

/// `∫_R dx / (ax² + bx + c)` by the same engine, against `2π/√(4ac − b²)`.
pub fn gaussian_check(a: f64, b: f64, c: f64) -> Result<GaussianCheck> {
    let disc = b * b - 4.0 * a * c;
    if a.is_nan() || a <= 0.0 || disc.is_nan() || disc >= 0.0 || !b.is_finite() || !c.is_finite() {
        return Err(Error::Precondition(format!(
            "need a > 0 and b^2 - 4ac < 0, got a={a}, b={b}, c={c}"
        )));
    }
    let f = Polynomial::new(vec![from_f64(a), from_f64(b), from_f64(c)])?;
    let res = engine(&f, 2, 1e-12, &QuadratureOptions::default())?;
    Ok(GaussianCheck {
        numeric: res.value,
        closed_form: 2.0 * PI / (-disc).sqrt(),
        abs_error_estimate: res.abs_error_estimate,
    })
}
