//! Gamma and Beta functions and the closed-form constants of the cubic
//! integral.

use std::f64::consts::{E, PI};

use serde::Serialize;

use crate::quadrature::{tanh_sinh_endpoints, DEFAULT_MAX_LEVEL};
use crate::{Error, Result};

// Lanczos approximation with the coefficient set of G. R. Pugh, "An Analysis
// of the Lanczos Gamma Approximation" (2004), p. 116, as tabulated in statrs.
const LANCZOS_R: f64 = 10.900511;

#[allow(clippy::excessive_precision)]
const LANCZOS_DK: [f64; 11] = [
    2.485_740_891_387_535_655_46e-5,
    1.051_423_785_817_219_742_10,
    -3.456_870_972_220_162_354_69,
    4.512_277_094_668_948_237_00,
    -2.982_852_253_235_766_556_21,
    1.056_397_115_771_267_130_77,
    -1.954_287_731_916_458_695_83e-1,
    1.709_705_434_044_412_243_07e-2,
    -5.719_261_174_043_057_812_83e-4,
    4.633_994_733_599_056_367_08e-6,
    -2.719_949_084_886_077_039_10e-9,
];

/// `2·sqrt(e/π)`.
const TWO_SQRT_E_OVER_PI: f64 = 1.860_382_734_205_265_717_336_249_247_266_663_112_059_4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Lanczos,
    Reflection,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecialValue {
    pub value: f64,
    pub method: Method,
}

fn lanczos_sum(x: f64) -> f64 {
    LANCZOS_DK
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_DK[0], |s, (i, &dk)| s + dk / (x + i as f64 - 1.0))
}

fn is_pole(p: f64) -> bool {
    p <= 0.0 && p == p.floor()
}

/// Lanczos for `x >= 0.5`; the power is split in two halves so that
/// arguments up to ~171 do not overflow before the final product.
fn gamma_lanczos(x: f64) -> f64 {
    let base = (x - 0.5 + LANCZOS_R) / E;
    let half = base.powf(0.5 * (x - 0.5));
    lanczos_sum(x) * TWO_SQRT_E_OVER_PI * half * half
}

pub fn gamma_value(p: f64) -> Result<SpecialValue> {
    if is_pole(p) || p.is_nan() {
        return Err(Error::GammaPole(p));
    }
    if p < 0.5 {
        let value = PI / ((PI * p).sin() * gamma_lanczos(1.0 - p));
        Ok(SpecialValue {
            value,
            method: Method::Reflection,
        })
    } else {
        Ok(SpecialValue {
            value: gamma_lanczos(p),
            method: Method::Lanczos,
        })
    }
}

pub fn gamma(p: f64) -> Result<f64> {
    gamma_value(p).map(|v| v.value)
}

/// `ln Γ(p)` for `p > 0`.
pub fn ln_gamma(p: f64) -> Result<f64> {
    if p <= 0.0 || p.is_nan() {
        return Err(Error::NonPositiveArgument(p));
    }
    if p < 0.5 {
        return Ok((PI / (PI * p).sin()).ln() - ln_gamma(1.0 - p)?);
    }
    Ok(
        lanczos_sum(p).ln()
            + TWO_SQRT_E_OVER_PI.ln()
            + (p - 0.5) * ((p - 0.5 + LANCZOS_R) / E).ln(),
    )
}

/// `B(p, q) = Γ(p)Γ(q)/Γ(p+q)`.
pub fn beta(p: f64, q: f64) -> Result<f64> {
    for v in [p, q] {
        if v.is_nan() || v <= 0.0 {
            return Err(Error::NonPositiveArgument(v));
        }
    }
    if p + q < 170.0 {
        Ok(gamma(p)? * gamma(q)? / gamma(p + q)?)
    } else {
        Ok((ln_gamma(p)? + ln_gamma(q)? - ln_gamma(p + q)?).exp())
    }
}

/// `B(p, q)` from the half-line form `∫_0^∞ x^(p−1) / (1+x)^(p+q) dx`.
///
/// Folding `[1, ∞)` onto `(0, 1]` with `x → 1/x` gives
/// `∫_0^1 (x^(p−1) + x^(q−1)) / (1+x)^(p+q) dx`, which tanh-sinh handles
/// with the singular endpoint at 0 evaluated from its exact distance.
pub fn beta_by_integral(p: f64, q: f64, tol: f64) -> Result<f64> {
    for v in [p, q] {
        if v.is_nan() || v <= 0.0 {
            return Err(Error::NonPositiveArgument(v));
        }
    }
    let integrand = |_x: f64, from_zero: f64, _to_one: f64| {
        let x = from_zero;
        (x.powf(p - 1.0) + x.powf(q - 1.0)) / (1.0 + x).powf(p + q)
    };
    let est = tanh_sinh_endpoints(integrand, 0.0, 1.0, tol, DEFAULT_MAX_LEVEL)?;
    Ok(est.value)
}

/// `C₋ = 2^(1/3) · B(1/2, 1/6)`, the constant for negative discriminant.
pub fn constant_c_minus() -> f64 {
    2f64.cbrt() * beta(0.5, 1.0 / 6.0).expect("positive arguments")
}

/// `C₊ = 3 · B(1/3, 1/3)`, the constant for positive discriminant.
pub fn constant_c_plus() -> f64 {
    3.0 * beta(1.0 / 3.0, 1.0 / 3.0).expect("positive arguments")
}

/// `|√3·B(1/3,1/3) − 2^(1/3)·B(1/2,1/6)| / C₋`, which should vanish since
/// `C₊ = √3·C₋`.
pub fn beta_identity_residual() -> f64 {
    let lhs = 3f64.sqrt() * beta(1.0 / 3.0, 1.0 / 3.0).expect("positive arguments");
    let rhs = 2f64.cbrt() * beta(0.5, 1.0 / 6.0).expect("positive arguments");
    (lhs - rhs).abs() / constant_c_minus()
}
