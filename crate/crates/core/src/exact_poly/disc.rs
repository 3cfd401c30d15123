//! Resultants, discriminants and the symmetric-function identities.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{Polynomial, RationalMatrix};
use crate::rational::{self, int};
use crate::{Error, Result};

/// The quantities `A = b² − 3ac`, `B = bc − 9ad`, `C = c² − 3bd` of a cubic
/// `ax³ + bx² + cx + d`. The discriminant of `AX² + BX + C` is `−3` times
/// the discriminant of the cubic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubicData {
    #[serde(serialize_with = "ser_rational")]
    pub a: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub b: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub c: BigRational,
}

fn ser_rational<S: serde::Serializer>(
    r: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational::format_rational(r))
}

impl CubicData {
    /// `B² − 4AC`.
    pub fn quadratic_discriminant(&self) -> BigRational {
        &self.b * &self.b - int(4) * &self.a * &self.c
    }
}

/// Sylvester matrix of `f` (degree n) and `g` (degree m): `m` shifted rows of
/// `f`'s coefficients followed by `n` shifted rows of `g`'s.
pub fn sylvester_matrix(f: &Polynomial, g: &Polynomial) -> Result<RationalMatrix> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (n, m) = (f.degree(), g.degree());
    for d in [n, m] {
        if d < 1 {
            return Err(Error::BadDegree {
                found: d,
                expected: ">= 1".into(),
            });
        }
    }
    let size = n + m;
    let mut s = RationalMatrix::zeros(size, size);
    for i in 0..m {
        for (j, c) in f.coeffs().iter().enumerate() {
            s.set(i, i + j, c.clone());
        }
    }
    for i in 0..n {
        for (j, c) in g.coeffs().iter().enumerate() {
            s.set(m + i, i + j, c.clone());
        }
    }
    Ok(s)
}

pub fn resultant(f: &Polynomial, g: &Polynomial) -> Result<BigRational> {
    sylvester_matrix(f, g)?.determinant()
}

/// `D = (−1)^(n(n−1)/2) · R(f, f′) / a0`.
pub fn discriminant(f: &Polynomial) -> Result<BigRational> {
    let n = f.degree();
    if f.is_zero() || n < 2 {
        return Err(Error::BadDegree {
            found: n,
            expected: ">= 2".into(),
        });
    }
    let r = resultant(f, &f.derivative())? / f.leading();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

pub fn cubic_data(f: &Polynomial) -> Result<CubicData> {
    if f.is_zero() || f.degree() != 3 {
        return Err(Error::BadDegree {
            found: f.degree(),
            expected: "3".into(),
        });
    }
    let [a, b, c, d] = [0, 1, 2, 3].map(|k| &f.coeffs()[k]);
    Ok(CubicData {
        a: b * b - int(3) * a * c,
        b: b * c - int(9) * a * d,
        c: c * c - int(3) * b * d,
    })
}

/// Power sums `p_k = Σ r_i^k` of the (complex) roots, `k = 0..=k_max`,
/// from Newton's identities. No root is ever computed.
pub fn power_sums(f: &Polynomial, k_max: usize) -> Result<Vec<BigRational>> {
    if f.is_zero() {
        return Err(Error::ZeroLeadingCoefficient(0));
    }
    let n = f.degree();
    // Monic coefficients c_1..c_n of x^n + c_1 x^(n-1) + ... + c_n.
    let c: Vec<BigRational> = f.coeffs().iter().map(|a| a / f.leading()).collect();
    let mut p = Vec::with_capacity(k_max + 1);
    p.push(int(n as i64));
    for k in 1..=k_max {
        let mut s = BigRational::zero();
        for i in 1..=k.min(n) {
            if i < k {
                s += &c[i] * &p[k - i];
            } else {
                s += &c[i] * int(k as i64);
            }
        }
        p.push(-s);
    }
    Ok(p)
}

/// `Δ² = ∏_{i<j} (r_i − r_j)²` as the Hankel determinant `det[p_{i+j}]`,
/// which equals `|V Vᵀ|` for the Vandermonde matrix `V` of the roots.
pub fn delta_squared(f: &Polynomial) -> Result<BigRational> {
    let n = f.degree();
    if f.is_zero() || n < 2 {
        return Err(Error::BadDegree {
            found: n,
            expected: ">= 2".into(),
        });
    }
    let p = power_sums(f, 2 * n - 2)?;
    let entries = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| p[i + j].clone())
        .collect();
    RationalMatrix::new(n, n, entries)?.determinant()
}

/// `a0^(2n−2)`, the factor linking [`delta_squared`] to [`discriminant`].
pub fn lead_power(f: &Polynomial) -> BigRational {
    let n = f.degree();
    (0..2 * n - 2).fold(BigRational::one(), |acc, _| acc * f.leading())
}
