//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored highest degree first: `[a0, a1, ..., an]` is
//! `a0·x^n + a1·x^(n-1) + ... + an`. A polynomial built from user input keeps
//! its declared degree; a zero leading coefficient is rejected rather than
//! trimmed, because the integral exponent `-2/n` depends on `n`.

mod disc;
mod matrix;

pub use disc::{
    cubic_data, delta_squared, discriminant, lead_power, power_sums, resultant, sylvester_matrix,
    CubicData,
};
pub use matrix::RationalMatrix;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{self, format_rational, parse_rational};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    /// Builds a polynomial of declared degree `coeffs.len() - 1`.
    ///
    /// A single `[0]` (or an empty list) is the zero polynomial; any other
    /// list must have a nonzero leading coefficient.
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() || (coeffs.len() == 1 && coeffs[0].is_zero()) {
            return Ok(Self::zero());
        }
        if coeffs[0].is_zero() {
            return Err(Error::ZeroLeadingCoefficient(coeffs.len() - 1));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn parse(coeffs: &[impl AsRef<str>]) -> Result<Self> {
        let parsed = coeffs
            .iter()
            .map(|c| parse_rational(c.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parsed)
    }

    /// Drops leading zeros. Used for results of arithmetic, where the degree
    /// is whatever it comes out as.
    pub(crate) fn trimmed(mut coeffs: Vec<BigRational>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(),
            Some(i) => {
                coeffs.drain(..i);
                Self { coeffs }
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self { coeffs: vec![c] }
    }

    /// The monic linear polynomial `x - r`.
    pub fn linear_root(r: BigRational) -> Self {
        Self {
            coeffs: vec![BigRational::one(), -r],
        }
    }

    /// `∏ (x - r)` over the given roots, times `lead`.
    pub fn from_roots(lead: BigRational, roots: &[BigRational]) -> Result<Self> {
        if lead.is_zero() {
            return Err(Error::ZeroLeadingCoefficient(roots.len()));
        }
        let p = roots.iter().fold(Self::constant(lead), |acc, r| {
            &acc * &Self::linear_root(r.clone())
        });
        Ok(p)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> &BigRational {
        &self.coeffs[0]
    }

    /// Constant term `an`.
    pub fn trailing(&self) -> &BigRational {
        &self.coeffs[self.degree()]
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &BigRational) -> i32 {
        rational::sign(&self.eval(x))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational::to_f64).collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        horner_f64(&self.to_f64_coeffs(), x)
    }

    pub fn derivative(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::zero();
        }
        let coeffs = self.coeffs[..n]
            .iter()
            .enumerate()
            .map(|(k, a)| a * rational::int((n - k) as i64))
            .collect();
        Self::trimmed(coeffs)
    }

    pub fn scale(&self, lambda: &BigRational) -> Self {
        Self::trimmed(self.coeffs.iter().map(|c| c * lambda).collect())
    }

    /// Monic associate; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading().clone();
        Self::trimmed(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    /// `f(x + t)` by repeated synthetic division (Taylor shift).
    pub fn translate(&self, t: &BigRational) -> Self {
        let mut c = self.coeffs.clone();
        let n = self.degree();
        for i in 0..n {
            for j in 1..=(n - i) {
                let prev = c[j - 1].clone();
                c[j] += prev * t;
            }
        }
        Self::trimmed(c)
    }

    /// `f(s·x)`.
    pub fn scale_x(&self, s: &BigRational) -> Self {
        let n = self.degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * rational::pow(s, n - k))
            .collect();
        Self::trimmed(coeffs)
    }

    /// `x^n · f(1/x)`: the coefficient list read backwards. Degree is kept
    /// only when the constant term is nonzero.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::trimmed(c)
    }

    /// Euclidean division over `Q`; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() < divisor.degree() || self.is_zero() {
            return Ok((Self::zero(), self.clone()));
        }
        let dn = divisor.degree();
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let qlen = self.degree() - dn + 1;
        let mut quot = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let q = &rem[i] / lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quot.push(q);
        }
        let rem = Self::trimmed(rem.split_off(qlen));
        Ok((Self::trimmed(quot), rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Rescales by a positive rational so the coefficients are coprime
    /// integers. Keeps coefficient growth in Euclid's algorithm in check
    /// without changing signs.
    pub(crate) fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c)).abs();
        Self::trimmed(
            ints.into_iter()
                .map(|c| BigRational::from_integer(c / &g))
                .collect(),
        )
    }

    /// Yun's square-free decomposition: `f = c · ∏ factors[i]^(i+1)` with
    /// each factor monic, square-free and pairwise coprime. Factors equal to
    /// one are kept so the index encodes the multiplicity.
    pub fn square_free_decomposition(&self) -> Result<(BigRational, Vec<Self>)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lead = self.leading().clone();
        if self.degree() == 0 {
            return Ok((lead, Vec::new()));
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.div_rem(&a)?.0;
        let c = df.div_rem(&a)?.0;
        let mut d = &c - &b.derivative();
        let mut factors = Vec::new();
        loop {
            let g = b.gcd(&d);
            factors.push(g.clone());
            b = b.div_rem(&g)?.0;
            if b.is_constant() {
                break;
            }
            let c = d.div_rem(&g)?.0;
            d = &c - &b.derivative();
        }
        while factors.last().is_some_and(Self::is_constant) {
            factors.pop();
        }
        Ok((lead, factors))
    }

    /// Square-free part `f / gcd(f, f')`, monic.
    pub fn square_free_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g)?.0.monic())
    }
}

pub(crate) fn horner_f64(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "Polynomial[{}]", parts.join(", "))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = n - k;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match e {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{e}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        Polynomial::parse(&strs).map_err(D::Error::custom)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[n - self.coeffs.len() + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[n - rhs.coeffs.len() + i] += c;
        }
        Polynomial::trimmed(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::trimmed(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::trimmed(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rejects_zero_leading_coefficient() {
        assert_eq!(
            Polynomial::from_i64(&[0, 1, 2]),
            Err(Error::ZeroLeadingCoefficient(2))
        );
        assert!(Polynomial::from_i64(&[0]).unwrap().is_zero());
    }

    #[test]
    fn derivative_of_cubic() {
        assert_eq!(p(&[1, 0, 1, 0]).derivative(), p(&[3, 0, 1]));
        assert!(p(&[5]).derivative().is_zero());
    }

    #[test]
    fn derivative_matches_central_difference() {
        let f = Polynomial::new(vec![q(3, 7), q(-2, 5), q(11, 3), q(1, 9)]).unwrap();
        let df = f.derivative();
        let fc = f.to_f64_coeffs();
        for &x0 in &[-1.3, 0.0, 0.4, 2.5] {
            let h = 1e-5;
            let fd = (horner_f64(&fc, x0 + h) - horner_f64(&fc, x0 - h)) / (2.0 * h);
            assert!((df.eval_f64(x0) - fd).abs() < 1e-7, "x0={x0}");
        }
    }

    #[test]
    fn translate_and_scale_agree_with_evaluation() {
        let f = p(&[2, -3, 0, 5]);
        let t = q(3, 2);
        let s = q(-2, 3);
        let ft = f.translate(&t);
        let fs = f.scale_x(&s);
        for x in [q(0, 1), q(1, 3), q(-7, 2)] {
            assert_eq!(ft.eval(&x), f.eval(&(&x + &t)));
            assert_eq!(fs.eval(&x), f.eval(&(&x * &s)));
        }
    }

    #[test]
    fn division_and_gcd() {
        let f = p(&[1, 0, -1]);
        let g = p(&[1, -1]);
        let (quot, rem) = f.div_rem(&g).unwrap();
        assert_eq!(quot, p(&[1, 1]));
        assert!(rem.is_zero());
        let h = p(&[1, -3, 2]);
        assert_eq!(f.gcd(&h), p(&[1, -1]));
        assert_eq!(f.div_rem(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn yun_decomposition_recovers_multiplicities() {
        // 2 (x - 1)^2 (x + 2) (x^2 + 1)^3
        let lin1 = p(&[1, -1]);
        let lin2 = p(&[1, 2]);
        let quad = p(&[1, 0, 1]);
        let f = &(&(&(&lin1 * &lin1) * &lin2) * &(&quad * &(&quad * &quad))) * &p(&[2]);
        let (c, factors) = f.square_free_decomposition().unwrap();
        assert_eq!(c, q(2, 1));
        assert_eq!(factors.len(), 3);
        assert_eq!(factors[0], lin2);
        assert_eq!(factors[1], lin1);
        assert_eq!(factors[2], quad);
        assert_eq!(f.square_free_part().unwrap(), &(&lin1 * &lin2) * &quad);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[1, 0, -1, 0]).to_string(), "x^3 - x");
        assert_eq!(p(&[-2, 3, 1]).to_string(), "-2*x^2 + 3*x + 1");
    }

    #[test]
    fn json_is_array_of_strings() {
        let f = Polynomial::new(vec![q(1, 2), q(0, 1), q(-3, 1)]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"["1/2","0","-3"]"#);
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Polynomial>(r#"["0","1"]"#).is_err());
    }
}
