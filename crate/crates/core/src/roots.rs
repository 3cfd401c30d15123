//! Certified real-root counting, isolation and refinement.
//!
//! Counting uses Sturm sequences evaluated in exact rational arithmetic, so
//! the number of distinct real roots in an interval is never a floating-point
//! judgement. Isolation runs on the square-free part; multiplicities come
//! from the square-free decomposition.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exact_poly::{horner_f64, Polynomial};
use crate::rational::{self, format_rational, from_f64, int, to_f64};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Precondition(format!(
                "interval lower end {} exceeds upper end {}",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn from_i64(lo: i64, hi: i64) -> Result<Self> {
        Self::new(int(lo), int(hi))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}]",
            format_rational(&self.lo),
            format_rational(&self.hi)
        )
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.lo), format_rational(&self.hi)].serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationResult {
    /// Sorted, pairwise disjoint; each holds exactly one distinct real root.
    pub intervals: Vec<Interval>,
    /// Multiplicity in `f` of the root inside the matching interval.
    pub multiplicities: Vec<usize>,
    /// `gcd(f, f')` is nonconstant, i.e. `f` has some repeated (possibly
    /// complex) root; for degree >= 2 this is `discriminant(f) == 0`.
    pub multiplicity_flag: bool,
}

impl IsolationResult {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// `f, f', -rem(f, f'), ...` up to the last nonzero remainder.
pub fn sturm_sequence(f: &Polynomial) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![f.clone()];
    let mut next = f.derivative();
    while !next.is_zero() {
        let prev = chain.last().expect("nonempty");
        let (_, rem) = prev.div_rem(&next)?;
        chain.push(next);
        next = -&rem;
    }
    Ok(chain)
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[Polynomial], x: &BigRational) -> usize {
    variations(chain.iter().map(|p| p.sign_at(x)))
}

fn variations_at_infinity(chain: &[Polynomial], positive: bool) -> usize {
    variations(chain.iter().map(|p| {
        let s = rational::sign(p.leading());
        if positive || p.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }))
}

/// Number of distinct real roots of `f` in `(lo, hi]`.
pub fn count_roots(f: &Polynomial, iv: &Interval) -> Result<usize> {
    let chain = sturm_sequence(f)?;
    count_with_chain(f, &chain, iv)
}

fn count_with_chain(f: &Polynomial, chain: &[Polynomial], iv: &Interval) -> Result<usize> {
    for end in [&iv.lo, &iv.hi] {
        if f.eval(end).is_zero() {
            return Err(Error::EndpointIsRoot(format_rational(end)));
        }
    }
    Ok(variations_at(chain, &iv.lo).saturating_sub(variations_at(chain, &iv.hi)))
}

/// Distinct real roots on the whole line.
pub fn count_real_roots(f: &Polynomial) -> Result<usize> {
    let chain = sturm_sequence(f)?;
    Ok(variations_at_infinity(&chain, false).saturating_sub(variations_at_infinity(&chain, true)))
}

/// Cauchy bound `1 + max |a_k / a0|`; every root has modulus strictly below it.
pub fn cauchy_bound(f: &Polynomial) -> BigRational {
    let lead = f.leading();
    let max = f.coeffs()[1..]
        .iter()
        .map(|c| (c / lead).abs())
        .fold(BigRational::zero(), |m, c| if c > m { c } else { m });
    max + int(1)
}

/// Splits near the midpoint, moving off roots of `f` by thirds of the width.
fn split_point(f: &Polynomial, iv: &Interval) -> BigRational {
    let mid = iv.midpoint();
    let mut step = iv.width() / int(3);
    let mut c = mid.clone();
    while f.eval(&c).is_zero() {
        c = &mid - &step;
        step /= int(2);
    }
    c
}

pub fn isolate(f: &Polynomial) -> Result<IsolationResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(Error::BadDegree {
            found: 0,
            expected: ">= 1".into(),
        });
    }
    let (_, factors) = f.square_free_decomposition()?;
    let multiplicity_flag = factors.iter().skip(1).any(|p| !p.is_constant());
    let sqf = factors
        .iter()
        .fold(Polynomial::constant(int(1)), |acc, p| &acc * p);
    let chain = sturm_sequence(&sqf)?;

    let bound = cauchy_bound(&sqf);
    let start = Interval::new(-bound.clone(), bound)?;
    let total = count_with_chain(&sqf, &chain, &start)?;

    let mut found = Vec::new();
    let mut stack = vec![(start, total)];
    while let Some((iv, count)) = stack.pop() {
        match count {
            0 => {}
            1 => found.push(iv),
            _ => {
                let m = split_point(&sqf, &iv);
                let left = Interval::new(iv.lo.clone(), m.clone())?;
                let right = Interval::new(m, iv.hi.clone())?;
                let cl = count_with_chain(&sqf, &chain, &left)?;
                stack.push((right, count - cl));
                stack.push((left, cl));
            }
        }
    }
    found.sort_by(|a, b| a.lo.cmp(&b.lo));

    let chains = factors
        .iter()
        .map(|p| {
            if p.is_constant() {
                Ok(Vec::new())
            } else {
                sturm_sequence(p)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let multiplicities = found
        .iter()
        .map(|iv| {
            for (k, (p, ch)) in factors.iter().zip(&chains).enumerate() {
                if !ch.is_empty() && count_with_chain(p, ch, iv)? == 1 {
                    return Ok(k + 1);
                }
            }
            Err(Error::Precondition(
                "root not attributed to any square-free factor".into(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(IsolationResult {
        intervals: found,
        multiplicities,
        multiplicity_flag,
    })
}

const REFINE_MAX_BISECTIONS: usize = 4000;

/// Approximates the simple root of `f` inside `iv` to within `eps`.
///
/// Exact bisection narrows the bracket, bracketed Newton in `f64` polishes
/// it, and the result is certified by an exact sign change on
/// `[x - eps, x + eps]`. If certification fails the exact bisection is
/// continued down to width `eps`.
pub fn refine(f: &Polynomial, iv: &Interval, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::Precondition(format!(
            "eps must be positive, got {eps}"
        )));
    }
    if iv.is_point() {
        return if f.eval(&iv.lo).is_zero() {
            Ok(to_f64(&iv.lo))
        } else {
            Err(not_isolating(iv))
        };
    }
    let s_lo = f.sign_at(&iv.lo);
    let s_hi = f.sign_at(&iv.hi);
    if s_lo * s_hi >= 0 || count_roots(f, iv)? != 1 {
        return Err(not_isolating(iv));
    }
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();

    // Exact bisection until the bracket is small relative to its position.
    let mut iterations = 0;
    let coarse = 1e-6;
    while to_f64(&(&hi - &lo)) > coarse * to_f64(&lo.abs().max(hi.abs())).max(1.0) {
        bisect_step(f, s_lo, &mut lo, &mut hi);
        iterations += 1;
    }

    let coeffs = f.to_f64_coeffs();
    let dcoeffs = f.derivative().to_f64_coeffs();
    let (mut a, mut b) = (to_f64(&lo), to_f64(&hi));
    let mut x = 0.5 * (a + b);
    for _ in 0..200 {
        let fx = horner_f64(&coeffs, x);
        if fx == 0.0 {
            break;
        }
        if (fx > 0.0) == (s_lo > 0) {
            a = x;
        } else {
            b = x;
        }
        let dfx = horner_f64(&dcoeffs, x);
        let newton = x - fx / dfx;
        let next = if dfx != 0.0 && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
        if next == x {
            break;
        }
        let step = (next - x).abs();
        x = next;
        if step <= f64::EPSILON * x.abs() {
            break;
        }
    }

    let x_r = from_f64(x);
    let eps_r = from_f64(eps);
    let left = (&x_r - &eps_r).max(lo.clone());
    let right = (&x_r + &eps_r).min(hi.clone());
    if left <= right {
        let sl = f.sign_at(&left);
        let sr = f.sign_at(&right);
        if sl == 0 || sr == 0 || sl != sr {
            return Ok(x);
        }
    }

    // Certification failed: finish by exact bisection.
    let half_eps = &eps_r / int(2);
    loop {
        let mid = (&lo + &hi) / int(2);
        let mid_f = to_f64(&mid);
        let err = (&hi - &lo) / int(2) + (from_f64(mid_f) - &mid).abs();
        if err <= eps_r {
            return Ok(mid_f);
        }
        // Once the bracket is below eps/2 only the f64 rounding is left,
        // and that does not shrink any further.
        if (&hi - &lo) < half_eps || iterations >= REFINE_MAX_BISECTIONS {
            return Err(Error::RefineBudgetExceeded { eps, iterations });
        }
        bisect_step(f, s_lo, &mut lo, &mut hi);
        iterations += 1;
    }
}

fn bisect_step(f: &Polynomial, s_lo: i32, lo: &mut BigRational, hi: &mut BigRational) {
    let mid = (&*lo + &*hi) / int(2);
    let s = f.sign_at(&mid);
    if s == 0 {
        *lo = mid.clone();
        *hi = mid;
    } else if s == s_lo {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

fn not_isolating(iv: &Interval) -> Error {
    Error::NotIsolating {
        lo: format_rational(&iv.lo),
        hi: format_rational(&iv.hi),
    }
}

/// Real roots of `f` as `(approximation, multiplicity)`, ascending.
pub fn real_roots(f: &Polynomial, eps: f64) -> Result<Vec<(f64, usize)>> {
    let iso = isolate(f)?;
    let (_, factors) = f.square_free_decomposition()?;
    iso.intervals
        .iter()
        .zip(&iso.multiplicities)
        .map(|(iv, &m)| Ok((refine(&factors[m - 1], iv, eps)?, m)))
        .collect()
}
