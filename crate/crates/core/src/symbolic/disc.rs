//! The general discriminant `D = (−1)^(n(n−1)/2) R(f, f′) / a0` expanded
//! over the coefficient variables.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{Monomial, SymMatrix, SymPoly};
use crate::{Error, Result};

/// Default upper bound on `n` for [`sym_discriminant`]. Memory, not
/// correctness, is what grows past it.
pub const DEFAULT_DEGREE_CAP: usize = 6;

/// Sylvester matrix of `f = Σ a_k x^(n−k)` and `f′` over `a0..an`: `n − 1`
/// shifted rows of `(a0, ..., an)` then `n` shifted rows of
/// `(n·a0, (n−1)·a1, ..., a_(n−1))`.
pub fn sym_sylvester(n: usize) -> Result<SymMatrix> {
    if n < 2 {
        return Err(Error::BadDegree {
            found: n,
            expected: ">= 2".into(),
        });
    }
    let nvars = n + 1;
    let size = 2 * n - 1;
    let mut m = SymMatrix::zeros(size, size, nvars);
    for i in 0..n - 1 {
        for k in 0..=n {
            m.set(i, i + k, SymPoly::var(nvars, k));
        }
    }
    for i in 0..n {
        for k in 0..n {
            let entry = SymPoly::var(nvars, k).scale(&BigInt::from(n - k));
            m.set(n - 1 + i, i + k, entry);
        }
    }
    Ok(m)
}

pub fn sym_discriminant(n: usize) -> Result<SymPoly> {
    sym_discriminant_capped(n, DEFAULT_DEGREE_CAP)
}

pub fn sym_discriminant_capped(n: usize, cap: usize) -> Result<SymPoly> {
    if n > cap {
        return Err(Error::BadDegree {
            found: n,
            expected: format!("<= {cap} (configured cap)"),
        });
    }
    let r = sym_sylvester(n)?.determinant()?;
    let d = r.div_exact(&SymPoly::var(n + 1, 0))?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -&d } else { d })
}

/// Exact substitution `a_k = values[k]`.
pub fn evaluate(p: &SymPoly, values: &[BigRational]) -> Result<BigRational> {
    if values.len() != p.nvars() {
        return Err(Error::VariableCountMismatch {
            left: p.nvars(),
            right: values.len(),
        });
    }
    let mut acc = BigRational::zero();
    for (m, c) in p.iter() {
        let mut t = BigRational::from_integer(c.clone());
        for (v, &e) in values.iter().zip(&m.0) {
            for _ in 0..e {
                t *= v;
            }
        }
        acc += t;
    }
    Ok(acc)
}

/// Term-by-term comparison; empty means equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    /// Monomials present only in the computed polynomial.
    pub only_in_computed: Vec<(Vec<u32>, String)>,
    /// Monomials present only in the reference.
    pub only_in_reference: Vec<(Vec<u32>, String)>,
    /// `(exponents, computed, reference)` for shared monomials whose
    /// coefficients differ.
    pub mismatched: Vec<(Vec<u32>, String, String)>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.only_in_computed.is_empty()
            && self.only_in_reference.is_empty()
            && self.mismatched.is_empty()
    }

    pub fn len(&self) -> usize {
        self.only_in_computed.len() + self.only_in_reference.len() + self.mismatched.len()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "no differences");
        }
        for (e, c) in &self.only_in_computed {
            writeln!(f, "only computed:  {c} * {}", Monomial(e.clone()))?;
        }
        for (e, c) in &self.only_in_reference {
            writeln!(f, "only reference: {c} * {}", Monomial(e.clone()))?;
        }
        for (e, a, b) in &self.mismatched {
            writeln!(
                f,
                "mismatch at {}: computed {a}, reference {b}",
                Monomial(e.clone())
            )?;
        }
        Ok(())
    }
}

pub fn compare_to_reference(p: &SymPoly, reference: &SymPoly) -> Result<DiffReport> {
    if p.nvars() != reference.nvars() {
        return Err(Error::VariableCountMismatch {
            left: p.nvars(),
            right: reference.nvars(),
        });
    }
    let mut report = DiffReport::default();
    for (m, c) in p.iter() {
        let r = reference.coeff(&m.0);
        if r.is_zero() {
            report.only_in_computed.push((m.0.clone(), c.to_string()));
        } else if &r != c {
            report
                .mismatched
                .push((m.0.clone(), c.to_string(), r.to_string()));
        }
    }
    for (m, c) in reference.iter() {
        if p.coeff(&m.0).is_zero() {
            report.only_in_reference.push((m.0.clone(), c.to_string()));
        }
    }
    Ok(report)
}
