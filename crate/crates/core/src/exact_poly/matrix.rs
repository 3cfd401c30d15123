use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::format_rational;
use crate::{Error, Result};

/// Row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                entries: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch {
                rows: r,
                cols: c,
                entries: rows.iter().map(Vec::len).sum(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Exact determinant.
    ///
    /// Each row is scaled by the lcm of its denominators, the resulting
    /// integer matrix goes through Bareiss elimination (every division is
    /// exact), and the row scalings are divided back out at the end.
    pub fn determinant(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigRational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                scale *= &l;
                row.iter()
                    .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect();
        Ok(BigRational::new(bareiss(&mut a), scale))
    }
}

/// Fraction-free Gaussian elimination; destroys `a`.
pub(crate) fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Laplace expansion along the first row; exponential, test-only.
    fn cofactor_det(m: &[Vec<BigRational>]) -> BigRational {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigRational::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigRational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn identity_and_small_cases() {
        assert_eq!(RationalMatrix::identity(3).determinant().unwrap(), r(1, 1));
        let m = RationalMatrix::from_rows(vec![vec![r(1, 1), r(1, 1)], vec![r(1, 1), r(-1, 1)]])
            .unwrap();
        assert_eq!(m.determinant().unwrap(), r(-2, 1));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = RationalMatrix::zeros(2, 3);
        assert_eq!(m.determinant(), Err(Error::NotSquare { rows: 2, cols: 3 }));
        assert!(RationalMatrix::new(2, 2, vec![r(1, 1)]).is_err());
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let m = RationalMatrix::from_rows(vec![
            vec![r(0, 1), r(2, 1), r(1, 1)],
            vec![r(1, 1), r(0, 1), r(3, 1)],
            vec![r(4, 1), r(1, 1), r(0, 1)],
        ])
        .unwrap();
        let rows: Vec<Vec<BigRational>> = (0..3).map(|i| m.row(i).to_vec()).collect();
        assert_eq!(m.determinant().unwrap(), cofactor_det(&rows));
    }

    #[test]
    fn random_rational_6x6_matches_cofactor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let rows: Vec<Vec<BigRational>> = (0..6)
                .map(|_| {
                    (0..6)
                        .map(|_| {
                            if rng.gen_bool(0.2) {
                                BigRational::zero()
                            } else {
                                r(rng.gen_range(-20..=20), rng.gen_range(1..=9))
                            }
                        })
                        .collect()
                })
                .collect();
            let m = RationalMatrix::from_rows(rows.clone()).unwrap();
            assert_eq!(m.determinant().unwrap(), cofactor_det(&rows));
        }
    }

    #[test]
    fn singular_matrix_has_zero_determinant() {
        let m = RationalMatrix::from_rows(vec![vec![r(1, 2), r(1, 3)], vec![r(3, 2), r(1, 1)]])
            .unwrap();
        assert!(m.determinant().unwrap().is_zero());
    }
}
