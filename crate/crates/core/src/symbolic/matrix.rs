use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::SymPoly;
use crate::{Error, Result};

/// Row-major matrix of [`SymPoly`] entries over a common variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<SymPoly>,
}

impl SymMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        Self {
            rows,
            cols,
            nvars,
            entries: vec![SymPoly::zero(nvars); rows * cols],
        }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<SymPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let entries: Vec<SymPoly> = rows.into_iter().flatten().collect();
        if entries.len() != r * c {
            return Err(Error::ShapeMismatch {
                rows: r,
                cols: c,
                entries: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|e| e.nvars() != nvars) {
            return Err(Error::VariableCountMismatch {
                left: nvars,
                right: bad.nvars(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            nvars,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &SymPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SymPoly) {
        assert_eq!(v.nvars(), self.nvars);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[SymPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Fully expanded determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every division by the previous pivot is exact over `Z[a0..an]`, so
    /// entries stay polynomials throughout. Rows below the pivot are updated
    /// in parallel; each row's update only reads the pivot row, so the result
    /// does not depend on scheduling.
    pub fn determinant(&self) -> Result<SymPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(SymPoly::constant(self.nvars, BigInt::one()));
        }
        let mut a: Vec<Vec<SymPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = SymPoly::constant(self.nvars, BigInt::one());
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(SymPoly::zero(self.nvars)),
                }
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            bottom.par_iter_mut().try_for_each(|row| -> Result<()> {
                for j in k + 1..n {
                    let cross = &(&pivot_row[k] * &row[j]) - &(&row[k] * &pivot_row[j]);
                    row[j] = cross.div_exact(&prev)?;
                }
                row[k] = SymPoly::zero(pivot_row[k].nvars());
                Ok(())
            })?;
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -&det } else { det })
    }
}
