//! Exact dense linear algebra over the coefficient field: row reduction,
//! rank, nullspace, and linear solving. Used for tangent-space dimensions,
//! Hilbert-polynomial interpolation, and the brute-force degreewise
//! membership oracle that cross-checks division by standard bases.

use super::coeff::{Coeff, CoefficientField};
use crate::Result;

#[derive(Debug, Clone)]
pub struct CMatrix {
    field: CoefficientField,
    rows: usize,
    cols: usize,
    /// Row-major storage.
    entries: Vec<Coeff>,
}

impl CMatrix {
    pub fn zero(field: CoefficientField, rows: usize, cols: usize) -> Self {
        let entries = (0..rows * cols).map(|_| field.zero()).collect();
        CMatrix { field, rows, cols, entries }
    }

    pub fn from_rows(field: CoefficientField, rows: Vec<Vec<Coeff>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r);
        }
        CMatrix { field, rows: nrows, cols: ncols, entries }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coeff {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.entries[r * self.cols + c] = v;
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// column of each pivot row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // Find a nonzero entry in this column at or below pivot_row.
            let mut found = None;
            for r in pivot_row..self.rows {
                if !f.is_zero(self.get(r, col)) {
                    found = Some(r);
                    break;
                }
            }
            let Some(r0) = found else { continue };
            self.swap_rows(pivot_row, r0);
            // Normalize the pivot row.
            let inv = f
                .inv(self.get(pivot_row, col))
                .expect("pivot entry is nonzero");
            for c in col..self.cols {
                let v = f.mul(self.get(pivot_row, c), &inv);
                self.set(pivot_row, c, v);
            }
            // Eliminate the column everywhere else.
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for c in col..self.cols {
                    let sub = f.mul(self.get(pivot_row, c), &factor);
                    let v = f.sub(self.get(r, c), &sub);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut copy = self.clone();
        copy.rref().len()
    }

    /// Basis of the right nullspace (kernel of `self` as a map on column
    /// vectors), one Vec per basis vector, in the deterministic order of
    /// free columns.
    pub fn nullspace(&self) -> Vec<Vec<Coeff>> {
        let f = self.field;
        let mut copy = self.clone();
        let pivots = copy.rref();
        let pivot_set: Vec<Option<usize>> = {
            // pivot_set[col] = Some(pivot_row) when col is a pivot column.
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec: Vec<Coeff> = (0..self.cols).map(|_| f.zero()).collect();
            vec[free] = f.one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    // x_col = -entry(row, free) for the unit free variable.
                    vec[col] = f.neg(copy.get(*row, free));
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Solves `self * x = rhs` (one solution, or None when inconsistent).
    pub fn solve(&self, rhs: &[Coeff]) -> Option<Vec<Coeff>> {
        assert_eq!(rhs.len(), self.rows);
        let f = self.field;
        let mut aug = CMatrix::zero(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // A pivot in the augmented column: inconsistent.
        }
        let mut x: Vec<Coeff> = (0..self.cols).map(|_| f.zero()).collect();
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Evaluates the unique interpolating polynomial through the exact points
/// `(xs[i], ys[i])` and returns its coefficients in ascending powers,
/// trailing zeros trimmed. Fails only on repeated abscissae.
pub fn interpolate(
    field: CoefficientField,
    xs: &[Coeff],
    ys: &[Coeff],
) -> Result<Vec<Coeff>> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    // Vandermonde solve: small n (Hilbert polynomials have degree <= 3 here).
    let mut m = CMatrix::zero(field, n, n);
    for r in 0..n {
        let mut p = field.one();
        for c in 0..n {
            m.set(r, c, p.clone());
            p = field.mul(&p, &xs[r]);
        }
    }
    let coeffs = m
        .solve(ys)
        .ok_or(crate::CaError::Invalid("interpolation points are inconsistent".into()))?;
    let mut coeffs = coeffs;
    while coeffs.len() > 1 && field.is_zero(coeffs.last().unwrap()) {
        coeffs.pop();
    }
    Ok(coeffs)
}
