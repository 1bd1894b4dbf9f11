//! Dense matrices of polynomials: products, transpose, determinants, and
//! the enumeration of k x k minors used for Fitting ideals.

use super::poly::{same_ring, Polynomial, Ring};
use crate::{CaError, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    /// Row-major storage, `entries[r * cols + c]`.
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(CaError::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            same_ring(e.ring(), ring)?;
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        let entries = (0..rows * cols).map(|_| Polynomial::zero(ring)).collect();
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(CaError::ShapeMismatch("ragged rows".into()));
            }
            entries.extend(row);
        }
        PolyMatrix::new(ring, nrows, ncols, entries)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Polynomial) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        same_ring(value.ring(), &self.ring).expect("entry from a different ring");
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        same_ring(&self.ring, &other.ring)?;
        if self.cols != other.rows {
            return Err(CaError::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(r, k).mul(other.get(k, c)));
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(&self.ring, self.rows, other.cols, entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Applies a map to every entry (e.g. reduction mod an ideal).
    pub fn map_entries<F>(&self, f: F) -> PolyMatrix
    where
        F: FnMut(&Polynomial) -> Polynomial,
    {
        let entries: Vec<Polynomial> = self.entries.iter().map(f).collect();
        for e in &entries {
            same_ring(e.ring(), &self.ring).expect("map changed the ring");
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Determinant of a square matrix by Laplace expansion along the first
    /// row. Matrices here are small (at most 6x6 in practice), so the
    /// factorial cost is irrelevant next to exactness.
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(CaError::ShapeMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(self.det_of(&(0..self.rows).collect::<Vec<_>>(), &(0..self.cols).collect::<Vec<_>>()))
    }

    fn det_of(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => Polynomial::one(&self.ring),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                let a = self.get(rows[0], cols[0]).mul(self.get(rows[1], cols[1]));
                let b = self.get(rows[0], cols[1]).mul(self.get(rows[1], cols[0]));
                a.sub(&b)
            }
            _ => {
                let mut acc = Polynomial::zero(&self.ring);
                let sub_rows: Vec<usize> = rows[1..].to_vec();
                for (j, &cj) in cols.iter().enumerate() {
                    let pivot = self.get(rows[0], cj);
                    if pivot.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &c)| c)
                        .collect();
                    let minor = self.det_of(&sub_rows, &sub_cols);
                    let signed = if j % 2 == 0 { minor } else { minor.neg() };
                    acc = acc.add(&pivot.mul(&signed));
                }
                acc
            }
        }
    }

    /// All k x k minors, enumerated over row subsets (outer) and column
    /// subsets (inner), each in lexicographic order of index sets. Signs
    /// follow the determinant of the selected submatrix as-is.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        if k == 0 || k > self.rows || k > self.cols {
            return Err(CaError::MinorSize { k, rows: self.rows, cols: self.cols });
        }
        let row_sets = subsets(self.rows, k);
        let col_sets = subsets(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.det_of(rs, cs));
            }
        }
        Ok(out)
    }
}

/// All k-element subsets of {0, .., n-1} in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for i in start..=(n - needed) {
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    if k <= n {
        rec(n, k, 0, &mut current, &mut out);
    }
    out
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
