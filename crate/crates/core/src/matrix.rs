//! Nonnegative `n×k` matrices whose columns generate a max cone.

use crate::error::{Error, Result};
use crate::vector::MaxVector;

/// An `n×k` matrix of finite nonnegative entries, stored column-major so
/// that generators (columns) are contiguous. `n ≥ 1`, `k ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorMatrix {
    rows: usize,
    data: Vec<f64>,
}

impl GeneratorMatrix {
    /// Builds a matrix from row-major data.
    pub fn from_row_major(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        if rows == 0 {
            return Err(Error::NoRows);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        for &value in data {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidEntry { value });
            }
        }
        let mut column_major = vec![0.0; data.len()];
        for r in 0..rows {
            for c in 0..cols {
                column_major[c * rows + r] = data[r * cols + c];
            }
        }
        Ok(Self {
            rows,
            data: column_major,
        })
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NoRows);
        }
        let k = rows[0].len();
        let mut flat = Vec::with_capacity(n * k);
        for row in rows {
            if row.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_row_major(n, k, &flat)
    }

    /// Builds a matrix from generator columns of length `n`.
    pub fn from_columns(n: usize, columns: &[MaxVector]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoRows);
        }
        let mut data = Vec::with_capacity(n * columns.len());
        for col in columns {
            if col.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: col.len(),
                });
            }
            data.extend(col.iter());
        }
        Ok(Self { rows: n, data })
    }

    /// The `n×n` identity over the semiring (standard basis as columns).
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoRows);
        }
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Ok(Self { rows: n, data })
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.data.len() / self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.data[col * self.rows + row]
    }

    /// Column `i` as a contiguous slice; O(1).
    pub fn col_slice(&self, i: usize) -> &[f64] {
        &self.data[i * self.rows..(i + 1) * self.rows]
    }

    /// Column `i` as an owned vector.
    pub fn column(&self, i: usize) -> MaxVector {
        MaxVector::from_raw(self.col_slice(i).to_vec())
    }

    pub fn columns(&self) -> impl Iterator<Item = &[f64]> + '_ {
        (0..self.num_cols()).map(|i| self.col_slice(i))
    }

    pub fn is_zero_column(&self, i: usize) -> bool {
        self.col_slice(i).iter().all(|&v| v == 0.0)
    }

    /// Largest entry; 0 for an empty or all-zero matrix.
    pub fn max_entry(&self) -> f64 {
        self.data.iter().copied().fold(0.0, f64::max)
    }

    /// The submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Self> {
        let k = self.num_cols();
        let mut data = Vec::with_capacity(cols.len() * self.rows);
        for &c in cols {
            if c >= k {
                return Err(Error::IndexOutOfRange { index: c, len: k });
            }
            data.extend_from_slice(self.col_slice(c));
        }
        Ok(Self {
            rows: self.rows,
            data,
        })
    }

    /// The matrix with column `i` deleted.
    pub fn without_column(&self, i: usize) -> Result<Self> {
        let k = self.num_cols();
        if i >= k {
            return Err(Error::IndexOutOfRange { index: i, len: k });
        }
        let kept: Vec<usize> = (0..k).filter(|&c| c != i).collect();
        self.select_columns(&kept)
    }

    /// Componentwise `⊕` of two matrices of the same shape.
    pub fn oplus(&self, other: &GeneratorMatrix) -> Result<GeneratorMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        if self.num_cols() != other.num_cols() {
            return Err(Error::DimensionMismatch {
                expected: self.num_cols(),
                found: other.num_cols(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            data,
        })
    }

    /// Matrix-vector product over the semiring:
    /// `(U ⊗ x)_j = max_i U_{ji}·x_i`.
    pub fn otimes(&self, x: &MaxVector) -> Result<MaxVector> {
        if x.len() != self.num_cols() {
            return Err(Error::DimensionMismatch {
                expected: self.num_cols(),
                found: x.len(),
            });
        }
        let mut out = vec![0.0; self.rows];
        for (i, xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            let col = self.col_slice(i);
            for (o, &u) in out.iter_mut().zip(col) {
                let term = u * xi;
                if term > *o {
                    *o = term;
                }
            }
        }
        Ok(MaxVector::from_raw(out))
    }
}
