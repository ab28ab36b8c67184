//! Points of `R₊ⁿ`, their supports, the max norm and coordinate scalings.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// A point of `R₊ⁿ`: finite, nonnegative coordinates.
///
/// The length-zero vector is permitted as the coefficient vector over an
/// empty set of generators; parsed input vectors always have `n ≥ 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxVector {
    coords: Vec<f64>,
}

impl MaxVector {
    /// Validates that every coordinate is finite and `≥ 0`.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        for &c in &coords {
            if !c.is_finite() || c < 0.0 {
                return Err(Error::InvalidEntry { value: c });
            }
        }
        Ok(Self { coords })
    }

    /// The zero vector of length `n`.
    pub fn zeros(n: usize) -> Self {
        Self {
            coords: vec![0.0; n],
        }
    }

    /// Standard unit vector `e_p` of length `n`.
    pub fn unit(n: usize, p: usize) -> Result<Self> {
        if p >= n {
            return Err(Error::IndexOutOfRange { index: p, len: n });
        }
        let mut coords = vec![0.0; n];
        coords[p] = 1.0;
        Ok(Self { coords })
    }

    pub(crate) fn from_raw(coords: Vec<f64>) -> Self {
        debug_assert!(coords.iter().all(|c| c.is_finite() && *c >= 0.0));
        Self { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coords
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.coords.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    /// `||v|| = max_j v_j`; zero exactly for the zero vector.
    pub fn max_norm(&self) -> f64 {
        self.coords.iter().copied().fold(0.0, f64::max)
    }

    /// Indices of strictly positive coordinates. Positivity is exact:
    /// supports classify input data, not computed values.
    pub fn support(&self) -> Support {
        Support {
            indices: (0..self.len()).filter(|&j| self.coords[j] > 0.0).collect(),
        }
    }

    /// Divide by the max norm, yielding a vector of norm exactly 1.
    pub fn scale_max(&self) -> Result<MaxVector> {
        let norm = self.max_norm();
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale(1.0 / norm))
    }

    /// Divide by coordinate `j`, yielding a vector with `j`-th coordinate
    /// exactly 1. `j` must lie in the support.
    pub fn scale_at(&self, j: usize) -> Result<MaxVector> {
        if j >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.len(),
            });
        }
        if self.coords[j] == 0.0 {
            return Err(Error::OutsideSupport { index: j });
        }
        let pivot = self.coords[j];
        let mut coords: Vec<f64> = self.coords.iter().map(|&c| c / pivot).collect();
        coords[j] = 1.0;
        Ok(MaxVector::from_raw(coords))
    }

    /// Scalar multiple `λ·v` for finite `λ ≥ 0`.
    pub fn scale(&self, lambda: f64) -> MaxVector {
        debug_assert!(lambda.is_finite() && lambda >= 0.0);
        MaxVector::from_raw(self.coords.iter().map(|&c| c * lambda).collect())
    }

    /// Componentwise `⊕` (max) of two vectors of equal length.
    pub fn oplus(&self, other: &MaxVector) -> Result<MaxVector> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(MaxVector::from_raw(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    /// Exact componentwise order: `v ≤ w`.
    pub fn leq(&self, other: &MaxVector) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.coords.iter().zip(&other.coords).all(|(&a, &b)| a <= b))
    }
}

impl Index<usize> for MaxVector {
    type Output = f64;

    fn index(&self, j: usize) -> &f64 {
        &self.coords[j]
    }
}

impl fmt::Display for MaxVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.coords.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An ordered set of coordinate indices with strictly positive entries.
/// Indices are 0-based internally; user-facing layers print them 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Support {
    indices: Vec<usize>,
}

impl Support {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a support from arbitrary indices, sorting and deduplicating.
    pub fn from_indices(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self { indices }
    }

    pub fn contains(&self, j: usize) -> bool {
        self.indices.binary_search(&j).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    pub fn union(&self, other: &Support) -> Support {
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        Support::from_indices(indices)
    }
}

impl FromIterator<usize> for Support {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Support::from_indices(iter.into_iter().collect())
    }
}
