//! Scale-anchored equality for computed quantities.
//!
//! Input data is compared exactly (positivity, supports); anything produced
//! by ratio or product arithmetic is compared through a [`Tolerance`]: two
//! values agree when they differ by at most `rtol` times a fixed anchor,
//! usually the largest entry of the matrix under consideration.

use crate::error::{Error, Result};
use crate::matrix::GeneratorMatrix;
use crate::vector::MaxVector;

/// Relative tolerance `rtol` together with the scale anchor it multiplies.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    rtol: f64,
    anchor: f64,
}

impl Tolerance {
    /// Default relative tolerance for all equality tests on computed values.
    pub const DEFAULT_RTOL: f64 = 1e-9;

    pub fn new(rtol: f64, anchor: f64) -> Result<Self> {
        for value in [rtol, anchor] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidTolerance { value });
            }
        }
        Ok(Self { rtol, anchor })
    }

    /// Tolerance anchored at the largest entry of `m`.
    pub fn for_matrix(m: &GeneratorMatrix, rtol: f64) -> Result<Self> {
        Self::new(rtol, m.max_entry())
    }

    /// Tolerance anchored at the largest entry of `m` or `v`.
    pub fn for_system(m: &GeneratorMatrix, v: &MaxVector, rtol: f64) -> Result<Self> {
        Self::new(rtol, m.max_entry().max(v.max_norm()))
    }

    pub fn rtol(&self) -> f64 {
        self.rtol
    }

    pub fn anchor(&self) -> f64 {
        self.anchor
    }

    /// Absolute slack: `rtol · anchor`.
    #[inline]
    pub fn abs(&self) -> f64 {
        self.rtol * self.anchor
    }

    #[inline]
    pub fn eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.abs()
    }

    #[inline]
    pub fn leq(&self, a: f64, b: f64) -> bool {
        a <= b + self.abs()
    }

    /// Componentwise equality within the slack. Lengths must already agree.
    pub fn slice_eq(&self, a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(&x, &y)| self.eq(x, y))
    }

    /// Componentwise `≤` within the slack. Lengths must already agree.
    pub fn slice_leq(&self, a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(&x, &y)| self.leq(x, y))
    }

    pub fn vec_eq(&self, a: &MaxVector, b: &MaxVector) -> bool {
        self.slice_eq(a.as_slice(), b.as_slice())
    }

    pub fn vec_leq(&self, a: &MaxVector, b: &MaxVector) -> bool {
        self.slice_leq(a.as_slice(), b.as_slice())
    }
}
