//! Scalar operations of the max-times semiring: addition is `max`,
//! multiplication is ordinary multiplication, zero is 0 and unit is 1.

/// Semiring addition: `a ⊕ b = max(a, b)`.
#[inline]
pub fn oplus(a: f64, b: f64) -> f64 {
    a.max(b)
}

/// Semiring multiplication: `a ⊗ b = a·b`.
#[inline]
pub fn otimes(a: f64, b: f64) -> f64 {
    a * b
}
