//! Finitely generated max cones over the max-times semiring.
//!
//! The semiring is `R₊` with `a ⊕ b = max(a, b)` and `a ⊗ b = ab`. The
//! columns of a [`GeneratorMatrix`] generate a max cone — the set of all
//! max combinations `⊕ λ_i·u^i` — and this crate answers the basic
//! questions about such cones:
//!
//! - membership of a vector in the cone, by residuation
//!   ([`residuate`], [`solve_exact`]) or by set covering ([`covering_sets`]);
//! - which generators are extremal ([`is_extremal_column`]) or redundant
//!   ([`is_redundant_column`]);
//! - the essentially unique basis, by three interchangeable methods
//!   ([`extract_basis`]);
//! - decompositions using at most `|supp(v)|` generators
//!   ([`caratheodory_decompose`]);
//! - minimal vectors of finite point sets ([`pareto_minima`]).
//!
//! All values are immutable after construction and every operation is pure,
//! so values can be shared freely across threads.

mod error;
mod extremals;
mod matrix;
mod residuation;
pub mod semiring;
mod tolerance;
mod vector;

pub use error::{Error, Result};
pub use extremals::{
    caratheodory_decompose, essentially_equal, extract_basis, is_extremal_column,
    is_redundant_column, pareto_minima, scaled_columns_at, BasisResult, Decomposition,
    ExtractMethod, MinimaResult,
};
pub use matrix::GeneratorMatrix;
pub use residuation::{
    brute_force_member, covering_sets, residuate, solve_exact, CoveringCertificate,
    ResiduationResult,
};
pub use semiring::{oplus, otimes};
pub use tolerance::Tolerance;
pub use vector::{MaxVector, Support};
