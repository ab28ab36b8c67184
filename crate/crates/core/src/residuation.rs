//! Principal solutions of `U⊗z ≤ v`, exact solvability of `U⊗z = v`,
//! membership certificates by set covering, and a brute-force membership
//! oracle for small instances.
//!
//! The principal solution is `x_i = min { v_j/u^i_j : j ∈ supp(u^i) }`,
//! with `x_i = 0` for zero columns. It is the coordinatewise-greatest `z`
//! with `U⊗z ≤ v` among vectors vanishing on zero columns, and `U⊗z = v`
//! is solvable exactly when `U⊗x = v`.

use crate::error::{Error, Result};
use crate::matrix::GeneratorMatrix;
use crate::tolerance::Tolerance;
use crate::vector::{MaxVector, Support};

/// Principal solution of `U⊗z ≤ v` together with its image and verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct ResiduationResult {
    /// The principal solution `x`.
    pub x: MaxVector,
    /// `U ⊗ x`; always `≤ v` componentwise.
    pub image: MaxVector,
    /// Whether the image equals `v` within tolerance at every coordinate.
    pub exact: bool,
}

/// The tight-coordinate sets `N_i` and the coverage verdict.
///
/// `N_i = {j ∈ supp(u^i) : v_j/u^i_j = x_i}` (empty when `x_i = 0`), and
/// `v ∈ span(U)` exactly when the union of the `N_i` covers `supp(v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoveringCertificate {
    pub sets: Vec<Support>,
    pub target_support: Support,
    pub covered: bool,
}

/// Computes `x_i = min { target_j/u^i_j : j ∈ supp(u^i) }` for every column
/// with `active` set, and 0 elsewhere. Zero columns always yield 0.
pub(crate) fn principal_masked(u: &GeneratorMatrix, active: &[bool], target: &[f64]) -> Vec<f64> {
    let mut x = vec![0.0; u.num_cols()];
    for (i, slot) in x.iter_mut().enumerate() {
        if !active[i] {
            continue;
        }
        let mut best = f64::INFINITY;
        for (j, &uij) in u.col_slice(i).iter().enumerate() {
            if uij > 0.0 {
                let ratio = target[j] / uij;
                if ratio < best {
                    best = ratio;
                }
            }
        }
        if best.is_finite() {
            *slot = best;
        }
    }
    x
}

/// `U ⊗ x` restricted to active columns.
pub(crate) fn image_masked(u: &GeneratorMatrix, active: &[bool], x: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; u.num_rows()];
    for i in 0..u.num_cols() {
        if !active[i] || x[i] == 0.0 {
            continue;
        }
        for (o, &uij) in out.iter_mut().zip(u.col_slice(i)) {
            let term = uij * x[i];
            if term > *o {
                *o = term;
            }
        }
    }
    out
}

/// Whether the tight sets of the active columns cover `supp(target)`.
pub(crate) fn covers_masked(
    u: &GeneratorMatrix,
    active: &[bool],
    x: &[f64],
    target: &[f64],
    tol: &Tolerance,
) -> bool {
    let mut covered = vec![false; u.num_rows()];
    for i in 0..u.num_cols() {
        if !active[i] || x[i] == 0.0 {
            continue;
        }
        for (j, &uij) in u.col_slice(i).iter().enumerate() {
            if uij > 0.0 && tol.eq(target[j] / uij, x[i]) {
                covered[j] = true;
            }
        }
    }
    target
        .iter()
        .zip(&covered)
        .all(|(&tj, &c)| tj == 0.0 || c)
}

fn check_dims(u: &GeneratorMatrix, v: &MaxVector) -> Result<()> {
    if v.len() != u.num_rows() {
        return Err(Error::DimensionMismatch {
            expected: u.num_rows(),
            found: v.len(),
        });
    }
    Ok(())
}

/// Residuates `v` by `U`: returns the principal solution, its image and
/// whether the image reaches `v`.
pub fn residuate(u: &GeneratorMatrix, v: &MaxVector, tol: &Tolerance) -> Result<ResiduationResult> {
    check_dims(u, v)?;
    let active = vec![true; u.num_cols()];
    let x = principal_masked(u, &active, v.as_slice());
    let image = image_masked(u, &active, &x);
    let exact = tol.slice_eq(&image, v.as_slice());
    Ok(ResiduationResult {
        x: MaxVector::from_raw(x),
        image: MaxVector::from_raw(image),
        exact,
    })
}

/// Returns the principal solution of `U⊗z = v` when the system is solvable,
/// `None` otherwise.
pub fn solve_exact(u: &GeneratorMatrix, v: &MaxVector, tol: &Tolerance) -> Result<Option<MaxVector>> {
    let res = residuate(u, v, tol)?;
    Ok(res.exact.then_some(res.x))
}

/// Builds the tight-coordinate sets `N_i` and tests whether their union
/// covers `supp(v)`.
pub fn covering_sets(
    u: &GeneratorMatrix,
    v: &MaxVector,
    tol: &Tolerance,
) -> Result<CoveringCertificate> {
    check_dims(u, v)?;
    let active = vec![true; u.num_cols()];
    let x = principal_masked(u, &active, v.as_slice());
    let sets: Vec<Support> = (0..u.num_cols())
        .map(|i| {
            if x[i] == 0.0 {
                return Support::empty();
            }
            u.col_slice(i)
                .iter()
                .enumerate()
                .filter(|&(j, &uij)| uij > 0.0 && tol.eq(v[j] / uij, x[i]))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let target_support = v.support();
    let union = sets
        .iter()
        .fold(Support::empty(), |acc, s| acc.union(s));
    let covered = union == target_support;
    Ok(CoveringCertificate {
        sets,
        target_support,
        covered,
    })
}

/// Membership test by exhaustive enumeration, independent of residuation.
///
/// Any solvable system has a solution whose coefficients come from
/// `{0} ∪ {v_j/u^i_j : j ∈ supp(u^i)}`, so trying every combination decides
/// membership. Guarded to `k ≤ 4`, `n ≤ 5`.
pub fn brute_force_member(u: &GeneratorMatrix, v: &MaxVector, tol: &Tolerance) -> Result<bool> {
    check_dims(u, v)?;
    let (n, k) = (u.num_rows(), u.num_cols());
    if n > 5 || k > 4 {
        return Err(Error::InstanceTooLarge { rows: n, cols: k });
    }
    if k == 0 {
        return Ok(v.is_zero());
    }
    let candidates: Vec<Vec<f64>> = (0..k)
        .map(|i| {
            let mut c = vec![0.0];
            for (j, &uij) in u.col_slice(i).iter().enumerate() {
                if uij > 0.0 {
                    c.push(v[j] / uij);
                }
            }
            c.sort_by(f64::total_cmp);
            c.dedup();
            c
        })
        .collect();

    let mut choice = vec![0usize; k];
    loop {
        let mut img = vec![0.0; n];
        for (i, col) in u.columns().enumerate() {
            let lambda = candidates[i][choice[i]];
            if lambda == 0.0 {
                continue;
            }
            for (o, &uij) in img.iter_mut().zip(col) {
                let term = uij * lambda;
                if term > *o {
                    *o = term;
                }
            }
        }
        if tol.slice_eq(&img, v.as_slice()) {
            return Ok(true);
        }
        let mut pos = 0;
        loop {
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
            if pos == k {
                return Ok(false);
            }
        }
    }
}
