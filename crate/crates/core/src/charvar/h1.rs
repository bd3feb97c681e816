use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::Character;
use crate::fox::{evaluate, fox_matrix_generic, FoxError, FoxMatrix};
use crate::group::Presentation;

pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct H1Dim {
    pub dim: usize,
    pub rank: usize,
    /// A singular value sits within a factor 10 of the rank threshold.
    pub unstable: bool,
}

/// Rescales rows and columns (Ruiz iteration) so every nonzero row and
/// column has largest entry close to 1. Rank is unchanged; entries of very
/// different sizes, as at characters far from the unit torus, are not.
pub fn equilibrate(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let mut a = m.clone();
    for _ in 0..20 {
        let mut spread = 0.0f64;
        for i in 0..a.nrows() {
            let max = a.row(i).iter().map(|z| z.norm()).fold(0.0, f64::max);
            if max > 0.0 {
                spread = spread.max((max.ln()).abs());
                a.row_mut(i).scale_mut(1.0 / max.sqrt());
            }
        }
        for j in 0..a.ncols() {
            let max = a.column(j).iter().map(|z| z.norm()).fold(0.0, f64::max);
            if max > 0.0 {
                spread = spread.max((max.ln()).abs());
                a.column_mut(j).scale_mut(1.0 / max.sqrt());
            }
        }
        if spread < 1e-3 {
            break;
        }
    }
    a
}

/// Numerical rank of the equilibrated matrix: singular values above
/// `tol * sigma_max`. Also reports whether some singular value falls in
/// `[0.1, 10] x threshold`.
pub fn numeric_rank(m: &DMatrix<Complex64>, tol: f64) -> (usize, bool) {
    if m.nrows() == 0 || m.ncols() == 0 {
        return (0, false);
    }
    let sv = equilibrate(m).svd(false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0f64, f64::max);
    if max == 0.0 {
        return (0, false);
    }
    let threshold = tol * max;
    let rank = sv.iter().filter(|&&s| s > threshold).count();
    let unstable = sv.iter().any(|&s| s >= 0.1 * threshold && s <= 10.0 * threshold);
    (rank, unstable)
}

/// `dim H^1(G; C_xi)` from an already built Fox matrix.
pub fn dim_h1_matrix(f: &FoxMatrix, xi: &Character, tol: f64) -> Result<H1Dim, FoxError> {
    let m = f.ncols();
    let (rank, unstable) = numeric_rank(&evaluate(f, xi)?, tol);
    let dim = if xi.is_trivial() { m - rank } else { (m - rank).saturating_sub(1) };
    Ok(H1Dim { dim, rank, unstable })
}

/// `dim H^1(G; C_xi) = m - rank fox(xi) - 1` off the trivial character and
/// `m - rank fox(1)` at it. `xi` must be built on `abelianize(p)`.
pub fn dim_h1(p: &Presentation, xi: &Character, tol: f64) -> Result<H1Dim, FoxError> {
    dim_h1_matrix(&fox_matrix_generic(p), xi, tol)
}
