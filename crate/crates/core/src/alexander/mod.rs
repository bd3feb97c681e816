//! Alexander polynomials of algebraic links from the multiplicities of a
//! plumbing tree, as formal products of binomials `(t^m - 1)^k`.

mod poly;

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

pub use poly::{LaurentPoly, MonomialTerm};

use crate::graph::{is_negative_definite, MultiplicityTable, PlumbingGraph};
use crate::linalg::{smith_normal_form, IntMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("graph has no arrows")]
    NoBranches,
    #[error("multiplicity table does not fit the graph")]
    TableMismatch,
    #[error("division by {divisor} is not exact")]
    InexactDivision { divisor: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub exponents: Vec<i64>,
    pub multiplicity: i64,
}

/// `(t - 1)^[prefactor] * prod (t^exponents - 1)^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalProduct {
    pub nvars: usize,
    pub factors: Vec<Factor>,
    pub prefactor: bool,
}

fn check_input(g: &PlumbingGraph, mt: &MultiplicityTable) -> Result<(), AlexanderError> {
    if !g.is_tree() {
        return Err(AlexanderError::NotATree);
    }
    if !is_negative_definite(&g.incidence().a).unwrap_or(false) {
        return Err(AlexanderError::NotNegativeDefinite);
    }
    if g.arrows().is_empty() {
        return Err(AlexanderError::NoBranches);
    }
    if mt.branch_count() != g.branch_count() || mt.per_branch.iter().any(|c| c.len() != g.vertex_count()) {
        return Err(AlexanderError::TableMismatch);
    }
    // re-check A m_i + b_i = 0
    let inc = g.incidence();
    for (i, col) in mt.per_branch.iter().enumerate() {
        let branch = i as u32 + 1;
        for v in 0..g.vertex_count() {
            let arrows = g.arrows().iter().filter(|a| a.vertex == v && a.branch == branch).count();
            let mut s = num_bigint::BigInt::from(arrows);
            for (w, &m) in col.iter().enumerate() {
                s += &inc.a[(v, w)] * num_bigint::BigInt::from(m);
            }
            if s != num_bigint::BigInt::from(0) {
                return Err(AlexanderError::TableMismatch);
            }
        }
    }
    Ok(())
}

/// One factor per vertex: exponent `m_v`, multiplicity `deg(v) - 2` with
/// arrows counted; valence-2 vertices drop out. For a knot the product
/// carries the `(t - 1)` prefactor.
pub fn en_multivariable(g: &PlumbingGraph, mt: &MultiplicityTable) -> Result<FormalProduct, AlexanderError> {
    check_input(g, mt)?;
    let r = mt.branch_count();
    let factors = (0..g.vertex_count())
        .filter_map(|v| {
            let k = g.degree(v) as i64 - 2;
            (k != 0).then(|| Factor { exponents: mt.vector(v).into_iter().map(|m| m as i64).collect(), multiplicity: k })
        })
        .collect();
    Ok(FormalProduct { nvars: r, factors, prefactor: r == 1 })
}

/// Single-variable version with total multiplicities and `(t - 1)` in front.
pub fn acampo_single(g: &PlumbingGraph, mt: &MultiplicityTable) -> Result<FormalProduct, AlexanderError> {
    check_input(g, mt)?;
    let factors = (0..g.vertex_count())
        .filter_map(|v| {
            let k = g.degree(v) as i64 - 2;
            (k != 0).then(|| Factor { exponents: vec![mt.total(v) as i64], multiplicity: k })
        })
        .collect();
    Ok(FormalProduct { nvars: 1, factors, prefactor: true })
}

/// Multiplies out the positive factors, then divides by the negative ones in
/// ascending total degree. The result is unit-normalized.
pub fn expand(fp: &FormalProduct) -> Result<LaurentPoly, AlexanderError> {
    let mut p = LaurentPoly::one(fp.nvars);
    if fp.prefactor {
        // in several variables the prefactor is read on the diagonal t_1 ... t_r
        p = LaurentPoly::binomial(&vec![1; fp.nvars]);
    }
    let mut negative: Vec<&Factor> = Vec::new();
    for f in &fp.factors {
        if f.multiplicity > 0 {
            p = p.mul(&LaurentPoly::binomial(&f.exponents).pow(f.multiplicity as u32));
        } else {
            negative.push(f);
        }
    }
    negative.sort_by_key(|f| f.exponents.iter().sum::<i64>());
    for f in negative {
        let d = LaurentPoly::binomial(&f.exponents);
        for _ in 0..-f.multiplicity {
            p = p.div_exact(&d).ok_or_else(|| AlexanderError::InexactDivision { divisor: d.to_string() })?;
        }
    }
    Ok(p.normalized())
}

impl fmt::Display for FormalProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.prefactor {
            parts.push(if self.nvars == 1 { "(t - 1)".to_string() } else { "(t1*...*tr - 1)".to_string() });
        }
        for fac in &self.factors {
            let b = LaurentPoly::binomial(&fac.exponents);
            if fac.multiplicity == 1 {
                parts.push(format!("({b})"));
            } else {
                parts.push(format!("({b})^{}", fac.multiplicity));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EssentialReport {
    /// Rank of the lattice spanned by differences of exponent vectors.
    pub rank: usize,
    pub single_essential: bool,
    /// Primitive generator direction when the rank is 1.
    pub direction: Option<Vec<i64>>,
}

/// Whether `lp` is a polynomial in a single monomial `t^e`.
pub fn essential_variable_report(lp: &LaurentPoly) -> EssentialReport {
    let monos: Vec<Vec<i64>> = lp.terms().map(|(m, _)| m.to_vec()).collect();
    let diffs: Vec<Vec<i64>> = monos
        .iter()
        .skip(1)
        .map(|m| m.iter().zip(&monos[0]).map(|(a, b)| a - b).collect())
        .collect();
    let rank = if diffs.is_empty() {
        0
    } else {
        smith_normal_form(&IntMatrix::from_rows_with_cols(&diffs, lp.nvars())).rank()
    };
    let direction = (rank == 1).then(|| {
        let d = diffs.iter().find(|d| d.iter().any(|&x| x != 0)).expect("nonzero difference");
        let g = d.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        let sign = if d.iter().find(|&&x| x != 0).copied().unwrap_or(1) < 0 { -1 } else { 1 };
        d.iter().map(|x| sign * x / g).collect()
    });
    EssentialReport { rank, single_essential: rank <= 1, direction }
}
