//! Quasi-projectivity of algebraic-link groups. At most one branching vertex
//! means a quasihomogeneous type; otherwise some cyclic cover of degree
//! dividing the lcm of the total multiplicities carries the genus/cycle
//! obstruction, and the smallest such degree is reported as a witness.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::alexander::{en_multivariable, essential_variable_report, expand, AlexanderError, EssentialReport};
use crate::cover::{cyclic_cover, CoverError};
use crate::graph::{is_negative_definite, solve_multiplicities, MultiplicityError, PlumbingGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QpError {
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("graph has no arrows")]
    NoArrows,
    #[error(transparent)]
    Multiplicity(#[from] MultiplicityError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    QuasiProjective,
    NotQuasiProjective,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: u64,
    pub genera: Vec<u32>,
    pub b1: usize,
    pub arrows: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QPReport {
    pub verdict: Verdict,
    /// Number of branching vertices.
    pub shape: usize,
    /// lcm of the total multiplicities, when the cover search ran.
    pub e: Option<u64>,
    pub alexander_layer: Option<EssentialReport>,
    pub witness: Option<Witness>,
}

pub fn divisors(e: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= e {
        if e.is_multiple_of(d) {
            small.push(d);
            if d * d != e {
                large.push(e / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn classify(g: &PlumbingGraph) -> Result<QPReport, QpError> {
    if let Some(d) = g.validate().first() {
        return Err(QpError::Graph(d.to_string()));
    }
    if !g.is_tree() {
        return Err(QpError::NotATree);
    }
    if !is_negative_definite(&g.incidence().a).unwrap_or(false) {
        return Err(QpError::NotNegativeDefinite);
    }
    if g.arrows().is_empty() {
        return Err(QpError::NoArrows);
    }
    let mt = solve_multiplicities(g)?;
    let alexander_layer = if mt.branch_count() >= 3 {
        Some(essential_variable_report(&expand(&en_multivariable(g, &mt)?)?))
    } else {
        None
    };
    let shape = g.branching_vertices().len();
    if shape <= 1 {
        return Ok(QPReport { verdict: Verdict::QuasiProjective, shape, e: None, alexander_layer, witness: None });
    }
    let e = mt.lcm_of_totals();
    let candidates: Vec<u64> = divisors(e).into_iter().filter(|&n| n >= 2).collect();
    let results = candidates
        .par_iter()
        .map(|&n| {
            let c = cyclic_cover(g, &mt, n)?;
            Ok(c.obstruction().fires.then(|| Witness { n, genera: c.genera(), b1: c.b1, arrows: c.arrows.len() }))
        })
        .collect::<Result<Vec<_>, CoverError>>()?;
    let witness = results.into_iter().flatten().min_by_key(|w| w.n);
    let verdict = if witness.is_some() { Verdict::NotQuasiProjective } else { Verdict::Inconclusive };
    debug_assert!(witness.as_ref().is_none_or(|w| w.n.gcd(&e) == w.n));
    Ok(QPReport { verdict, shape, e: Some(e), alexander_layer, witness })
}
