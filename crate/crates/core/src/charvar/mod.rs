//! Character torus, twisted cohomology at characters, strata sampling and
//! the corank theorems.

mod h1;
mod strata;
mod torus;

use thiserror::Error;

pub use h1::{dim_h1, dim_h1_matrix, equilibrate, numeric_rank, H1Dim, DEFAULT_TOL};
pub use strata::{
    b_epsilon_check, corank_closed_form, cornqp_obstruction, cornqp_obstruction_shape, random_scaled, random_unit_scale,
    sample_stratum, BCheck, BEpsilonReport, CorankMode, Obstruction, StratumSample,
};
pub use torus::{
    character_torus, Character, CharacterError, CharacterTorus, ChartValue, CoordKind, CoordValue,
};

use crate::fox::FoxError;
use crate::graph::GraphError;

#[derive(Debug, Error, PartialEq)]
pub enum CharvarError {
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error("numerically unstable rank at {0}")]
    Unstable(String),
}

impl From<GraphError> for CharvarError {
    fn from(e: GraphError) -> Self {
        CharvarError::Graph(e.to_string())
    }
}
