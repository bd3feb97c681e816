//! Plumbing graphs of graph manifolds with fibred links: presentations, Fox
//! calculus, characteristic varieties, Alexander polynomials, cyclic covers.

mod linalg;

pub mod graph;
pub mod group;
pub mod fox;
pub mod charvar;
pub mod alexander;
pub mod cover;
pub mod qp;
pub mod cli;
