//! Branch multiplicities: per branch `i`, solve `A m_i + b_i = 0` exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::{is_negative_definite, PlumbingGraph};
use crate::linalg::solve_rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultiplicityError {
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("graph has no arrows")]
    NoBranches,
    #[error("multiplicity of branch {branch} at `{vertex}` is not an integer")]
    NonIntegral { branch: u32, vertex: String },
    #[error("multiplicity of branch {branch} at `{vertex}` is not positive")]
    NonPositive { branch: u32, vertex: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

/// `per_branch[i][v]` is the multiplicity of branch `i + 1` along vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub per_branch: Vec<Vec<u64>>,
}

impl MultiplicityTable {
    pub fn branch_count(&self) -> usize {
        self.per_branch.len()
    }

    /// The exponent vector `(m_{v,f_1}, ..., m_{v,f_r})`.
    pub fn vector(&self, v: usize) -> Vec<u64> {
        self.per_branch.iter().map(|col| col[v]).collect()
    }

    pub fn total(&self, v: usize) -> u64 {
        self.per_branch.iter().map(|col| col[v]).sum()
    }

    pub fn totals(&self) -> Vec<u64> {
        let n = self.per_branch.first().map_or(0, Vec::len);
        (0..n).map(|v| self.total(v)).collect()
    }

    /// Least common multiple of the total multiplicities.
    pub fn lcm_of_totals(&self) -> u64 {
        self.totals().into_iter().fold(1, |acc, m| acc.lcm(&m))
    }
}

pub fn solve_multiplicities(g: &PlumbingGraph) -> Result<MultiplicityTable, MultiplicityError> {
    if let Some(d) = g.validate().first() {
        return Err(MultiplicityError::InvalidGraph(d.to_string()));
    }
    let r = g.branch_count();
    if r == 0 {
        return Err(MultiplicityError::NoBranches);
    }
    let a = g.incidence().a;
    if !is_negative_definite(&a).unwrap_or(false) {
        return Err(MultiplicityError::NotNegativeDefinite);
    }
    let n = g.vertex_count();
    let mut per_branch = Vec::with_capacity(r);
    for branch in 1..=r as u32 {
        let mut rhs = vec![BigInt::zero(); n];
        for arrow in g.arrows().iter().filter(|a| a.branch == branch) {
            rhs[arrow.vertex] -= 1;
        }
        let x = solve_rational(&a, &rhs).ok_or(MultiplicityError::NotNegativeDefinite)?;
        let mut col = Vec::with_capacity(n);
        for (v, value) in x.into_iter().enumerate() {
            let vertex = g.vertices()[v].id.clone();
            if !value.is_integer() {
                return Err(MultiplicityError::NonIntegral { branch, vertex });
            }
            let value = value.to_integer();
            if !value.is_positive() {
                return Err(MultiplicityError::NonPositive { branch, vertex });
            }
            col.push(value.to_u64().expect("multiplicity fits in u64"));
        }
        per_branch.push(col);
    }
    Ok(MultiplicityTable { per_branch })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Vertex;

    fn two_branch() -> PlumbingGraph {
        let vs = vec![
            Vertex { id: "v1".into(), euler: -2, genus: 0 },
            Vertex { id: "v2".into(), euler: -3, genus: 0 },
            Vertex { id: "v3".into(), euler: -2, genus: 0 },
            Vertex { id: "v4".into(), euler: -1, genus: 0 },
        ];
        PlumbingGraph::new(vs, &[("v1", "v2"), ("v2", "v4"), ("v4", "v3")], &[("v4", 1), ("v2", 2)])
            .unwrap()
    }

    #[test]
    fn two_branch_branch_columns() {
        let g = two_branch();
        let mt = solve_multiplicities(&g).unwrap();
        let chain: Vec<usize> = ["v1", "v2", "v4", "v3"].iter().map(|id| g.vertex_index(id).unwrap()).collect();
        let col = |i: usize| chain.iter().map(|&v| mt.per_branch[i][v]).collect::<Vec<_>>();
        assert_eq!(col(0), vec![2, 4, 10, 5]);
        assert_eq!(col(1), vec![1, 2, 4, 2]);
        let totals: Vec<u64> = chain.iter().map(|&v| mt.total(v)).collect();
        assert_eq!(totals, vec![3, 6, 14, 7]);
        assert_eq!(mt.lcm_of_totals(), 42);
    }

    #[test]
    fn unknot() {
        let g = PlumbingGraph::new(
            vec![Vertex { id: "v".into(), euler: -1, genus: 0 }],
            &[] as &[(&str, &str)],
            &[("v", 1)],
        )
        .unwrap();
        assert_eq!(solve_multiplicities(&g).unwrap().per_branch, vec![vec![1]]);
    }

    #[test]
    fn rejects_non_integral_and_indefinite() {
        let g = PlumbingGraph::new(
            vec![Vertex { id: "v".into(), euler: -2, genus: 0 }],
            &[] as &[(&str, &str)],
            &[("v", 1)],
        )
        .unwrap();
        assert!(matches!(solve_multiplicities(&g), Err(MultiplicityError::NonIntegral { .. })));
        let g = PlumbingGraph::new(
            vec![Vertex { id: "v".into(), euler: 1, genus: 0 }],
            &[] as &[(&str, &str)],
            &[("v", 1)],
        )
        .unwrap();
        assert_eq!(solve_multiplicities(&g), Err(MultiplicityError::NotNegativeDefinite));
        let g = PlumbingGraph::new(
            vec![Vertex { id: "v".into(), euler: -1, genus: 0 }],
            &[] as &[(&str, &str)],
            &[],
        )
        .unwrap();
        assert_eq!(solve_multiplicities(&g), Err(MultiplicityError::NoBranches));
    }
}
