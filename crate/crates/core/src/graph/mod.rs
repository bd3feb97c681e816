//! Plumbing graphs: vertices weighted by Euler number and genus, multi-edges
//! between distinct vertices, and arrows carrying branch labels.

mod format;
mod multiplicity;
mod order;

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::linalg::{leading_principal_minors, IntMatrix};

pub use format::{parse_graph, to_canonical_string, ParseError};
pub use multiplicity::{solve_multiplicities, MultiplicityError, MultiplicityTable};
pub use order::{choose_tree_and_orders, OrderedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub euler: i64,
    pub genus: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub vertex: usize,
    /// 1-based branch label.
    pub branch: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("unknown root `{0}`")]
    UnknownRoot(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("graph is not a tree")]
    NotATree,
    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,
    #[error("graph has no arrows")]
    NoArrows,
    #[error("invalid graph: {0}")]
    Invalid(String),
}

/// One violated invariant reported by [`PlumbingGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    NoVertices,
    Disconnected { components: usize },
    LoopEdge { vertex: String },
    ZeroBranchLabel { vertex: String },
    UnusedBranchLabel { branch: u32 },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NoVertices => write!(f, "no vertices"),
            Diagnostic::Disconnected { components } => {
                write!(f, "disconnected ({components} components)")
            }
            Diagnostic::LoopEdge { vertex } => write!(f, "loop edge at `{vertex}`"),
            Diagnostic::ZeroBranchLabel { vertex } => {
                write!(f, "arrow at `{vertex}` has branch label 0")
            }
            Diagnostic::UnusedBranchLabel { branch } => {
                write!(f, "branch label {branch} is not used by any arrow")
            }
        }
    }
}

/// Orders ids so that embedded digit runs compare numerically (`v2 < v10`).
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(cb.iter()) {
        let ord = if *da && *db {
            let ta = sa.trim_start_matches('0');
            let tb = sb.trim_start_matches('0');
            ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb))
        } else {
            sa.cmp(sb)
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

/// `A` (intersection form with Euler numbers on the diagonal) and `B`
/// (vertex/arrow incidence).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidencePair {
    pub a: IntMatrix,
    pub b: IntMatrix,
}

/// A plumbing graph. Vertices are kept sorted by [`natural_cmp`] on their
/// ids; edges keep their input order, arrows are sorted by branch label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    arrows: Vec<Arrow>,
}

impl PlumbingGraph {
    /// Builds a graph from id-based descriptions. Only referential errors are
    /// raised here; structural problems are reported by [`validate`](Self::validate).
    pub fn new<S: AsRef<str>>(
        vertices: Vec<Vertex>,
        edges: &[(S, S)],
        arrows: &[(S, u32)],
    ) -> Result<Self, GraphError> {
        let mut vertices = vertices;
        vertices.sort_by(|x, y| natural_cmp(&x.id, &y.id));
        for w in vertices.windows(2) {
            if w[0].id == w[1].id {
                return Err(GraphError::DuplicateVertex(w[0].id.clone()));
            }
        }
        let lookup = |id: &str| -> Result<usize, GraphError> {
            vertices
                .binary_search_by(|v| natural_cmp(&v.id, id))
                .map_err(|_| GraphError::UnknownVertex(id.to_string()))
        };
        let edges = edges
            .iter()
            .map(|(a, b)| Ok(Edge { a: lookup(a.as_ref())?, b: lookup(b.as_ref())? }))
            .collect::<Result<Vec<_>, GraphError>>()?;
        let mut arrows = arrows
            .iter()
            .map(|(v, branch)| Ok(Arrow { vertex: lookup(v.as_ref())?, branch: *branch }))
            .collect::<Result<Vec<_>, GraphError>>()?;
        arrows.sort_by_key(|a| (a.branch, a.vertex));
        Ok(PlumbingGraph { vertices, edges, arrows })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| natural_cmp(&v.id, id)).ok()
    }

    /// Number of branches, i.e. the largest branch label (0 without arrows).
    pub fn branch_count(&self) -> usize {
        self.arrows.iter().map(|a| a.branch as usize).max().unwrap_or(0)
    }

    pub fn total_genus(&self) -> u64 {
        self.vertices.iter().map(|v| u64::from(v.genus)).sum()
    }

    /// Degree counting edges (with multiplicity) and arrows.
    pub fn degree(&self, v: usize) -> usize {
        let edges = self.edges.iter().filter(|e| e.touches(v)).count();
        let arrows = self.arrows.iter().filter(|a| a.vertex == v).count();
        edges + arrows
    }

    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if self.vertices.is_empty() {
            out.push(Diagnostic::NoVertices);
            return out;
        }
        for e in &self.edges {
            if e.a == e.b {
                out.push(Diagnostic::LoopEdge { vertex: self.vertices[e.a].id.clone() });
            }
        }
        let components = self.component_count();
        if components > 1 {
            out.push(Diagnostic::Disconnected { components });
        }
        for a in &self.arrows {
            if a.branch == 0 {
                out.push(Diagnostic::ZeroBranchLabel { vertex: self.vertices[a.vertex].id.clone() });
            }
        }
        for branch in 1..=self.branch_count() as u32 {
            if !self.arrows.iter().any(|a| a.branch == branch) {
                out.push(Diagnostic::UnusedBranchLabel { branch });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), GraphError> {
        match self.validate().first() {
            None => Ok(()),
            Some(d) => Err(GraphError::Invalid(d.to_string())),
        }
    }

    fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    pub fn incidence(&self) -> IncidencePair {
        let n = self.vertices.len();
        let mut a = IntMatrix::zeros(n, n);
        for (i, v) in self.vertices.iter().enumerate() {
            a[(i, i)] = v.euler.into();
        }
        for e in &self.edges {
            if e.a != e.b {
                a[(e.a, e.b)] += 1;
                a[(e.b, e.a)] += 1;
            }
        }
        let mut b = IntMatrix::zeros(n, self.arrows.len());
        for (h, arrow) in self.arrows.iter().enumerate() {
            b[(arrow.vertex, h)] = 1.into();
        }
        IncidencePair { a, b }
    }

    /// `|E| - |V| + 1`; assumes a connected graph.
    pub fn first_betti(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertices.len())
    }

    pub fn is_tree(&self) -> bool {
        self.component_count() == 1 && self.edges.len() + 1 == self.vertices.len()
    }

    /// Vertices whose degree (arrows included) is at least three.
    pub fn branching_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.degree(v) >= 3).collect()
    }

    pub fn is_quasihomogeneous_shape(&self) -> bool {
        self.branching_vertices().len() <= 1
    }

    pub fn is_negative_definite(&self) -> bool {
        is_negative_definite(&self.incidence().a).unwrap_or(false)
    }

    /// Relabels vertex ids through `rename`, keeping structure.
    pub fn relabeled<F: Fn(&str) -> String>(&self, rename: F) -> Result<PlumbingGraph, GraphError> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex { id: rename(&v.id), euler: v.euler, genus: v.genus })
            .collect::<Vec<_>>();
        let ids: Vec<String> = vertices.iter().map(|v| v.id.clone()).collect();
        let edges: Vec<(String, String)> =
            self.edges.iter().map(|e| (ids[e.a].clone(), ids[e.b].clone())).collect();
        let arrows: Vec<(String, u32)> =
            self.arrows.iter().map(|a| (ids[a.vertex].clone(), a.branch)).collect();
        PlumbingGraph::new(vertices, &edges, &arrows)
    }
}

/// Sylvester test: `(-1)^k` times the k-th leading principal minor is positive
/// for every k. Exact.
pub fn is_negative_definite(a: &IntMatrix) -> Result<bool, GraphError> {
    if !a.is_symmetric() {
        return Err(GraphError::NotSymmetric);
    }
    let n = a.nrows();
    let minors = leading_principal_minors(a);
    if minors.len() < n {
        return Ok(false);
    }
    Ok(minors.iter().enumerate().all(|(k, m)| {
        // k-th minor has order k + 1
        if k % 2 == 0 {
            m.is_negative()
        } else {
            m.is_positive()
        }
    }))
}
