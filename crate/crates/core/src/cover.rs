//! Shape of the n-fold cyclic cover of a plumbing graph branched along its
//! link: components and genera over each vertex, edge and arrow preimages.
//! Euler numbers are not computed.

use std::fmt::Write;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::charvar::{cornqp_obstruction_shape, Obstruction};
use crate::graph::{to_canonical_string, MultiplicityTable, PlumbingGraph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("cover degree must be at least 2, got {0}")]
    Degree(u64),
    #[error("invalid monodromy data: N = {n}, a = {a:?}")]
    InvalidMonodromy { n: u64, a: Vec<u64> },
    #[error("vertex `{0}` has positive genus")]
    PositiveGenus(String),
    #[error("multiplicity table does not fit the graph")]
    TableMismatch,
}

/// Genus of a connected `N`-fold cyclic cover of the sphere branched over
/// points with monodromies `a_i`: `2 - 2g = N(2 - k) + sum gcd(N, a_i)`.
pub fn component_genus(n: u64, a: &[u64]) -> Result<u64, CoverError> {
    let bad = || CoverError::InvalidMonodromy { n, a: a.to_vec() };
    if n == 0 || a.iter().any(|&x| x >= n) {
        return Err(bad());
    }
    let chi = n as i64 * (2 - a.len() as i64) + a.iter().map(|&x| n.gcd(&x) as i64).sum::<i64>();
    if chi > 2 || (2 - chi) % 2 != 0 {
        return Err(bad());
    }
    Ok(((2 - chi) / 2) as u64)
}

pub fn edge_preimage_count(n: u64, mv: u64, mw: u64) -> u64 {
    n.gcd(&mv).gcd(&mw)
}

/// A point of the vertex's sphere where the cover may ramify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Adjacency {
    Edge(usize),
    Arrow(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverVertexData {
    pub vertex: usize,
    /// `gcd(n, m_v)`.
    pub n_v: u64,
    pub adjacent: Vec<Adjacency>,
    /// `m_w mod n_v` per neighbour, 1 per arrow.
    pub residues: Vec<u64>,
    pub components: u64,
    /// Degree of each component over the base sphere.
    pub degree: u64,
    pub monodromies: Vec<u64>,
    pub genus: u64,
}

impl CoverVertexData {
    /// Preimages of the adjacent edge or arrow in slot `i` seen from this side.
    pub fn preimages_at(&self, i: usize) -> u64 {
        self.components * self.degree.gcd(&self.monodromies[i])
    }
}

pub fn vertex_data(g: &PlumbingGraph, mt: &MultiplicityTable, n: u64) -> Result<Vec<CoverVertexData>, CoverError> {
    let totals = mt.totals();
    if totals.len() != g.vertex_count() {
        return Err(CoverError::TableMismatch);
    }
    (0..g.vertex_count())
        .map(|v| {
            let n_v = n.gcd(&totals[v]);
            let mut adjacent = Vec::new();
            let mut residues = Vec::new();
            for (e, edge) in g.edges().iter().enumerate() {
                if edge.touches(v) {
                    adjacent.push(Adjacency::Edge(e));
                    residues.push(totals[edge.other(v)] % n_v);
                }
            }
            for (h, arrow) in g.arrows().iter().enumerate() {
                if arrow.vertex == v {
                    adjacent.push(Adjacency::Arrow(h));
                    residues.push(1 % n_v);
                }
            }
            let components = residues.iter().fold(n_v, |acc, r| acc.gcd(r));
            let degree = n_v / components;
            let monodromies: Vec<u64> = residues.iter().map(|r| (r / components) % degree).collect();
            let genus = component_genus(degree, &monodromies)?;
            Ok(CoverVertexData { vertex: v, n_v, adjacent, residues, components, degree, monodromies, genus })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverVertex {
    pub base: usize,
    pub component: u64,
    pub genus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverArrow {
    pub vertex: usize,
    pub branch: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverGraph {
    pub n: u64,
    pub vertices: Vec<CoverVertex>,
    /// Pairs of indices into `vertices`.
    pub edges: Vec<(usize, usize)>,
    pub arrows: Vec<CoverArrow>,
    pub components: usize,
    pub b1: usize,
}

impl CoverGraph {
    pub fn is_connected(&self) -> bool {
        self.components == 1
    }

    pub fn genera(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.genus as u32).collect()
    }

    pub fn obstruction(&self) -> Obstruction {
        cornqp_obstruction_shape(&self.genera(), self.b1, self.arrows.len())
    }

    fn vertex_id(&self, base: &PlumbingGraph, i: usize) -> String {
        let v = &self.vertices[i];
        format!("{}_{}", base.vertices()[v.base].id, v.component)
    }

    /// The cover in the graph file format, with Euler numbers set to 0.
    pub fn to_graph_text(&self, base: &PlumbingGraph) -> String {
        let mut out = String::new();
        writeln!(out, "# {}-fold cyclic cover: genus and cycle shape only, Euler numbers are placeholders", self.n)
            .unwrap();
        let vertices: Vec<Vertex> = (0..self.vertices.len())
            .map(|i| Vertex { id: self.vertex_id(base, i), euler: 0, genus: self.vertices[i].genus as u32 })
            .collect();
        let edges: Vec<(String, String)> =
            self.edges.iter().map(|&(a, b)| (self.vertex_id(base, a), self.vertex_id(base, b))).collect();
        let arrows: Vec<(String, u32)> =
            self.arrows.iter().map(|a| (self.vertex_id(base, a.vertex), a.branch)).collect();
        let g = PlumbingGraph::new(vertices, &edges, &arrows).expect("cover ids are distinct");
        out.push_str(&to_canonical_string(&g));
        out
    }
}

fn count_components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut count = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// The `j`-th preimage of an edge `{v, w}` joins component `j mod c_v` over
/// `v` to component `j mod c_w` over `w`; each arrow lifts once, to
/// component 0.
pub fn cyclic_cover(g: &PlumbingGraph, mt: &MultiplicityTable, n: u64) -> Result<CoverGraph, CoverError> {
    if n < 2 {
        return Err(CoverError::Degree(n));
    }
    if let Some(v) = g.vertices().iter().find(|v| v.genus > 0) {
        return Err(CoverError::PositiveGenus(v.id.clone()));
    }
    let data = vertex_data(g, mt, n)?;
    let totals = mt.totals();
    let mut first = Vec::with_capacity(data.len());
    let mut vertices = Vec::new();
    for d in &data {
        first.push(vertices.len());
        for c in 0..d.components {
            vertices.push(CoverVertex { base: d.vertex, component: c, genus: d.genus });
        }
    }
    let mut edges = Vec::new();
    for e in g.edges() {
        let count = edge_preimage_count(n, totals[e.a], totals[e.b]);
        for j in 0..count {
            let a = first[e.a] + (j % data[e.a].components) as usize;
            let b = first[e.b] + (j % data[e.b].components) as usize;
            edges.push((a, b));
        }
    }
    let arrows = g.arrows().iter().map(|a| CoverArrow { vertex: first[a.vertex], branch: a.branch }).collect();
    let components = count_components(vertices.len(), &edges);
    let b1 = edges.len() + components - vertices.len();
    Ok(CoverGraph { n, vertices, edges, arrows, components, b1 })
}
