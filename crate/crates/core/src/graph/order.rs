//! Spanning tree and the orders on vertices, edges and arrowheads that fix
//! the group presentation.

use std::collections::VecDeque;

use super::{GraphError, PlumbingGraph};

/// A plumbing graph together with a rooted spanning tree and the induced
/// orders. All index vectors refer to positions in the base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGraph {
    base: PlumbingGraph,
    root: usize,
    /// Vertices in increasing order.
    vertex_order: Vec<usize>,
    /// `rank[v]` is the position of `v` in `vertex_order`.
    rank: Vec<usize>,
    in_tree: Vec<bool>,
    /// Per vertex, incident edges ordered by (rank of the far end, position in E_{v,w}).
    edges_at: Vec<Vec<usize>>,
    /// Per vertex, incident arrows in input order.
    arrows_at: Vec<Vec<usize>>,
    /// All arrowheads in the global order.
    arrow_order: Vec<usize>,
    /// Edges outside the tree, ordered by (rank of low end, rank of high end, position).
    extra_edges: Vec<usize>,
}

pub fn choose_tree_and_orders(g: &PlumbingGraph, root: Option<&str>) -> Result<OrderedGraph, GraphError> {
    g.ensure_valid()?;
    let n = g.vertex_count();
    let root = match root {
        None => 0,
        Some(id) => g.vertex_index(id).ok_or_else(|| GraphError::UnknownRoot(id.to_string()))?,
    };

    // incident edges sorted by (far end index, input position)
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        incident[e.a].push(i);
        incident[e.b].push(i);
    }
    for (v, list) in incident.iter_mut().enumerate() {
        list.sort_by_key(|&i| (g.edges()[i].other(v), i));
    }

    let mut rank = vec![usize::MAX; n];
    let mut in_tree = vec![false; g.edges().len()];
    let mut vertex_order = Vec::with_capacity(n);
    rank[root] = 0;
    vertex_order.push(root);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &i in &incident[u] {
            let w = g.edges()[i].other(u);
            if rank[w] == usize::MAX {
                rank[w] = vertex_order.len();
                vertex_order.push(w);
                in_tree[i] = true;
                queue.push_back(w);
            }
        }
    }

    // E_{v,w}: tree edge first, then input order
    let pair_position = |i: usize| -> (bool, usize) { (!in_tree[i], i) };
    let edges_at = (0..n)
        .map(|v| {
            let mut list = incident[v].clone();
            list.sort_by_key(|&i| (rank[g.edges()[i].other(v)], pair_position(i)));
            list
        })
        .collect();

    let mut arrows_at = vec![Vec::new(); n];
    for (h, a) in g.arrows().iter().enumerate() {
        arrows_at[a.vertex].push(h);
    }
    let arrow_order = vertex_order.iter().flat_map(|&v| arrows_at[v].iter().copied()).collect();

    let mut extra_edges: Vec<usize> = (0..g.edges().len()).filter(|&i| !in_tree[i]).collect();
    extra_edges.sort_by_key(|&i| {
        let e = g.edges()[i];
        let (lo, hi) = if rank[e.a] < rank[e.b] { (rank[e.a], rank[e.b]) } else { (rank[e.b], rank[e.a]) };
        (lo, hi, i)
    });

    Ok(OrderedGraph {
        base: g.clone(),
        root,
        vertex_order,
        rank,
        in_tree,
        edges_at,
        arrows_at,
        arrow_order,
        extra_edges,
    })
}

impl OrderedGraph {
    pub fn base(&self) -> &PlumbingGraph {
        &self.base
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_order(&self) -> &[usize] {
        &self.vertex_order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn in_tree(&self, edge: usize) -> bool {
        self.in_tree[edge]
    }

    pub fn tree_edges(&self) -> Vec<usize> {
        (0..self.in_tree.len()).filter(|&i| self.in_tree[i]).collect()
    }

    /// Ordered edge set `E_v`.
    pub fn edges_at(&self, v: usize) -> &[usize] {
        &self.edges_at[v]
    }

    /// Ordered arrowheads `H_v`.
    pub fn arrows_at(&self, v: usize) -> &[usize] {
        &self.arrows_at[v]
    }

    pub fn arrow_order(&self) -> &[usize] {
        &self.arrow_order
    }

    /// Ordered `E*`.
    pub fn extra_edges(&self) -> &[usize] {
        &self.extra_edges
    }

    /// The endpoints of `edge` as `(v1, v2)` with `v1 < v2` in the vertex order.
    pub fn oriented(&self, edge: usize) -> (usize, usize) {
        let e = self.base.edges()[edge];
        if self.rank[e.a] < self.rank[e.b] {
            (e.a, e.b)
        } else {
            (e.b, e.a)
        }
    }

    /// Parent of each non-root vertex in the rooted tree.
    pub fn parent(&self, v: usize) -> Option<usize> {
        if v == self.root {
            return None;
        }
        self.base
            .edges()
            .iter()
            .enumerate()
            .find(|&(i, e)| self.in_tree[i] && e.touches(v) && self.rank[e.other(v)] < self.rank[v])
            .map(|(_, e)| e.other(v))
    }
}
