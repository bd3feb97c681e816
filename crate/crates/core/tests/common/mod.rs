//! Shared fixtures: the hand-written graph files, resolution graphs built by
//! simulating point blow-ups, and random graphs for the property checks.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plumbing::graph::{parse_graph, PlumbingGraph, Vertex};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture(name: &str) -> PlumbingGraph {
    parse_graph(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

/// Where a branch of the curve meets the current exceptional divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Place {
    /// A smooth point of divisor `v`, labelled to tell tangent groups apart.
    Free(usize, u32),
    /// The intersection point of the two divisors of edge `e`.
    Corner(usize),
}

struct Resolution {
    euler: Vec<i64>,
    edges: Vec<(usize, usize)>,
    arrows: Vec<Place>,
    next_label: u32,
}

impl Resolution {
    fn label(&mut self) -> u32 {
        self.next_label += 1;
        self.next_label
    }

    /// Blows up `place`; the branches through it are redistributed over
    /// points of the new divisor, either separated or still grouped, and
    /// possibly through one of its corners.
    fn blow_up(&mut self, place: Place, separate: bool, rng: &mut ChaCha8Rng) {
        let u = self.euler.len();
        self.euler.push(-1);
        let corners = match place {
            Place::Free(v, _) => {
                self.euler[v] -= 1;
                self.edges.push((v, u));
                vec![self.edges.len() - 1]
            }
            Place::Corner(e) => {
                let (v, w) = self.edges[e];
                self.euler[v] -= 1;
                self.euler[w] -= 1;
                self.edges[e] = (v, u);
                self.edges.push((u, w));
                vec![e, self.edges.len() - 1]
            }
        };
        let through: Vec<usize> = (0..self.arrows.len()).filter(|&h| self.arrows[h] == place).collect();
        if separate {
            for h in through {
                let l = self.label();
                self.arrows[h] = Place::Free(u, l);
            }
            return;
        }
        let groups = rng.gen_range(1..=through.len().max(1));
        let targets: Vec<Place> = (0..groups)
            .map(|_| {
                if rng.gen_bool(0.35) {
                    Place::Corner(*corners.choose(rng).unwrap())
                } else {
                    Place::Free(u, self.label())
                }
            })
            .collect();
        for h in through {
            self.arrows[h] = *targets.choose(rng).unwrap();
        }
    }

    fn unresolved(&self) -> Vec<Place> {
        let mut out: Vec<Place> = Vec::new();
        for (h, &p) in self.arrows.iter().enumerate() {
            let shared = self.arrows.iter().enumerate().any(|(k, &q)| k != h && q == p);
            if (shared || matches!(p, Place::Corner(_))) && !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    fn graph(&self) -> PlumbingGraph {
        let id = |v: usize| format!("v{}", v + 1);
        let vertices = (0..self.euler.len()).map(|v| Vertex { id: id(v), euler: self.euler[v], genus: 0 }).collect();
        let edges: Vec<(String, String)> = self.edges.iter().map(|&(a, b)| (id(a), id(b))).collect();
        let arrows: Vec<(String, u32)> = self
            .arrows
            .iter()
            .enumerate()
            .map(|(h, p)| match p {
                Place::Free(v, _) => (id(*v), h as u32 + 1),
                Place::Corner(_) => unreachable!("unresolved branch"),
            })
            .collect();
        PlumbingGraph::new(vertices, &edges, &arrows).unwrap()
    }
}

/// Embedded resolution graph of a random plane-curve germ with `r`
/// branches: blow up the origin, then keep blowing up points where branches
/// are tangent or pass through a corner, for at most `steps` random moves
/// before forcing separation.
pub fn random_resolution(seed: u64, r: usize, steps: usize) -> PlumbingGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = Resolution { euler: vec![-1], edges: Vec::new(), arrows: Vec::new(), next_label: 0 };
    let directions = rng.gen_range(1..=r);
    let labels: Vec<u32> = (0..directions).map(|_| res.label()).collect();
    res.arrows = (0..r).map(|_| Place::Free(0, *labels.choose(&mut rng).unwrap())).collect();
    let mut moves = 0;
    loop {
        let open = res.unresolved();
        let Some(&place) = open.choose(&mut rng) else { break };
        res.blow_up(place, moves >= steps, &mut rng);
        moves += 1;
    }
    res.graph()
}

fn resolutions_with(branching: impl Fn(usize) -> bool, count: usize, salt: u64) -> Vec<PlumbingGraph> {
    let mut out = Vec::new();
    let mut seed = salt;
    while out.len() < count {
        let r = 1 + (seed % 3) as usize;
        let g = random_resolution(seed, r, 5);
        if branching(g.branching_vertices().len()) {
            out.push(g);
        }
        seed += 1;
    }
    out
}

/// Resolution graphs with at least two branching vertices.
pub fn two_cluster_fixtures(count: usize) -> Vec<PlumbingGraph> {
    resolutions_with(|b| b >= 2, count, 1000)
}

/// Resolution graphs with exactly one branching vertex.
pub fn one_branching_fixtures(count: usize) -> Vec<PlumbingGraph> {
    resolutions_with(|b| b == 1, count, 5000)
}

/// Star with legs given by continued fractions `[a_1, ..., a_k]` (entries
/// `>= 2`), a central vertex of Euler number `center` and `arrows` arrows on
/// it. The legs carry `-a_i`.
pub fn star(center: i64, legs: &[&[i64]], arrows: u32) -> PlumbingGraph {
    let mut vertices = vec![Vertex { id: "c".into(), euler: center, genus: 0 }];
    let mut edges = Vec::new();
    for (i, leg) in legs.iter().enumerate() {
        let mut prev = "c".to_string();
        for (j, &a) in leg.iter().enumerate() {
            let id = format!("l{i}x{j}");
            vertices.push(Vertex { id: id.clone(), euler: -a, genus: 0 });
            edges.push((prev, id.clone()));
            prev = id;
        }
    }
    let arrows: Vec<(String, u32)> = (1..=arrows).map(|b| ("c".to_string(), b)).collect();
    PlumbingGraph::new(vertices, &edges, &arrows).unwrap()
}

/// Connected multigraph with random genera, Euler numbers and arrows; no
/// definiteness guarantee.
pub fn random_graph(rng: &mut ChaCha8Rng) -> PlumbingGraph {
    let n = rng.gen_range(1..=5);
    let mut vertices = Vec::new();
    for v in 0..n {
        vertices.push(Vertex { id: format!("v{}", v + 1), euler: rng.gen_range(-3..=3), genus: rng.gen_range(0..=1) });
    }
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((format!("v{}", rng.gen_range(0..v) + 1), format!("v{}", v + 1)));
    }
    if n >= 2 {
        for _ in 0..rng.gen_range(0..=2) {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n);
            while b == a {
                b = rng.gen_range(0..n);
            }
            edges.push((format!("v{}", a + 1), format!("v{}", b + 1)));
        }
    }
    let r = rng.gen_range(0..=3);
    let arrows: Vec<(String, u32)> = (0..r).map(|h| (format!("v{}", rng.gen_range(0..n) + 1), h as u32 + 1)).collect();
    PlumbingGraph::new(vertices, &edges, &arrows).unwrap()
}

/// Negative definite (strictly diagonally dominant) graph with at least one
/// positive-genus vertex.
pub fn random_genus_graph(rng: &mut ChaCha8Rng) -> PlumbingGraph {
    let n = rng.gen_range(1..=4);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    if n >= 2 && rng.gen_bool(0.4) {
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        edges.push((a, b));
    }
    let mut genus: Vec<u32> = (0..n).map(|_| if rng.gen_bool(0.4) { rng.gen_range(1..=2) } else { 0 }).collect();
    if genus.iter().all(|&g| g == 0) {
        genus[rng.gen_range(0..n)] = 1;
    }
    let vertices = (0..n)
        .map(|v| {
            let degree = edges.iter().filter(|&&(a, b)| a == v || b == v).count() as i64;
            Vertex { id: format!("v{}", v + 1), euler: -degree - rng.gen_range(1..=2), genus: genus[v] }
        })
        .collect();
    let edges: Vec<(String, String)> =
        edges.into_iter().map(|(a, b)| (format!("v{}", a + 1), format!("v{}", b + 1))).collect();
    let r = rng.gen_range(0..=2);
    let arrows: Vec<(String, u32)> = (0..r).map(|h| (format!("v{}", rng.gen_range(0..n) + 1), h as u32 + 1)).collect();
    PlumbingGraph::new(vertices, &edges, &arrows).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
