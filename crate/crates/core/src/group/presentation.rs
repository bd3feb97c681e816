use std::fmt;

use thiserror::Error;

use super::Word;
use crate::graph::OrderedGraph;

/// Where a generator comes from. Indices refer to the base plumbing graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Fiber class of a vertex.
    Vertex(usize),
    /// Meridian of an arrowhead (index into the graph's arrows).
    Arrow(usize),
    /// Loop through an edge outside the spanning tree.
    Edge(usize),
    Alpha { vertex: usize, j: u32 },
    Beta { vertex: usize, j: u32 },
    /// A generator of a presentation not built from a graph.
    Named(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelatorKind {
    /// Vertex relation (edge conjugates, arrowheads, Euler power, genus commutators).
    Vertex,
    /// Arrowhead commutes with its vertex fiber.
    Arrow,
    /// Fiber commutation across an extra edge.
    Edge,
    /// Fiber commutes with the genus generators.
    Genus,
    Derived,
}

impl RelatorKind {
    pub fn tag(&self) -> &'static str {
        match self {
            RelatorKind::Vertex => "r1",
            RelatorKind::Arrow => "r2",
            RelatorKind::Edge => "r3",
            RelatorKind::Genus => "r4",
            RelatorKind::Derived => "derived",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub word: Word,
    pub kind: RelatorKind,
    /// For graph relators: the vertex, arrow or edge index the relator belongs to.
    pub source: Option<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("malformed token `{0}`")]
    BadToken(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    names: Vec<String>,
    relators: Vec<Relator>,
    /// The arrow relator dropped as redundant, if any.
    omitted: Option<Relator>,
}

impl Presentation {
    pub fn new(generators: Vec<Generator>, names: Vec<String>, relators: Vec<Relator>) -> Self {
        assert_eq!(generators.len(), names.len());
        for r in &relators {
            assert!(r.word.generators().all(|g| g < generators.len()), "relator uses unknown generator");
        }
        Presentation { generators, names, relators, omitted: None }
    }

    /// Builds a presentation from generator names and relators written as
    /// space-separated tokens `name` or `name^k`.
    pub fn from_strings(generators: &[&str], relators: &[&str]) -> Result<Self, PresentationError> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PresentationError::DuplicateGenerator(n.clone()));
            }
        }
        let gens = names.iter().cloned().map(Generator::Named).collect();
        let mut rels = Vec::new();
        for text in relators {
            let word = parse_word(text, &names)?;
            rels.push(Relator { word, kind: RelatorKind::Derived, source: None });
        }
        Ok(Presentation::new(gens, names, rels))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    pub fn omitted(&self) -> Option<&Relator> {
        self.omitted.as_ref()
    }

    pub fn index_of(&self, g: &Generator) -> Option<usize> {
        self.generators.iter().position(|h| h == g)
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The same group with the omitted arrow relator put back at the end of
    /// the arrow block.
    pub fn with_all_relators(&self) -> Presentation {
        let mut p = self.clone();
        if let Some(r) = p.omitted.take() {
            let pos = p
                .relators
                .iter()
                .rposition(|x| x.kind == RelatorKind::Arrow)
                .map(|i| i + 1)
                .unwrap_or_else(|| p.relators.iter().take_while(|x| x.kind == RelatorKind::Vertex).count());
            p.relators.insert(pos, r);
        }
        p
    }

    pub(crate) fn from_parts(
        generators: Vec<Generator>,
        names: Vec<String>,
        relators: Vec<Relator>,
        omitted: Option<Relator>,
    ) -> Self {
        Presentation { generators, names, relators, omitted }
    }
}

fn parse_word(text: &str, names: &[String]) -> Result<Word, PresentationError> {
    let mut syl = Vec::new();
    for tok in text.split_whitespace() {
        let (name, exp) = match tok.split_once('^') {
            Some((n, e)) => (n, e.parse::<i64>().map_err(|_| PresentationError::BadToken(tok.to_string()))?),
            None => (tok, 1),
        };
        let g = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| PresentationError::UnknownGenerator(name.to_string()))?;
        syl.push((g, exp));
    }
    Ok(Word::new(syl))
}

fn strip_v(id: &str) -> &str {
    match id.strip_prefix('v') {
        Some(rest) if !rest.is_empty() => rest,
        _ => id,
    }
}

/// The presentation with generators of vertex, arrowhead, extra-edge and
/// genus type, and relators of the four graph types. When the graph has
/// arrows, the commutator of the last arrowhead is dropped (it follows from
/// the others).
pub fn presentation(og: &OrderedGraph) -> Presentation {
    let g = og.base();
    let mut generators = Vec::new();
    let mut names = Vec::new();

    let mut vertex_gen = vec![0; g.vertex_count()];
    for &v in og.vertex_order() {
        vertex_gen[v] = generators.len();
        generators.push(Generator::Vertex(v));
        names.push(format!("gv{}", strip_v(&g.vertices()[v].id)));
    }
    let mut arrow_gen = vec![0; g.arrows().len()];
    for (k, &h) in og.arrow_order().iter().enumerate() {
        arrow_gen[h] = generators.len();
        generators.push(Generator::Arrow(h));
        names.push(format!("gh{}", k + 1));
    }
    let mut edge_gen = vec![None; g.edges().len()];
    for (k, &e) in og.extra_edges().iter().enumerate() {
        edge_gen[e] = Some(generators.len());
        generators.push(Generator::Edge(e));
        names.push(format!("ge{}", k + 1));
    }
    let mut genus_gen: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.vertex_count()];
    for &v in og.vertex_order() {
        let id = strip_v(&g.vertices()[v].id);
        for j in 1..=g.vertices()[v].genus {
            let a = generators.len();
            generators.push(Generator::Alpha { vertex: v, j });
            names.push(format!("a{j}v{id}"));
            let b = generators.len();
            generators.push(Generator::Beta { vertex: v, j });
            names.push(format!("b{j}v{id}"));
            genus_gen[v].push((a, b));
        }
    }

    // gamma_{e->} seen from v: identity on tree edges, gamma_e or its inverse otherwise
    let edge_word = |e: usize, from: usize| -> Word {
        match edge_gen[e] {
            None => Word::identity(),
            Some(ge) => {
                let (lo, _) = og.oriented(e);
                if lo == from {
                    Word::generator(ge)
                } else {
                    Word::power(ge, -1)
                }
            }
        }
    };

    let mut relators = Vec::new();
    for &v in og.vertex_order() {
        let mut w = Word::identity();
        for &e in og.edges_at(v) {
            let far = g.edges()[e].other(v);
            w = w.concat(&Word::conjugate(&edge_word(e, v), &Word::generator(vertex_gen[far])));
        }
        for &h in og.arrows_at(v) {
            w = w.concat(&Word::generator(arrow_gen[h]));
        }
        w = w.concat(&Word::power(vertex_gen[v], g.vertices()[v].euler));
        let mut genus_product = Word::identity();
        for &(a, b) in &genus_gen[v] {
            genus_product = genus_product.concat(&Word::commutator(&Word::generator(a), &Word::generator(b)));
        }
        w = w.concat(&genus_product.inverse());
        relators.push(Relator { word: w, kind: RelatorKind::Vertex, source: Some(v) });
    }
    let mut arrow_relators = Vec::new();
    for &h in og.arrow_order() {
        let v = g.arrows()[h].vertex;
        let w = Word::commutator(&Word::generator(vertex_gen[v]), &Word::generator(arrow_gen[h]));
        arrow_relators.push(Relator { word: w, kind: RelatorKind::Arrow, source: Some(h) });
    }
    let omitted = arrow_relators.pop();
    relators.extend(arrow_relators);
    for &e in og.extra_edges() {
        let (lo, hi) = og.oriented(e);
        let conj = Word::conjugate(&edge_word(e, lo), &Word::generator(vertex_gen[hi]));
        let w = Word::commutator(&Word::generator(vertex_gen[lo]), &conj);
        relators.push(Relator { word: w, kind: RelatorKind::Edge, source: Some(e) });
    }
    for &v in og.vertex_order() {
        for &(a, b) in &genus_gen[v] {
            let fiber = Word::generator(vertex_gen[v]);
            relators.push(Relator {
                word: Word::commutator(&fiber, &Word::generator(a)),
                kind: RelatorKind::Genus,
                source: Some(v),
            });
            relators.push(Relator {
                word: Word::commutator(&fiber, &Word::generator(b)),
                kind: RelatorKind::Genus,
                source: Some(v),
            });
        }
    }

    Presentation::from_parts(generators, names, relators, omitted)
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.names.join(" "))?;
        for r in &self.relators {
            writeln!(f, "{}: {}", r.kind.tag(), r.word.display(&self.names))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{choose_tree_and_orders, parse_graph};

    const TWO_BRANCH: &str = include_str!("../../tests/fixtures/two_branch.pg");
    const CLOSED: &str = include_str!("../../tests/fixtures/closed.pg");

    fn pres(text: &str) -> Presentation {
        let g = parse_graph(text).unwrap();
        presentation(&choose_tree_and_orders(&g, None).unwrap())
    }

    fn words(p: &Presentation) -> Vec<String> {
        p.relators().iter().map(|r| r.word.display(p.names()).to_string()).collect()
    }

    #[test]
    fn two_branch_relators() {
        let p = pres(TWO_BRANCH);
        assert_eq!(p.names(), &["gv1", "gv2", "gv4", "gv3", "gh1", "gh2"]);
        assert_eq!(
            words(&p),
            vec!["gv2 gv1^-2", "gv1 gv4 gh1 gv2^-3", "gv2 gv3 gh2 gv4^-1", "gv4 gv3^-2", "gv2 gh1 gv2^-1 gh1^-1"]
        );
        let omitted = p.omitted().unwrap();
        assert_eq!(omitted.word.display(p.names()).to_string(), "gv4 gh2 gv4^-1 gh2^-1");
        assert_eq!(p.with_all_relators().relator_count(), p.generator_count());
    }

    #[test]
    fn closed_relators() {
        let p = pres(CLOSED);
        assert_eq!(p.names(), &["gv1", "gv2", "ge1"]);
        assert_eq!(
            words(&p),
            vec![
                "gv2 ge1 gv2 ge1^-1 gv1^-5",
                "gv1 ge1^-1 gv1 ge1 gv2^-1",
                "gv1 ge1 gv2 ge1^-1 gv1^-1 ge1 gv2^-1 ge1^-1",
            ]
        );
        assert!(p.omitted().is_none());
    }

    #[test]
    fn unknot_relator() {
        let p = pres("V v1 -1 0\nA v1 1\n");
        assert_eq!(words(&p), vec!["gh1 gv1^-1"]);
    }

    #[test]
    fn genus_generators() {
        let p = pres("V v1 -1 1\nA v1 1\n");
        assert_eq!(p.names(), &["gv1", "gh1", "a1v1", "b1v1"]);
        assert_eq!(
            words(&p),
            vec!["gh1 gv1^-1 b1v1 a1v1 b1v1^-1 a1v1^-1", "gv1 a1v1 gv1^-1 a1v1^-1", "gv1 b1v1 gv1^-1 b1v1^-1"]
        );
    }

    #[test]
    fn from_strings_errors() {
        assert_eq!(
            Presentation::from_strings(&["x"], &["y"]).unwrap_err(),
            PresentationError::UnknownGenerator("y".into())
        );
        assert!(Presentation::from_strings(&["x", "x"], &[]).is_err());
        assert!(Presentation::from_strings(&["x"], &["x^q"]).is_err());
    }
}
