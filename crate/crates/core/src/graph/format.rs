//! Line-based graph file format:
//!
//! ```text
//! # comment
//! V <id> <euler> <genus>
//! E <id> <id>
//! A <id> <branch>
//! ```

use std::fmt::Write;

use thiserror::Error;

use super::{natural_cmp, Diagnostic, GraphError, PlumbingGraph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("no vertices")]
    NoVertices,
    #[error("{0}")]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

/// Parses the V/E/A format. Rejects duplicate vertex ids, unknown references
/// and loop edges; connectivity and labels are left to `validate`.
pub fn parse_graph(text: &str) -> Result<PlumbingGraph, ParseError> {
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut arrows: Vec<(String, u32)> = Vec::new();
    let mut refs: Vec<(usize, usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        // (column, token), 1-based columns
        let mut tokens: Vec<(usize, &str)> = Vec::new();
        let mut offset = 0;
        for tok in content.split_whitespace() {
            let pos = content[offset..].find(tok).unwrap() + offset;
            tokens.push((pos + 1, tok));
            offset = pos + tok.len();
        }
        let Some(&(col, kind)) = tokens.first() else { continue };
        let expect = |n: usize| -> Result<(), ParseError> {
            if tokens.len() != n {
                Err(syntax(line, col, format!("`{kind}` record takes {} fields, found {}", n - 1, tokens.len() - 1)))
            } else {
                Ok(())
            }
        };
        match kind {
            "V" => {
                expect(4)?;
                let (c, id) = tokens[1];
                if vertices.iter().any(|v| v.id == id) {
                    return Err(syntax(line, c, format!("duplicate vertex id `{id}`")));
                }
                let (c, e) = tokens[2];
                let euler = e.parse::<i64>().map_err(|_| syntax(line, c, format!("invalid Euler number `{e}`")))?;
                let (c, gs) = tokens[3];
                let genus = gs.parse::<u32>().map_err(|_| syntax(line, c, format!("invalid genus `{gs}`")))?;
                vertices.push(Vertex { id: id.to_string(), euler, genus });
            }
            "E" => {
                expect(3)?;
                let (ca, a) = tokens[1];
                let (cb, b) = tokens[2];
                if a == b {
                    return Err(syntax(line, cb, format!("loop edge at `{a}`")));
                }
                refs.push((line, ca, a.to_string()));
                refs.push((line, cb, b.to_string()));
                edges.push((a.to_string(), b.to_string()));
            }
            "A" => {
                expect(3)?;
                let (cv, v) = tokens[1];
                let (c, bs) = tokens[2];
                let branch = bs.parse::<u32>().map_err(|_| syntax(line, c, format!("invalid branch label `{bs}`")))?;
                if branch == 0 {
                    return Err(syntax(line, c, "branch labels start at 1"));
                }
                refs.push((line, cv, v.to_string()));
                arrows.push((v.to_string(), branch));
            }
            other => return Err(syntax(line, col, format!("unknown record `{other}`"))),
        }
    }

    if vertices.is_empty() {
        return Err(ParseError::NoVertices);
    }
    for (line, col, id) in &refs {
        if !vertices.iter().any(|v| &v.id == id) {
            return Err(syntax(*line, *col, format!("unknown vertex id `{id}`")));
        }
    }
    Ok(PlumbingGraph::new(vertices, &edges, &arrows)?)
}

/// Canonical text: vertices by id, edges lexicographic on (low id, high id),
/// arrows by (vertex id, branch).
pub fn to_canonical_string(g: &PlumbingGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "V {} {} {}", v.id, v.euler, v.genus).unwrap();
    }
    // vertex indices already follow natural id order
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.a.min(e.b), e.a.max(e.b))).collect();
    edges.sort();
    for (a, b) in edges {
        writeln!(out, "E {} {}", g.vertices()[a].id, g.vertices()[b].id).unwrap();
    }
    let mut arrows: Vec<(usize, u32)> = g.arrows().iter().map(|a| (a.vertex, a.branch)).collect();
    arrows.sort();
    for (v, b) in arrows {
        writeln!(out, "A {} {}", g.vertices()[v].id, b).unwrap();
    }
    debug_assert!(g.vertices().windows(2).all(|w| natural_cmp(&w[0].id, &w[1].id).is_lt()));
    out
}

impl PlumbingGraph {
    pub fn diagnostics_text(&self) -> Vec<String> {
        self.validate().iter().map(Diagnostic::to_string).collect()
    }
}
