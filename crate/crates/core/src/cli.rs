//! The `plumb` command line: reads a graph file, dispatches to the library
//! and renders text or JSON. `run` returns the exit code and both streams so
//! it can be driven from tests.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::alexander::{acampo_single, en_multivariable, essential_variable_report, expand};
use crate::charvar::{
    dim_h1_matrix, sample_stratum, CharacterTorus, ChartValue, CoordKind, CoordValue, DEFAULT_TOL,
};
use crate::cover::cyclic_cover;
use crate::fox::{fox_matrix_blocks, fox_matrix_generic};
use crate::graph::{choose_tree_and_orders, parse_graph, solve_multiplicities, PlumbingGraph};
use crate::group::{abelianize, presentation, tietze_eliminate, Presentation};
use crate::qp::{classify, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSTABLE: i32 = 3;
pub const EXIT_NOT_QP: i32 = 10;

#[derive(Parser, Debug)]
#[command(name = "plumb", version, about = "Invariants of plumbed graph manifolds and their links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Graph file (V/E/A records).
    pub file: PathBuf,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct CharacterArgs {
    /// Coordinate values, e.g. `t4=1,t5=-1,t2=0.5+1.5i,u1=zeta(1,2)`.
    #[arg(long)]
    pub fix: Option<String>,
    /// Chart coordinate as a word in the generators, e.g. `t4=gv3 gv1^-1`.
    /// Repeat once per coordinate; default is the Smith chart.
    #[arg(long)]
    pub chart: Vec<String>,
    /// Relative singular-value threshold for the rank.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the graph and print a summary.
    Validate(Input),
    /// First homology; with `--fix`, dim H^1 at a character (unfixed coordinates are 1).
    H1 {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        character: CharacterArgs,
    },
    /// Branch multiplicities.
    Mult(Input),
    /// Presentation of the fundamental group.
    Present {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        simplify: bool,
    },
    /// Fox matrix over the group ring of H_1.
    Fox {
        #[command(flatten)]
        input: Input,
        /// Differentiate the simplified presentation instead.
        #[arg(long)]
        simplify: bool,
    },
    /// Alexander polynomial.
    Alex {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "single")]
        multi: bool,
        #[arg(long)]
        single: bool,
        #[arg(long)]
        expand: bool,
    },
    /// Cyclic branched cover along the link.
    Cover {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: u64,
        /// Write the cover shape as a graph file.
        #[arg(long)]
        emit_graph: Option<PathBuf>,
    },
    /// Quasi-projectivity verdict.
    Qp(Input),
    /// dim H^1 at random characters, with some coordinates fixed.
    Scan {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        character: CharacterArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure(i32, String);

fn input_error(msg: impl ToString) -> Failure {
    Failure(EXIT_INPUT, msg.to_string())
}

pub fn parse_graph_file(bytes: &[u8]) -> Result<PlumbingGraph, String> {
    let text = std::str::from_utf8(bytes).map_err(|e| format!("input is not UTF-8: {e}"))?;
    parse_graph(text).map_err(|e| e.to_string())
}

fn load(input: &Input) -> Result<PlumbingGraph, Failure> {
    let bytes = std::fs::read(&input.file).map_err(|e| input_error(format!("{}: {e}", input.file.display())))?;
    parse_graph_file(&bytes).map_err(|e| input_error(format!("{}: {e}", input.file.display())))
}

fn load_valid(input: &Input) -> Result<PlumbingGraph, Failure> {
    let g = load(input)?;
    if let Some(d) = g.validate().first() {
        return Err(input_error(format!("{}: {d}", input.file.display())));
    }
    Ok(g)
}

fn graph_presentation(g: &PlumbingGraph) -> Result<Presentation, Failure> {
    let og = choose_tree_and_orders(g, None).map_err(input_error)?;
    Ok(presentation(&og))
}

/// `1`, `-2.5`, `0.5+1.5i`, `-i`, `3e-2-1e1i`.
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let s = s.trim();
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let imag = |t: &str| -> Option<f64> {
        match t {
            "" | "+" => Some(1.0),
            "-" => Some(-1.0),
            _ => t.parse().ok(),
        }
    };
    match split {
        Some(i) => Some(Complex64::new(body[..i].parse().ok()?, imag(&body[i..])?)),
        None => Some(Complex64::new(0.0, imag(body)?)),
    }
}

/// `name=value` pairs separated by commas outside parentheses.
pub fn parse_fix(s: &str) -> Result<Vec<(String, CoordValue)>, String> {
    let mut items = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(&s[start..]);
    items
        .into_iter()
        .filter(|t| !t.trim().is_empty())
        .map(|item| {
            let (name, value) = item.split_once('=').ok_or_else(|| format!("expected name=value, found `{item}`"))?;
            let value = value.trim();
            let v = if let Some(inner) = value.strip_prefix("zeta(").and_then(|r| r.strip_suffix(')')) {
                let (p, q) = inner.split_once(',').ok_or_else(|| format!("expected zeta(P,Q), found `{value}`"))?;
                let p: i64 = p.trim().parse().map_err(|_| format!("bad numerator in `{value}`"))?;
                let q: i64 = q.trim().parse().map_err(|_| format!("bad denominator in `{value}`"))?;
                if q <= 0 {
                    return Err(format!("denominator must be positive in `{value}`"));
                }
                CoordValue::Zeta(p, q)
            } else {
                CoordValue::Complex(parse_complex(value).ok_or_else(|| format!("bad number `{value}`"))?)
            };
            Ok((name.trim().to_string(), v))
        })
        .collect()
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn format_chart_value(v: ChartValue) -> String {
    match v {
        ChartValue::Free(z) => format_complex(z),
        ChartValue::Root(k, d) => format!("zeta({k},{d})"),
    }
}

fn exponent_word(exps: &[i64], names: &[String]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(e, _)| **e != 0)
        .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

fn torus_for(p: &Presentation, args: &CharacterArgs) -> Result<CharacterTorus, Failure> {
    let ab = abelianize(p);
    if args.chart.is_empty() {
        return Ok(CharacterTorus::standard(&ab));
    }
    let mut coords = Vec::new();
    for c in &args.chart {
        let (name, word) = c.split_once('=').ok_or_else(|| input_error(format!("expected name=word, found `{c}`")))?;
        coords.push((name.trim(), word.trim()));
    }
    CharacterTorus::with_named_chart(p, &ab, &coords).map_err(input_error)
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_validate(input: &Input) -> Result<(i32, String), Failure> {
    let g = load(input)?;
    let diags = g.diagnostics_text();
    let nd = g.is_negative_definite();
    if input.json {
        let v = json!({
            "schema": 1,
            "valid": diags.is_empty(),
            "diagnostics": diags,
            "vertices": g.vertex_count(),
            "edges": g.edges().len(),
            "arrows": g.arrows().len(),
            "b1": g.first_betti(),
            "tree": g.is_tree(),
            "negative_definite": nd,
            "branching_vertices": g.branching_vertices().len(),
        });
        return Ok((if diags.is_empty() { EXIT_OK } else { EXIT_INPUT }, json_text(&v)));
    }
    let mut out = String::new();
    if !diags.is_empty() {
        for d in &diags {
            writeln!(out, "error: {d}").unwrap();
        }
        return Ok((EXIT_INPUT, out));
    }
    writeln!(
        out,
        "ok: {} vertices, {} edges, {} arrows, b1 = {}, {}, {}, {} branching vertices",
        g.vertex_count(),
        g.edges().len(),
        g.arrows().len(),
        g.first_betti(),
        if g.is_tree() { "tree" } else { "not a tree" },
        if nd { "negative definite" } else { "not negative definite" },
        g.branching_vertices().len()
    )
    .unwrap();
    Ok((EXIT_OK, out))
}

fn cmd_h1(input: &Input, args: &CharacterArgs) -> Result<(i32, String), Failure> {
    let g = load_valid(input)?;
    let p = graph_presentation(&g)?;
    let torus = torus_for(&p, args)?;
    let ab = torus.abelianization().clone();
    let mut code = EXIT_OK;
    let mut at = None;
    if let Some(fix) = &args.fix {
        let fixed = parse_fix(fix).map_err(input_error)?;
        let mut values: Vec<ChartValue> = torus
            .kinds()
            .iter()
            .map(|k| match k {
                CoordKind::Free => ChartValue::Free(Complex64::new(1.0, 0.0)),
                CoordKind::Torsion(d) => ChartValue::Root(0, *d),
            })
            .collect();
        for (name, v) in &fixed {
            let i = torus.index_of(name).ok_or_else(|| input_error(format!("unknown coordinate `{name}`")))?;
            values[i] = torus.chart_value(i, *v).map_err(input_error)?;
        }
        let xi = torus.character(&values).map_err(input_error)?;
        let f = fox_matrix_generic(&p);
        let h = dim_h1_matrix(&f, &xi, args.tol).map_err(input_error)?;
        if h.unstable {
            code = EXIT_UNSTABLE;
        }
        let coords: BTreeMap<String, String> =
            torus.names().iter().cloned().zip(values.iter().map(|v| format_chart_value(*v))).collect();
        at = Some((coords, h, f.ncols()));
    }
    let words: Vec<String> = torus.words().iter().map(|w| exponent_word(w, p.names())).collect();
    if input.json {
        let mut v = json!({
            "schema": 1,
            "rank": ab.rank(),
            "torsion": ab.torsion(),
            "chart": torus.names().iter().zip(&words).map(|(n, w)| json!({"name": n, "word": w})).collect::<Vec<_>>(),
        });
        if let Some((coords, h, _)) = &at {
            v["character"] = json!(coords);
            v["dim"] = json!(h.dim);
            v["flags"] = json!({"unstable": h.unstable, "rank": h.rank});
        }
        return Ok((code, json_text(&v)));
    }
    let mut out = String::new();
    writeln!(out, "rank: {}", ab.rank()).unwrap();
    writeln!(out, "torsion: {:?}", ab.torsion()).unwrap();
    for (n, w) in torus.names().iter().zip(&words) {
        writeln!(out, "{n} = {w}").unwrap();
    }
    if let Some((coords, h, m)) = at {
        let pairs: Vec<String> = coords.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "at {}: dim H1 = {} (rank {} of {} columns){}", pairs.join(", "), h.dim, h.rank, m, if h.unstable { ", UNSTABLE" } else { "" })
            .unwrap();
    }
    Ok((code, out))
}

fn cmd_mult(input: &Input) -> Result<(i32, String), Failure> {
    let g = load_valid(input)?;
    let mt = solve_multiplicities(&g).map_err(input_error)?;
    if input.json {
        let rows: Vec<Value> = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(v, x)| json!({"vertex": x.id, "branches": mt.vector(v), "total": mt.total(v)}))
            .collect();
        return Ok((EXIT_OK, json_text(&json!({"schema": 1, "vertices": rows, "lcm": mt.lcm_of_totals()}))));
    }
    let mut out = String::new();
    let heads: Vec<String> = (1..=mt.branch_count()).map(|i| format!("m{i}")).collect();
    writeln!(out, "vertex {} total", heads.join(" ")).unwrap();
    for (v, x) in g.vertices().iter().enumerate() {
        let cols: Vec<String> = mt.vector(v).iter().map(u64::to_string).collect();
        writeln!(out, "{} {} {}", x.id, cols.join(" "), mt.total(v)).unwrap();
    }
    writeln!(out, "lcm: {}", mt.lcm_of_totals()).unwrap();
    Ok((EXIT_OK, out))
}

fn presentation_json(p: &Presentation) -> Value {
    json!({
        "schema": 1,
        "generators": p.names(),
        "relators": p.relators().iter().map(|r| json!({"kind": r.kind.tag(), "word": r.word.display(p.names()).to_string()})).collect::<Vec<_>>(),
    })
}

fn cmd_present(input: &Input, simplify: bool) -> Result<(i32, String), Failure> {
    let g = load_valid(input)?;
    let mut p = graph_presentation(&g)?;
    if simplify {
        p = tietze_eliminate(&p);
    }
    if input.json {
        return Ok((EXIT_OK, json_text(&presentation_json(&p))));
    }
    Ok((EXIT_OK, p.to_string()))
}

fn cmd_fox(input: &Input, simplify: bool) -> Result<(i32, String), Failure> {
    let g = load_valid(input)?;
    let og = choose_tree_and_orders(&g, None).map_err(input_error)?;
    let p = presentation(&og);
    let (f, names) = if simplify {
        let q = tietze_eliminate(&p);
        (fox_matrix_generic(&q), q.names().to_vec())
    } else {
        (fox_matrix_blocks(&og, &abelianize(&p)), p.names().to_vec())
    };
    if input.json {
        let coords = crate::fox::coordinate_names(f.abelianization());
        let rows: Vec<Vec<String>> =
            (0..f.nrows()).map(|i| (0..f.ncols()).map(|j| f.entry(i, j).display(&coords)).collect()).collect();
        return Ok((EXIT_OK, json_text(&json!({"schema": 1, "columns": names, "coordinates": coords, "rows": rows}))));
    }
    Ok((EXIT_OK, f.dump(&names)))
}

fn cmd_alex(input: &Input, single: bool, expand_it: bool) -> Result<(i32, String), Failure> {
    let g = load_valid(input)?;
    let mt = solve_multiplicities(&g).map_err(input_error)?;
    let fp = if single { acampo_single(&g, &mt) } else { en_multivariable(&g, &mt) }.map_err(input_error)?;
    let expanded = if expand_it { Some(expand(&fp).map_err(input_error)?) } else { None };
    if input.json {
        let mut v = json!({"schema": 1, "variables": fp.nvars, "product": fp.to_string(), "factors": fp.factors, "prefactor": fp.prefactor});
        if let Some(lp) = &expanded {
            v["expanded"] = json!(lp.to_string());
            v["monomials"] = json!(lp.monomial_list());
            v["essential"] = json!(essential_variable_report(lp));
        }
        return Ok((EXIT_OK, json_text(&v)));
    }
    let mut out = String::new();
    writeln!(out, "{fp}").unwrap();
    if let Some(lp) = expanded {
        writeln!(out, "{lp}").unwrap();
    }
    Ok((EXIT_OK, out))
}

fn cmd_cover(input: &Input, n: u64, emit: Option<&PathBuf>) -> Result<(i32, String), Failure> {
    let g = load_valid(input)?;
    let mt = solve_multiplicities(&g).map_err(input_error)?;
    let c = cyclic_cover(&g, &mt, n).map_err(input_error)?;
    if let Some(path) = emit {
        std::fs::write(path, c.to_graph_text(&g)).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    let ob = c.obstruction();
    if input.json {
        let vertices: Vec<Value> = c
            .vertices
            .iter()
            .map(|x| json!({"base": g.vertices()[x.base].id, "component": x.component, "genus": x.genus}))
            .collect();
        let v = json!({
            "schema": 1,
            "n": n,
            "vertices": vertices,
            "edges": c.edges.len(),
            "arrows": c.arrows.len(),
            "b1": c.b1,
            "connected": c.is_connected(),
            "obstruction": ob,
        });
        return Ok((EXIT_OK, json_text(&v)));
    }
    let mut out = String::new();
    writeln!(out, "{n}-fold cover: {} vertices, {} edges, {} arrows, b1 = {}", c.vertices.len(), c.edges.len(), c.arrows.len(), c.b1)
        .unwrap();
    for x in &c.vertices {
        writeln!(out, "  over {} #{}: genus {}", g.vertices()[x.base].id, x.component, x.genus).unwrap();
    }
    if !c.is_connected() {
        writeln!(out, "warning: cover has {} components", c.components).unwrap();
    }
    writeln!(out, "obstruction: {}", if ob.fires { "fires" } else { "does not fire" }).unwrap();
    Ok((EXIT_OK, out))
}

fn cmd_qp(input: &Input) -> Result<(i32, String), Failure> {
    let g = load_valid(input)?;
    let r = classify(&g).map_err(input_error)?;
    let code = match r.verdict {
        Verdict::QuasiProjective => EXIT_OK,
        Verdict::NotQuasiProjective => EXIT_NOT_QP,
        Verdict::Inconclusive => 1,
    };
    if input.json {
        let mut v = serde_json::to_value(&r).expect("serializable");
        v["schema"] = json!(1);
        return Ok((code, json_text(&v)));
    }
    let mut out = String::new();
    writeln!(out, "verdict: {:?}", r.verdict).unwrap();
    writeln!(out, "branching vertices: {}", r.shape).unwrap();
    if let Some(e) = r.e {
        writeln!(out, "e: {e}").unwrap();
    }
    if let Some(w) = &r.witness {
        writeln!(out, "witness: n = {}, genera {:?}, b1 = {}", w.n, w.genera, w.b1).unwrap();
    }
    if let Some(a) = &r.alexander_layer {
        writeln!(out, "essential variables: lattice rank {}", a.rank).unwrap();
    }
    Ok((code, out))
}

fn cmd_scan(input: &Input, args: &CharacterArgs, seed: u64, samples: usize) -> Result<(i32, String), Failure> {
    let g = load_valid(input)?;
    let p = graph_presentation(&g)?;
    let torus = torus_for(&p, args)?;
    let fixed = match &args.fix {
        Some(s) => parse_fix(s).map_err(input_error)?,
        None => Vec::new(),
    };
    let s = sample_stratum(&p, &torus, &fixed, 0, samples, seed, args.tol).map_err(input_error)?;
    let code = if s.any_unstable() { EXIT_UNSTABLE } else { EXIT_OK };
    let names = crate::fox::coordinate_names(torus.abelianization());
    // standard coordinates, whatever chart the constraints were given in
    let coords = |xi: &crate::charvar::Character| -> BTreeMap<String, String> {
        let values = xi
            .free_values()
            .iter()
            .map(|z| format_chart_value(ChartValue::Free(*z)))
            .chain(xi.torsion_indices().iter().map(|&(k, d)| format_chart_value(ChartValue::Root(k, d))));
        names.iter().cloned().zip(values).collect()
    };
    if input.json {
        let rows: Vec<Value> = s
            .samples
            .iter()
            .map(|(xi, h)| json!({"character": coords(xi), "dim": h.dim, "flags": {"unstable": h.unstable, "rank": h.rank}}))
            .collect();
        return Ok((code, json_text(&json!({"schema": 1, "seed": seed, "samples": rows}))));
    }
    let mut out = String::new();
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, (xi, h)) in s.samples.iter().enumerate() {
        *hist.entry(h.dim).or_default() += 1;
        let pairs: Vec<String> = coords(xi).into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "{i}: dim {}{}  {}", h.dim, if h.unstable { " UNSTABLE" } else { "" }, pairs.join(" ")).unwrap();
    }
    let summary: Vec<String> = hist.iter().map(|(d, c)| format!("{d}: {c}")).collect();
    writeln!(out, "dims: {}", summary.join(", ")).unwrap();
    Ok((code, out))
}

fn dispatch(cli: &Cli) -> Result<(i32, String), Failure> {
    match &cli.command {
        Command::Validate(input) => cmd_validate(input),
        Command::H1 { input, character } => cmd_h1(input, character),
        Command::Mult(input) => cmd_mult(input),
        Command::Present { input, simplify } => cmd_present(input, *simplify),
        Command::Fox { input, simplify } => cmd_fox(input, *simplify),
        Command::Alex { input, multi: _, single, expand } => cmd_alex(input, *single, *expand),
        Command::Cover { input, n, emit_graph } => cmd_cover(input, *n, emit_graph.as_ref()),
        Command::Qp(input) => cmd_qp(input),
        Command::Scan { input, character, seed, samples } => cmd_scan(input, character, *seed, *samples),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(Failure(code, msg)) => Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_syntax() {
        assert_eq!(parse_complex("1"), Some(Complex64::new(1.0, 0.0)));
        assert_eq!(parse_complex("-2.5"), Some(Complex64::new(-2.5, 0.0)));
        assert_eq!(parse_complex("0.5+1.5i"), Some(Complex64::new(0.5, 1.5)));
        assert_eq!(parse_complex("-i"), Some(Complex64::new(0.0, -1.0)));
        assert_eq!(parse_complex("1e-1-2e1i"), Some(Complex64::new(0.1, -20.0)));
        assert_eq!(parse_complex("x"), None);
    }

    #[test]
    fn fix_lists() {
        let f = parse_fix("t4=1, u1=zeta(1,2),t2=1-i").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f[1], ("u1".to_string(), CoordValue::Zeta(1, 2)));
        assert_eq!(f[2].1, CoordValue::Complex(Complex64::new(1.0, -1.0)));
        assert!(parse_fix("t4").is_err());
        assert!(parse_fix("u1=zeta(1,0)").is_err());
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(Complex64::new(2.0, 0.0)), "2");
        assert_eq!(format_complex(Complex64::new(0.5, -1.0)), "0.5-1i");
    }
}
