//! Text formats: complexes (`.cx`), monomial ideals (`.mi`) and graphs (`.g`).
//!
//! All three are line based, with `#` starting a comment and blank lines
//! ignored. Errors carry 1-based line numbers.

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{parse_monomial, MonomialIdeal};

/// Non-empty lines with comments stripped, paired with their line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn directive<'a>(line: &'a str, name: &str) -> Option<Vec<&'a str>> {
    let mut tokens = line.split_whitespace();
    (tokens.next() == Some(name)).then(|| tokens.collect())
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } | Error::Capacity { .. } => e,
        other => Error::parse(line, other.to_string()),
    }
}

/// Parses a `.cx` file: an optional `@vertices` line, then one facet per
/// line; `()` is the empty facet.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut ambient: Option<Vec<String>> = None;
    let mut facets: Vec<Vec<String>> = Vec::new();
    let mut last_line = 0;
    for (line, content) in content_lines(text) {
        last_line = line;
        if let Some(tokens) = directive(content, "@vertices") {
            if ambient.is_some() || !facets.is_empty() {
                return Err(Error::parse(line, "`@vertices` must come before every facet and appear once"));
            }
            ambient = Some(tokens.iter().map(|t| t.to_string()).collect());
            continue;
        }
        if content.starts_with('@') {
            return Err(Error::parse(line, format!("unknown directive `{content}`")));
        }
        if content == "()" {
            facets.push(Vec::new());
            continue;
        }
        let tokens: Vec<String> = content.split_whitespace().map(str::to_string).collect();
        if tokens.iter().any(|t| t == "()") {
            return Err(Error::parse(line, "`()` must stand alone on its line"));
        }
        if let Some(amb) = &ambient {
            if let Some(bad) = tokens.iter().find(|t| !amb.contains(t)) {
                return Err(Error::parse(line, format!("vertex `{bad}` is not in @vertices")));
            }
        }
        crate::complex::VertexSet::new(tokens.iter().cloned())
            .map_err(at_line(line))?;
        facets.push(tokens);
    }
    SimplicialComplex::build(&facets, ambient.as_deref()).map_err(at_line(last_line.max(1)))
}

pub fn write_complex(c: &SimplicialComplex) -> String {
    let mut out = format!("@vertices {}\n", c.vertices().names().join(" "));
    for facet in c.facet_labels() {
        if facet.is_empty() {
            out.push_str("()\n");
        } else {
            out.push_str(&facet.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Parses a `.mi` file: `@ring` first, then one generator per line; the
/// lines `0` and `1` denote the zero and unit ideals.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut lines = content_lines(text);
    let Some((first, head)) = lines.next() else {
        return Err(Error::parse(1, "missing `@ring` line"));
    };
    let Some(vars) = directive(head, "@ring") else {
        return Err(Error::parse(first, "the first line must be `@ring <var> ...`"));
    };
    let ring = VertexSet::new(vars.iter().map(|v| v.to_string())).map_err(at_line(first))?;
    let mut gens = Vec::new();
    let mut zero = false;
    for (line, content) in lines {
        if content == "0" {
            zero = true;
            continue;
        }
        gens.push(parse_monomial(&ring, content).map_err(at_line(line))?);
    }
    if zero && !gens.is_empty() {
        return Err(Error::parse(first, "`0` cannot be combined with generators"));
    }
    MonomialIdeal::new(ring, gens)
}

pub fn write_ideal(i: &MonomialIdeal) -> String {
    let mut out = format!("@ring {}\n", i.ring().names().join(" "));
    if i.is_zero() {
        out.push_str("0\n");
    }
    for g in i.generator_labels() {
        out.push_str(&g.replace('*', " "));
        out.push('\n');
    }
    out
}

/// Parses a `.g` file: `@vertices` (optional; defaults to the edge
/// endpoints), then one edge per line as two tokens.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut declared: Option<Vec<String>> = None;
    let mut edges: Vec<(usize, String, String)> = Vec::new();
    for (line, content) in content_lines(text) {
        if let Some(tokens) = directive(content, "@vertices") {
            if declared.is_some() || !edges.is_empty() {
                return Err(Error::parse(line, "`@vertices` must come first and appear once"));
            }
            declared = Some(tokens.iter().map(|t| t.to_string()).collect());
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::parse(line, "an edge line needs exactly two vertices"));
        }
        edges.push((line, tokens[0].to_string(), tokens[1].to_string()));
    }
    let labels = declared.unwrap_or_else(|| {
        let mut all: Vec<String> = edges
            .iter()
            .flat_map(|(_, a, b)| [a.clone(), b.clone()])
            .collect();
        all.sort();
        all.dedup();
        all
    });
    let vs = VertexSet::new(labels).map_err(at_line(1))?;
    let mut ids = Vec::with_capacity(edges.len());
    for (line, a, b) in &edges {
        let u = vs.require(a).map_err(at_line(*line))?;
        let v = vs.require(b).map_err(at_line(*line))?;
        if u == v {
            return Err(Error::parse(*line, format!("loop at `{a}`")));
        }
        ids.push((u, v));
    }
    Graph::new(vs, &ids)
}

pub fn write_graph(g: &Graph) -> String {
    let names = g.vertices();
    let mut out = format!("@vertices {}\n", names.names().join(" "));
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", names.name(u), names.name(v)));
    }
    out
}
