//! The two text file formats.
//!
//! Digraph files:
//! ```text
//! v <n>
//! e <init> <fin>          # edge ids assigned in order of appearance
//! rot <vertex>: <tok>...  # optional; tok = <edge_id>+ (init end) or <edge_id>- (fin end)
//! ```
//!
//! Bipartite files additionally carry `color <vertex> A|B` lines and their
//! `e` lines are undirected (`+` refers to the first written endpoint).
//! Rotation lines list half-edges counterclockwise. Lines starting with `#`
//! and blank lines are ignored. Parsing then serializing a canonical file
//! (v line, e lines in id order, color lines, rot lines in vertex order)
//! reproduces it byte for byte.

use crate::graphs::{
    dart, dart_edge, dart_is_reverse, Digraph, PlanarBipartiteGraph, RotationSystem, VClass,
};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct ParsedDigraph {
    pub graph: Digraph,
    pub rotation: Option<RotationSystem>,
}

#[derive(Clone, Debug)]
pub struct ParsedBipartite {
    pub graph: PlanarBipartiteGraph,
}

fn parse_rot_token(tok: &str) -> Result<(usize, bool)> {
    let (num, rev) = if let Some(stripped) = tok.strip_suffix('+') {
        (stripped, false)
    } else if let Some(stripped) = tok.strip_suffix('-') {
        (stripped, true)
    } else {
        return Err(Error::input(format!(
            "rotation token {tok:?} must end in + or -"
        )));
    };
    let id: usize = num
        .parse()
        .map_err(|_| Error::input(format!("bad edge id in rotation token {tok:?}")))?;
    Ok((id, rev))
}

struct RawFile {
    n: Option<usize>,
    edges: Vec<(usize, usize)>,
    rot_lines: Vec<(usize, Vec<(usize, bool)>)>,
    colors: Vec<(usize, VClass)>,
}

fn parse_raw(text: &str) -> Result<RawFile> {
    let mut raw = RawFile {
        n: None,
        edges: Vec::new(),
        rot_lines: Vec::new(),
        colors: Vec::new(),
    };
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::input(format!("line {}: {msg}", lineno + 1));
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("v") => {
                let n: usize = parts
                    .next()
                    .ok_or_else(|| err("v needs a count".into()))?
                    .parse()
                    .map_err(|_| err("bad vertex count".into()))?;
                if raw.n.replace(n).is_some() {
                    return Err(err("duplicate v line".into()));
                }
            }
            Some("e") => {
                let a: usize = parts
                    .next()
                    .ok_or_else(|| err("e needs two endpoints".into()))?
                    .parse()
                    .map_err(|_| err("bad endpoint".into()))?;
                let b: usize = parts
                    .next()
                    .ok_or_else(|| err("e needs two endpoints".into()))?
                    .parse()
                    .map_err(|_| err("bad endpoint".into()))?;
                raw.edges.push((a, b));
            }
            Some("rot") => {
                let vtok = parts.next().ok_or_else(|| err("rot needs a vertex".into()))?;
                let vtok = vtok
                    .strip_suffix(':')
                    .ok_or_else(|| err("rot vertex must end with ':'".into()))?;
                let v: usize = vtok.parse().map_err(|_| err("bad rot vertex".into()))?;
                let mut toks = Vec::new();
                for t in parts {
                    toks.push(parse_rot_token(t).map_err(|e| err(e.to_string()))?);
                }
                raw.rot_lines.push((v, toks));
            }
            Some("color") => {
                let v: usize = parts
                    .next()
                    .ok_or_else(|| err("color needs a vertex".into()))?
                    .parse()
                    .map_err(|_| err("bad color vertex".into()))?;
                let c = match parts.next() {
                    Some("A") => VClass::A,
                    Some("B") => VClass::B,
                    other => return Err(err(format!("bad color {other:?}"))),
                };
                raw.colors.push((v, c));
            }
            Some(other) => return Err(err(format!("unknown directive {other:?}"))),
            None => unreachable!(),
        }
    }
    if raw.n.is_none() {
        return Err(Error::input("missing v line"));
    }
    Ok(raw)
}

fn build_rotation(
    graph: &Digraph,
    rot_lines: &[(usize, Vec<(usize, bool)>)],
) -> Result<RotationSystem> {
    let mut order = vec![Vec::new(); graph.vertex_count()];
    for (v, toks) in rot_lines {
        if *v >= graph.vertex_count() {
            return Err(Error::input(format!("rot vertex {v} out of range")));
        }
        if !order[*v].is_empty() {
            return Err(Error::input(format!("duplicate rot line for vertex {v}")));
        }
        order[*v] = toks.iter().map(|&(id, rev)| dart(id, rev)).collect();
    }
    RotationSystem::new(graph, order)
}

pub fn parse_digraph(text: &str) -> Result<ParsedDigraph> {
    let raw = parse_raw(text)?;
    if !raw.colors.is_empty() {
        return Err(Error::input("color lines in a digraph file"));
    }
    let graph = Digraph::new(raw.n.unwrap(), &raw.edges)?;
    let rotation = if raw.rot_lines.is_empty() {
        None
    } else {
        Some(build_rotation(&graph, &raw.rot_lines)?)
    };
    Ok(ParsedDigraph { graph, rotation })
}

pub fn parse_bipartite(text: &str) -> Result<ParsedBipartite> {
    let raw = parse_raw(text)?;
    let n = raw.n.unwrap();
    let graph = Digraph::new(n, &raw.edges)?;
    let mut colors = vec![None; n];
    for (v, c) in &raw.colors {
        if *v >= n {
            return Err(Error::input(format!("color vertex {v} out of range")));
        }
        if colors[*v].replace(*c).is_some() {
            return Err(Error::input(format!("duplicate color for vertex {v}")));
        }
    }
    let colors: Vec<VClass> = colors
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| Error::input(format!("vertex {v} has no color"))))
        .collect::<Result<_>>()?;
    if raw.rot_lines.is_empty() {
        return Err(Error::input(
            "bipartite files need rot lines (the embedding is part of the input)",
        ));
    }
    let rotation = build_rotation(&graph, &raw.rot_lines)?;
    Ok(ParsedBipartite {
        graph: PlanarBipartiteGraph::new(graph, rotation, colors)?,
    })
}

fn rot_lines_to(out: &mut String, rot: &RotationSystem) {
    for (v, darts) in rot.order().iter().enumerate() {
        if darts.is_empty() {
            continue;
        }
        out.push_str(&format!("rot {v}:"));
        for &d in darts {
            out.push_str(&format!(
                " {}{}",
                dart_edge(d),
                if dart_is_reverse(d) { '-' } else { '+' }
            ));
        }
        out.push('\n');
    }
}

pub fn serialize_digraph(graph: &Digraph, rotation: Option<&RotationSystem>) -> String {
    let mut out = String::new();
    out.push_str(&format!("v {}\n", graph.vertex_count()));
    for e in graph.edges() {
        out.push_str(&format!("e {} {}\n", e.init, e.fin));
    }
    if let Some(rot) = rotation {
        rot_lines_to(&mut out, rot);
    }
    out
}

pub fn serialize_bipartite(g: &PlanarBipartiteGraph) -> String {
    let mut out = String::new();
    let graph = g.graph();
    out.push_str(&format!("v {}\n", graph.vertex_count()));
    for e in graph.edges() {
        out.push_str(&format!("e {} {}\n", e.init, e.fin));
    }
    for v in 0..graph.vertex_count() {
        out.push_str(&format!(
            "color {v} {}\n",
            match g.color(v) {
                VClass::A => "A",
                VClass::B => "B",
            }
        ));
    }
    rot_lines_to(&mut out, g.rotation());
    out
}
