//! Edge-list text format and JSON file helpers.
//!
//! Format: header `p edge <n> <m>`, then one `e <u> <v>` line per edge,
//! 0-based, whitespace-separated. Lines starting with `c` are comments.
//! The writer is canonical (edges sorted with u < v), so parse -> write
//! round-trips byte-exactly on canonical files.

use crate::coloring::ColoringJson;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::io::{BufRead, Write};
use std::path::Path;

pub fn parse_edge_list(reader: impl BufRead) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let mut it = line.split_whitespace();
        match it.next() {
            None | Some("c") => continue,
            Some("p") => {
                if it.next() != Some("edge") {
                    return Err(Error::invalid(format!("line {}: expected 'p edge'", lineno + 1)));
                }
                n = Some(parse_num(it.next(), lineno)?);
                declared_m = parse_num(it.next(), lineno)?;
            }
            Some("e") => {
                let u: u32 = parse_num(it.next(), lineno)? as u32;
                let v: u32 = parse_num(it.next(), lineno)? as u32;
                edges.push((u.min(v), u.max(v)));
            }
            Some(tok) => {
                return Err(Error::invalid(format!("line {}: unknown record '{tok}'", lineno + 1)))
            }
        }
    }
    let n = n.ok_or_else(|| Error::invalid("missing 'p edge' header"))?;
    if edges.len() != declared_m {
        return Err(Error::invalid(format!(
            "header declares {declared_m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

fn parse_num(tok: Option<&str>, lineno: usize) -> Result<usize> {
    tok.ok_or_else(|| Error::invalid(format!("line {}: missing field", lineno + 1)))?
        .parse()
        .map_err(|e| Error::invalid(format!("line {}: {e}", lineno + 1)))
}

pub fn write_edge_list(g: &Graph, mut w: impl Write) -> Result<()> {
    writeln!(w, "p edge {} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(w, "e {u} {v}")?;
    }
    Ok(())
}

pub fn edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("write to vec");
    String::from_utf8(buf).expect("utf8")
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let file = std::fs::File::open(path)?;
    parse_edge_list(std::io::BufReader::new(file))
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_edge_list(g, std::io::BufWriter::new(file))
}

pub fn read_coloring_json(path: &Path) -> Result<ColoringJson> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json_pretty<T: serde::Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
