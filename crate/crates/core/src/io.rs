//! Text file formats.
//!
//! Graph file: line 1 `n m`, line 2 the n vertices in processing order,
//! then m lines `u v`. Coloring file: n integers, the k-th being the color
//! of vertex k. Defining-set file: lines `v c`. Latin square file: line 1
//! `n`, then n rows of n entries. Partial square file: line 1 `n`, then
//! lines `r c v`. Whitespace is flexible on input; writers emit one
//! canonical rendering.

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, PartialColoring, SimpleGraph};
use crate::latin::{Cell, LatinSquare, PartialLatinSquare};

fn numbers(line: &str, what: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(format!("{what}: {t:?} is not a non-negative integer")))
        })
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_graph(text: &str) -> Result<OrderedGraph> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::parse("empty graph file"))?;
    let header = numbers(header, "graph header")?;
    if header.len() != 2 {
        return Err(Error::parse("graph header must be `n m`"));
    }
    let (n, m) = (header[0], header[1]);
    let order_line = lines
        .next()
        .ok_or_else(|| Error::parse("missing processing-order line"))?;
    let order = numbers(order_line, "processing order")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::parse(format!("expected {m} edge lines")))?;
        let pair = numbers(line, "edge")?;
        if pair.len() != 2 {
            return Err(Error::parse(format!("edge line {line:?} must be `u v`")));
        }
        edges.push((pair[0], pair[1]));
    }
    if lines.next().is_some() {
        return Err(Error::parse("trailing content after the last edge"));
    }
    let graph = SimpleGraph::new(n, edges).map_err(as_parse)?;
    OrderedGraph::new(graph, &order).map_err(as_parse)
}

pub fn write_graph(g: &OrderedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edges().len());
    let order: Vec<String> = g.processing_order().map(|v| v.to_string()).collect();
    out.push_str(&order.join(" "));
    out.push('\n');
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads n whitespace-separated colors; pairing with a graph happens at the
/// call site.
pub fn parse_coloring(text: &str, n: usize) -> Result<Vec<usize>> {
    let values: Vec<usize> = content_lines(text)
        .map(|l| numbers(l, "coloring"))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    if values.len() != n {
        return Err(Error::parse(format!(
            "coloring lists {} values, expected {n}",
            values.len()
        )));
    }
    Ok(values)
}

pub fn write_coloring(colors: &[usize]) -> String {
    let mut out = colors
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

pub fn parse_defining_set(text: &str) -> Result<PartialColoring> {
    let mut s = PartialColoring::new();
    for line in content_lines(text) {
        let pair = numbers(line, "defining set")?;
        if pair.len() != 2 {
            return Err(Error::parse(format!("defining-set line {line:?} must be `v c`")));
        }
        s.insert(pair[0], pair[1]).map_err(as_parse)?;
    }
    Ok(s)
}

pub fn write_defining_set(s: &PartialColoring) -> String {
    let mut out = String::new();
    for (v, c) in s.iter() {
        out.push_str(&format!("{v} {c}\n"));
    }
    out
}

pub fn parse_latin(text: &str) -> Result<LatinSquare> {
    let mut lines = content_lines(text);
    let n: usize = parse_order(lines.next())?;
    let mut grid = Vec::with_capacity(n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::parse(format!("expected {n} rows, found {i}")))?;
        let row = numbers(line, "square row")?;
        if row.len() != n {
            return Err(Error::parse(format!(
                "row {} lists {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        grid.push(row);
    }
    if lines.next().is_some() {
        return Err(Error::parse("trailing content after the last row"));
    }
    LatinSquare::new(grid).map_err(as_parse)
}

pub fn write_latin(l: &LatinSquare) -> String {
    let mut out = format!("{}\n", l.n());
    for row in l.rows() {
        let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_partial_latin(text: &str) -> Result<PartialLatinSquare> {
    let mut lines = content_lines(text);
    let n = parse_order(lines.next())?;
    let mut p = PartialLatinSquare::new(n).map_err(as_parse)?;
    for line in lines {
        let triple = numbers(line, "partial square")?;
        if triple.len() != 3 {
            return Err(Error::parse(format!("cell line {line:?} must be `r c v`")));
        }
        p.insert(triple[0], triple[1], triple[2]).map_err(as_parse)?;
    }
    Ok(p)
}

pub fn write_partial_latin(p: &PartialLatinSquare) -> String {
    let mut out = format!("{}\n", p.n());
    for Cell { row, col, entry } in p.cells() {
        out.push_str(&format!("{row} {col} {entry}\n"));
    }
    out
}

fn parse_order(line: Option<&str>) -> Result<usize> {
    let line = line.ok_or_else(|| Error::parse("empty file; expected the order n"))?;
    let values = numbers(line, "order")?;
    if values.len() != 1 {
        return Err(Error::parse("the first line must hold the order n alone"));
    }
    Ok(values[0])
}

fn as_parse(e: Error) -> Error {
    match e {
        Error::InvalidInput(msg) => Error::Parse(msg),
        other => other,
    }
}
