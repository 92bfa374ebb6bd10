//! Plain-text graph and coloring files.
//!
//! ```text
//! coloring 3 2
//! e 0 1 1
//! e 0 2 2
//! e 1 2 1
//! ```
//!
//! A graph file has header `graph <V>` and lines `e <u> <v>`. Edges are
//! written with `u < v` in lexicographic order, one per LF-terminated line.

use std::fmt::Write as _;

use monocycle_core::{EdgeColoring, Graph};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("empty input")]
    Empty,
    #[error(transparent)]
    Invalid(#[from] monocycle_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Either kind of file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Graph(Graph),
    Coloring(EdgeColoring),
}

impl Input {
    pub fn graph(&self) -> &Graph {
        match self {
            Input::Graph(g) => g,
            Input::Coloring(c) => c.base(),
        }
    }
}

fn numbers(line_no: usize, fields: &[&str], expected: usize) -> Result<Vec<usize>, FormatError> {
    if fields.len() != expected {
        return Err(syntax(
            line_no,
            format!("expected {expected} numbers, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| syntax(line_no, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

/// Parses a graph or coloring file, chosen by its header.
pub fn parse(text: &str) -> Result<Input, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (head_no, head) = lines.next().ok_or(FormatError::Empty)?;
    let head: Vec<&str> = head.split_whitespace().collect();
    let (kind, header) = head.split_first().expect("non-empty line");
    let (width, header) = match *kind {
        "graph" => (2, numbers(head_no, header, 1)?),
        "coloring" => (3, numbers(head_no, header, 2)?),
        other => return Err(syntax(head_no, format!("unknown header `{other}`"))),
    };
    let mut rows = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] != "e" {
            return Err(syntax(no, format!("expected `e`, found `{}`", fields[0])));
        }
        rows.push(numbers(no, &fields[1..], width)?);
    }
    let vertices = header[0];
    if width == 2 {
        let g = Graph::new(vertices, rows.iter().map(|r| (r[0], r[1])))?;
        Ok(Input::Graph(g))
    } else {
        let col = EdgeColoring::from_triples(
            vertices,
            header[1],
            rows.iter().map(|r| (r[0], r[1], r[2])),
        )?;
        Ok(Input::Coloring(col))
    }
}

pub fn parse_coloring(text: &str) -> Result<EdgeColoring, FormatError> {
    match parse(text)? {
        Input::Coloring(c) => Ok(c),
        Input::Graph(_) => Err(syntax(1, "expected a coloring file")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    match parse(text)? {
        Input::Graph(g) => Ok(g),
        Input::Coloring(_) => Err(syntax(1, "expected a graph file")),
    }
}

pub fn write_coloring(col: &EdgeColoring) -> String {
    let mut out = format!("coloring {} {}\n", col.vertex_count(), col.k());
    for (u, v, c) in col.triples() {
        writeln!(out, "e {u} {v} {c}").unwrap();
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn write(input: &Input) -> String {
    match input {
        Input::Graph(g) => write_graph(g),
        Input::Coloring(c) => write_coloring(c),
    }
}
