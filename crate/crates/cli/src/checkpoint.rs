//! Open search subtrees saved to disk.
//!
//! ```text
//! checkpoint 2 6 8 lex
//! prefix 3 1,1,2
//! prefix 3 1,2,1
//! ```
//!
//! The header holds `k n N order`. Each `prefix` line gives the index of the
//! next undecided edge followed by the colors of the edges before it; an
//! empty prefix is written `-`.

use std::fmt::Write as _;

use monocycle_core::search::EdgeOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub k: usize,
    pub n: usize,
    pub vertices: usize,
    pub order: EdgeOrder,
    pub prefixes: Vec<Vec<u8>>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("checkpoint line {line}: {message}")]
pub struct CheckpointError {
    pub line: usize,
    pub message: String,
}

fn fail(line: usize, message: impl Into<String>) -> CheckpointError {
    CheckpointError {
        line,
        message: message.into(),
    }
}

pub fn order_name(order: EdgeOrder) -> &'static str {
    match order {
        EdgeOrder::Lexicographic => "lex",
        EdgeOrder::VertexIncremental => "vertex",
    }
}

pub fn parse_order(name: &str) -> Option<EdgeOrder> {
    match name {
        "lex" => Some(EdgeOrder::Lexicographic),
        "vertex" => Some(EdgeOrder::VertexIncremental),
        _ => None,
    }
}

impl Checkpoint {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "checkpoint {} {} {} {}\n",
            self.k,
            self.n,
            self.vertices,
            order_name(self.order)
        );
        for p in &self.prefixes {
            let colors = if p.is_empty() {
                "-".to_string()
            } else {
                p.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
            };
            writeln!(out, "prefix {} {colors}", p.len()).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, CheckpointError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (no, head) = lines.next().ok_or_else(|| fail(1, "empty checkpoint"))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        let [tag, k, n, vertices, order] = head[..] else {
            return Err(fail(no, "expected `checkpoint <k> <n> <N> <order>`"));
        };
        if tag != "checkpoint" {
            return Err(fail(no, format!("unknown header `{tag}`")));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| fail(no, format!("bad number `{s}`")))
        };
        let mut cp = Checkpoint {
            k: num(k)?,
            n: num(n)?,
            vertices: num(vertices)?,
            order: parse_order(order)
                .ok_or_else(|| fail(no, format!("unknown order `{order}`")))?,
            prefixes: Vec::new(),
        };
        let edges = cp.vertices * cp.vertices.saturating_sub(1) / 2;
        for (no, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let ["prefix", len, colors] = fields[..] else {
                return Err(fail(no, "expected `prefix <edge-index> <color-list>`"));
            };
            let len: usize = len
                .parse()
                .map_err(|_| fail(no, format!("bad edge index `{len}`")))?;
            let prefix: Vec<u8> = if colors == "-" {
                Vec::new()
            } else {
                colors
                    .split(',')
                    .map(|c| match c.parse::<u8>() {
                        Ok(c) if c >= 1 && (c as usize) <= cp.k => Ok(c),
                        _ => Err(fail(no, format!("bad color `{c}`"))),
                    })
                    .collect::<Result<_, _>>()?
            };
            if prefix.len() != len || len > edges {
                return Err(fail(
                    no,
                    format!("edge index {len} does not match the prefix"),
                ));
            }
            cp.prefixes.push(prefix);
        }
        Ok(cp)
    }
}
