//! Line-oriented text format:
//!
//! ```text
//! # optional comments
//! digraph 3
//! e 0 1
//! e 1 2
//! e 2 0
//! ```
//!
//! Blank lines are ignored. Writers emit edges in lexicographic order.

use std::fmt::Write as _;
use std::path::Path;

use crate::digraph::Digraph;
use crate::error::{GraphError, Result};

pub fn parse(text: &str) -> Result<Digraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| GraphError::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        let mut toks = line.split_whitespace();
        let head = toks.next().unwrap_or_default();
        let nums: Vec<usize> = toks
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| err(&format!("bad integer {t:?}")))
            })
            .collect::<Result<_>>()?;
        match (head, n) {
            ("digraph", None) => match nums.as_slice() {
                [count] => n = Some(*count),
                _ => return Err(err("expected `digraph <n>`")),
            },
            ("digraph", Some(_)) => return Err(err("duplicate header")),
            ("e", Some(_)) => match nums.as_slice() {
                [u, v] => edges.push((*u, *v)),
                _ => return Err(err("expected `e <u> <v>`")),
            },
            (_, None) => return Err(err("first line must be `digraph <n>`")),
            (other, Some(_)) => return Err(err(&format!("unknown record {other:?}"))),
        }
    }
    let n = n.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing `digraph <n>` header".into(),
    })?;
    Digraph::from_edge_list(n, &edges)
}

pub fn to_string(g: &Digraph) -> String {
    to_string_with_comment(g, None)
}

/// Serializes `g`, optionally preceded by `# ` comment lines.
pub fn to_string_with_comment(g: &Digraph, comment: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(s, "# {line}");
        }
    }
    let _ = writeln!(s, "digraph {}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

pub fn read_file(
    path: impl AsRef<Path>,
) -> std::io::Result<std::result::Result<Digraph, GraphError>> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse(&text))
}

pub fn write_file(
    path: impl AsRef<Path>,
    g: &Digraph,
    comment: Option<&str>,
) -> std::io::Result<()> {
    std::fs::write(path, to_string_with_comment(g, comment))
}
