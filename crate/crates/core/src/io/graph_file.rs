//! ```text
//! # comments and blank lines are ignored
//! 3 3
//! 0 1
//! 1 2
//! 2 0
//! ```

use std::collections::HashSet;
use std::fmt::Write;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

fn parse_pair(text: &str, line: usize, what: &str) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse { line, message };
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(format!("expected two integers for the {what}, found `{text}`")));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| err(format!("`{s}` is not a non-negative integer")))
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header, header_line, "header")?;
    let mut g = Digraph::new(n);
    let mut seen = HashSet::new();
    let mut count = 0;
    for (line, text) in lines {
        let (u, v) = parse_pair(text, line, "arc")?;
        let err = |message: String| Error::Parse { line, message };
        if u >= n || v >= n {
            return Err(err(format!("arc ({u}, {v}) has an endpoint outside 0..{n}")));
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u, v)) {
            return Err(err(format!("duplicate arc ({u}, {v})")));
        }
        g.add_arc(u, v).expect("checked above");
        count += 1;
    }
    if count != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header announces {m} arcs but {count} were listed"),
        });
    }
    Ok(g)
}

/// Header and arcs in sorted order, one per line.
pub fn serialize_digraph(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.arc_count());
    for (u, v) in g.arcs() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}
