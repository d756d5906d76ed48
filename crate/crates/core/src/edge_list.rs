//! Plain-text edge-list format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v
//! ...
//! ```
//!
//! Vertex ids are 0-based decimals separated by one space; every line,
//! including the last, ends with a newline.

use std::fmt::Write;

use crate::graph::{Digraph, GraphError};

fn syntax(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut parts = line.split(' ');
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(syntax(
            line_no,
            format!("expected two integers, got {line:?}"),
        ));
    };
    let parse = |s: &str| {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(syntax(line_no, format!("not a decimal integer: {s:?}")));
        }
        s.parse::<usize>()
            .map_err(|e| syntax(line_no, format!("{s:?}: {e}")))
    };
    Ok((parse(a)?, parse(b)?))
}

pub fn parse_edge_list(text: &str) -> Result<Digraph, GraphError> {
    if !text.is_ascii() {
        return Err(syntax(0, "input is not ASCII"));
    }
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(syntax(text.lines().count(), "missing trailing newline"));
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.starts_with('#'));

    let (hl, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(hl, header)?;
    let mut g = Digraph::empty(n);
    for i in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(hl + i + 1, format!("expected {m} edge lines, found {i}")))?;
        let (u, v) = parse_pair(ln, line)?;
        g.insert_edge(u, v)?;
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, format!("more than {m} edge lines")));
    }
    Ok(g)
}

pub fn serialize_edge_list(g: &Digraph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.source, e.target).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const C3: &str = "3 3\n0 1\n1 2\n2 0\n";

    #[test]
    fn parse_c3() {
        let g = parse_edge_list(C3).unwrap();
        assert_eq!(g, Digraph::cycle(3));
        assert_eq!(serialize_edge_list(&g), C3);
    }

    #[test]
    fn comments_are_skipped() {
        let g = parse_edge_list("# generated\n3 3\n0 1\n# mid\n1 2\n2 0\n").unwrap();
        assert_eq!(g, Digraph::cycle(3));
    }

    #[test]
    fn out_of_range() {
        assert_eq!(
            parse_edge_list("3 1\n0 3\n"),
            Err(GraphError::OutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn malformed_lines() {
        for bad in [
            "3\n",
            "3 1\n0  1\n",
            "3 1\n0 x\n",
            "3 2\n0 1\n",
            "3 1\n0 1\n1 2\n",
            "3 1\n0 1",
            "3 1\n-1 2\n",
            "",
        ] {
            assert!(
                matches!(parse_edge_list(bad), Err(GraphError::Syntax { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn build_errors_propagate() {
        assert_eq!(parse_edge_list("2 1\n1 1\n"), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n0 1\n"),
            Err(GraphError::DuplicateEdge(_))
        ));
    }
}
