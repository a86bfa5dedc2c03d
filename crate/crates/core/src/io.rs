//! `.sg` edge-list text format and DOT export.
//!
//! Each non-comment line is `u v s` with `s` one of `+`/`-`. A line holding a
//! single token declares an (possibly isolated) vertex. `#` starts a comment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, Sign, SignedGraph};

pub fn parse_edge_list(text: &str) -> Result<SignedGraph> {
    let mut b = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let malformed = || Error::MalformedLine {
            line: i + 1,
            content: raw.to_string(),
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => {
                b.vertex(v);
            }
            [u, v, s] => {
                let sign = match *s {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    _ => return Err(malformed()),
                };
                if u == v {
                    return Err(Error::SelfLoop(u.to_string()));
                }
                b.add_labeled_edge(u, v, sign)?;
            }
            _ => return Err(malformed()),
        }
    }
    Ok(b.build())
}

pub fn read_graph(path: &std::path::Path) -> Result<SignedGraph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

/// Serializes edges in canonical order; isolated vertices follow as single-token lines.
pub fn to_edge_list(g: &SignedGraph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", g.label(e.u), g.label(e.v), e.sign.symbol());
    }
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            let _ = writeln!(out, "{}", g.label(v));
        }
    }
    out
}

pub fn to_dot(g: &SignedGraph, members: &[usize]) -> String {
    let mask = g.mask(members);
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let style = if mask[v] {
            " [style=filled, fillcolor=lightblue]"
        } else {
            ""
        };
        let _ = writeln!(out, "  \"{}\"{};", escape(g.label(v)), style);
    }
    for e in g.edges() {
        let style = match e.sign {
            Sign::Positive => "solid",
            Sign::Negative => "dashed",
        };
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\" [style={}];",
            escape(g.label(e.u)),
            escape(g.label(e.v)),
            style
        );
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_list() {
        let g = parse_edge_list("a b +\nb c -").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.positive_edge_count(), 1);
        assert_eq!(g.negative_edge_count(), 1);
        let (a, b, c) = (
            g.index_of("a").unwrap(),
            g.index_of("b").unwrap(),
            g.index_of("c").unwrap(),
        );
        assert_eq!(g.sign(a, b), Some(Sign::Positive));
        assert_eq!(g.sign(b, c), Some(Sign::Negative));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# header\n\n x y - # trailing\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_edge_list("a a +"), Err(Error::SelfLoop(_))));
        assert!(matches!(
            parse_edge_list("a b +\nb a -"),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            parse_edge_list("a b +\nb a +"),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            parse_edge_list("a b x"),
            Err(Error::MalformedLine { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("a b + c"),
            Err(Error::MalformedLine { .. })
        ));
    }

    #[test]
    fn isolated_vertices_survive_round_trip() {
        let g = parse_edge_list("a b -\nz\n").unwrap();
        assert_eq!(g.n(), 3);
        let h = parse_edge_list(&to_edge_list(&g)).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.degree(h.index_of("z").unwrap()), 0);
    }

    #[test]
    fn dot_styles() {
        let g = parse_edge_list("a b +\nb c -").unwrap();
        let dot = to_dot(&g, &[0]);
        assert!(dot.contains("\"a\" -- \"b\" [style=solid]"));
        assert!(dot.contains("\"b\" -- \"c\" [style=dashed]"));
        assert!(dot.contains("\"a\" [style=filled"));
    }
}
