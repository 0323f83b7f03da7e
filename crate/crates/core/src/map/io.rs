//! Line-oriented ribbon-graph file format.
//!
//! ```text
//! ribbongraph 1
//! vertices 3
//! edges 3
//! rot 0: 0.0 2.1
//! rot 1: 1.0 0.1
//! rot 2: 2.0 1.1
//! twist 1
//! ```
//!
//! `#` starts a comment. Every end `k.0` and `k.1` appears exactly once;
//! rotations are counterclockwise and may be empty.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use super::{EdgeEnd, MapError, RibbonGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the error concerns the file as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_count(rest: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    rest.trim()
        .parse()
        .map_err(|_| err(line, format!("bad {what} count `{}`", rest.trim())))
}

fn parse_end(tok: &str, line: usize) -> Result<EdgeEnd, ParseError> {
    let (k, t) = tok
        .split_once('.')
        .ok_or_else(|| err(line, format!("bad edge-end `{tok}`, expected <edge>.<0|1>")))?;
    let edge = k
        .parse()
        .map_err(|_| err(line, format!("bad edge index in `{tok}`")))?;
    let end = match t {
        "0" => 0,
        "1" => 1,
        _ => {
            return Err(err(
                line,
                format!("bad end tag in `{tok}`, expected 0 or 1"),
            ))
        }
    };
    Ok(EdgeEnd::new(edge, end))
}

impl RibbonGraph {
    pub fn decode(text: &str) -> Result<RibbonGraph, ParseError> {
        let mut header = false;
        let mut vertices: Option<usize> = None;
        let mut edges: Option<usize> = None;
        let mut rotations: Vec<Option<Vec<EdgeEnd>>> = Vec::new();
        let mut twisted: Vec<bool> = Vec::new();
        // line on which each end was seen, for error reporting
        let mut seen: Vec<usize> = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if !header {
                let mut words = content.split_whitespace();
                match (words.next(), words.next(), words.next()) {
                    (Some("ribbongraph"), Some("1"), None) => {
                        header = true;
                        continue;
                    }
                    _ => return Err(err(line, "expected header `ribbongraph 1`")),
                }
            }
            let (keyword, rest) = content
                .split_once(char::is_whitespace)
                .unwrap_or((content, ""));
            match keyword {
                "vertices" => {
                    if vertices.is_some() {
                        return Err(err(line, "duplicate `vertices` line"));
                    }
                    let n = parse_count(rest, line, "vertex")?;
                    vertices = Some(n);
                    rotations = vec![None; n];
                }
                "edges" => {
                    if edges.is_some() {
                        return Err(err(line, "duplicate `edges` line"));
                    }
                    let m = parse_count(rest, line, "edge")?;
                    if m > super::MAX_SUBSET_WIDTH {
                        return Err(err(
                            line,
                            format!("at most {} edges supported", super::MAX_SUBSET_WIDTH),
                        ));
                    }
                    edges = Some(m);
                    twisted = vec![false; m];
                    seen = vec![0; 2 * m];
                }
                "rot" => {
                    let (n, m) = match (vertices, edges) {
                        (Some(n), Some(m)) => (n, m),
                        _ => return Err(err(line, "`rot` before `vertices` and `edges`")),
                    };
                    let (head, body) = rest
                        .split_once(':')
                        .ok_or_else(|| err(line, "expected `rot <v>: <ends>`"))?;
                    let v: usize = head
                        .trim()
                        .parse()
                        .map_err(|_| err(line, format!("bad vertex index `{}`", head.trim())))?;
                    if v >= n {
                        return Err(err(line, format!("vertex {v} out of range (0..{n})")));
                    }
                    if rotations[v].is_some() {
                        return Err(err(line, format!("duplicate rotation for vertex {v}")));
                    }
                    let mut rot = Vec::new();
                    for tok in body.split_whitespace() {
                        let end = parse_end(tok, line)?;
                        if end.edge >= m {
                            return Err(err(
                                line,
                                format!("unknown edge {} (graph has {m} edges)", end.edge),
                            ));
                        }
                        if seen[end.slot()] != 0 {
                            return Err(err(
                                line,
                                format!("edge-end {end} already used on line {}", seen[end.slot()]),
                            ));
                        }
                        seen[end.slot()] = line;
                        rot.push(end);
                    }
                    rotations[v] = Some(rot);
                }
                "twist" => {
                    let m = edges.ok_or_else(|| err(line, "`twist` before `edges`"))?;
                    for tok in rest.split_whitespace() {
                        let k: usize = tok
                            .parse()
                            .map_err(|_| err(line, format!("bad edge index `{tok}`")))?;
                        if k >= m {
                            return Err(err(
                                line,
                                format!("unknown edge {k} (graph has {m} edges)"),
                            ));
                        }
                        if twisted[k] {
                            return Err(err(line, format!("edge {k} twisted twice")));
                        }
                        twisted[k] = true;
                    }
                }
                other => return Err(err(line, format!("unknown keyword `{other}`"))),
            }
        }
        if !header {
            return Err(err(0, "missing header `ribbongraph 1`"));
        }
        let n = vertices.ok_or_else(|| err(0, "missing `vertices` line"))?;
        edges.ok_or_else(|| err(0, "missing `edges` line"))?;
        let rotations = rotations
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| err(0, format!("missing rotation for vertex {v}"))))
            .collect::<Result<Vec<_>, _>>()?;
        debug_assert_eq!(rotations.len(), n);
        RibbonGraph::new(rotations, twisted).map_err(|e| match e {
            MapError::MissingEnd(end) => {
                err(0, format!("edge-end {end} missing from all rotations"))
            }
            other => err(0, other.to_string()),
        })
    }

    /// Vertices in index order, each rotation starting at its smallest end.
    pub fn encode(&self) -> String {
        let mut out = String::from("ribbongraph 1\n");
        let _ = writeln!(out, "vertices {}", self.vertex_count());
        let _ = writeln!(out, "edges {}", self.edge_count());
        for v in 0..self.vertex_count() {
            let _ = write!(out, "rot {v}:");
            for end in self.normalized_rotation(v) {
                let _ = write!(out, " {end}");
            }
            out.push('\n');
        }
        let twists: Vec<String> = (0..self.edge_count())
            .filter(|&k| self.is_twisted(k))
            .map(|k| k.to_string())
            .collect();
        if !twists.is_empty() {
            let _ = writeln!(out, "twist {}", twists.join(" "));
        }
        out
    }
}

impl FromStr for RibbonGraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RibbonGraph::decode(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const C3: &str =
        "ribbongraph 1\nvertices 3\nedges 3\nrot 0: 0.0 2.1\nrot 1: 1.0 0.1\nrot 2: 2.0 1.1\n";

    #[test]
    fn decodes_cycle() {
        let g = RibbonGraph::decode(C3).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let text = g.encode();
        assert!(text.contains("rot 1: 0.1 1.0\n"), "{text}");
        let back = RibbonGraph::decode(&text).unwrap();
        assert_eq!(back.canonical_rotations(), g.canonical_rotations());
        assert_eq!(back.encode(), text);
    }

    #[test]
    fn twisted_loop() {
        let g = RibbonGraph::decode(
            "ribbongraph 1 # B1\nvertices 1\nedges 1\nrot 0: 0.0 0.1\ntwist 0\n",
        )
        .unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 1));
        assert!(g.is_twisted(0));
    }

    #[test]
    fn duplicate_end_is_reported_with_line() {
        let e = RibbonGraph::decode("ribbongraph 1\nvertices 2\nedges 1\nrot 0: 0.0\nrot 1: 0.0\n")
            .unwrap_err();
        assert_eq!(e.line, 5);
        assert!(e.message.contains("already used"), "{e}");
    }

    #[test]
    fn malformed_inputs() {
        let cases = [
            ("vertices 1\n", 1),
            ("ribbongraph 2\n", 1),
            ("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 3.0\n", 4),
            ("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 0.2\n", 4),
            ("ribbongraph 1\nvertices 1\nedges 1\nrot 0: 0.0\n", 0),
            ("ribbongraph 1\nvertices 2\nedges 0\nrot 0:\n", 0),
            (
                "ribbongraph 1\nvertices 1\nedges 1\nrot 0: 0.0 0.1\ntwist 4\n",
                5,
            ),
            ("ribbongraph 1\nvertices x\n", 2),
            ("ribbongraph 1\nvertices 1\nedges 0\nfoo\n", 4),
        ];
        for (text, line) in cases {
            let e = RibbonGraph::decode(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }

    #[test]
    fn empty_rotation_and_comments() {
        let g: RibbonGraph =
            "# comment\nribbongraph 1\nvertices 2\nedges 1\nrot 0: 0.0 0.1   # loop\nrot 1:\n"
                .parse()
                .unwrap();
        assert_eq!(g.degree(1), 0);
        assert!(g.encode().contains("rot 1:\n"));
    }
}
