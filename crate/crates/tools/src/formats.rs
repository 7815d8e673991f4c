//! Plain-text graph and complex files.
//!
//! Graph files: `#` starts a comment, blank lines are ignored, the first data
//! line is `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//!
//! Complex files: the first data line is `n`, then one facet per line as
//! space-separated vertex ids (an empty line is not a facet).

use std::fmt::Write as _;

use chordal_bvec::complex::SimplicialComplex;
use chordal_bvec::{Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("no header line")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header announces {expected} edges, file has {actual}")]
    EdgeCount { expected: usize, actual: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        source: chordal_bvec::Error,
    },
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        (!fields.is_empty()).then_some((k + 1, fields))
    })
}

fn number(line: usize, field: &str) -> Result<usize, FormatError> {
    field.parse().map_err(|_| FormatError::Syntax {
        line,
        message: format!("expected a nonnegative integer, found {field:?}"),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    if header.len() != 2 {
        return Err(FormatError::Syntax {
            line,
            message: "header must be \"n m\"".into(),
        });
    }
    let n = number(line, header[0])?;
    let m = number(line, header[1])?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (line, fields) in lines {
        if fields.len() != 2 {
            return Err(FormatError::Syntax {
                line,
                message: "edge lines must be \"u v\"".into(),
            });
        }
        let u = number(line, fields[0])?;
        let v = number(line, fields[1])?;
        if u > v {
            return Err(FormatError::Syntax {
                line,
                message: format!("edge endpoints must satisfy u < v, found {u} {v}"),
            });
        }
        g.add_edge(u, v)
            .map_err(|source| FormatError::Graph { line, source })?;
        count += 1;
    }
    if count != m {
        return Err(FormatError::EdgeCount {
            expected: m,
            actual: count,
        });
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, FormatError> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    if header.len() != 1 {
        return Err(FormatError::Syntax {
            line,
            message: "header must be the vertex count".into(),
        });
    }
    let n = number(line, header[0])?;
    let mut facets = Vec::new();
    for (line, fields) in lines {
        let mut facet = VertexSet::new();
        for f in fields {
            let v = number(line, f)?;
            if v >= n {
                return Err(FormatError::Graph {
                    line,
                    source: chordal_bvec::Error::VertexOutOfRange { vertex: v, n },
                });
            }
            facet.insert(v);
        }
        facets.push(facet);
    }
    SimplicialComplex::new(n, facets).map_err(|source| FormatError::Graph { line: 1, source })
}

pub fn write_complex(c: &SimplicialComplex) -> String {
    let mut out = format!("{}\n", c.n());
    for f in c.facets() {
        let ids: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", ids.join(" ")).expect("writing to a String");
    }
    out
}
