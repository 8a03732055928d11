//! Plain-text edge lists for hand-authored fixtures.
//!
//! One graph per block: a header line `n m`, then `m` lines `i j` with
//! 0-based endpoints. Blank lines between blocks are ignored, so a file
//! may hold any number of graphs.

use std::error::Error;
use std::fmt;

use crate::{Graph, GraphError};

/// Errors raised while parsing an edge-list file.
#[derive(Debug)]
pub enum EdgeListError {
    /// A line does not match the expected shape.
    Syntax { line: usize, message: String },
    /// The listed edges do not form a legal graph.
    Graph { line: usize, source: GraphError },
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            EdgeListError::Graph { line, source } => {
                write!(f, "block starting at line {line}: {source}")
            }
        }
    }
}

impl Error for EdgeListError {
    fn source(&self) -> Option<&(dyn Error + 'static)> {
        match self {
            EdgeListError::Syntax { .. } => None,
            EdgeListError::Graph { source, .. } => Some(source),
        }
    }
}

fn two_numbers(line_no: usize, text: &str, what: &str) -> Result<(usize, usize), EdgeListError> {
    let mut tokens = text.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize, EdgeListError> {
        tok.and_then(|t| t.parse().ok()).ok_or_else(|| EdgeListError::Syntax {
            line: line_no,
            message: format!("expected {what} as two numbers, found {text:?}"),
        })
    };
    let a = parse(tokens.next())?;
    let b = parse(tokens.next())?;
    if tokens.next().is_some() {
        return Err(EdgeListError::Syntax {
            line: line_no,
            message: format!("expected {what} as two numbers, found {text:?}"),
        });
    }
    Ok((a, b))
}

/// Parses every block in `text`. Line numbers in errors are 1-based.
pub fn parse(text: &str) -> Result<Vec<Graph>, EdgeListError> {
    let mut graphs = Vec::new();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    while let Some((header_no, header)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        let (n, m) = two_numbers(header_no, header, "header `n m`")?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = lines
                .find(|(_, l)| !l.trim().is_empty())
                .ok_or_else(|| EdgeListError::Syntax {
                    line: header_no,
                    message: format!("block declares {m} edges, file ends early"),
                })?;
            edges.push(two_numbers(line_no, line, "edge `i j`")?);
        }
        let g = Graph::new(n, &edges).map_err(|source| EdgeListError::Graph {
            line: header_no,
            source,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

/// Formats a graph as one block, edges in ascending order.
pub fn format(g: &Graph) -> String {
    use fmt::Write;
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (i, j) in g.edges() {
        writeln!(out, "{i} {j}").unwrap();
    }
    out
}
