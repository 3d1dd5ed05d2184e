//! Plain-text graph formats: whitespace-separated edge lists, SNAP edge lists
//! and unweighted METIS adjacency files.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::error::{InputError, ParseError};
use crate::graph::{build_graph, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    /// One `u v` pair per line; `#` and `%` start comment lines.
    EdgeList,
    /// `u v` pairs; lines starting with `#` are ignored.
    SnapEdgeList,
    /// `n m [fmt]` header, then one line of 1-based neighbors per vertex.
    Metis,
}

impl GraphFormat {
    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::SnapEdgeList => "snap",
            GraphFormat::Metis => "metis",
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFormat {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "snap" | "snap-edge-list" => Ok(GraphFormat::SnapEdgeList),
            "metis" | "graph" => Ok(GraphFormat::Metis),
            other => Err(InputError::new(format!(
                "unknown graph format `{other}` (expected edge-list, snap or metis)"
            ))),
        }
    }
}

/// A parsed graph plus the table mapping dense ids back to input labels.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// `labels[v]` is the token vertex `v` had in the input.
    pub labels: Vec<String>,
    pub dropped_self_loops: usize,
    pub dropped_duplicates: usize,
    /// Non-fatal observations, e.g. a METIS header whose edge count disagrees
    /// with the adjacency lines.
    pub diagnostics: Vec<String>,
}

impl LoadedGraph {
    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    /// Inverse of the label table.
    pub fn id_of(&self, label: &str) -> Option<Vertex> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|p| p as Vertex)
    }
}

pub fn read_graph<R: BufRead>(reader: R, format: GraphFormat) -> Result<LoadedGraph, ParseError> {
    match format {
        GraphFormat::EdgeList => read_edge_list(reader, &['#', '%']),
        GraphFormat::SnapEdgeList => read_edge_list(reader, &['#']),
        GraphFormat::Metis => read_metis(reader),
    }
}

pub fn read_graph_str(text: &str, format: GraphFormat) -> Result<LoadedGraph, ParseError> {
    read_graph(text.as_bytes(), format)
}

pub fn write_graph<W: Write>(g: &Graph, mut out: W, format: GraphFormat) -> std::io::Result<()> {
    match format {
        GraphFormat::EdgeList => {
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}")?;
            }
        }
        GraphFormat::SnapEdgeList => {
            writeln!(out, "# Nodes: {} Edges: {}", g.n(), g.m())?;
            for (u, v) in g.edges() {
                writeln!(out, "{u}\t{v}")?;
            }
        }
        GraphFormat::Metis => {
            writeln!(out, "{} {}", g.n(), g.m())?;
            for v in g.vertices() {
                let mut first = true;
                for &u in g.neighbors(v) {
                    if !first {
                        out.write_all(b" ")?;
                    }
                    write!(out, "{}", u + 1)?;
                    first = false;
                }
                out.write_all(b"\n")?;
            }
        }
    }
    out.flush()
}

pub fn write_graph_string(g: &Graph, format: GraphFormat) -> String {
    let mut buf = Vec::new();
    write_graph(g, &mut buf, format).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("graph writers emit ASCII")
}

fn read_edge_list<R: BufRead>(reader: R, comments: &[char]) -> Result<LoadedGraph, ParseError> {
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();

    let mut intern = |tok: &str, labels: &mut Vec<String>| -> Vertex {
        if let Some(&id) = ids.get(tok) {
            return id;
        }
        let id = labels.len() as Vertex;
        ids.insert(tok.to_owned(), id);
        labels.push(tok.to_owned());
        id
    };

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with(comments) {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let (a, b) = match (toks.next(), toks.next(), toks.next()) {
            (Some(a), Some(b), None) => (a, b),
            (Some(_), None, _) => {
                return Err(ParseError::Malformed {
                    line: lineno,
                    message: "expected two endpoints, found one".into(),
                })
            }
            _ => {
                return Err(ParseError::Malformed {
                    line: lineno,
                    message: "expected exactly two endpoints (edge weights are not supported)"
                        .into(),
                })
            }
        };
        let u = intern(a, &mut labels);
        let v = intern(b, &mut labels);
        edges.push((u, v));
    }

    // Integer labels keep their numeric order so that files written by
    // `write_graph` read back with identical ids.
    let numeric: Option<Vec<u64>> = labels.iter().map(|l| l.parse::<u64>().ok()).collect();
    if let Some(values) = numeric {
        let mut order: Vec<Vertex> = (0..labels.len() as Vertex).collect();
        order.sort_by_key(|&i| values[i as usize]);
        let mut rank = vec![0 as Vertex; labels.len()];
        for (r, &old) in order.iter().enumerate() {
            rank[old as usize] = r as Vertex;
        }
        for e in &mut edges {
            *e = (rank[e.0 as usize], rank[e.1 as usize]);
        }
        labels = order.iter().map(|&old| labels[old as usize].clone()).collect();
    }

    let built = build_graph(labels.len(), &edges)?;
    let mut diagnostics = Vec::new();
    note_normalization(&mut diagnostics, built.dropped_self_loops, built.dropped_duplicates);
    Ok(LoadedGraph {
        graph: built.graph,
        labels,
        dropped_self_loops: built.dropped_self_loops,
        dropped_duplicates: built.dropped_duplicates,
        diagnostics,
    })
}

fn read_metis<R: BufRead>(reader: R) -> Result<LoadedGraph, ParseError> {
    let mut lines = reader.lines().enumerate();
    let mut last_line = 0;

    let (n, header_m) = loop {
        let Some((idx, line)) = lines.next() else {
            return Err(ParseError::Truncated {
                line: last_line + 1,
                message: "missing METIS header".into(),
            });
        };
        let lineno = idx + 1;
        last_line = lineno;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks.len() < 2 || toks.len() > 4 {
            return Err(ParseError::Malformed {
                line: lineno,
                message: format!("header must be `n m [fmt [ncon]]`, found `{trimmed}`"),
            });
        }
        let n = parse_count(toks[0], lineno, "vertex count")?;
        let m = parse_count(toks[1], lineno, "edge count")?;
        if let Some(fmt) = toks.get(2) {
            if !fmt.chars().all(|c| c.is_ascii_digit()) {
                return Err(ParseError::Malformed {
                    line: lineno,
                    message: format!("format flag `{fmt}` is not a digit string"),
                });
            }
            if fmt.chars().any(|c| c != '0') || toks.len() == 4 {
                return Err(ParseError::Malformed {
                    line: lineno,
                    message: format!("weighted METIS format `{fmt}` is not supported"),
                });
            }
        }
        break (n, m);
    };
    if n > Vertex::MAX as usize {
        return Err(ParseError::Malformed {
            line: last_line,
            message: format!("vertex count {n} is too large"),
        });
    }

    let mut edges = Vec::new();
    let mut v = 0usize;
    while v < n {
        let Some((idx, line)) = lines.next() else {
            return Err(ParseError::Truncated {
                line: last_line + 1,
                message: format!("expected adjacency lines for {n} vertices, found {v}"),
            });
        };
        let lineno = idx + 1;
        last_line = lineno;
        let line = line?;
        if line.trim_start().starts_with('%') {
            continue;
        }
        for tok in line.split_whitespace() {
            let u = tok.parse::<u64>().map_err(|_| ParseError::Malformed {
                line: lineno,
                message: format!("neighbor `{tok}` is not a non-negative integer"),
            })?;
            if u == 0 || u > n as u64 {
                return Err(ParseError::Malformed {
                    line: lineno,
                    message: format!("neighbor id {u} outside 1..={n}"),
                });
            }
            edges.push((v as Vertex, (u - 1) as Vertex));
        }
        v += 1;
    }
    for (idx, line) in lines {
        let line = line?;
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('%') {
            return Err(ParseError::Malformed {
                line: idx + 1,
                message: format!("unexpected content after {n} adjacency lines"),
            });
        }
    }

    let built = build_graph(n, &edges)?;
    // Each undirected edge is listed from both ends; anything beyond that
    // pairing is a genuine duplicate.
    let listed_pairs = edges.len() - built.dropped_self_loops;
    let dropped_duplicates = listed_pairs.saturating_sub(2 * built.graph.m()) / 2;
    let mut diagnostics = Vec::new();
    note_normalization(&mut diagnostics, built.dropped_self_loops, dropped_duplicates);
    if built.graph.m() != header_m {
        diagnostics.push(format!(
            "header declares {header_m} edges, adjacency lists yield {}",
            built.graph.m()
        ));
    }
    for d in &diagnostics {
        log::warn!("metis input: {d}");
    }
    Ok(LoadedGraph {
        graph: built.graph,
        labels: (1..=n).map(|i| i.to_string()).collect(),
        dropped_self_loops: built.dropped_self_loops,
        dropped_duplicates,
        diagnostics,
    })
}

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| ParseError::Malformed {
        line,
        message: format!("{what} `{tok}` is not a non-negative integer"),
    })
}

fn note_normalization(diagnostics: &mut Vec<String>, loops: usize, dups: usize) {
    if loops > 0 {
        diagnostics.push(format!("dropped {loops} self-loop(s)"));
    }
    if dups > 0 {
        diagnostics.push(format!("collapsed {dups} duplicate edge(s)"));
    }
}
