use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::format::{content_lines, parse_index};

/// Simple directed graph on vertices `0..n` (printed 1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    /// Duplicate edges collapse; self-loops and out-of-range endpoints are errors.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::MalformedInput("graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::MalformedInput(format!(
                    "edge ({}, {}) out of range for n = {n}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::MalformedInput(format!("self-loop at vertex {}", u + 1)));
            }
            set.insert((u, v));
        }
        Ok(Self { n, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Successor lists, ascending.
    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            out[u].push(v);
        }
        out
    }
}

/// A vertex order; Hamiltonian when it is a spanning simple path of its graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        f.write_str(&labels.join(" "))
    }
}

/// `n m` header, then `m` lines `u v` (1-based); `#` comments and blank lines skipped.
pub fn parse_graph(text: &str) -> Result<Digraph> {
    let perr = |line, message: String| Error::Parse { line, message };
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| perr(1, "empty input, expected `n m`".into()))?;
    let counts: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| perr(first, format!("expected `n m`, got `{header}`")))?;
    let [n, m] = counts[..] else {
        return Err(perr(first, format!("expected `n m`, got `{header}`")));
    };
    if n == 0 {
        return Err(perr(first, "vertex count must be at least 1".into()));
    }
    let mut edges = Vec::with_capacity(m);
    let mut last = first;
    for (no, line) in lines {
        last = no;
        if edges.len() == m {
            return Err(perr(no, format!("unexpected line `{line}` after {m} edges")));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(perr(no, format!("expected edge `u v`, got `{line}`")));
        };
        let u = parse_index(u, n, no, "vertex")?;
        let v = parse_index(v, n, no, "vertex")?;
        if u == v {
            return Err(perr(no, format!("self-loop at vertex {}", u + 1)));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(perr(last, format!("expected {m} edges, found {}", edges.len())));
    }
    Digraph::new(n, edges)
}

pub fn write_graph(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_writes() {
        let g = parse_graph("# path\n3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(1, 0));
        assert_eq!(write_graph(&g), "3 2\n1 2\n2 3\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_graph("2 2\n1 2\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_graphs() {
        let line = |t: &str| match parse_graph(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("0 0\n"), 1);
        assert_eq!(line("3\n"), 1);
        assert_eq!(line("3 1\n1 1\n"), 2);
        assert_eq!(line("3 1\n1 4\n"), 2);
        assert_eq!(line("3 2\n1 2\n"), 2);
        assert_eq!(line("3 1\n1 2\n2 3\n"), 3);
        assert_eq!(line("3 1\n1 x\n"), 2);
        assert!(Digraph::new(2, [(0, 0)]).is_err());
    }
}
