use std::collections::VecDeque;
use std::fmt;

use super::{reduce_graph, Digraph, Path, Semantics};
use crate::error::{Error, Result};
use crate::instance::Sequence;
use crate::rational::integer;
use crate::solvers::{decide_nvep, Limits, SolverKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Via {
    Nvep,
    Backtrack,
    Both,
}

/// Why a sequence does not describe a path of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    NotPermutation,
    MissingEdge { from: usize, to: usize },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotPermutation => f.write_str("not a permutation of the vertices"),
            Self::MissingEdge { from, to } => write!(f, "no edge ({}, {})", from + 1, to + 1),
        }
    }
}

/// Reading an NVEP order back as a vertex order.
pub fn decode_sequence(g: &Digraph, seq: &Sequence) -> Result<Path, Rejection> {
    if !seq.is_permutation_of(g.vertex_count()) {
        return Err(Rejection::NotPermutation);
    }
    if let Some(w) = seq.order().windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(Rejection::MissingEdge { from: w[0], to: w[1] });
    }
    Ok(Path(seq.order().to_vec()))
}

pub fn verify_path(g: &Digraph, p: &Path) -> bool {
    decode_sequence(g, &Sequence::new(p.0.clone())).is_ok()
}

/// Depth-first search over simple paths from each start vertex, pruning
/// any partial path from whose end some unvisited vertex is unreachable
/// through unvisited vertices. Returns the lexicographically first
/// Hamiltonian path.
pub fn hp_oracle_backtracking(g: &Digraph) -> Option<Path> {
    let n = g.vertex_count();
    if n == 1 {
        return Some(Path(vec![0]));
    }
    let succ = g.successors();
    let mut indeg = vec![0usize; n];
    for (_, v) in g.edges() {
        indeg[v] += 1;
    }
    let sources: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let sinks = (0..n).filter(|&v| succ[v].is_empty()).count();
    if sources.len() > 1 || sinks > 1 {
        return None;
    }
    let starts: Vec<usize> = if sources.len() == 1 { sources } else { (0..n).collect() };

    let mut search = Backtrack {
        succ: &succ,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
    };
    for s in starts {
        search.visited[s] = true;
        search.path.push(s);
        if search.extend() {
            return Some(Path(search.path));
        }
        search.path.pop();
        search.visited[s] = false;
    }
    None
}

struct Backtrack<'a> {
    succ: &'a [Vec<usize>],
    visited: Vec<bool>,
    path: Vec<usize>,
}

impl Backtrack<'_> {
    fn extend(&mut self) -> bool {
        let n = self.visited.len();
        if self.path.len() == n {
            return true;
        }
        let here = *self.path.last().expect("path starts nonempty");
        if !self.reaches_all_unvisited(here) {
            return false;
        }
        for &next in &self.succ[here] {
            if self.visited[next] {
                continue;
            }
            self.visited[next] = true;
            self.path.push(next);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.visited[next] = false;
        }
        false
    }

    fn reaches_all_unvisited(&self, from: usize) -> bool {
        let n = self.visited.len();
        let mut seen = self.visited.clone();
        let mut queue = VecDeque::from([from]);
        let mut reached = 0;
        while let Some(u) = queue.pop_front() {
            for &v in &self.succ[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n - self.path.len()
    }
}

/// The two routes disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub nvep: bool,
    pub backtrack: bool,
    pub nvep_witness: Option<Sequence>,
    pub oracle_path: Option<Path>,
}

impl Discrepancy {
    pub fn report(&self) -> String {
        let show = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        format!(
            "discrepancy: true\nnvep: {}\nbacktrack: {}\nnvep_witness: {}\noracle_path: {}\n",
            yes_no(self.nvep),
            yes_no(self.backtrack),
            show(self.nvep_witness.as_ref().map(|s| s.to_string())),
            show(self.oracle_path.as_ref().map(|p| p.to_string())),
        )
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpAnswer {
    pub exists: bool,
    /// A Hamiltonian path of the graph when `exists`.
    pub path: Option<Path>,
    /// Set only for [`Via::Both`] when the routes disagree; `exists` and
    /// `path` then follow the backtracking oracle.
    pub discrepancy: Option<Discrepancy>,
}

/// Refuses graphs beyond the constrained DP limit instead of letting the
/// decision fall through to an unbounded branch and bound.
fn via_nvep(g: &Digraph, limits: &Limits) -> Result<(bool, Option<Sequence>, Option<Path>)> {
    if g.vertex_count() > limits.constrained_dp {
        return Err(Error::CapacityRefusal {
            solver: SolverKind::ConstrainedDp.name(),
            n: g.vertex_count(),
            cap: limits.constrained_dp,
        });
    }
    let instance = reduce_graph(g, Semantics::Forbidden);
    let threshold = integer(g.vertex_count() as i64);
    let decision = decide_nvep(&instance, &threshold, limits)?;
    let path = decision.witness.as_ref().map(|w| {
        decode_sequence(g, w).expect("constrained solvers only return edge-respecting orders")
    });
    Ok((decision.accepted, decision.witness, path))
}

pub fn decide_hamiltonian_path(g: &Digraph, via: Via, limits: &Limits) -> Result<HpAnswer> {
    match via {
        Via::Backtrack => {
            let path = hp_oracle_backtracking(g);
            Ok(HpAnswer {
                exists: path.is_some(),
                path,
                discrepancy: None,
            })
        }
        Via::Nvep => {
            let (exists, _, path) = via_nvep(g, limits)?;
            Ok(HpAnswer {
                exists,
                path,
                discrepancy: None,
            })
        }
        Via::Both => {
            let (nvep, witness, nvep_path) = via_nvep(g, limits)?;
            let oracle_path = hp_oracle_backtracking(g);
            let backtrack = oracle_path.is_some();
            if nvep == backtrack {
                Ok(HpAnswer {
                    exists: nvep,
                    path: nvep_path,
                    discrepancy: None,
                })
            } else {
                Ok(HpAnswer {
                    exists: backtrack,
                    path: oracle_path.clone(),
                    discrepancy: Some(Discrepancy {
                        nvep,
                        backtrack,
                        nvep_witness: witness,
                        oracle_path,
                    }),
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, one_based: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, one_based.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    fn complete(n: usize) -> Digraph {
        Digraph::new(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert!(hp_oracle_backtracking(&complete(4)).is_some());
        assert_eq!(
            hp_oracle_backtracking(&graph(3, &[(1, 2), (2, 3)])),
            Some(Path(vec![0, 1, 2]))
        );
        assert_eq!(hp_oracle_backtracking(&graph(2, &[])), None);
        assert_eq!(hp_oracle_backtracking(&graph(1, &[])), Some(Path(vec![0])));
        assert_eq!(hp_oracle_backtracking(&graph(3, &[(1, 2), (1, 3)])), None);
        // path needs to start in the middle of the label order
        assert_eq!(
            hp_oracle_backtracking(&graph(4, &[(3, 1), (1, 4), (4, 2), (2, 1)])),
            Some(Path(vec![2, 0, 3, 1]))
        );
    }

    #[test]
    fn decide_examples() {
        let limits = Limits::default();
        for via in [Via::Nvep, Via::Backtrack, Via::Both] {
            let a = decide_hamiltonian_path(&graph(3, &[(1, 2), (2, 3)]), via, &limits).unwrap();
            assert!(a.exists);
            assert_eq!(a.path, Some(Path(vec![0, 1, 2])));
            assert!(a.discrepancy.is_none());

            let a = decide_hamiltonian_path(&graph(3, &[(1, 2), (1, 3)]), via, &limits).unwrap();
            assert!(!a.exists && a.path.is_none());

            let a = decide_hamiltonian_path(&graph(1, &[]), via, &limits).unwrap();
            assert_eq!(a.path, Some(Path(vec![0])));
        }
    }

    #[test]
    fn nvep_route_propagates_refusal() {
        let limits = Limits { constrained_dp: 3, ..Limits::default() };
        for via in [Via::Nvep, Via::Both] {
            assert!(matches!(
                decide_hamiltonian_path(&complete(4), via, &limits),
                Err(Error::CapacityRefusal { n: 4, cap: 3, .. })
            ));
        }
        assert!(decide_hamiltonian_path(&complete(4), Via::Backtrack, &limits).unwrap().exists);
    }

    #[test]
    fn decode_examples() {
        let g = graph(3, &[(1, 2), (2, 3)]);
        assert_eq!(decode_sequence(&g, &Sequence::new(vec![0, 1, 2])), Ok(Path(vec![0, 1, 2])));
        assert_eq!(
            decode_sequence(&g, &Sequence::new(vec![1, 0, 2])),
            Err(Rejection::MissingEdge { from: 1, to: 0 })
        );
        assert_eq!(
            decode_sequence(&g, &Sequence::new(vec![0, 0, 2])),
            Err(Rejection::NotPermutation)
        );
        assert_eq!(
            decode_sequence(&graph(1, &[]), &Sequence::new(vec![0])),
            Ok(Path(vec![0]))
        );
    }

    #[test]
    fn verify_examples() {
        let g = graph(3, &[(1, 2), (2, 3)]);
        assert!(verify_path(&g, &Path(vec![0, 1, 2])));
        assert!(!verify_path(&g, &Path(vec![0, 1])));
        assert!(!verify_path(&g, &Path(vec![0, 2, 1])));
    }

    #[test]
    fn discrepancy_report_is_key_value() {
        let d = Discrepancy {
            nvep: true,
            backtrack: false,
            nvep_witness: Some(Sequence::new(vec![1, 0])),
            oracle_path: None,
        };
        assert_eq!(
            d.report(),
            "discrepancy: true\nnvep: yes\nbacktrack: no\nnvep_witness: 2 1\noracle_path: -\n"
        );
    }
}
