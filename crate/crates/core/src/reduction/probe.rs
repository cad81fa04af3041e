use std::fmt::Write as _;

use itertools::Itertools;

use super::{evaluate_zero_distance, hp_oracle_backtracking, reduce_graph, Digraph, Semantics};
use crate::error::{Error, Result};
use crate::instance::Sequence;
use crate::rational::{integer, Rational};
use crate::solvers::{Limits, SolverKind};

/// Outcome of scoring every order under the zero-distance reading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub vertices: usize,
    pub edges: usize,
    pub permutations: u64,
    /// Largest zero-adjusted distance and the first order reaching it.
    pub max_distance: Rational,
    pub argmax: Sequence,
    pub threshold: Rational,
    /// Does the zero-distance reading say "yes" (`max_distance >= threshold`)?
    pub zero_rule_yes: bool,
    pub hamiltonian: bool,
    pub agrees: bool,
    /// An order that makes the two answers differ, if they do.
    pub disagreement: Option<Sequence>,
}

impl ProbeReport {
    pub fn report(&self) -> String {
        let mut out = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(out, "vertices: {}", self.vertices).unwrap();
        writeln!(out, "edges: {}", self.edges).unwrap();
        writeln!(out, "permutations: {}", self.permutations).unwrap();
        writeln!(out, "max_zeroed_distance: {}", self.max_distance).unwrap();
        writeln!(out, "argmax: {}", self.argmax).unwrap();
        writeln!(out, "threshold: {}", self.threshold).unwrap();
        writeln!(out, "zero_rule_answer: {}", yn(self.zero_rule_yes)).unwrap();
        writeln!(out, "hamiltonian_path: {}", yn(self.hamiltonian)).unwrap();
        writeln!(out, "agrees: {}", self.agrees).unwrap();
        let witness = self.disagreement.as_ref().map_or("-".to_string(), |s| s.to_string());
        writeln!(out, "disagreement_witness: {witness}").unwrap();
        out
    }
}

/// Enumerates all orders of the zero-distance reduction of `g` and compares
/// "best order reaches `n`" with Hamiltonicity according to the
/// backtracking oracle. Reports what it finds; asserts nothing.
pub fn semantics_probe(g: &Digraph, limits: &Limits) -> Result<ProbeReport> {
    let n = g.vertex_count();
    if n > limits.brute_force {
        return Err(Error::CapacityRefusal {
            solver: SolverKind::BruteForce.name(),
            n,
            cap: limits.brute_force,
        });
    }
    let instance = reduce_graph(g, Semantics::ZeroDistance);
    let threshold = integer(n as i64);
    let mut permutations = 0;
    let mut best: Option<(Rational, Sequence)> = None;
    for order in (0..n).permutations(n) {
        permutations += 1;
        let seq = Sequence::new(order);
        let d = evaluate_zero_distance(&instance, g, &seq)?;
        if best.as_ref().is_none_or(|(b, _)| d > *b) {
            best = Some((d, seq));
        }
    }
    let (max_distance, argmax) = best.expect("at least one order");
    let zero_rule_yes = max_distance >= threshold;
    let oracle = hp_oracle_backtracking(g);
    let hamiltonian = oracle.is_some();
    let agrees = zero_rule_yes == hamiltonian;
    let disagreement = match (agrees, zero_rule_yes) {
        (true, _) => None,
        (false, true) => Some(argmax.clone()),
        (false, false) => oracle.map(|p| Sequence::new(p.0)),
    };
    Ok(ProbeReport {
        vertices: n,
        edges: g.edge_count(),
        permutations,
        max_distance,
        argmax,
        threshold,
        zero_rule_yes,
        hamiltonian,
        agrees,
        disagreement,
    })
}
