//! Hamiltonian path as an NVEP decision problem.
//!
//! A digraph on `n` vertices becomes a fleet with `a_i = i` (1-based) and
//! `b_i = 1/2`. Every full order of that fleet reaches at least `n` (the
//! descending order reaches exactly `n`), so once non-edges are forbidden
//! as consecutive pairs, "some order reaches `n`" holds iff the graph has a
//! Hamiltonian path. Every vertex may end the order.
//!
//! The alternative reading, where a non-edge pair is allowed but its
//! segment counts as zero, is available through [`evaluate_zero_distance`]
//! and examined empirically by [`semantics_probe`].

mod digraph;
mod hamiltonian;
mod probe;

pub use digraph::{parse_graph, write_graph, Digraph, Path};
pub use hamiltonian::{
    decide_hamiltonian_path, decode_sequence, hp_oracle_backtracking, verify_path, Discrepancy,
    HpAnswer, Rejection, Via,
};
pub use probe::{semantics_probe, ProbeReport};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::instance::{Instance, Sequence};
use crate::model::segment_distances;
use crate::rational::{integer, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    /// Non-edge pairs may not be consecutive.
    Forbidden,
    /// Non-edge pairs are allowed but contribute no distance.
    ZeroDistance,
}

impl Semantics {
    pub fn name(self) -> &'static str {
        match self {
            Self::Forbidden => "forbidden",
            Self::ZeroDistance => "zero-distance",
        }
    }
}

/// Builds the fleet for `g`. Under [`Semantics::Forbidden`] the allowed
/// pairs are exactly the edges and all vehicles may go last; under
/// [`Semantics::ZeroDistance`] the fleet is unconstrained and must be
/// scored with [`evaluate_zero_distance`].
pub fn reduce_graph(g: &Digraph, semantics: Semantics) -> Instance {
    let n = g.vertex_count();
    let fleet = Instance::from_pairs((1..=n as i64).map(|i| (integer(i), ratio(1, 2))))
        .expect("positive capacities and rates");
    match semantics {
        Semantics::Forbidden => fleet
            .with_adjacency(g.edges())
            .and_then(|f| f.with_terminals(0..n))
            .expect("graph endpoints are in range"),
        Semantics::ZeroDistance => fleet,
    }
}

/// Total distance with the segment of every position whose successor is
/// not an out-neighbour in `g` set to zero. The last position always counts.
pub fn evaluate_zero_distance(instance: &Instance, g: &Digraph, seq: &Sequence) -> Result<Rational> {
    if instance.len() != g.vertex_count() {
        return Err(Error::MalformedInput(format!(
            "instance has {} vehicles, graph has {} vertices",
            instance.len(),
            g.vertex_count()
        )));
    }
    let segments = segment_distances(instance, seq)?;
    let order = seq.order();
    Ok(segments
        .into_iter()
        .enumerate()
        .filter(|&(p, _)| p + 1 == order.len() || g.has_edge(order[p], order[p + 1]))
        .fold(Rational::zero(), |acc, (_, d)| acc + d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::evaluate;

    #[test]
    fn path_graph_reduction() {
        let g = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let inst = reduce_graph(&g, Semantics::Forbidden);
        assert_eq!(inst.len(), 3);
        for i in 0..3 {
            assert_eq!(inst.capacity(i), &integer(i as i64 + 1));
            assert_eq!(inst.rate(i), &ratio(1, 2));
            assert!(inst.terminal_allowed(i));
        }
        assert_eq!(inst.adjacency_pairs(), Some(vec![(0, 1), (1, 2)]));
    }

    #[test]
    fn single_vertex_reduction() {
        let inst = reduce_graph(&Digraph::new(1, []).unwrap(), Semantics::Forbidden);
        assert_eq!(inst.len(), 1);
        assert_eq!(inst.capacity(0), &integer(1));
        assert_eq!(inst.terminal_list(), Some(vec![0]));
    }

    #[test]
    fn zero_distance_reduction_is_unconstrained() {
        let g = Digraph::new(3, [(0, 1)]).unwrap();
        let inst = reduce_graph(&g, Semantics::ZeroDistance);
        assert!(!inst.is_constrained());
        // (1,2) counts, (2,3) does not, last counts: 1/3 + 0 + 3
        let seq = Sequence::new(vec![0, 1, 2]);
        assert_eq!(evaluate_zero_distance(&inst, &g, &seq).unwrap(), ratio(10, 3));
        let complete = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            evaluate_zero_distance(&inst, &complete, &seq).unwrap(),
            evaluate(&inst, &seq).unwrap()
        );
        let other = Digraph::new(2, []).unwrap();
        assert!(evaluate_zero_distance(&inst, &other, &seq).is_err());
    }
}
