use std::time::Instant;

use super::{Best, SearchStats, SolveResult, SolverKind};
use crate::error::Result;
use crate::instance::{Instance, Sequence};
use crate::model::objective;

/// Ascending `a_i / b_i`, ties by index.
pub(crate) fn greedy_order(instance: &Instance) -> Vec<usize> {
    let ratios: Vec<_> = instance
        .vehicles()
        .iter()
        .map(|v| &v.capacity / &v.rate)
        .collect();
    let mut order: Vec<usize> = (0..instance.len()).collect();
    order.sort_by(|&i, &j| ratios[i].cmp(&ratios[j]).then(i.cmp(&j)));
    order
}

/// Walks the fleet in `greedy_order`, always taking the first vehicle the
/// constraints allow next. `None` on a dead end.
fn constrained_walk(instance: &Instance) -> Option<Vec<usize>> {
    let ranked = greedy_order(instance);
    let n = instance.len();
    let mut used = vec![false; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    while order.len() < n {
        let last_slot = order.len() + 1 == n;
        let v = ranked.iter().copied().find(|&v| {
            !used[v]
                && order.last().is_none_or(|&p| instance.allows(p, v))
                && (!last_slot || instance.terminal_allowed(v))
        })?;
        used[v] = true;
        order.push(v);
    }
    Some(order)
}

/// Baseline ordering by fuel range `a_i / b_i`, shortest range first.
/// Optimal when all rates are equal; otherwise no guarantee. On constrained
/// instances it may fail to find any order even when one exists.
pub fn greedy_heuristic(instance: &Instance) -> Result<SolveResult> {
    let started = Instant::now();
    let order = if instance.is_constrained() {
        constrained_walk(instance)
    } else {
        Some(greedy_order(instance))
    };
    Ok(SolveResult {
        solver: SolverKind::Greedy,
        best: order.map(|order| Best {
            distance: objective(instance, &order),
            sequence: Sequence::new(order),
        }),
        optimal: false,
        stats: SearchStats {
            permutations_enumerated: 1,
            wall_time: started.elapsed(),
            ..SearchStats::default()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    #[test]
    fn equal_rates_sort_by_capacity() {
        let inst = Instance::from_pairs([3, 1, 2].map(|a| (integer(a), ratio(1, 2)))).unwrap();
        let r = greedy_heuristic(&inst).unwrap();
        assert_eq!(r.sequence().unwrap().to_one_based(), vec![2, 3, 1]);
        assert!(!r.optimal);
    }

    #[test]
    fn constrained_walk_follows_pairs() {
        let inst = Instance::from_pairs([3, 1, 2].map(|a| (integer(a), ratio(1, 2))))
            .unwrap()
            .with_adjacency([(1, 0), (0, 2)])
            .unwrap();
        let r = greedy_heuristic(&inst).unwrap();
        assert_eq!(r.sequence().unwrap().to_one_based(), vec![2, 1, 3]);

        let stuck = inst.with_adjacency([(2, 0)]).unwrap();
        assert!(greedy_heuristic(&stuck).unwrap().best.is_none());
    }

    #[test]
    fn single_vehicle() {
        let inst = Instance::from_pairs([(integer(5), integer(1))]).unwrap();
        assert_eq!(greedy_heuristic(&inst).unwrap().sequence().unwrap().order(), &[0]);
    }
}
