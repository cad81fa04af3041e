use std::time::Instant;

use num_traits::Zero;

use super::greedy::greedy_order;
use super::{Best, SearchStats, SolveResult, SolverKind};
use crate::error::Result;
use crate::instance::{Instance, Sequence};
use crate::model::objective;
use crate::rational::{integer, Rational};

/// Depth-first branch and bound over prefixes, children in ascending index
/// order, exact arithmetic throughout. Handles adjacency and terminal
/// constraints; the bound ignores them and stays valid.
///
/// Bound for the unplaced set `R` (size `m`): whatever the order, the
/// suffix starting `j` positions from the end has rate at least the sum
/// `L_j` of the `j` smallest rates in `R`, so pairing the largest
/// capacities with the smallest `L_j` dominates every completion.
pub fn solve_branch_and_bound(instance: &Instance) -> Result<SolveResult> {
    let started = Instant::now();
    let n = instance.len();
    let mut search = Search {
        instance,
        by_capacity: sorted_by(n, |i, j| instance.capacity(j).cmp(instance.capacity(i))),
        by_rate: sorted_by(n, |i, j| instance.rate(i).cmp(instance.rate(j))),
        two: integer(2),
        incumbent: None,
        stats: SearchStats::default(),
    };
    if !instance.is_constrained() {
        let order = greedy_order(instance);
        search.incumbent = Some((objective(instance, &order), order));
    }

    let total_rate: Rational = instance.vehicles().iter().map(|v| v.rate.clone()).sum();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search.expand(&mut prefix, &mut used, Rational::zero(), total_rate);

    let mut stats = search.stats;
    stats.wall_time = started.elapsed();
    Ok(SolveResult {
        solver: SolverKind::BranchAndBound,
        best: search.incumbent.map(|(distance, order)| Best {
            sequence: Sequence::new(order),
            distance,
        }),
        optimal: true,
        stats,
    })
}

fn sorted_by(n: usize, cmp: impl Fn(usize, usize) -> std::cmp::Ordering) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| cmp(i, j).then(i.cmp(&j)));
    idx
}

struct Search<'a> {
    instance: &'a Instance,
    by_capacity: Vec<usize>,
    by_rate: Vec<usize>,
    two: Rational,
    incumbent: Option<(Rational, Vec<usize>)>,
    stats: SearchStats,
}

impl Search<'_> {
    fn expand(&mut self, prefix: &mut Vec<usize>, used: &mut [bool], acc: Rational, rest_rate: Rational) {
        self.stats.nodes_expanded += 1;
        let n = self.instance.len();
        if prefix.len() == n {
            if !self.instance.terminal_allowed(prefix[n - 1]) {
                return;
            }
            let better = match &self.incumbent {
                None => true,
                Some((best, order)) => acc > *best || (acc == *best && prefix[..] < order[..]),
            };
            if better {
                self.incumbent = Some((acc, prefix.clone()));
            }
            return;
        }
        if let Some((best, order)) = &self.incumbent {
            let bound = &acc + self.tail_bound(used);
            let k = prefix.len();
            if bound < *best || (bound == *best && order[..k] < prefix[..]) {
                self.stats.pruned += 1;
                return;
            }
        }
        for v in 0..n {
            if used[v] || prefix.last().is_some_and(|&p| !self.instance.allows(p, v)) {
                continue;
            }
            let term = self.instance.capacity(v) / (&rest_rate * &self.two);
            used[v] = true;
            prefix.push(v);
            self.expand(prefix, used, &acc + term, &rest_rate - self.instance.rate(v));
            prefix.pop();
            used[v] = false;
        }
    }

    fn tail_bound(&self, used: &[bool]) -> Rational {
        let capacities = self.by_capacity.iter().filter(|&&i| !used[i]);
        let rates = self.by_rate.iter().filter(|&&i| !used[i]);
        let mut rate_sum = Rational::zero();
        let mut bound = Rational::zero();
        for (&c, &r) in capacities.zip(rates) {
            rate_sum += self.instance.rate(r);
            bound += self.instance.capacity(c) / (&rate_sum * &self.two);
        }
        bound
    }
}
