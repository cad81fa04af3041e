use std::time::Instant;

use itertools::Itertools;

use super::approx::{near, Shadow};
use super::{Best, Limits, SearchStats, SolveResult, SolverKind};
use crate::error::{Error, Result};
use crate::instance::{Instance, Sequence};
use crate::model::{objective, order_respects_adjacency};

/// Enumerates all `n!` orders. Permutations come out in lexicographic order
/// and only strict improvements replace the incumbent, which yields the
/// smallest optimal order. Orders whose `f64` value falls clearly below the
/// incumbent are skipped; every other comparison is exact.
pub fn solve_brute_force(instance: &Instance, limits: &Limits) -> Result<SolveResult> {
    let n = instance.len();
    if n > limits.brute_force {
        return Err(Error::CapacityRefusal {
            solver: SolverKind::BruteForce.name(),
            n,
            cap: limits.brute_force,
        });
    }
    let started = Instant::now();
    let mut stats = SearchStats::default();
    let mut best: Option<Best> = None;
    let shadow = Shadow::of(instance);
    let mut best_approx = f64::NEG_INFINITY;

    for order in (0..n).permutations(n) {
        stats.permutations_enumerated += 1;
        if !order_respects_adjacency(instance, &order) {
            continue;
        }
        let approx = shadow.as_ref().map(|sh| approx_objective(sh, &order));
        if approx.is_some_and(|f| best.is_some() && f < near(best_approx)) {
            continue;
        }
        let distance = objective(instance, &order);
        if best.as_ref().is_none_or(|b| distance > b.distance) {
            best_approx = approx.unwrap_or(f64::NEG_INFINITY);
            best = Some(Best {
                sequence: Sequence::new(order),
                distance,
            });
        }
    }

    stats.wall_time = started.elapsed();
    Ok(SolveResult {
        solver: SolverKind::BruteForce,
        best,
        optimal: true,
        stats,
    })
}

fn approx_objective(shadow: &Shadow, order: &[usize]) -> f64 {
    let mut rate = 0.0;
    let mut total = 0.0;
    for &v in order.iter().rev() {
        rate += shadow.rate[v];
        total += shadow.capacity[v] * 0.5 / rate;
    }
    total
}
