//! Subset dynamic program that honours adjacency and terminal constraints.
//!
//! Adjacency ties each vehicle to its successor, so the state also records
//! the first vehicle `k` of the suffix `S`:
//!
//! ```text
//! g({k}, k) = a_k / (2 b_k)                    if k may go last, else -inf
//! g(S, k)   = a_k / (2 b(S)) + max_{k' ∈ S \ {k}, k -> k' allowed} g(S \ {k}, k')
//! ```
//!
//! The optimum is `max_k g(full, k)`. That is `O(n^2 2^n)` time and
//! `n 2^n` states, a factor `n` over the unconstrained recurrence.

use std::collections::HashMap;
use std::time::Instant;

use num_traits::Zero;

use super::approx::{near, Shadow};
use super::suffix_dp::{bits, check_capacity};
use super::{Best, Limits, SearchStats, SolveResult, SolverKind};
use crate::error::Result;
use crate::instance::{Instance, Sequence};
use crate::model::objective;
use crate::rational::{integer, Rational};

const NO_CHOICE: u8 = u8::MAX;

struct Masks {
    successors: Vec<usize>,
    terminals: usize,
}

impl Masks {
    fn of(instance: &Instance) -> Self {
        let n = instance.len();
        let successors = (0..n)
            .map(|k| {
                (0..n)
                    .filter(|&j| j != k && instance.allows(k, j))
                    .fold(0, |m, j| m | (1 << j))
            })
            .collect();
        let terminals = (0..n)
            .filter(|&k| instance.terminal_allowed(k))
            .fold(0, |m, k| m | (1 << k));
        Self {
            successors,
            terminals,
        }
    }
}

fn finish(
    instance: &Instance,
    order: Option<Vec<usize>>,
    mut stats: SearchStats,
    started: Instant,
) -> SolveResult {
    let best = order.map(|order| Best {
        distance: objective(instance, &order),
        sequence: Sequence::new(order),
    });
    stats.wall_time = started.elapsed();
    SolveResult {
        solver: SolverKind::ConstrainedDp,
        best,
        optimal: true,
        stats,
    }
}

fn reconstruct(n: usize, full: usize, first: usize, next: &[u8]) -> Vec<usize> {
    let mut order = vec![first];
    let mut s = full;
    let mut k = first;
    while next[s * n + k] != NO_CHOICE {
        let nk = next[s * n + k] as usize;
        s ^= 1 << k;
        k = nk;
        order.push(k);
    }
    order
}

/// Exact optimum over constraint-respecting orders, screened in `f64` with
/// exact tie resolution. Returns the infeasible outcome when no complete
/// order exists.
pub fn solve_constrained_dp(instance: &Instance, limits: &Limits) -> Result<SolveResult> {
    check_capacity(SolverKind::ConstrainedDp, instance.len(), limits.constrained_dp)?;
    let Some(shadow) = Shadow::of(instance) else {
        return solve_constrained_dp_exact(instance, limits);
    };
    let started = Instant::now();
    let n = instance.len();
    let size = 1usize << n;
    let masks = Masks::of(instance);
    let mut stats = SearchStats::default();
    let mut rate = vec![0f64; size];
    let mut value = vec![f64::NEG_INFINITY; size * n];
    let mut next = vec![NO_CHOICE; size * n];
    let mut memo = ExactMemo::new(instance);

    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        rate[s] = rate[rest] + shadow.rate[low];
        let inv = 0.5 / rate[s];
        if rest == 0 {
            if masks.terminals & s != 0 {
                value[s * n + low] = shadow.capacity[low] * inv;
            }
            continue;
        }
        for k in bits(s) {
            let t = s ^ (1 << k);
            let options = t & masks.successors[k];
            let mut best = f64::NEG_INFINITY;
            let mut best_next = 0;
            for j in bits(options) {
                stats.nodes_expanded += 1;
                if value[t * n + j] > best {
                    best = value[t * n + j];
                    best_next = j;
                }
            }
            if best == f64::NEG_INFINITY {
                continue;
            }
            let floor = near(best);
            let tied: Vec<usize> = bits(options).filter(|&j| value[t * n + j] >= floor).collect();
            if tied.len() > 1 {
                stats.exact_resolutions += 1;
                best_next = memo.argmax(t, &tied, n, &next);
            }
            next[s * n + k] = best_next as u8;
            value[s * n + k] = shadow.capacity[k] * inv + value[t * n + best_next];
        }
    }
    stats.subsets_filled = size as u64;

    let full = size - 1;
    let best = (0..n)
        .map(|k| value[full * n + k])
        .fold(f64::NEG_INFINITY, f64::max);
    let order = (best > f64::NEG_INFINITY).then(|| {
        let floor = near(best);
        let tied: Vec<usize> = (0..n).filter(|&k| value[full * n + k] >= floor).collect();
        let first = if tied.len() > 1 {
            stats.exact_resolutions += 1;
            memo.argmax(full, &tied, n, &next)
        } else {
            tied[0]
        };
        reconstruct(n, full, first, &next)
    });
    Ok(finish(instance, order, stats, started))
}

/// Exact `g(S, k)` recovered from final choices, memoised.
struct ExactMemo<'a> {
    instance: &'a Instance,
    /// (S, k) -> (b(S), g(S, k))
    cache: HashMap<(usize, usize), (Rational, Rational)>,
}

impl<'a> ExactMemo<'a> {
    fn new(instance: &'a Instance) -> Self {
        Self {
            instance,
            cache: HashMap::new(),
        }
    }

    /// Smallest `k` in `candidates` (ascending) maximising exact `g(s, k)`.
    fn argmax(&mut self, s: usize, candidates: &[usize], n: usize, next: &[u8]) -> usize {
        let mut best: Option<(Rational, usize)> = None;
        for &k in candidates {
            let v = self.value(s, k, n, next);
            if best.as_ref().is_none_or(|(b, _)| v > *b) {
                best = Some((v, k));
            }
        }
        best.expect("nonempty candidates").1
    }

    fn value(&mut self, s: usize, k: usize, n: usize, next: &[u8]) -> Rational {
        let mut chain = Vec::new();
        let (mut cs, mut ck) = (s, k);
        loop {
            if self.cache.contains_key(&(cs, ck)) {
                break;
            }
            chain.push((cs, ck));
            match next[cs * n + ck] {
                NO_CHOICE => break,
                nk => {
                    cs ^= 1 << ck;
                    ck = nk as usize;
                }
            }
        }
        let (mut rate, mut value) = match self.cache.get(&(cs, ck)) {
            Some((b, g)) => (b.clone(), g.clone()),
            None => (Rational::zero(), Rational::zero()),
        };
        let two = integer(2);
        for &(state_s, state_k) in chain.iter().rev() {
            rate += self.instance.rate(state_k);
            value += self.instance.capacity(state_k) / (&rate * &two);
            self.cache.insert((state_s, state_k), (rate.clone(), value.clone()));
        }
        value
    }
}

/// The same recurrence entirely in exact arithmetic.
pub fn solve_constrained_dp_exact(instance: &Instance, limits: &Limits) -> Result<SolveResult> {
    check_capacity(SolverKind::ConstrainedDp, instance.len(), limits.constrained_dp)?;
    let started = Instant::now();
    let n = instance.len();
    let size = 1usize << n;
    let masks = Masks::of(instance);
    let two = integer(2);
    let mut stats = SearchStats::default();
    let mut rate = vec![Rational::zero(); size];
    let mut value: Vec<Option<Rational>> = vec![None; size * n];
    let mut next = vec![NO_CHOICE; size * n];

    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        rate[s] = &rate[rest] + instance.rate(low);
        let scale = (&rate[s] * &two).recip();
        if rest == 0 {
            if masks.terminals & s != 0 {
                value[s * n + low] = Some(instance.capacity(low) * &scale);
            }
            continue;
        }
        for k in bits(s) {
            let t = s ^ (1 << k);
            let mut best: Option<&Rational> = None;
            for j in bits(t & masks.successors[k]) {
                stats.nodes_expanded += 1;
                if let Some(v) = &value[t * n + j] {
                    if best.is_none_or(|b| v > b) {
                        best = Some(v);
                        next[s * n + k] = j as u8;
                    }
                }
            }
            value[s * n + k] = best.map(|b| instance.capacity(k) * &scale + b);
        }
    }
    stats.subsets_filled = size as u64;

    let full = size - 1;
    let mut best: Option<(&Rational, usize)> = None;
    for k in 0..n {
        if let Some(v) = &value[full * n + k] {
            if best.is_none_or(|(b, _)| v > b) {
                best = Some((v, k));
            }
        }
    }
    let order = best.map(|(_, first)| reconstruct(n, full, first, &next));
    Ok(finish(instance, order, stats, started))
}
