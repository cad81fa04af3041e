//! Subset dynamic program for unconstrained instances.
//!
//! The term contributed by the first vehicle `k` of a suffix `S` is
//! `a_k / (2 b(S))`, which depends on the set `S` but not on how `S` is
//! ordered. Hence
//!
//! ```text
//! f(∅) = 0
//! f(S) = max_{k ∈ S} a_k / (2 b(S)) + f(S \ {k})
//! ```
//!
//! and the optimum is `f(full)`: `O(n 2^n)` time, one entry per subset.

use std::collections::HashMap;
use std::time::Instant;

use num_traits::Zero;

use super::approx::{near, Shadow};
use super::{Best, Limits, SearchStats, SolveResult, SolverKind};
use crate::error::{Error, Result};
use crate::instance::{Instance, Sequence};
use crate::model::objective;
use crate::rational::{integer, Rational};

/// Absolute ceiling for any subset table, whatever the configured limits say.
pub(crate) const MAX_BITMASK_N: usize = 30;

const NO_CHOICE: u8 = u8::MAX;

pub(crate) fn check_capacity(solver: SolverKind, n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_BITMASK_N);
    if n > cap {
        return Err(Error::CapacityRefusal {
            solver: solver.name(),
            n,
            cap,
        });
    }
    Ok(())
}

pub(crate) fn bits(mask: usize) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            k
        })
    })
}

fn check_unconstrained(instance: &Instance) -> Result<()> {
    if instance.is_constrained() {
        return Err(Error::WrongSolver(
            "suffix-dp needs an unconstrained instance; use constrained-dp".into(),
        ));
    }
    Ok(())
}

/// Exact optimum. Candidates are screened in `f64` and near-ties are
/// settled in exact arithmetic; falls back to [`solve_suffix_dp_exact`]
/// when the instance's magnitudes are outside the screening range.
pub fn solve_suffix_dp(instance: &Instance, limits: &Limits) -> Result<SolveResult> {
    check_unconstrained(instance)?;
    check_capacity(SolverKind::SuffixDp, instance.len(), limits.suffix_dp)?;
    let Some(shadow) = Shadow::of(instance) else {
        return solve_suffix_dp_exact(instance, limits);
    };

    let started = Instant::now();
    let n = instance.len();
    let size = 1usize << n;
    let mut stats = SearchStats::default();
    let mut rate = vec![0f64; size];
    let mut value = vec![0f64; size];
    let mut choice = vec![NO_CHOICE; size];
    let mut memo = ExactMemo::new(instance);
    let two = integer(2);

    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        rate[s] = rate[s & (s - 1)] + shadow.rate[low];
        let inv = 0.5 / rate[s];
        let candidate = |k: usize| shadow.capacity[k] * inv + value[s ^ (1 << k)];

        let mut best = f64::NEG_INFINITY;
        let mut best_k = 0;
        for k in bits(s) {
            stats.nodes_expanded += 1;
            let c = candidate(k);
            if c > best {
                best = c;
                best_k = k;
            }
        }
        let floor = near(best);
        let tied: Vec<usize> = bits(s).filter(|&k| candidate(k) >= floor).collect();
        if tied.len() > 1 {
            stats.exact_resolutions += 1;
            let rate_sum: Rational = bits(s).map(|k| instance.rate(k).clone()).sum();
            let scale = (rate_sum * &two).recip();
            let mut exact_best: Option<Rational> = None;
            for &k in &tied {
                let c = instance.capacity(k) * &scale + memo.value(s ^ (1 << k), &choice);
                if exact_best.as_ref().is_none_or(|b| c > *b) {
                    exact_best = Some(c);
                    best_k = k;
                }
            }
        }
        choice[s] = best_k as u8;
        value[s] = candidate(best_k);
    }
    stats.subsets_filled = size as u64;

    let order = reconstruct(size - 1, &choice);
    let distance = objective(instance, &order);
    stats.wall_time = started.elapsed();
    Ok(SolveResult {
        solver: SolverKind::SuffixDp,
        best: Some(Best {
            sequence: Sequence::new(order),
            distance,
        }),
        optimal: true,
        stats,
    })
}

fn reconstruct(full: usize, choice: &[u8]) -> Vec<usize> {
    let mut order = Vec::new();
    let mut s = full;
    while s != 0 {
        let k = choice[s] as usize;
        order.push(k);
        s ^= 1 << k;
    }
    order
}

/// Exact `f(T)` recovered by walking already-final choices, memoised.
struct ExactMemo<'a> {
    instance: &'a Instance,
    /// subset -> (b(T), f(T))
    cache: HashMap<usize, (Rational, Rational)>,
}

impl<'a> ExactMemo<'a> {
    fn new(instance: &'a Instance) -> Self {
        Self {
            instance,
            cache: HashMap::new(),
        }
    }

    fn value(&mut self, subset: usize, choice: &[u8]) -> Rational {
        let mut chain = Vec::new();
        let mut cur = subset;
        while cur != 0 && !self.cache.contains_key(&cur) {
            chain.push(cur);
            cur ^= 1 << choice[cur];
        }
        let (mut rate, mut value) = match self.cache.get(&cur) {
            Some((b, f)) => (b.clone(), f.clone()),
            None => (Rational::zero(), Rational::zero()),
        };
        let two = integer(2);
        for &s in chain.iter().rev() {
            let k = choice[s] as usize;
            rate += self.instance.rate(k);
            value += self.instance.capacity(k) / (&rate * &two);
            self.cache.insert(s, (rate.clone(), value.clone()));
        }
        value
    }
}

/// The same recurrence carried out entirely in exact arithmetic.
pub fn solve_suffix_dp_exact(instance: &Instance, limits: &Limits) -> Result<SolveResult> {
    check_unconstrained(instance)?;
    check_capacity(SolverKind::SuffixDp, instance.len(), limits.suffix_dp)?;
    let started = Instant::now();
    let n = instance.len();
    let size = 1usize << n;
    let two = integer(2);
    let mut stats = SearchStats::default();
    let mut rate = vec![Rational::zero(); size];
    let mut value = vec![Rational::zero(); size];
    let mut choice = vec![NO_CHOICE; size];

    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        rate[s] = &rate[s & (s - 1)] + instance.rate(low);
        let scale = (&rate[s] * &two).recip();
        let mut best: Option<Rational> = None;
        for k in bits(s) {
            stats.nodes_expanded += 1;
            let c = instance.capacity(k) * &scale + &value[s ^ (1 << k)];
            if best.as_ref().is_none_or(|b| c > *b) {
                best = Some(c);
                choice[s] = k as u8;
            }
        }
        value[s] = best.expect("nonempty subset");
    }
    stats.subsets_filled = size as u64;

    let order = reconstruct(size - 1, &choice);
    let distance = value[size - 1].clone();
    stats.wall_time = started.elapsed();
    Ok(SolveResult {
        solver: SolverKind::SuffixDp,
        best: Some(Best {
            sequence: Sequence::new(order),
            distance,
        }),
        optimal: true,
        stats,
    })
}
