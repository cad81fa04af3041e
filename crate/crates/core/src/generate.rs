//! Seeded instance and graph generators. Output depends only on the seed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::rational::{integer, Rational};
use crate::reduction::Digraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Closed interval of positive rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Range {
    pub min: Rational,
    pub max: Rational,
}

impl Range {
    pub fn new(min: Rational, max: Rational) -> Result<Self> {
        if !min.is_positive() {
            return Err(Error::InvalidRange(format!("lower bound {min} must be positive")));
        }
        if min > max {
            return Err(Error::InvalidRange(format!("empty range [{min}, {max}]")));
        }
        Ok(Self { min, max })
    }

    /// Integer numerators `p` with `min <= p/q <= max`.
    fn numerators(&self, q: u64) -> Option<(i64, i64)> {
        let q = BigInt::from(q);
        let lo = (self.min.numer() * &q).div_ceil(self.min.denom());
        let hi = (self.max.numer() * &q).div_floor(self.max.denom());
        (lo <= hi).then(|| Some((lo.to_i64()?, hi.to_i64()?))).flatten()
    }
}

/// Draws every value as `p/q` with `q` uniform over the denominators in
/// `1..=max_denominator` that have a numerator inside the range, then `p`
/// uniform among those numerators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSpec {
    pub capacity: Range,
    pub rate: Range,
    pub max_denominator: u64,
}

impl Default for InstanceSpec {
    fn default() -> Self {
        Self {
            capacity: Range {
                min: integer(1),
                max: integer(100),
            },
            rate: Range {
                min: crate::rational::ratio(1, 10),
                max: integer(10),
            },
            max_denominator: 10,
        }
    }
}

fn sampler(range: &Range, max_denominator: u64, what: &str) -> Result<Vec<(u64, i64, i64)>> {
    if max_denominator == 0 {
        return Err(Error::InvalidRange("max denominator must be at least 1".into()));
    }
    let options: Vec<(u64, i64, i64)> = (1..=max_denominator)
        .filter_map(|q| range.numerators(q).map(|(lo, hi)| (q, lo, hi)))
        .collect();
    if options.is_empty() {
        return Err(Error::InvalidRange(format!(
            "no {what} p/q with q <= {max_denominator} lies in [{}, {}]",
            range.min, range.max
        )));
    }
    Ok(options)
}

fn draw(rng: &mut ChaCha8Rng, options: &[(u64, i64, i64)]) -> Rational {
    let (q, lo, hi) = options[rng.random_range(0..options.len())];
    let p = rng.random_range(lo..=hi);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn generate_instance(n: usize, spec: &InstanceSpec, seed: u64) -> Result<Instance> {
    if n == 0 {
        return Err(Error::InvalidRange("n must be at least 1".into()));
    }
    let capacities = sampler(&spec.capacity, spec.max_denominator, "capacity")?;
    let rates = sampler(&spec.rate, spec.max_denominator, "rate")?;
    let mut rng = rng(seed);
    let pairs: Vec<_> = (0..n)
        .map(|_| (draw(&mut rng, &capacities), draw(&mut rng, &rates)))
        .collect();
    Instance::from_pairs(pairs)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphFamily {
    /// Each ordered pair is an edge independently with probability `p`.
    Gnp { p: f64 },
    /// `1 -> 2 -> ... -> n`.
    Path,
    /// The path plus `n -> 1`.
    Cycle,
    Empty,
    Complete,
    /// Two disjoint directed paths; no Hamiltonian path (needs `n >= 2`).
    Split,
}

pub fn generate_graph(family: GraphFamily, n: usize, seed: u64) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidRange("n must be at least 1".into()));
    }
    let edges: Vec<(usize, usize)> = match family {
        GraphFamily::Gnp { p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidRange(format!("edge probability {p} not in [0, 1]")));
            }
            let mut rng = rng(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            edges
        }
        GraphFamily::Path => (1..n).map(|v| (v - 1, v)).collect(),
        GraphFamily::Cycle => {
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            if n > 1 {
                edges.push((n - 1, 0));
            }
            edges
        }
        GraphFamily::Empty => Vec::new(),
        GraphFamily::Complete => (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect(),
        GraphFamily::Split => {
            if n < 2 {
                return Err(Error::InvalidRange("split graphs need n >= 2".into()));
            }
            let half = n / 2;
            (1..n).filter(|&v| v != half).map(|v| (v - 1, v)).collect()
        }
    };
    Digraph::new(n, edges)
}
