//! Closed-form trip evaluation and the fuel-balance audit.
//!
//! For an order `π`, the vehicle at position `i` turns back after its own
//! segment, having handed its spare fuel to the vehicles still travelling.
//! With `s_i = Σ_{j ≥ i} b_π(j)` the rate of the travelling group, the
//! segment is `d_i = a_π(i) / (2 s_i)` (out and back), and the trip reaches
//! `D = Σ d_i`. Those segments saturate every suffix fuel constraint.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::instance::{Instance, Sequence};
use crate::rational::{integer, Rational};

/// One fuel-balance row: the vehicles from `start` (0-based position) to the
/// end burn `lhs` covering their segments and jointly carry `rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerRow {
    pub start: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl LedgerRow {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }

    pub fn is_tight(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripPlan {
    pub segments: Vec<Rational>,
    /// Cumulative turnaround points, `stops[i] = segments[0] + ... + segments[i]`.
    pub stops: Vec<Rational>,
    pub total: Rational,
    /// Rows ordered from the last vehicle alone (`start = n - 1`) to the whole fleet.
    pub ledger: Vec<LedgerRow>,
}

/// `s[i]` = sum of rates of the vehicles at positions `i..n`.
pub(crate) fn suffix_rates(instance: &Instance, order: &[usize]) -> Vec<Rational> {
    let mut sums = vec![Rational::zero(); order.len()];
    let mut acc = Rational::zero();
    for (p, &v) in order.iter().enumerate().rev() {
        acc += instance.rate(v);
        sums[p] = acc.clone();
    }
    sums
}

fn segments_unchecked(instance: &Instance, order: &[usize]) -> Vec<Rational> {
    let two = integer(2);
    suffix_rates(instance, order)
        .into_iter()
        .zip(order)
        .map(|(s, &v)| instance.capacity(v) / (s * &two))
        .collect()
}

/// Total distance without validating `order`.
pub(crate) fn objective(instance: &Instance, order: &[usize]) -> Rational {
    segments_unchecked(instance, order).into_iter().sum()
}

/// Total distance `D` reached by the order. Adjacency is ignored.
pub fn evaluate(instance: &Instance, seq: &Sequence) -> Result<Rational> {
    seq.check_against(instance)?;
    Ok(objective(instance, seq.order()))
}

/// Per-position segment lengths; they sum to [`evaluate`].
pub fn segment_distances(instance: &Instance, seq: &Sequence) -> Result<Vec<Rational>> {
    seq.check_against(instance)?;
    Ok(segments_unchecked(instance, seq.order()))
}

pub fn trip_plan(instance: &Instance, seq: &Sequence) -> Result<TripPlan> {
    let segments = segment_distances(instance, seq)?;
    let stops: Vec<Rational> = segments
        .iter()
        .scan(Rational::zero(), |acc, d| {
            *acc += d;
            Some(acc.clone())
        })
        .collect();
    let total = stops.last().cloned().unwrap_or_else(Rational::zero);
    let ledger = fuel_ledger(instance, seq.order(), &segments);
    Ok(TripPlan {
        segments,
        stops,
        total,
        ledger,
    })
}

/// Row for `start = k`: `Σ_{i ≥ k} 2 d_i s_i ≤ Σ_{i ≥ k} a_π(i)`.
fn fuel_ledger(instance: &Instance, order: &[usize], distances: &[Rational]) -> Vec<LedgerRow> {
    let rates = suffix_rates(instance, order);
    let two = integer(2);
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    let mut rows = Vec::with_capacity(order.len());
    for p in (0..order.len()).rev() {
        lhs += &two * &distances[p] * &rates[p];
        rhs += instance.capacity(order[p]);
        rows.push(LedgerRow {
            start: p,
            lhs: lhs.clone(),
            rhs: rhs.clone(),
        });
    }
    rows
}

/// Audits arbitrary (not necessarily optimal) segment lengths against all
/// `n` suffix fuel constraints.
pub fn check_feasibility(instance: &Instance, seq: &Sequence, distances: &[Rational]) -> Result<bool> {
    seq.check_against(instance)?;
    if distances.len() != instance.len() {
        return Err(Error::MalformedInput(format!(
            "expected {} distances, got {}",
            instance.len(),
            distances.len()
        )));
    }
    if let Some(d) = distances.iter().find(|d| d.is_negative()) {
        return Err(Error::MalformedInput(format!("negative distance {d}")));
    }
    Ok(fuel_ledger(instance, seq.order(), distances)
        .iter()
        .all(LedgerRow::holds))
}

/// Every consecutive pair allowed and the last vehicle terminal-allowed.
pub fn respects_adjacency(instance: &Instance, seq: &Sequence) -> Result<bool> {
    seq.check_against(instance)?;
    Ok(order_respects_adjacency(instance, seq.order()))
}

pub(crate) fn order_respects_adjacency(instance: &Instance, order: &[usize]) -> bool {
    order.windows(2).all(|w| instance.allows(w[0], w[1]))
        && order.last().is_none_or(|&v| instance.terminal_allowed(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn inst(a: &[i64], b: &[(i64, i64)]) -> Instance {
        Instance::from_pairs(a.iter().zip(b).map(|(&a, &(p, q))| (integer(a), ratio(p, q)))).unwrap()
    }

    fn half(n: usize) -> Vec<(i64, i64)> {
        vec![(1, 2); n]
    }

    fn seq(one_based: &[usize]) -> Sequence {
        Sequence::from_one_based(one_based).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(evaluate(&inst(&[1], &[(1, 1)]), &seq(&[1])).unwrap(), ratio(1, 2));
        let two = inst(&[1, 2], &half(2));
        assert_eq!(evaluate(&two, &seq(&[1, 2])).unwrap(), ratio(5, 2));
        assert_eq!(evaluate(&two, &seq(&[2, 1])).unwrap(), integer(2));
        let three = inst(&[1, 2, 3], &half(3));
        assert_eq!(evaluate(&three, &seq(&[3, 2, 1])).unwrap(), integer(3));
    }

    #[test]
    fn evaluate_rejects_non_permutations() {
        let two = inst(&[1, 2], &half(2));
        assert!(matches!(
            evaluate(&two, &seq(&[1, 1])),
            Err(Error::MalformedSequence(_))
        ));
        assert!(evaluate(&two, &seq(&[1])).is_err());
        assert!(segment_distances(&two, &seq(&[1, 3])).is_err());
    }

    #[test]
    fn segment_examples() {
        assert_eq!(
            segment_distances(&inst(&[1], &[(1, 1)]), &seq(&[1])).unwrap(),
            vec![ratio(1, 2)]
        );
        assert_eq!(
            segment_distances(&inst(&[1, 2, 3], &half(3)), &seq(&[3, 2, 1])).unwrap(),
            vec![integer(1); 3]
        );
        assert_eq!(
            segment_distances(&inst(&[1, 2], &half(2)), &seq(&[1, 2])).unwrap(),
            vec![ratio(1, 2), integer(2)]
        );
    }

    #[test]
    fn trip_plan_examples() {
        let plan = trip_plan(&inst(&[1, 2], &half(2)), &seq(&[1, 2])).unwrap();
        assert_eq!(plan.stops, vec![ratio(1, 2), ratio(5, 2)]);
        assert_eq!(plan.total, ratio(5, 2));
        assert_eq!(plan.ledger.len(), 2);
        assert!(plan.ledger.iter().all(LedgerRow::is_tight));
        // last vehicle alone: 2 * 2 * 1/2 = 2 = a
        assert_eq!(plan.ledger[0].start, 1);
        assert_eq!(plan.ledger[0].rhs, integer(2));
        assert_eq!(plan.ledger[1].rhs, integer(3));

        let plan = trip_plan(&inst(&[2], &[(1, 1)]), &seq(&[1])).unwrap();
        assert_eq!(plan.stops, vec![integer(1)]);
        assert_eq!(plan.total, integer(1));
        assert_eq!(
            plan.ledger,
            vec![LedgerRow { start: 0, lhs: integer(2), rhs: integer(2) }]
        );

        let plan = trip_plan(&inst(&[1, 2, 3], &half(3)), &seq(&[3, 2, 1])).unwrap();
        assert_eq!(plan.stops, vec![integer(1), integer(2), integer(3)]);
        assert_eq!(plan.total, integer(3));
    }

    #[test]
    fn feasibility_examples() {
        let two = inst(&[1, 2], &half(2));
        let s = seq(&[1, 2]);
        assert!(check_feasibility(&two, &s, &[ratio(1, 2), integer(2)]).unwrap());
        assert!(!check_feasibility(&two, &s, &[ratio(1, 2), integer(3)]).unwrap());
        assert!(check_feasibility(&two, &s, &[integer(0), integer(0)]).unwrap());
        assert!(matches!(
            check_feasibility(&two, &s, &[integer(0)]),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            check_feasibility(&two, &s, &[integer(0), integer(-1)]),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn adjacency_examples() {
        let base = inst(&[1, 2, 3], &half(3));
        assert!(respects_adjacency(&base, &seq(&[3, 1, 2])).unwrap());
        let chain = base.with_adjacency([(0, 1), (1, 2)]).unwrap();
        assert!(respects_adjacency(&chain, &seq(&[1, 2, 3])).unwrap());
        assert!(!respects_adjacency(&chain, &seq(&[2, 1, 3])).unwrap());
        let no_last_three = chain.with_terminals([0, 1]).unwrap();
        assert!(!respects_adjacency(&no_last_three, &seq(&[1, 2, 3])).unwrap());
    }
}
