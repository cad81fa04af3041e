use super::{
    solve_branch_and_bound, solve_constrained_dp, solve_suffix_dp, Limits, SolveResult,
};
use crate::error::Result;
use crate::instance::{Instance, Sequence};
use crate::model::{objective, order_respects_adjacency};
use crate::rational::Rational;

/// Answer to "is there an order reaching at least `threshold`?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub accepted: bool,
    /// An order reaching the threshold, present iff `accepted`.
    pub witness: Option<Sequence>,
    /// The exact optimum the answer was derived from (`None` if infeasible).
    pub optimum: Option<Rational>,
}

/// Solves exactly and compares the optimum with `threshold`. Uses the
/// subset programs within their limits and branch and bound beyond them.
pub fn decide_nvep(instance: &Instance, threshold: &Rational, limits: &Limits) -> Result<Decision> {
    let result = solve_exact(instance, limits)?;
    let (accepted, witness, optimum) = match result.best {
        Some(best) => {
            let accepted = best.distance >= *threshold;
            (accepted, accepted.then_some(best.sequence), Some(best.distance))
        }
        None => (false, None, None),
    };
    Ok(Decision {
        accepted,
        witness,
        optimum,
    })
}

pub(crate) fn solve_exact(instance: &Instance, limits: &Limits) -> Result<SolveResult> {
    let n = instance.len();
    if instance.is_constrained() {
        if n <= limits.constrained_dp {
            return solve_constrained_dp(instance, limits);
        }
    } else if n <= limits.suffix_dp {
        return solve_suffix_dp(instance, limits);
    }
    solve_branch_and_bound(instance)
}

/// Polynomial-time certificate check: `candidate` is a permutation, obeys
/// the instance's constraints and reaches `threshold`. Malformed
/// certificates are rejected, never errors.
pub fn verify_certificate(instance: &Instance, candidate: &Sequence, threshold: &Rational) -> bool {
    candidate.is_permutation_of(instance.len())
        && order_respects_adjacency(instance, candidate.order())
        && objective(instance, candidate.order()) >= *threshold
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::evaluate;
    use crate::rational::{integer, ratio};

    fn halves(n: i64) -> Instance {
        Instance::from_pairs((1..=n).map(|a| (integer(a), ratio(1, 2)))).unwrap()
    }

    #[test]
    fn decision_examples() {
        let inst = halves(3);
        let d = decide_nvep(&inst, &integer(3), &Limits::default()).unwrap();
        assert!(d.accepted);
        assert!(evaluate(&inst, d.witness.as_ref().unwrap()).unwrap() >= integer(3));

        let d = decide_nvep(&inst, &ratio(14, 3), &Limits::default()).unwrap();
        assert!(!d.accepted);
        assert!(d.witness.is_none());
        assert_eq!(d.optimum, Some(ratio(13, 3)));

        assert!(decide_nvep(&inst, &integer(0), &Limits::default()).unwrap().accepted);
    }

    #[test]
    fn infeasible_instances_are_rejected() {
        let inst = halves(3).with_adjacency([]).unwrap();
        let d = decide_nvep(&inst, &integer(0), &Limits::default()).unwrap();
        assert!(!d.accepted);
        assert_eq!(d.optimum, None);
    }

    #[test]
    fn falls_back_to_branch_and_bound() {
        let limits = Limits { suffix_dp: 2, constrained_dp: 2, ..Limits::default() };
        let d = decide_nvep(&halves(4), &integer(4), &limits).unwrap();
        assert!(d.accepted);
        let chain = halves(4).with_adjacency([(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = decide_nvep(&chain, &integer(4), &limits).unwrap();
        assert_eq!(d.witness.unwrap().order(), &[0, 1, 2, 3]);
    }

    #[test]
    fn certificate_examples() {
        let inst = halves(3);
        let best = Sequence::new(vec![0, 1, 2]);
        assert!(verify_certificate(&inst, &best, &ratio(13, 3)));
        assert!(!verify_certificate(&inst, &best, &ratio(14, 3)));
        assert!(!verify_certificate(&inst, &Sequence::new(vec![0, 0, 2]), &integer(0)));
        assert!(!verify_certificate(&inst, &Sequence::new(vec![0, 1]), &integer(0)));

        let chain = halves(3).with_adjacency([(0, 1), (1, 2)]).unwrap();
        assert!(verify_certificate(&chain, &best, &integer(3)));
        assert!(!verify_certificate(&chain, &Sequence::new(vec![1, 0, 2]), &integer(0)));
    }
}
