use nvep_core::format::{parse_instance, write_instance};
use nvep_core::rational::{integer, ratio, Rational};
use nvep_core::reduction::{
    decide_hamiltonian_path, decode_sequence, hp_oracle_backtracking, parse_graph, reduce_graph,
    verify_path, write_graph, Digraph, Semantics, Via,
};
use nvep_core::solvers::{
    decide_nvep, greedy_heuristic, solve_branch_and_bound, solve_brute_force,
    solve_constrained_dp, solve_constrained_dp_exact, solve_suffix_dp, solve_suffix_dp_exact,
    verify_certificate, Limits,
};
use nvep_core::{check_feasibility, evaluate, segment_distances, trip_plan, Instance, Sequence};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (1i64..=60, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
}

fn instance(max_n: usize) -> impl Strategy<Value = Instance> {
    prop::collection::vec((rational(), rational()), 1..=max_n)
        .prop_map(|pairs| Instance::from_pairs(pairs).unwrap())
}

/// Values from a tiny pool, so many orders tie exactly.
fn tie_heavy(max_n: usize) -> impl Strategy<Value = Instance> {
    let value = prop::sample::select(vec![ratio(1, 1), ratio(2, 1), ratio(1, 2)]);
    prop::collection::vec((value.clone(), value), 1..=max_n)
        .prop_map(|pairs| Instance::from_pairs(pairs).unwrap())
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Instance, Sequence)> {
    instance(max_n).prop_flat_map(|inst| {
        let n = inst.len();
        (Just(inst), Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(Sequence::new))
    })
}

/// Random adjacency (and sometimes terminal) restrictions on top of a fleet.
fn constrained(max_n: usize) -> impl Strategy<Value = Instance> {
    instance(max_n).prop_flat_map(|inst| {
        let n = inst.len();
        (
            Just(inst),
            prop::collection::vec(any::<bool>(), n * n),
            prop::option::of(prop::collection::vec(any::<bool>(), n)),
        )
            .prop_map(move |(inst, adj, term)| {
                let pairs = (0..n * n).filter(|&k| adj[k]).map(|k| (k / n, k % n));
                let inst = inst.with_adjacency(pairs).unwrap();
                match term {
                    Some(t) => inst.with_terminals((0..n).filter(|&i| t[i])).unwrap(),
                    None => inst,
                }
            })
    })
}

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            Digraph::new(n, (0..n * n).filter(|&k| bits[k] && k / n != k % n).map(|k| (k / n, k % n))).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn segments_saturate_every_fuel_row((inst, seq) in with_permutation(9)) {
        let plan = trip_plan(&inst, &seq).unwrap();
        prop_assert!(plan.ledger.iter().all(|row| row.is_tight()));
        prop_assert_eq!(plan.total.clone(), plan.segments.iter().cloned().sum::<Rational>());
        prop_assert_eq!(plan.total.clone(), evaluate(&inst, &seq).unwrap());
        prop_assert!(plan.segments.iter().all(|d| *d > Rational::zero()));
        prop_assert!(plan.stops.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(check_feasibility(&inst, &seq, &plan.segments).unwrap());
    }

    #[test]
    fn stretching_any_segment_breaks_feasibility((inst, seq) in with_permutation(6), pos in 0usize..6) {
        let mut d = segment_distances(&inst, &seq).unwrap();
        let pos = pos % d.len();
        d[pos] += ratio(1, 1000);
        prop_assert!(!check_feasibility(&inst, &seq, &d).unwrap());
    }

    #[test]
    fn scaling_capacities_and_rates((inst, seq) in with_permutation(8), c in rational()) {
        let d = evaluate(&inst, &seq).unwrap();
        let cap = inst.map_capacities(|a| a * &c).unwrap();
        prop_assert_eq!(evaluate(&cap, &seq).unwrap(), &d * &c);
        let rate = inst.map_rates(|b| b * &c).unwrap();
        prop_assert_eq!(evaluate(&rate, &seq).unwrap(), &d / &c);
    }

    #[test]
    fn relabeling_leaves_distance_unchanged(
        (inst, seq) in with_permutation(8),
        shuffle_seed in any::<u64>(),
    ) {
        let n = inst.len();
        // relabel vehicle v as perm[v]
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = shuffle_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut vehicles = vec![None; n];
        for v in 0..n {
            vehicles[perm[v]] = Some(inst.vehicle(v).clone());
        }
        let relabeled = Instance::new(vehicles.into_iter().map(Option::unwrap).collect()).unwrap();
        let moved = Sequence::new(seq.order().iter().map(|&v| perm[v]).collect());
        prop_assert_eq!(evaluate(&relabeled, &moved).unwrap(), evaluate(&inst, &seq).unwrap());
    }

    #[test]
    fn exact_solvers_agree(inst in instance(7)) {
        let limits = Limits::default();
        let brute = solve_brute_force(&inst, &limits).unwrap();
        prop_assert_eq!(&solve_suffix_dp(&inst, &limits).unwrap().best, &brute.best);
        prop_assert_eq!(&solve_suffix_dp_exact(&inst, &limits).unwrap().best, &brute.best);
        prop_assert_eq!(&solve_branch_and_bound(&inst).unwrap().best, &brute.best);
        prop_assert_eq!(&solve_constrained_dp(&inst, &limits).unwrap().best, &brute.best);
    }

    #[test]
    fn exact_solvers_agree_under_ties(inst in tie_heavy(7)) {
        let limits = Limits::default();
        let brute = solve_brute_force(&inst, &limits).unwrap();
        prop_assert_eq!(&solve_suffix_dp(&inst, &limits).unwrap().best, &brute.best);
        prop_assert_eq!(&solve_branch_and_bound(&inst).unwrap().best, &brute.best);
        let n = inst.len();
        let full = inst.with_adjacency((0..n).flat_map(|i| (0..n).map(move |j| (i, j)))).unwrap();
        prop_assert_eq!(&solve_constrained_dp(&full, &limits).unwrap().best, &brute.best);
    }

    #[test]
    fn constrained_solvers_agree(inst in constrained(6)) {
        let limits = Limits::default();
        let brute = solve_brute_force(&inst, &limits).unwrap();
        let dp = solve_constrained_dp(&inst, &limits).unwrap();
        prop_assert_eq!(&dp.best, &brute.best);
        prop_assert_eq!(&solve_constrained_dp_exact(&inst, &limits).unwrap().best, &brute.best);
        prop_assert_eq!(&solve_branch_and_bound(&inst).unwrap().best, &brute.best);
        if let Some(best) = &dp.best {
            prop_assert!(verify_certificate(&inst, &best.sequence, &best.distance));
        }
        if let Some(g) = greedy_heuristic(&inst).unwrap().best {
            prop_assert!(verify_certificate(&inst, &g.sequence, &g.distance));
            prop_assert!(g.distance <= dp.best.as_ref().unwrap().distance);
        }
    }

    #[test]
    fn greedy_never_beats_optimum(inst in instance(8)) {
        let opt = solve_suffix_dp(&inst, &Limits::default()).unwrap();
        let greedy = greedy_heuristic(&inst).unwrap();
        prop_assert!(greedy.distance().unwrap() <= opt.distance().unwrap());
    }

    #[test]
    fn greedy_is_optimal_for_equal_rates(caps in prop::collection::vec(rational(), 1..=8), b in rational()) {
        let inst = Instance::from_pairs(caps.into_iter().map(|a| (a, b.clone()))).unwrap();
        let brute = solve_brute_force(&inst, &Limits::default()).unwrap();
        let greedy = greedy_heuristic(&inst).unwrap();
        prop_assert_eq!(greedy.distance(), brute.distance());
    }

    #[test]
    fn decision_is_monotone(inst in constrained(5), t in rational(), lower in rational()) {
        let limits = Limits::default();
        let d = decide_nvep(&inst, &t, &limits).unwrap();
        if d.accepted {
            let smaller = &t - &lower;
            prop_assert!(decide_nvep(&inst, &smaller, &limits).unwrap().accepted);
            prop_assert!(verify_certificate(&inst, d.witness.as_ref().unwrap(), &t));
        } else {
            prop_assert!(d.witness.is_none());
        }
    }

    #[test]
    fn certificate_check_matches_recomputation(
        inst in constrained(5),
        order in prop::collection::vec(0usize..6, 0..7),
        t in rational(),
    ) {
        let seq = Sequence::new(order);
        let expected = seq.is_permutation_of(inst.len())
            && seq.order().windows(2).all(|w| inst.allows(w[0], w[1]))
            && seq.order().last().is_none_or(|&v| inst.terminal_allowed(v))
            && evaluate(&inst, &seq).unwrap() >= t;
        prop_assert_eq!(verify_certificate(&inst, &seq, &t), expected);
    }

    #[test]
    fn instance_text_round_trips(inst in constrained(6)) {
        prop_assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn graph_text_round_trips(g in digraph(8)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn reduction_decides_hamiltonicity(g in digraph(7)) {
        let inst = reduce_graph(&g, Semantics::Forbidden);
        prop_assert_eq!(inst.len(), g.vertex_count());
        prop_assert_eq!(inst.adjacency_pairs().unwrap().len(), g.edge_count());

        let answer = decide_hamiltonian_path(&g, Via::Both, &Limits::default()).unwrap();
        prop_assert!(answer.discrepancy.is_none());
        prop_assert_eq!(answer.exists, hp_oracle_backtracking(&g).is_some());
        if let Some(p) = &answer.path {
            prop_assert!(verify_path(&g, p));
        }

        let solved = solve_constrained_dp(&inst, &Limits::default()).unwrap();
        if let Some(best) = solved.best {
            let path = decode_sequence(&g, &best.sequence).unwrap();
            prop_assert!(verify_path(&g, &path));
            prop_assert!(best.distance >= integer(g.vertex_count() as i64));
        }
    }
}
