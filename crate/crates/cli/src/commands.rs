use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use nvep_core::bench::{
    reduction_suite, render_reduction_table, render_solver_table, solver_suite, ReductionSuite,
    SolverSuite,
};
use nvep_core::format::{parse_instance, write_instance};
use nvep_core::generate::{generate_graph, generate_instance, GraphFamily, InstanceSpec, Range};
use nvep_core::rational::{parse_rational, to_decimal};
use nvep_core::reduction::{
    decide_hamiltonian_path, parse_graph, reduce_graph, semantics_probe, write_graph, Digraph,
    Semantics, Via,
};
use nvep_core::solvers::{
    greedy_heuristic, solve_branch_and_bound, solve_brute_force, solve_constrained_dp,
    solve_suffix_dp, verify_certificate, Limits, SolveResult,
};
use nvep_core::{respects_adjacency, trip_plan, Error, Instance, Sequence};

use crate::{Algo, Command, Family, Kind, SemanticsArg, Suite, ViaArg};

const YES: u8 = 0;
const NO: u8 = 2;
const DISAGREE: u8 = 3;

pub fn run(command: Command) -> Result<ExitCode> {
    let limits = Limits::default();
    match command {
        Command::Solve {
            instance,
            algo,
            cross_check,
        } => solve(&instance, algo, cross_check, &limits),
        Command::Reduce {
            graph,
            semantics,
            output,
        } => reduce(&graph, semantics, output.as_deref()),
        Command::Hp { graph, via } => hp(&graph, via, &limits),
        Command::Verify {
            instance,
            sequence,
            threshold,
        } => verify(&instance, &sequence, &threshold),
        Command::Gen {
            kind,
            n,
            seed,
            family,
            p,
            a_min,
            a_max,
            b_min,
            b_max,
            max_den,
            output,
        } => {
            let text = match kind {
                Kind::Instance => {
                    let spec = InstanceSpec {
                        capacity: range(&a_min, &a_max)?,
                        rate: range(&b_min, &b_max)?,
                        max_denominator: max_den,
                    };
                    write_instance(&generate_instance(n, &spec, seed)?)
                }
                Kind::Graph => {
                    let family = match family {
                        Family::Gnp => GraphFamily::Gnp { p },
                        Family::Path => GraphFamily::Path,
                        Family::Cycle => GraphFamily::Cycle,
                        Family::Empty => GraphFamily::Empty,
                        Family::Complete => GraphFamily::Complete,
                        Family::Split => GraphFamily::Split,
                    };
                    write_graph(&generate_graph(family, n, seed)?)
                }
            };
            emit(&text, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            suite,
            min_n,
            max_n,
            seed,
            bnb_max_n,
            graphs_per_density,
        } => {
            let table = match suite {
                Suite::Solvers => {
                    let defaults = SolverSuite::default();
                    let rows = solver_suite(&SolverSuite {
                        min_n: min_n.unwrap_or(defaults.min_n),
                        max_n: max_n.unwrap_or(defaults.max_n),
                        bnb_max_n,
                        seed,
                        limits,
                    })?;
                    render_solver_table(&rows)
                }
                Suite::Reduction => {
                    let defaults = ReductionSuite::default();
                    let rows = reduction_suite(&ReductionSuite {
                        max_n: max_n.unwrap_or(defaults.max_n),
                        graphs_per_density,
                        seed,
                        limits,
                    })?;
                    render_reduction_table(&rows)
                }
            };
            print!("{table}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Probe { graph } => {
            let g = load_graph(&graph)?;
            print!("{}", semantics_probe(&g, &limits)?.report());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn with_path(path: &Path, e: Error) -> anyhow::Error {
    match e {
        Error::Parse { line, message } => anyhow!("{}:{line}: {message}", path.display()),
        other => anyhow!("{}: {other}", path.display()),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_instance(path: &Path) -> Result<Instance> {
    parse_instance(&read(path)?).map_err(|e| with_path(path, e))
}

fn load_graph(path: &Path) -> Result<Digraph> {
    parse_graph(&read(path)?).map_err(|e| with_path(path, e))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn range(min: &str, max: &str) -> Result<Range> {
    let min = parse_rational(min).map_err(|m| anyhow!(m))?;
    let max = parse_rational(max).map_err(|m| anyhow!(m))?;
    Ok(Range::new(min, max)?)
}

fn solve(path: &Path, algo: Algo, cross_check: bool, limits: &Limits) -> Result<ExitCode> {
    let instance = load_instance(path)?;
    let n = instance.len();
    let result = match algo {
        Algo::Auto if instance.is_constrained() && n <= limits.constrained_dp => {
            solve_constrained_dp(&instance, limits)?
        }
        Algo::Auto if !instance.is_constrained() && n <= limits.suffix_dp => {
            solve_suffix_dp(&instance, limits)?
        }
        Algo::Auto | Algo::Bnb => solve_branch_and_bound(&instance)?,
        Algo::Dp => solve_suffix_dp(&instance, limits)?,
        Algo::Brute => solve_brute_force(&instance, limits)?,
        Algo::Greedy => greedy_heuristic(&instance)?,
    };
    print_result(&result);

    if cross_check {
        if n > limits.brute_force {
            println!("cross_check: skipped (n = {n} above brute-force cap {})", limits.brute_force);
        } else {
            let brute = solve_brute_force(&instance, limits)?;
            let agree = brute.best == result.best;
            println!("cross_check: {}", if agree { "agree" } else { "disagree" });
            if !agree && result.optimal {
                bail!("brute force disagrees with {}", result.solver.name());
            }
        }
    }
    Ok(if result.is_infeasible() { ExitCode::from(NO) } else { ExitCode::SUCCESS })
}

fn print_result(result: &SolveResult) {
    println!("algorithm: {}", result.solver.name());
    match &result.best {
        Some(best) => {
            println!("sequence: {}", best.sequence);
            println!("distance: {}", best.distance);
            println!("approximate: {}", to_decimal(&best.distance, 12));
        }
        None if result.optimal => println!("infeasible"),
        None => println!("infeasible (heuristic found no order)"),
    }
    println!("optimal: {}", result.optimal);
    for (key, value) in result.stats.to_pairs() {
        println!("{key}: {value}");
    }
}

fn reduce(path: &Path, semantics: SemanticsArg, output: Option<&Path>) -> Result<ExitCode> {
    let g = load_graph(path)?;
    let semantics = match semantics {
        SemanticsArg::Forbidden => Semantics::Forbidden,
        SemanticsArg::Zero => Semantics::ZeroDistance,
    };
    let mut text = String::new();
    if semantics == Semantics::ZeroDistance {
        text.push_str("# zero-distance reading: score with the source graph, non-edge segments count 0\n");
    }
    text.push_str(&write_instance(&reduce_graph(&g, semantics)));
    emit(&text, output)?;
    Ok(ExitCode::SUCCESS)
}

fn hp(path: &Path, via: ViaArg, limits: &Limits) -> Result<ExitCode> {
    let g = load_graph(path)?;
    let via = match via {
        ViaArg::Nvep => Via::Nvep,
        ViaArg::Backtrack => Via::Backtrack,
        ViaArg::Both => Via::Both,
    };
    let answer = decide_hamiltonian_path(&g, via, limits).map_err(|e| with_path(path, e))?;
    if let Some(d) = &answer.discrepancy {
        print!("{}", d.report());
        println!("agreement: false");
        return Ok(ExitCode::from(DISAGREE));
    }
    println!("{}", if answer.exists { "yes" } else { "no" });
    if let Some(p) = &answer.path {
        println!("path: {p}");
    }
    if via == Via::Both {
        println!("agreement: true");
    }
    Ok(ExitCode::from(if answer.exists { YES } else { NO }))
}

fn verify(path: &Path, sequence: &str, threshold: &str) -> Result<ExitCode> {
    let instance = load_instance(path)?;
    let indices: Vec<usize> = sequence
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| anyhow!("invalid vehicle index `{t}`")))
        .collect::<Result<_>>()?;
    let threshold = parse_rational(threshold).map_err(|m| anyhow!("threshold: {m}"))?;
    let seq = match Sequence::from_one_based(&indices) {
        Ok(seq) if seq.is_permutation_of(instance.len()) => seq,
        _ => {
            println!("certificate: reject (not a permutation)");
            return Ok(ExitCode::from(NO));
        }
    };

    let plan = trip_plan(&instance, &seq)?;
    println!("distance: {}", plan.total);
    println!("approximate: {}", to_decimal(&plan.total, 12));
    for row in &plan.ledger {
        println!(
            "ledger {}..{}: lhs={} rhs={} {}",
            row.start + 1,
            instance.len(),
            row.lhs,
            row.rhs,
            if row.is_tight() { "tight" } else if row.holds() { "slack" } else { "violated" }
        );
    }
    let adjacency_ok = respects_adjacency(&instance, &seq)?;
    println!("adjacency: {}", if adjacency_ok { "ok" } else { "violated" });
    let accepted = verify_certificate(&instance, &seq, &threshold);
    println!(
        "certificate: {} (threshold {threshold})",
        if accepted { "accept" } else { "reject" }
    );
    Ok(ExitCode::from(if accepted { YES } else { NO }))
}

