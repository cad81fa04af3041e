//! Size ladders for eyeballing growth: subset DP (`2^n` subsets) against
//! brute force (`n!` orders), and the two Hamiltonian-path routes.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::generate::{generate_graph, generate_instance, GraphFamily, InstanceSpec};
use crate::rational::Rational;
use crate::reduction::{decide_hamiltonian_path, verify_path, Via};
use crate::solvers::{solve_branch_and_bound, solve_brute_force, solve_suffix_dp, Limits};

#[derive(Debug, Clone)]
pub struct SolverSuite {
    pub min_n: usize,
    pub max_n: usize,
    /// Branch and bound runs only up to this size.
    pub bnb_max_n: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for SolverSuite {
    fn default() -> Self {
        Self {
            min_n: 2,
            max_n: 20,
            bnb_max_n: 10,
            seed: 1,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub work: u64,
    pub time: Duration,
}

#[derive(Debug, Clone)]
pub struct SolverRow {
    pub n: usize,
    pub optimum: Rational,
    pub dp: Run,
    /// `None`: refused above the enumeration cap.
    pub brute: Option<Run>,
    /// `None`: skipped above `bnb_max_n`.
    pub bnb: Option<Run>,
    /// Every solver that ran returned the same order and distance.
    pub agree: bool,
}

pub fn solver_suite(suite: &SolverSuite) -> Result<Vec<SolverRow>> {
    let mut rows = Vec::new();
    for n in suite.min_n.max(1)..=suite.max_n {
        let instance = generate_instance(n, &InstanceSpec::default(), suite.seed.wrapping_add(n as u64))?;
        let dp = solve_suffix_dp(&instance, &suite.limits)?;
        let mut agree = true;
        let brute = match solve_brute_force(&instance, &suite.limits) {
            Ok(r) => {
                agree &= r.best == dp.best;
                Some(Run {
                    work: r.stats.permutations_enumerated,
                    time: r.stats.wall_time,
                })
            }
            Err(Error::CapacityRefusal { .. }) => None,
            Err(e) => return Err(e),
        };
        let bnb = if n <= suite.bnb_max_n {
            let r = solve_branch_and_bound(&instance)?;
            agree &= r.best == dp.best;
            Some(Run {
                work: r.stats.nodes_expanded,
                time: r.stats.wall_time,
            })
        } else {
            None
        };
        rows.push(SolverRow {
            n,
            optimum: dp.distance().expect("unconstrained").clone(),
            dp: Run {
                work: dp.stats.subsets_filled,
                time: dp.stats.wall_time,
            },
            brute,
            bnb,
            agree,
        });
    }
    Ok(rows)
}

fn ms(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

pub fn render_solver_table(rows: &[SolverRow]) -> String {
    let mut out = String::from("n\tdp_subsets\tdp_ms\tbrute_perms\tbrute_ms\tbnb_nodes\tbnb_ms\tagree\n");
    for r in rows {
        let (bp, bt) = r.brute.map_or(("refused".into(), "-".into()), |b| (b.work.to_string(), ms(b.time)));
        let (np, nt) = r.bnb.map_or(("-".into(), "-".into()), |b| (b.work.to_string(), ms(b.time)));
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.n,
            r.dp.work,
            ms(r.dp.time),
            bp,
            bt,
            np,
            nt,
            r.agree
        )
        .unwrap();
    }
    out
}

#[derive(Debug, Clone)]
pub struct ReductionSuite {
    pub max_n: usize,
    /// Random graphs per density step (densities 0.1, 0.2, ..., 0.9).
    pub graphs_per_density: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for ReductionSuite {
    fn default() -> Self {
        Self {
            max_n: 9,
            graphs_per_density: 3,
            seed: 1,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRow {
    pub n: usize,
    pub graphs: usize,
    pub yes: usize,
    pub no: usize,
    pub disagreements: usize,
    /// "Yes" answers whose path failed `verify_path`.
    pub bad_witnesses: usize,
    pub time: Duration,
}

/// The graphs the reduction suite checks at size `n`: a density sweep of
/// random digraphs plus paths, cycles and edgeless graphs.
pub fn reduction_cases(n: usize, graphs_per_density: usize, seed: u64) -> Result<Vec<crate::reduction::Digraph>> {
    let mut graphs = Vec::new();
    for step in 1..=9u64 {
        let p = step as f64 / 10.0;
        for k in 0..graphs_per_density as u64 {
            let case_seed = seed
                .wrapping_mul(1_000_003)
                .wrapping_add((n as u64) << 32)
                .wrapping_add(step << 16)
                .wrapping_add(k);
            graphs.push(generate_graph(GraphFamily::Gnp { p }, n, case_seed)?);
        }
    }
    for family in [GraphFamily::Path, GraphFamily::Cycle, GraphFamily::Empty] {
        graphs.push(generate_graph(family, n, seed)?);
    }
    Ok(graphs)
}

pub fn reduction_suite(suite: &ReductionSuite) -> Result<Vec<ReductionRow>> {
    let mut rows = Vec::new();
    for n in 1..=suite.max_n {
        let started = Instant::now();
        let cases = reduction_cases(n, suite.graphs_per_density, suite.seed)?;
        let mut row = ReductionRow {
            n,
            graphs: cases.len(),
            yes: 0,
            no: 0,
            disagreements: 0,
            bad_witnesses: 0,
            time: Duration::ZERO,
        };
        for g in &cases {
            let answer = decide_hamiltonian_path(g, Via::Both, &suite.limits)?;
            if answer.discrepancy.is_some() {
                row.disagreements += 1;
            }
            if answer.exists {
                row.yes += 1;
                if !answer.path.as_ref().is_some_and(|p| verify_path(g, p)) {
                    row.bad_witnesses += 1;
                }
            } else {
                row.no += 1;
            }
        }
        row.time = started.elapsed();
        rows.push(row);
    }
    Ok(rows)
}

pub fn render_reduction_table(rows: &[ReductionRow]) -> String {
    let mut out = String::from("n\tgraphs\tyes\tno\tdisagreements\tbad_witnesses\tms\n");
    for r in rows {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.n,
            r.graphs,
            r.yes,
            r.no,
            r.disagreements,
            r.bad_witnesses,
            ms(r.time)
        )
        .unwrap();
    }
    out
}
