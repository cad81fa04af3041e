//! Line-oriented instance files.
//!
//! ```text
//! # comment
//! 3
//! 1 1/2
//! 2 1/2
//! 3 1/2
//! adjacency
//! 1 2
//! 2 3
//! terminals
//! 1 2 3
//! ```
//!
//! The first non-comment line is `n`, followed by `n` lines `a b`. The
//! optional `adjacency` block lists 1-based allowed pairs `i j`; the optional
//! `terminals` block is one line of 1-based vehicles allowed last (an absent
//! line means none). Blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::instance::{Instance, Vehicle};
use crate::rational::parse_rational;

#[derive(PartialEq)]
enum Block {
    Vehicles,
    Adjacency,
    Terminals,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_index(token: &str, n: usize, line: usize, what: &str) -> Result<usize> {
    let i: usize = token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} index `{token}`")))?;
    if i == 0 || i > n {
        return Err(parse_err(line, format!("{what} index {i} out of range 1..={n}")));
    }
    Ok(i - 1)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input, expected vehicle count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first, format!("expected vehicle count, got `{header}`")))?;
    if n == 0 {
        return Err(parse_err(first, "vehicle count must be at least 1"));
    }

    let mut vehicles = Vec::with_capacity(n);
    let mut pairs: Option<Vec<(usize, usize)>> = None;
    let mut terminals: Option<Vec<usize>> = None;
    let mut terminal_lines = 0;
    let mut block = Block::Vehicles;
    let mut last_line = first;

    for (no, line) in lines {
        last_line = no;
        if block == Block::Vehicles && vehicles.len() < n {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let [a, b] = tokens[..] else {
                return Err(parse_err(no, format!("expected `a b`, got `{line}`")));
            };
            let a = parse_rational(a).map_err(|m| parse_err(no, m))?;
            let b = parse_rational(b).map_err(|m| parse_err(no, m))?;
            vehicles.push(Vehicle::new(a, b).map_err(|e| parse_err(no, e.to_string()))?);
            continue;
        }
        match line {
            "adjacency" => {
                if block != Block::Vehicles {
                    return Err(parse_err(no, "`adjacency` must precede `terminals` and appear once"));
                }
                block = Block::Adjacency;
                pairs = Some(Vec::new());
            }
            "terminals" => {
                if block == Block::Terminals {
                    return Err(parse_err(no, "duplicate `terminals` block"));
                }
                block = Block::Terminals;
                terminals = Some(Vec::new());
            }
            _ => match block {
                Block::Vehicles => {
                    return Err(parse_err(no, format!("unexpected line `{line}` after {n} vehicles")));
                }
                Block::Adjacency => {
                    let tokens: Vec<&str> = line.split_whitespace().collect();
                    let [i, j] = tokens[..] else {
                        return Err(parse_err(no, format!("expected pair `i j`, got `{line}`")));
                    };
                    let i = parse_index(i, n, no, "vehicle")?;
                    let j = parse_index(j, n, no, "vehicle")?;
                    pairs.as_mut().expect("block opened").push((i, j));
                }
                Block::Terminals => {
                    terminal_lines += 1;
                    if terminal_lines > 1 {
                        return Err(parse_err(no, "`terminals` takes a single line of indices"));
                    }
                    let list = terminals.as_mut().expect("block opened");
                    for token in line.split_whitespace() {
                        list.push(parse_index(token, n, no, "vehicle")?);
                    }
                }
            },
        }
    }
    if vehicles.len() < n {
        return Err(parse_err(
            last_line,
            format!("expected {n} vehicles, found {}", vehicles.len()),
        ));
    }

    let mut instance = Instance::new(vehicles)?;
    if let Some(pairs) = pairs {
        instance = instance.with_adjacency(pairs)?;
    }
    if let Some(terminals) = terminals {
        instance = instance.with_terminals(terminals)?;
    }
    Ok(instance)
}

pub fn write_instance(instance: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "{}", instance.len()).unwrap();
    for v in instance.vehicles() {
        writeln!(out, "{} {}", v.capacity, v.rate).unwrap();
    }
    if let Some(pairs) = instance.adjacency_pairs() {
        out.push_str("adjacency\n");
        for (i, j) in pairs {
            writeln!(out, "{} {}", i + 1, j + 1).unwrap();
        }
    }
    if let Some(terminals) = instance.terminal_list() {
        out.push_str("terminals\n");
        let line: Vec<String> = terminals.iter().map(|i| (i + 1).to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}
