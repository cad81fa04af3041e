//! Vehicles, fleets and refueling orders.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// One vehicle of the fleet: fuel it carries and fuel burned per unit distance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vehicle {
    pub capacity: Rational,
    pub rate: Rational,
}

impl Vehicle {
    pub fn new(capacity: Rational, rate: Rational) -> Result<Self> {
        if !capacity.is_positive() {
            return Err(Error::InvalidInstance(format!(
                "capacity must be positive, got {capacity}"
            )));
        }
        if !rate.is_positive() {
            return Err(Error::InvalidInstance(format!(
                "rate must be positive, got {rate}"
            )));
        }
        Ok(Self { capacity, rate })
    }
}

/// A validated fleet, optionally restricted in which vehicle may directly
/// follow which (`adjacency`) and which vehicles may go last (`terminals`).
///
/// A missing relation means "everything allowed". Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    vehicles: Vec<Vehicle>,
    /// Row-major `n * n`; `adjacency[i * n + j]` allows `j` right after `i`.
    adjacency: Option<Vec<bool>>,
    terminals: Option<Vec<bool>>,
}

impl Instance {
    pub fn new(vehicles: Vec<Vehicle>) -> Result<Self> {
        if vehicles.is_empty() {
            return Err(Error::InvalidInstance("fleet must have at least one vehicle".into()));
        }
        Ok(Self {
            vehicles,
            adjacency: None,
            terminals: None,
        })
    }

    /// Builds an instance from `(capacity, rate)` pairs.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let vehicles = pairs
            .into_iter()
            .map(|(a, b)| Vehicle::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vehicles)
    }

    /// Restricts consecutive pairs to `pairs` (0-based `(i, j)`: `j` may follow `i`).
    pub fn with_adjacency<I>(mut self, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = self.len();
        let mut matrix = vec![false; n * n];
        for (i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::InvalidInstance(format!(
                    "adjacency pair ({}, {}) out of range for n = {n}",
                    i + 1,
                    j + 1
                )));
            }
            matrix[i * n + j] = true;
        }
        self.adjacency = Some(matrix);
        Ok(self)
    }

    /// Restricts the last position to the vehicles in `allowed` (0-based).
    pub fn with_terminals<I>(mut self, allowed: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let n = self.len();
        let mut flags = vec![false; n];
        for i in allowed {
            if i >= n {
                return Err(Error::InvalidInstance(format!(
                    "terminal {} out of range for n = {n}",
                    i + 1
                )));
            }
            flags[i] = true;
        }
        self.terminals = Some(flags);
        Ok(self)
    }

    pub fn without_constraints(&self) -> Self {
        Self {
            vehicles: self.vehicles.clone(),
            adjacency: None,
            terminals: None,
        }
    }

    pub fn len(&self) -> usize {
        self.vehicles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vehicles.is_empty()
    }

    pub fn vehicles(&self) -> &[Vehicle] {
        &self.vehicles
    }

    pub fn vehicle(&self, i: usize) -> &Vehicle {
        &self.vehicles[i]
    }

    pub fn capacity(&self, i: usize) -> &Rational {
        &self.vehicles[i].capacity
    }

    pub fn rate(&self, i: usize) -> &Rational {
        &self.vehicles[i].rate
    }

    pub fn has_adjacency(&self) -> bool {
        self.adjacency.is_some()
    }

    pub fn has_terminals(&self) -> bool {
        self.terminals.is_some()
    }

    /// True when either relation is present, even if it happens to allow everything.
    pub fn is_constrained(&self) -> bool {
        self.has_adjacency() || self.has_terminals()
    }

    /// May `next` directly follow `prev`?
    pub fn allows(&self, prev: usize, next: usize) -> bool {
        match &self.adjacency {
            None => true,
            Some(m) => m[prev * self.len() + next],
        }
    }

    pub fn terminal_allowed(&self, i: usize) -> bool {
        self.terminals.as_ref().is_none_or(|t| t[i])
    }

    /// Allowed consecutive pairs in row-major order, `None` if unrestricted.
    pub fn adjacency_pairs(&self) -> Option<Vec<(usize, usize)>> {
        let n = self.len();
        self.adjacency.as_ref().map(|m| {
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i * n + j])
                .collect()
        })
    }

    pub fn terminal_list(&self) -> Option<Vec<usize>> {
        self.terminals
            .as_ref()
            .map(|t| (0..t.len()).filter(|&i| t[i]).collect())
    }

    /// Applies `f` to every capacity, keeping constraints.
    pub fn map_capacities(&self, f: impl Fn(&Rational) -> Rational) -> Result<Self> {
        let vehicles = self
            .vehicles
            .iter()
            .map(|v| Vehicle::new(f(&v.capacity), v.rate.clone()))
            .collect::<Result<_>>()?;
        Ok(Self { vehicles, ..self.clone() })
    }

    /// Applies `f` to every rate, keeping constraints.
    pub fn map_rates(&self, f: impl Fn(&Rational) -> Rational) -> Result<Self> {
        let vehicles = self
            .vehicles
            .iter()
            .map(|v| Vehicle::new(v.capacity.clone(), f(&v.rate)))
            .collect::<Result<_>>()?;
        Ok(Self { vehicles, ..self.clone() })
    }
}

/// A refueling order: `order[p]` is the vehicle at position `p` (0-based).
/// The vehicle at position `p` refuels every later one and turns back first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sequence(Vec<usize>);

impl Sequence {
    pub fn new(order: Vec<usize>) -> Self {
        Self(order)
    }

    /// Builds from the 1-based indices used in all user-facing text.
    pub fn from_one_based(order: &[usize]) -> Result<Self> {
        order
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| Error::MalformedSequence("vehicle indices start at 1".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn is_permutation_of(&self, n: usize) -> bool {
        if self.0.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        self.0
            .iter()
            .all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
    }

    pub fn check_against(&self, instance: &Instance) -> Result<()> {
        if self.is_permutation_of(instance.len()) {
            Ok(())
        } else {
            Err(Error::MalformedSequence(format!(
                "({self}) is not a permutation of 1..={}",
                instance.len()
            )))
        }
    }
}

impl From<Vec<usize>> for Sequence {
    fn from(order: Vec<usize>) -> Self {
        Self(order)
    }
}

/// Space-separated, 1-based.
impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}
