//! Exact toolkit for the n-vehicle exploration problem (NVEP).
//!
//! A fleet of `n` vehicles leaves a common depot. Vehicle `i` carries `a_i`
//! units of fuel and burns `b_i` per unit distance. Vehicles drop out one
//! at a time, topping up the ones that continue, and every vehicle must
//! make it back. The question is in which order they should drop out so
//! that the last one gets as far as possible.
//!
//! * [`model`] evaluates an order exactly and audits the fuel balance.
//! * [`solvers`] finds optimal orders (brute force, subset dynamic
//!   programming, branch and bound) and decides threshold questions.
//! * [`reduction`] maps directed graphs onto fleets so that a Hamiltonian
//!   path exists iff some order reaches distance `n`, and checks that claim
//!   against an independent search.
//!
//! All arithmetic that decides anything is exact ([`Rational`]).

pub mod bench;
pub mod error;
pub mod format;
pub mod generate;
pub mod instance;
pub mod model;
pub mod rational;
pub mod reduction;
pub mod solvers;

pub use error::{Error, Result};
pub use instance::{Instance, Sequence, Vehicle};
pub use model::{
    check_feasibility, evaluate, respects_adjacency, segment_distances, trip_plan, LedgerRow,
    TripPlan,
};
pub use rational::Rational;
