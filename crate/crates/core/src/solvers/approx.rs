//! Floating-point shadow of an instance for candidate screening.
//!
//! Solvers compare candidates in `f64` first and hand every candidate within
//! [`MARGIN`] (relative) of the float maximum to exact arithmetic. All
//! shadow quantities are sums, products and quotients of positive numbers,
//! so their relative error stays below roughly `4n` units in the last place
//! (~1e-14 for n = 24), far inside the margin. Inputs outside
//! [`MIN_MAGNITUDE`, `MAX_MAGNITUDE`] disable the shadow entirely.

use crate::instance::Instance;
use crate::rational::to_f64;

pub(crate) const MARGIN: f64 = 1e-9;
const MIN_MAGNITUDE: f64 = 1e-100;
const MAX_MAGNITUDE: f64 = 1e100;

pub(crate) struct Shadow {
    pub capacity: Vec<f64>,
    pub rate: Vec<f64>,
}

impl Shadow {
    pub fn of(instance: &Instance) -> Option<Self> {
        let in_range = |x: f64| (MIN_MAGNITUDE..=MAX_MAGNITUDE).contains(&x);
        let mut capacity = Vec::with_capacity(instance.len());
        let mut rate = Vec::with_capacity(instance.len());
        for v in instance.vehicles() {
            let a = to_f64(&v.capacity).filter(|&x| in_range(x))?;
            let b = to_f64(&v.rate).filter(|&x| in_range(x))?;
            capacity.push(a);
            rate.push(b);
        }
        Some(Self { capacity, rate })
    }
}

/// Lower edge of the band of candidates that might equal `best` exactly.
pub(crate) fn near(best: f64) -> f64 {
    best - MARGIN * best.abs()
}
