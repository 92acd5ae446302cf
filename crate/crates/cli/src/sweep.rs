//! Sweep description and the ordered concurrent executor.
//!
//! Sweep points run on a small worker pool (one thread per available core,
//! capped by the point count); workers pull indices from a shared counter, so
//! completion order is nondeterministic, but results are reassembled in sweep
//! order before any output is written.

use std::sync::atomic::{AtomicUsize, Ordering};

use noma_bler::config::Scenario;
use noma_bler::{Error, Result};

/// Which scalar of the scenario a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVar {
    /// Transmit SNR in dB.
    RhoDb,
    /// Blocklength in channel uses.
    M,
}

/// One-dimensional sweep: an inclusive arithmetic grid over one scenario
/// scalar, with every other key fixed.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub variable: SweepVar,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
    /// Fully resolved scenario providing every non-swept key.
    pub fixed: Scenario,
}

/// Upper bound on grid size; a step that produces more points than this is
/// almost certainly a config mistake.
const MAX_POINTS: usize = 10_000;

impl SweepSpec {
    pub fn new(variable: SweepVar, start: f64, stop: f64, step: f64, fixed: Scenario) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(Error::Config("sweep bounds must be finite".into()));
        }
        if step <= 0.0 || stop < start {
            return Err(Error::Config(format!(
                "sweep requires start <= stop and step > 0, got [{start}, {stop}] step {step}"
            )));
        }
        let count = ((stop - start) / step).floor() as usize + 1;
        if count > MAX_POINTS {
            return Err(Error::Config(format!(
                "sweep would produce {count} points (limit {MAX_POINTS})"
            )));
        }
        Ok(Self { variable, start, stop, step, fixed })
    }

    /// Grid values, inclusive of `stop` up to a half-step rounding slack.
    pub fn points(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let mut k = 0u32;
        loop {
            let v = self.start + f64::from(k) * self.step;
            if v > self.stop + 0.5 * self.step {
                break;
            }
            out.push(v.min(self.stop));
            k += 1;
        }
        out
    }

    /// Scenario at one grid value: the fixed record with the swept scalar
    /// substituted.
    pub fn scenario_at(&self, value: f64) -> Scenario {
        let mut s = self.fixed.clone();
        match self.variable {
            SweepVar::RhoDb => s.rho_db = value,
            SweepVar::M => s.m = value,
        }
        s
    }
}

/// Run `f` over `points` concurrently and return the results in point order.
///
/// Worker panics propagate; per-point fallibility belongs in `R` (the figure
/// commands return per-row outcomes so one infeasible point cannot reorder or
/// suppress its neighbours).
pub fn run_ordered<P, R, F>(points: &[P], f: F) -> Vec<R>
where
    P: Sync,
    R: Send,
    F: Fn(&P) -> R + Sync,
{
    if points.is_empty() {
        return Vec::new();
    }
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(points.len());
    let next = AtomicUsize::new(0);
    let mut tagged: Vec<(usize, R)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= points.len() {
                            break;
                        }
                        mine.push((i, f(&points[i])));
                    }
                    mine
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    tagged.sort_by_key(|(i, _)| *i);
    tagged.into_iter().map(|(_, r)| r).collect()
}
