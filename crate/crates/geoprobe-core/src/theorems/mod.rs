//! One executable checker per solved problem. Each check evaluates both
//! sides of its identity/bound on a scene and reports a normalized residual;
//! the `run_*` drivers aggregate seeded random scenes into a
//! [`CheckReport`].

pub mod t1;
pub mod t2;
pub mod t3;
pub mod t4;
pub mod t5;
pub mod t6;
pub mod t7;
pub mod t8;
pub mod t9;

use std::time::Instant;

use crate::error::{GeomError, Result};
use crate::report::CheckReport;
use crate::runner::{map_trials, Exec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
}

pub const ALL_THEOREMS: [TheoremId; 9] = [
    TheoremId::T1,
    TheoremId::T2,
    TheoremId::T3,
    TheoremId::T4,
    TheoremId::T5,
    TheoremId::T6,
    TheoremId::T7,
    TheoremId::T8,
    TheoremId::T9,
];

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T1 => "t1",
            TheoremId::T2 => "t2",
            TheoremId::T3 => "t3",
            TheoremId::T4 => "t4",
            TheoremId::T5 => "t5",
            TheoremId::T6 => "t6",
            TheoremId::T7 => "t7",
            TheoremId::T8 => "t8",
            TheoremId::T9 => "t9",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ALL_THEOREMS
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| {
                GeomError::InvalidInput(format!(
                    "unknown theorem id '{s}' (valid: t1 t2 t3 t4 t5 t6 t7 t8 t9)"
                ))
            })
    }
}

/// Shared driver: evaluate `trial(seed, i)` for `i < trials` (in parallel by
/// default) and aggregate. `witness` re-materializes scene summaries for the
/// worst trials only.
pub(crate) fn drive(
    id: &str,
    exec: Exec,
    trials: u64,
    seed: u64,
    tol: f64,
    trial: impl Fn(u64, u64) -> f64 + Sync + Send,
    witness: impl Fn(u64, u64) -> String,
) -> CheckReport {
    let start = Instant::now();
    let residuals = map_trials(exec, trials, |i| trial(seed, i));
    let wall = start.elapsed().as_secs_f64() * 1e3;
    CheckReport::from_residuals(id, seed, tol, &residuals, |i| witness(seed, i), wall)
}

/// Run a theorem's randomized verification. `k` feeds the checks that take a
/// division ratio (t9; for t4 it overrides the per-trial random fraction).
pub fn verify(
    id: TheoremId,
    exec: Exec,
    trials: u64,
    seed: u64,
    tol: f64,
    k: Option<f64>,
) -> Result<CheckReport> {
    match id {
        TheoremId::T1 => Ok(t1::run(exec, trials, seed, tol)),
        TheoremId::T2 => Ok(t2::run(exec, trials, seed, tol)),
        TheoremId::T3 => Ok(t3::run(exec, trials, seed, tol)),
        TheoremId::T4 => t4::run(exec, trials, seed, tol, k),
        TheoremId::T5 => Ok(t5::run(exec, trials, seed, tol)),
        TheoremId::T6 => Ok(t6::run(exec, trials, seed, tol)),
        TheoremId::T7 => Ok(t7::run(exec, trials, seed, tol)),
        TheoremId::T8 => Ok(t8::run(exec, trials, seed, tol)),
        TheoremId::T9 => t9::run(exec, trials, seed, tol, k),
    }
}

/// Replay one trial of a theorem check: the trial's residual and scene
/// summary, computed through the same code path as the batch run.
pub fn replay(id: TheoremId, seed: u64, index: u64, k: Option<f64>) -> Result<(f64, String)> {
    Ok(match id {
        TheoremId::T1 => (t1::trial(seed, index), t1::witness(seed, index)),
        TheoremId::T2 => (t2::trial(seed, index), t2::witness(seed, index)),
        TheoremId::T3 => (t3::trial(seed, index), t3::witness(seed, index)),
        TheoremId::T4 => (t4::trial(seed, index, k), t4::witness(seed, index)),
        TheoremId::T5 => (t5::trial(seed, index), t5::witness(seed, index)),
        TheoremId::T6 => (t6::trial(seed, index), t6::witness(seed, index)),
        TheoremId::T7 => (t7::trial(seed, index), t7::witness(seed, index)),
        TheoremId::T8 => (t8::trial(seed, index), t8::witness(seed, index)),
        TheoremId::T9 => (t9::trial(seed, index, k), t9::witness(seed, index, k)),
    })
}
