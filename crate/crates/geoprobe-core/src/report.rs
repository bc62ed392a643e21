//! Check reports: residual statistics plus replayable failure witnesses.

use std::collections::BTreeMap;

/// Worst trials are kept as witnesses, capped at this many.
pub const MAX_WITNESSES: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub struct FailureWitness {
    pub trial_index: u64,
    pub residual: f64,
    pub scene: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub theorem_id: String,
    pub trials: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub max_residual: f64,
    pub mean_residual: f64,
    /// Sorted by residual descending, at most [`MAX_WITNESSES`] entries.
    pub failures: Vec<FailureWitness>,
    pub pass: bool,
    pub wall_time_ms: f64,
    /// Checker-specific named statistics.
    pub extras: BTreeMap<String, f64>,
}

impl CheckReport {
    /// Aggregate per-trial residuals. `witness` reconstructs the scene
    /// summary for a failing trial index (scenes are pure functions of the
    /// index, so only the worst ones are ever materialized).
    pub fn from_residuals(
        theorem_id: &str,
        seed: u64,
        tolerance: f64,
        residuals: &[f64],
        witness: impl Fn(u64) -> String,
        wall_time_ms: f64,
    ) -> Self {
        let trials = residuals.len() as u64;
        let mut max_residual: f64 = 0.0;
        let mut sum = 0.0;
        let mut failing: Vec<(u64, f64)> = Vec::new();
        for (i, &r) in residuals.iter().enumerate() {
            max_residual = max_residual.max(r);
            sum += r;
            if !(r < tolerance) {
                failing.push((i as u64, r));
            }
        }
        failing.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        failing.truncate(MAX_WITNESSES);
        let failures: Vec<FailureWitness> = failing
            .into_iter()
            .map(|(trial_index, residual)| FailureWitness {
                trial_index,
                residual,
                scene: witness(trial_index),
            })
            .collect();
        CheckReport {
            theorem_id: theorem_id.to_string(),
            trials,
            seed,
            tolerance,
            max_residual,
            mean_residual: if trials == 0 { 0.0 } else { sum / trials as f64 },
            pass: failures.is_empty(),
            failures,
            wall_time_ms,
            extras: BTreeMap::new(),
        }
    }

    pub fn with_extra(mut self, key: &str, value: f64) -> Self {
        self.extras.insert(key.to_string(), value);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregation_invariants() {
        let residuals = [1e-12, 5e-9, 2e-12, 7e-9];
        let report =
            CheckReport::from_residuals("t1", 42, 1e-9, &residuals, |i| format!("scene {i}"), 1.0);
        assert!(!report.pass);
        assert_eq!(report.failures.len(), 2);
        // Sorted by residual descending.
        assert_eq!(report.failures[0].trial_index, 3);
        assert_eq!(report.failures[1].trial_index, 1);
        assert!(report.max_residual >= report.mean_residual);
        assert_eq!(report.trials, 4);
    }

    #[test]
    fn pass_means_no_failures() {
        let report = CheckReport::from_residuals("t2", 1, 1e-9, &[1e-13; 10], |_| String::new(), 0.1);
        assert!(report.pass);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn witness_cap() {
        let residuals = vec![1.0; 100];
        let report = CheckReport::from_residuals("t3", 1, 1e-9, &residuals, |i| i.to_string(), 0.1);
        assert_eq!(report.failures.len(), MAX_WITNESSES);
    }
}
