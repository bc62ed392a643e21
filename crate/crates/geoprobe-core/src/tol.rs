//! Normalization rules and thresholds behind every pass/fail decision.

/// Default residual threshold for identity checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Hysteresis factor: a conjecture is refuted only by a witness exceeding
/// `10 × tol`, so near-threshold noise cannot flip verdicts.
pub const REFUTE_FACTOR: f64 = 10.0;

/// Relative residual of `lhs = rhs`: `|lhs − rhs| / max(1, |lhs|, |rhs|)`.
pub fn rel_residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / 1.0_f64.max(lhs.abs()).max(rhs.abs())
}

/// Tolerance policy carried by checks: one threshold, fixed normalization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TolerancePolicy {
    pub threshold: f64,
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        TolerancePolicy { threshold: DEFAULT_TOL }
    }
}

impl TolerancePolicy {
    pub fn new(threshold: f64) -> Self {
        TolerancePolicy { threshold }
    }

    pub fn passes(&self, residual: f64) -> bool {
        residual < self.threshold
    }

    pub fn refutes(&self, residual: f64) -> bool {
        residual > REFUTE_FACTOR * self.threshold
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rel_residual_normalizes_by_magnitude() {
        assert_eq!(rel_residual(1.0, 1.0), 0.0);
        assert!((rel_residual(1e12, 1e12 + 1e3) - 1e-9).abs() < 1e-22);
        assert_eq!(rel_residual(0.0, 1e-12), 1e-12);
    }

    #[test]
    fn hysteresis_band() {
        let tol = TolerancePolicy::default();
        assert!(tol.passes(1e-10));
        assert!(!tol.passes(2e-9));
        assert!(!tol.refutes(2e-9));
        assert!(tol.refutes(2e-8));
    }
}
