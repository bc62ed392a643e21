//! Trial execution. With the `parallel` feature (default) trials fan out over
//! rayon; the sequential path is always available and must produce identical
//! results, which the per-index RNG streams and order-preserving collect
//! guarantee.

/// How to execute a batch of independent trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    /// Rayon data-parallel when the `parallel` feature is enabled, otherwise
    /// falls back to sequential.
    Parallel,
    Sequential,
}

impl Default for Exec {
    fn default() -> Self {
        Exec::Parallel
    }
}

#[cfg(feature = "parallel")]
pub fn map_trials<T, F>(exec: Exec, trials: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    use rayon::prelude::*;
    match exec {
        Exec::Parallel => (0..trials).into_par_iter().map(f).collect(),
        Exec::Sequential => (0..trials).map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_trials<T, F>(_exec: Exec, trials: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    (0..trials).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: u64| {
            let mut rng = crate::rng::trial_rng(9, i);
            crate::rng::uniform(&mut rng, 0.0, 1.0)
        };
        let par = map_trials(Exec::Parallel, 500, f);
        let seq = map_trials(Exec::Sequential, 500, f);
        assert_eq!(par, seq);
    }
}
