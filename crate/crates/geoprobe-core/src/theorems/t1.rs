//! t1 — projection identity on a vertex cycle: feet of a probe point on the
//! side lines satisfy Σ‖MᵢAᵢ‖² = Σ‖MᵢAᵢ₊₁‖², for any polygon and any probe.

use crate::error::Result;
use crate::geom::ops::cycle_projection_residual;
use crate::geom::shapes::Polygon;
use crate::geom::P2;
use crate::report::CheckReport;
use crate::rng::trial_rng;
use crate::runner::Exec;
use crate::scene::{gen_polygon_interior, gen_probe_anywhere, gen_simple_polygon};
use crate::tol::TolerancePolicy;

/// Normalized residual of the two projected sums for one configuration.
pub fn residual(polygon: &Polygon, m: P2) -> Result<f64> {
    cycle_projection_residual(polygon.vertices(), m)
}

/// Single-scene check.
pub fn check_t1(polygon: &Polygon, m: P2, tol: f64) -> Result<CheckReport> {
    let r = residual(polygon, m)?;
    Ok(CheckReport::from_residuals(
        "t1",
        0,
        tol,
        &[r],
        |_| format!("polygon n={} m=({},{})", polygon.n(), m.x(), m.y()),
        0.0,
    ))
}

fn scene(seed: u64, index: u64) -> (Polygon, P2) {
    let mut rng = trial_rng(seed, index);
    let n = 3 + (index % 10) as usize;
    let polygon = gen_simple_polygon(&mut rng, n).expect("guarded polygon generation");
    // Alternate interior and unrestricted probes: the identity is
    // position-free.
    let m = if index % 2 == 0 {
        gen_polygon_interior(&mut rng, &polygon).expect("guarded interior point")
    } else {
        gen_probe_anywhere(&mut rng, &polygon)
    };
    (polygon, m)
}

pub(crate) fn trial(seed: u64, index: u64) -> f64 {
    let (polygon, m) = scene(seed, index);
    residual(&polygon, m).expect("non-degenerate scene")
}

pub(crate) fn witness(seed: u64, index: u64) -> String {
    let (polygon, m) = scene(seed, index);
    format!(
        "seed={seed} index={index} n={} m=({:.16e},{:.16e})",
        polygon.n(),
        m.x(),
        m.y()
    )
}

pub fn run(exec: Exec, trials: u64, seed: u64, tol: f64) -> CheckReport {
    super::drive("t1", exec, trials, seed, tol, trial, witness)
}
