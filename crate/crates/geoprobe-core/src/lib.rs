//! Numerical plane/solid geometry experiment kit.
//!
//! The crate has four layers:
//!
//! * [`geom`] — dimension-generic Euclidean primitives and constructions
//!   (projections, Cevian feet, circle/sphere/conic intersections), all pure.
//! * [`scene`] — deterministic randomized test configurations derived from
//!   `(kind, params, seed, trial index)`.
//! * [`theorems`] — one executable checker per identity/bound (`t1`..`t9`),
//!   each producing a [`report::CheckReport`].
//! * [`lab`] — randomized experiments for the open generalizations:
//!   sampling, sweeps, derivative-free minimization and locus tracing.
//!
//! Trials are independent and may run in parallel (the `parallel` feature,
//! on by default); every per-trial random stream is keyed by
//! `(seed, index)`, so results are identical regardless of schedule.

pub mod error;
pub mod fit;
pub mod geom;
pub mod hull3;
pub mod lab;
pub mod optim;
pub mod report;
pub mod rng;
pub mod runner;
pub mod scene;
pub mod theorems;
pub mod tol;

pub use error::{GeomError, Result};
pub use geom::point::{p2, p3, Point, P2, P3};
