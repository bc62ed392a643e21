//! Euclidean primitives and the constructions everything else is built from.

pub mod conic;
pub mod ops;
pub mod point;
pub mod shapes;

pub use conic::{Conic, ConicShape};
pub use ops::*;
pub use point::{p2, p3, Point, P2, P3};
pub use shapes::{Ball, Circle, Ellipse, Line2, Plane, Polygon, Ratio, Segment, Sphere, Triangle};
