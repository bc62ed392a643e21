//! Deterministic randomized test configurations. Every scene is a pure
//! function of `(kind, params, seed, index)` and records that provenance.
//! Degeneracy guards: triangles keep a minimum angle of 5° and a diameter in
//! [0.5, 10]; polygons are radially jittered regular n-gons re-checked for
//! simplicity; interior probes stay at least 1e-3·diameter away from the
//! boundary; circle/sphere pairs intersect transversally with center distance
//! in [0.3, 0.95]·(r1+r2).

use crate::error::{GeomError, Result};
use crate::geom::ops::circle_circle_intersection;
use crate::geom::point::{p2, p3, P2, P3};
use crate::geom::shapes::{Ball, Circle, Polygon, Sphere, Triangle};
use crate::hull3::ConvexPolyhedron;
use crate::rng::{trial_rng, uniform, unit_dir2, unit_dir3, TrialRng};

const MAX_ATTEMPTS: u32 = 10_000;
pub const MIN_ANGLE_DEG: f64 = 5.0;
pub const MAX_ACUTE_ANGLE_DEG: f64 = 85.0;
pub const BOUNDARY_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SceneKind {
    Triangle,
    AcuteTriangle,
    TriangleWithPoint,
    SimplePolygon { n: usize },
    PolygonWithPoint { n: usize },
    PointsOnCircle { n: usize },
    CirclePair,
    SpherePair,
    Cycle3d { n: usize },
    PolyhedronWithPoint { n: usize },
}

#[derive(Debug, Clone)]
pub enum SceneData {
    Triangle(Triangle),
    TriangleWithPoint { triangle: Triangle, point: P2 },
    Polygon(Polygon),
    PolygonWithPoint { polygon: Polygon, point: P2 },
    PointsOnCircle { circle: Circle, points: Vec<P2> },
    CirclePair { first: Circle, second: Circle },
    SpherePair { first: Sphere, second: Sphere },
    Cycle3d { cycle: Vec<P3>, probe: P3 },
    PolyhedronWithPoint { hull: ConvexPolyhedron, point: P3 },
}

#[derive(Debug, Clone)]
pub struct Scene {
    pub seed: u64,
    pub index: u64,
    pub kind: SceneKind,
    pub data: SceneData,
}

impl Scene {
    /// Compact replayable description: provenance plus full-precision
    /// coordinates.
    pub fn summary(&self) -> String {
        let mut out = format!("seed={} index={} ", self.seed, self.index);
        match &self.data {
            SceneData::Triangle(t) => {
                out.push_str(&format!("triangle={}", fmt_pts2(&t.vertices())));
            }
            SceneData::TriangleWithPoint { triangle, point } => {
                out.push_str(&format!(
                    "triangle={} p={}",
                    fmt_pts2(&triangle.vertices()),
                    fmt_p2(*point)
                ));
            }
            SceneData::Polygon(p) => out.push_str(&format!("polygon={}", fmt_pts2(p.vertices()))),
            SceneData::PolygonWithPoint { polygon, point } => out.push_str(&format!(
                "polygon={} m={}",
                fmt_pts2(polygon.vertices()),
                fmt_p2(*point)
            )),
            SceneData::PointsOnCircle { circle, points } => out.push_str(&format!(
                "circle={};{:.16e} points={}",
                fmt_p2(circle.center),
                circle.radius,
                fmt_pts2(points)
            )),
            SceneData::CirclePair { first, second } => out.push_str(&format!(
                "circles={};{:.16e}|{};{:.16e}",
                fmt_p2(first.center),
                first.radius,
                fmt_p2(second.center),
                second.radius
            )),
            SceneData::SpherePair { first, second } => out.push_str(&format!(
                "spheres={};{:.16e}|{};{:.16e}",
                fmt_p3(first.center),
                first.radius,
                fmt_p3(second.center),
                second.radius
            )),
            SceneData::Cycle3d { cycle, probe } => {
                out.push_str(&format!("cycle={} m={}", fmt_pts3(cycle), fmt_p3(*probe)));
            }
            SceneData::PolyhedronWithPoint { hull, point } => out.push_str(&format!(
                "hull={} m={}",
                fmt_pts3(&hull.vertices),
                fmt_p3(*point)
            )),
        }
        out
    }
}

fn fmt_p2(p: P2) -> String {
    format!("({:.16e},{:.16e})", p.x(), p.y())
}

fn fmt_p3(p: P3) -> String {
    format!("({:.16e},{:.16e},{:.16e})", p.x(), p.y(), p.z())
}

fn fmt_pts2(pts: &[P2]) -> String {
    pts.iter().map(|p| fmt_p2(*p)).collect::<Vec<_>>().join(",")
}

fn fmt_pts3(pts: &[P3]) -> String {
    pts.iter().map(|p| fmt_p3(*p)).collect::<Vec<_>>().join(",")
}

/// Deterministic scene generator: same `(kind, seed, index)` always yields
/// bit-identical coordinates.
pub fn sample_scene(kind: SceneKind, seed: u64, index: u64) -> Result<Scene> {
    let mut rng = trial_rng(seed, index);
    let data = match kind {
        SceneKind::Triangle => SceneData::Triangle(gen_triangle(&mut rng)?),
        SceneKind::AcuteTriangle => SceneData::Triangle(gen_acute_triangle(&mut rng)?),
        SceneKind::TriangleWithPoint => {
            let triangle = gen_triangle(&mut rng)?;
            let point = gen_triangle_interior(&mut rng, &triangle)?;
            SceneData::TriangleWithPoint { triangle, point }
        }
        SceneKind::SimplePolygon { n } => SceneData::Polygon(gen_simple_polygon(&mut rng, n)?),
        SceneKind::PolygonWithPoint { n } => {
            let polygon = gen_simple_polygon(&mut rng, n)?;
            let point = gen_polygon_interior(&mut rng, &polygon)?;
            SceneData::PolygonWithPoint { polygon, point }
        }
        SceneKind::PointsOnCircle { n } => {
            let (circle, points) = gen_points_on_circle(&mut rng, n)?;
            SceneData::PointsOnCircle { circle, points }
        }
        SceneKind::CirclePair => {
            let (first, second) = gen_circle_pair(&mut rng)?;
            SceneData::CirclePair { first, second }
        }
        SceneKind::SpherePair => {
            let (first, second) = gen_sphere_pair(&mut rng)?;
            SceneData::SpherePair { first, second }
        }
        SceneKind::Cycle3d { n } => {
            let cycle = gen_cycle3(&mut rng, n)?;
            let probe = p3(
                uniform(&mut rng, -3.0, 3.0),
                uniform(&mut rng, -3.0, 3.0),
                uniform(&mut rng, -3.0, 3.0),
            );
            SceneData::Cycle3d { cycle, probe }
        }
        SceneKind::PolyhedronWithPoint { n } => {
            let (hull, point) = gen_convex_polyhedron(&mut rng, n)?;
            SceneData::PolyhedronWithPoint { hull, point }
        }
    };
    Ok(Scene { seed, index, kind, data })
}

fn exhausted(kind: &str) -> GeomError {
    GeomError::GenerationExhausted { kind: kind.into(), attempts: MAX_ATTEMPTS }
}

pub fn gen_triangle(rng: &mut TrialRng) -> Result<Triangle> {
    let min_angle = MIN_ANGLE_DEG.to_radians();
    for _ in 0..MAX_ATTEMPTS {
        let v = |rng: &mut TrialRng| p2(uniform(rng, -4.0, 4.0), uniform(rng, -4.0, 4.0));
        let (a, b, c) = (v(rng), v(rng), v(rng));
        let Ok(t) = Triangle::new(a, b, c) else { continue };
        let d = t.diameter();
        if t.min_angle() >= min_angle && (0.5..=10.0).contains(&d) {
            return Ok(t);
        }
    }
    Err(exhausted("triangle"))
}

pub fn gen_acute_triangle(rng: &mut TrialRng) -> Result<Triangle> {
    let lo = MIN_ANGLE_DEG.to_radians();
    let hi = MAX_ACUTE_ANGLE_DEG.to_radians();
    for _ in 0..MAX_ATTEMPTS {
        let t = gen_triangle(rng)?;
        if t.min_angle() >= lo && t.max_angle() <= hi {
            return Ok(t);
        }
    }
    Err(exhausted("acute-triangle"))
}

/// Interior point at distance ≥ 1e-3·diameter from every side.
pub fn gen_triangle_interior(rng: &mut TrialRng, t: &Triangle) -> Result<P2> {
    let margin = BOUNDARY_MARGIN * t.diameter();
    let [a, b, c] = t.vertices();
    for _ in 0..MAX_ATTEMPTS {
        let (mut u, mut v) = (uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 1.0));
        if u + v > 1.0 {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        let p = a + (b - a) * u + (c - a) * v;
        if t.distance_to_boundary(p) >= margin {
            return Ok(p);
        }
    }
    Err(exhausted("triangle-interior-point"))
}

/// Radially perturbed regular n-gon: ±40% radius jitter, angle jitter ±30%
/// of the sector, then a simplicity re-check.
pub fn gen_simple_polygon(rng: &mut TrialRng, n: usize) -> Result<Polygon> {
    if !(3..=64).contains(&n) {
        return Err(GeomError::InvalidInput(format!("polygon n must be in [3,64], got {n}")));
    }
    let sector = std::f64::consts::TAU / n as f64;
    for _ in 0..MAX_ATTEMPTS {
        let base_r = uniform(rng, 0.5, 2.5);
        let center = p2(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
        let vertices: Vec<P2> = (0..n)
            .map(|i| {
                let theta = sector * (i as f64 + 0.3 * uniform(rng, -1.0, 1.0));
                let r = base_r * (1.0 + 0.4 * uniform(rng, -1.0, 1.0));
                center + p2(r * theta.cos(), r * theta.sin())
            })
            .collect();
        let Ok(poly) = Polygon::new(vertices) else { continue };
        if poly.is_simple() {
            return Ok(poly);
        }
    }
    Err(exhausted("simple-polygon"))
}

pub fn gen_polygon_interior(rng: &mut TrialRng, poly: &Polygon) -> Result<P2> {
    let margin = BOUNDARY_MARGIN * poly.diameter();
    let (lo, hi) = poly.bbox();
    for _ in 0..MAX_ATTEMPTS {
        let p = p2(uniform(rng, lo.x(), hi.x()), uniform(rng, lo.y(), hi.y()));
        if poly.contains(p) && poly.distance_to_boundary(p) >= margin {
            return Ok(p);
        }
    }
    Err(exhausted("polygon-interior-point"))
}

/// A probe anywhere in a box 3× the polygon's bounding box (inside or out).
pub fn gen_probe_anywhere(rng: &mut TrialRng, poly: &Polygon) -> P2 {
    let (lo, hi) = poly.bbox();
    let span = hi - lo;
    let c = (lo + hi) * 0.5;
    p2(
        c.x() + 1.5 * span.x() * uniform(rng, -1.0, 1.0),
        c.y() + 1.5 * span.y() * uniform(rng, -1.0, 1.0),
    )
}

pub fn gen_points_on_circle(rng: &mut TrialRng, n: usize) -> Result<(Circle, Vec<P2>)> {
    if n < 2 {
        return Err(GeomError::InvalidInput("need at least 2 points".into()));
    }
    let center = p2(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
    let radius = uniform(rng, 0.5, 3.0);
    let circle = Ball::new(center, radius)?;
    'outer: for _ in 0..MAX_ATTEMPTS {
        let mut angles: Vec<f64> =
            (0..n).map(|_| uniform(rng, 0.0, std::f64::consts::TAU)).collect();
        let mut sorted = angles.clone();
        sorted.sort_by(f64::total_cmp);
        for i in 0..n {
            let gap = if i + 1 == n {
                sorted[0] + std::f64::consts::TAU - sorted[n - 1]
            } else {
                sorted[i + 1] - sorted[i]
            };
            if gap < 1e-4 {
                continue 'outer;
            }
        }
        let points = angles
            .drain(..)
            .map(|t| center + p2(radius * t.cos(), radius * t.sin()))
            .collect();
        return Ok((circle, points));
    }
    Err(exhausted("points-on-circle"))
}

pub fn gen_circle_pair(rng: &mut TrialRng) -> Result<(Circle, Circle)> {
    for _ in 0..MAX_ATTEMPTS {
        let r1 = uniform(rng, 0.5, 2.0);
        let r2 = uniform(rng, 0.5, 2.0);
        let sum = r1 + r2;
        let d = uniform(rng, 0.3, 0.95) * sum;
        if d <= (r1 - r2).abs() + 0.02 * sum {
            continue;
        }
        let c1 = p2(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
        let c2 = c1 + unit_dir2(rng) * d;
        let first = Ball::new(c1, r1)?;
        let second = Ball::new(c2, r2)?;
        if circle_circle_intersection(&first, &second).is_ok() {
            return Ok((first, second));
        }
    }
    Err(exhausted("circle-pair"))
}

pub fn gen_sphere_pair(rng: &mut TrialRng) -> Result<(Sphere, Sphere)> {
    for _ in 0..MAX_ATTEMPTS {
        let r1 = uniform(rng, 0.5, 2.0);
        let r2 = uniform(rng, 0.5, 2.0);
        let sum = r1 + r2;
        let d = uniform(rng, 0.3, 0.95) * sum;
        if d <= (r1 - r2).abs() + 0.02 * sum {
            continue;
        }
        let c1 = p3(
            uniform(rng, -2.0, 2.0),
            uniform(rng, -2.0, 2.0),
            uniform(rng, -2.0, 2.0),
        );
        let c2 = c1 + unit_dir3(rng) * d;
        return Ok((Ball::new(c1, r1)?, Ball::new(c2, r2)?));
    }
    Err(exhausted("sphere-pair"))
}

/// Closed 3D cycle with distinct consecutive vertices and a guaranteed
/// non-planar vertex quadruple.
pub fn gen_cycle3(rng: &mut TrialRng, n: usize) -> Result<Vec<P3>> {
    if !(3..=64).contains(&n) {
        return Err(GeomError::InvalidInput(format!("cycle n must be in [3,64], got {n}")));
    }
    'outer: for _ in 0..MAX_ATTEMPTS {
        let pts: Vec<P3> = (0..n)
            .map(|_| {
                p3(
                    uniform(rng, -2.0, 2.0),
                    uniform(rng, -2.0, 2.0),
                    uniform(rng, -2.0, 2.0),
                )
            })
            .collect();
        for i in 0..n {
            if pts[i].dist(pts[(i + 1) % n]) < 1e-3 {
                continue 'outer;
            }
        }
        if n >= 4 {
            let mut best = 0.0f64;
            for i in 3..n {
                let vol = (pts[1] - pts[0])
                    .cross(pts[2] - pts[0])
                    .dot(pts[i] - pts[0])
                    .abs();
                best = best.max(vol);
            }
            if best < 1e-3 {
                continue 'outer;
            }
        }
        return Ok(pts);
    }
    Err(exhausted("cycle3d"))
}

/// Random convex polyhedron (points near a sphere, general position) plus a
/// strictly interior probe point.
pub fn gen_convex_polyhedron(rng: &mut TrialRng, n: usize) -> Result<(ConvexPolyhedron, P3)> {
    if !(4..=16).contains(&n) {
        return Err(GeomError::InvalidInput(format!("hull n must be in [4,16], got {n}")));
    }
    for _ in 0..MAX_ATTEMPTS {
        let pts: Vec<P3> = (0..n)
            .map(|_| unit_dir3(rng) * uniform(rng, 0.8, 1.2))
            .collect();
        let Ok(hull) = ConvexPolyhedron::from_points(&pts) else { continue };
        let margin = BOUNDARY_MARGIN * hull.diameter();
        // Mix of the vertex centroid with jitter, kept strictly inside.
        let mut centroid = P3::ZERO;
        for p in &pts {
            centroid = centroid + *p;
        }
        centroid = centroid * (1.0 / n as f64);
        let mut found = None;
        for _ in 0..64 {
            let probe = centroid + unit_dir3(rng) * uniform(rng, 0.0, 0.3);
            if hull.contains(probe, margin) {
                found = Some(probe);
                break;
            }
        }
        if let Some(point) = found {
            return Ok((hull, point));
        }
    }
    Err(exhausted("convex-polyhedron"))
}

/// Interior point of a triangle with all barycentric weights above `guard`.
pub fn barycentric_interior(rng: &mut TrialRng, t: &Triangle, guard: f64) -> P2 {
    loop {
        let (mut u, mut v) = (uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 1.0));
        if u + v > 1.0 {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        let w = 1.0 - u - v;
        if u > guard && v > guard && w > guard {
            let [a, b, c] = t.vertices();
            return a + (b - a) * u + (c - a) * v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords_of(scene: &Scene) -> Vec<f64> {
        match &scene.data {
            SceneData::Triangle(t) => t.vertices().iter().flat_map(|p| p.coords).collect(),
            SceneData::PolygonWithPoint { polygon, point } => polygon
                .vertices()
                .iter()
                .flat_map(|p| p.coords)
                .chain(point.coords)
                .collect(),
            SceneData::SpherePair { first, second } => first
                .center
                .coords
                .into_iter()
                .chain([first.radius])
                .chain(second.center.coords)
                .chain([second.radius])
                .collect(),
            _ => scene.summary().into_bytes().iter().map(|b| *b as f64).collect(),
        }
    }

    #[test]
    fn same_seed_index_is_bit_identical() {
        for kind in [
            SceneKind::Triangle,
            SceneKind::PolygonWithPoint { n: 7 },
            SceneKind::SpherePair,
        ] {
            let a = sample_scene(kind, 42, 3).unwrap();
            let b = sample_scene(kind, 42, 3).unwrap();
            assert_eq!(coords_of(&a), coords_of(&b));
            let c = sample_scene(kind, 42, 4).unwrap();
            assert_ne!(coords_of(&a), coords_of(&c));
        }
    }

    #[test]
    fn acute_triangles_respect_angle_guard() {
        for i in 0..50 {
            let scene = sample_scene(SceneKind::AcuteTriangle, 7, i).unwrap();
            let SceneData::Triangle(t) = scene.data else { panic!() };
            assert!(t.min_angle() >= MIN_ANGLE_DEG.to_radians() - 1e-12);
            assert!(t.max_angle() <= MAX_ACUTE_ANGLE_DEG.to_radians() + 1e-12);
        }
    }

    #[test]
    fn points_on_circle_distinct_and_on_circle() {
        let scene = sample_scene(SceneKind::PointsOnCircle { n: 7 }, 11, 0).unwrap();
        let SceneData::PointsOnCircle { circle, points } = scene.data else { panic!() };
        assert_eq!(points.len(), 7);
        for (i, p) in points.iter().enumerate() {
            assert!((p.dist(circle.center) - circle.radius).abs() < 1e-12 * circle.radius);
            for q in points.iter().skip(i + 1) {
                assert!(p.dist(*q) > 0.0);
            }
        }
    }

    #[test]
    fn circle_pairs_intersect_transversally() {
        for i in 0..50 {
            let scene = sample_scene(SceneKind::CirclePair, 5, i).unwrap();
            let SceneData::CirclePair { first, second } = scene.data else { panic!() };
            let d = first.center.dist(second.center);
            assert!(d > (first.radius - second.radius).abs());
            assert!(d < 0.96 * (first.radius + second.radius));
            circle_circle_intersection(&first, &second).unwrap();
        }
    }

    #[test]
    fn polygon_interior_margin_respected() {
        for i in 0..20 {
            let scene = sample_scene(SceneKind::PolygonWithPoint { n: 9 }, 13, i).unwrap();
            let SceneData::PolygonWithPoint { polygon, point } = scene.data else { panic!() };
            assert!(polygon.is_simple());
            assert!(polygon.contains(point));
            assert!(
                polygon.distance_to_boundary(point) >= BOUNDARY_MARGIN * polygon.diameter() - 1e-15
            );
        }
    }
}
