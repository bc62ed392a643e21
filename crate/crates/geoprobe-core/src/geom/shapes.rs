//! Validated geometric value types. Construction normalizes orientation and
//! rejects degenerate input; everything is immutable afterwards.

use crate::error::{GeomError, Result};
use crate::geom::point::{p2, Point, P2, P3};

/// A segment with distinct endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<const N: usize> {
    pub a: Point<N>,
    pub b: Point<N>,
}

impl<const N: usize> Segment<N> {
    pub fn new(a: Point<N>, b: Point<N>) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(GeomError::InvalidInput("non-finite segment endpoint".into()));
        }
        if a.dist_sq(b) == 0.0 {
            return Err(GeomError::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }

    pub fn delta(&self) -> Point<N> {
        self.b - self.a
    }

    pub fn len(&self) -> f64 {
        self.delta().norm()
    }

    pub fn len_sq(&self) -> f64 {
        self.delta().norm_sq()
    }

    pub fn midpoint(&self) -> Point<N> {
        self.a.lerp(self.b, 0.5)
    }
}

/// An infinite line given by a point and a direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line2 {
    pub point: P2,
    pub dir: P2,
}

impl Line2 {
    pub fn new(point: P2, dir: P2) -> Result<Self> {
        if !point.is_finite() || !dir.is_finite() || dir.norm_sq() == 0.0 {
            return Err(GeomError::InvalidInput("line needs a non-zero direction".into()));
        }
        Ok(Line2 { point, dir })
    }

    pub fn through(a: P2, b: P2) -> Result<Self> {
        Line2::new(a, b - a)
    }
}

/// A non-degenerate triangle, normalized to counterclockwise orientation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    a: P2,
    b: P2,
    c: P2,
}

impl Triangle {
    pub fn new(a: P2, b: P2, c: P2) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(GeomError::InvalidInput("non-finite triangle vertex".into()));
        }
        let area2 = (b - a).cross(c - a);
        if area2 == 0.0 || !area2.is_finite() {
            return Err(GeomError::DegenerateTriangle);
        }
        if area2 > 0.0 {
            Ok(Triangle { a, b, c })
        } else {
            Ok(Triangle { a, b: c, c: b })
        }
    }

    pub fn a(&self) -> P2 {
        self.a
    }

    pub fn b(&self) -> P2 {
        self.b
    }

    pub fn c(&self) -> P2 {
        self.c
    }

    pub fn vertices(&self) -> [P2; 3] {
        [self.a, self.b, self.c]
    }

    /// ‖BC‖, the side opposite vertex A.
    pub fn side_a(&self) -> f64 {
        self.b.dist(self.c)
    }

    /// ‖CA‖, the side opposite vertex B.
    pub fn side_b(&self) -> f64 {
        self.c.dist(self.a)
    }

    /// ‖AB‖, the side opposite vertex C.
    pub fn side_c(&self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn sum_side_sq(&self) -> f64 {
        self.side_a().powi(2) + self.side_b().powi(2) + self.side_c().powi(2)
    }

    pub fn signed_area(&self) -> f64 {
        0.5 * (self.b - self.a).cross(self.c - self.a)
    }

    pub fn centroid(&self) -> P2 {
        (self.a + self.b + self.c) * (1.0 / 3.0)
    }

    pub fn incenter(&self) -> P2 {
        let (a, b, c) = (self.side_a(), self.side_b(), self.side_c());
        (self.a * a + self.b * b + self.c * c) * (1.0 / (a + b + c))
    }

    pub fn circumcenter(&self) -> P2 {
        let d = 2.0 * (self.b - self.a).cross(self.c - self.a);
        let asq = self.a.norm_sq();
        let bsq = self.b.norm_sq();
        let csq = self.c.norm_sq();
        let ux = asq * (self.b.y() - self.c.y())
            + bsq * (self.c.y() - self.a.y())
            + csq * (self.a.y() - self.b.y());
        let uy = asq * (self.c.x() - self.b.x())
            + bsq * (self.a.x() - self.c.x())
            + csq * (self.b.x() - self.a.x());
        p2(ux / d, uy / d)
    }

    pub fn orthocenter(&self) -> P2 {
        // H = A + B + C − 2·O with O the circumcenter.
        self.a + self.b + self.c - self.circumcenter() * 2.0
    }

    /// Interior angles at A, B, C in radians.
    pub fn angles(&self) -> [f64; 3] {
        let angle_at = |v: P2, p: P2, q: P2| {
            let u = p - v;
            let w = q - v;
            (u.dot(w) / (u.norm() * w.norm())).clamp(-1.0, 1.0).acos()
        };
        [
            angle_at(self.a, self.b, self.c),
            angle_at(self.b, self.c, self.a),
            angle_at(self.c, self.a, self.b),
        ]
    }

    pub fn min_angle(&self) -> f64 {
        self.angles().into_iter().fold(f64::INFINITY, f64::min)
    }

    pub fn max_angle(&self) -> f64 {
        self.angles().into_iter().fold(0.0, f64::max)
    }

    /// Strict acuteness test: every vertex angle below 90 degrees. A right
    /// angle (dot product exactly zero) is rejected.
    pub fn is_acute(&self) -> bool {
        let dot_at = |v: P2, p: P2, q: P2| (p - v).dot(q - v);
        dot_at(self.a, self.b, self.c) > 0.0
            && dot_at(self.b, self.c, self.a) > 0.0
            && dot_at(self.c, self.a, self.b) > 0.0
    }

    /// Longest side, which for a triangle is also the max pairwise distance.
    pub fn diameter(&self) -> f64 {
        self.side_a().max(self.side_b()).max(self.side_c())
    }

    /// Barycentric coordinates of `p` (normalized, sum 1).
    pub fn barycentric(&self, p: P2) -> [f64; 3] {
        let area2 = (self.b - self.a).cross(self.c - self.a);
        let wa = (self.c - self.b).cross(p - self.b) / area2;
        let wb = (self.a - self.c).cross(p - self.c) / area2;
        [wa, wb, 1.0 - wa - wb]
    }

    pub fn contains(&self, p: P2) -> bool {
        self.barycentric(p).iter().all(|w| *w > 0.0)
    }

    /// Distance from `p` to the nearest side's supporting segment.
    pub fn distance_to_boundary(&self, p: P2) -> f64 {
        let sides = [(self.a, self.b), (self.b, self.c), (self.c, self.a)];
        sides
            .iter()
            .map(|(u, v)| point_segment_distance(p, *u, *v))
            .fold(f64::INFINITY, f64::min)
    }
}

pub(crate) fn point_segment_distance<const N: usize>(
    p: Point<N>,
    a: Point<N>,
    b: Point<N>,
) -> f64 {
    let d = b - a;
    let len_sq = d.norm_sq();
    if len_sq == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(d) / len_sq).clamp(0.0, 1.0);
    p.dist(a + d * t)
}

/// A vertex cycle with at least three corners. `simple` is computed at
/// construction; orientation is normalized to counterclockwise whenever the
/// signed area is non-zero (self-intersecting cycles with zero area are kept
/// as given).
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<P2>,
    simple: bool,
}

impl Polygon {
    pub fn new(vertices: Vec<P2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(GeomError::DegeneratePolygon("fewer than 3 vertices".into()));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::DegeneratePolygon("non-finite vertex".into()));
        }
        let n = vertices.len();
        for i in 0..n {
            if vertices[i].dist_sq(vertices[(i + 1) % n]) == 0.0 {
                return Err(GeomError::DegeneratePolygon(
                    "consecutive vertices coincide".into(),
                ));
            }
        }
        let mut vertices = vertices;
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        let simple = is_simple(&vertices);
        Ok(Polygon { vertices, simple })
    }

    /// Regular n-gon of circumradius `radius` centered at the origin.
    pub fn regular(n: usize, radius: f64) -> Result<Self> {
        let vertices = (0..n)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / n as f64;
                p2(radius * t.cos(), radius * t.sin())
            })
            .collect();
        Polygon::new(vertices)
    }

    pub fn vertices(&self) -> &[P2] {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> P2 {
        self.vertices[i % self.vertices.len()]
    }

    pub fn edge(&self, i: usize) -> (P2, P2) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn signed_area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        (0..self.n()).map(|i| self.side_len(i)).sum()
    }

    pub fn side_len(&self, i: usize) -> f64 {
        let (a, b) = self.edge(i);
        a.dist(b)
    }

    pub fn sum_side_sq(&self) -> f64 {
        (0..self.n())
            .map(|i| {
                let (a, b) = self.edge(i);
                a.dist_sq(b)
            })
            .sum()
    }

    /// Max pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                best = best.max(self.vertices[i].dist(self.vertices[j]));
            }
        }
        best
    }

    pub fn centroid_of_vertices(&self) -> P2 {
        let mut acc = P2::ZERO;
        for v in &self.vertices {
            acc = acc + *v;
        }
        acc * (1.0 / self.n() as f64)
    }

    pub fn bbox(&self) -> (P2, P2) {
        let mut lo = p2(f64::INFINITY, f64::INFINITY);
        let mut hi = p2(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo = p2(lo.x().min(v.x()), lo.y().min(v.y()));
            hi = p2(hi.x().max(v.x()), hi.y().max(v.y()));
        }
        (lo, hi)
    }

    /// Crossing-number interior test (boundary points are unspecified; scene
    /// guards keep probes away from the boundary).
    pub fn contains(&self, p: P2) -> bool {
        let mut inside = false;
        for i in 0..self.n() {
            let (a, b) = self.edge(i);
            if (a.y() > p.y()) != (b.y() > p.y()) {
                let x = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
                if p.x() < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    pub fn distance_to_boundary(&self, p: P2) -> f64 {
        (0..self.n())
            .map(|i| {
                let (a, b) = self.edge(i);
                point_segment_distance(p, a, b)
            })
            .fold(f64::INFINITY, f64::min)
    }
}

fn signed_area(vertices: &[P2]) -> f64 {
    let n = vertices.len();
    let mut acc = 0.0;
    for i in 0..n {
        acc += vertices[i].cross(vertices[(i + 1) % n]);
    }
    0.5 * acc
}

fn is_simple(vertices: &[P2]) -> bool {
    let n = vertices.len();
    for i in 0..n {
        for j in (i + 1)..n {
            // Skip adjacent edges (they share a vertex by construction).
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            let (c, d) = (vertices[j], vertices[(j + 1) % n]);
            if segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

fn segments_intersect(a: P2, b: P2, c: P2, d: P2) -> bool {
    let orient = |p: P2, q: P2, r: P2| (q - p).cross(r - p);
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    if ((o1 > 0.0) != (o2 > 0.0)) && ((o3 > 0.0) != (o4 > 0.0)) {
        return true;
    }
    let on = |p: P2, q: P2, r: P2| {
        orient(p, q, r) == 0.0
            && r.x() >= p.x().min(q.x())
            && r.x() <= p.x().max(q.x())
            && r.y() >= p.y().min(q.y())
            && r.y() <= p.y().max(q.y())
    };
    on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b)
}

/// Circle (N = 2) or sphere (N = 3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ball<const N: usize> {
    pub center: Point<N>,
    pub radius: f64,
}

pub type Circle = Ball<2>;
pub type Sphere = Ball<3>;

impl<const N: usize> Ball<N> {
    pub fn new(center: Point<N>, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || radius <= 0.0 {
            return Err(GeomError::InvalidInput("ball needs a positive radius".into()));
        }
        Ok(Ball { center, radius })
    }

    /// Whether `p` lies on the surface within `tol` (relative to the radius).
    pub fn on_surface(&self, p: Point<N>, tol: f64) -> bool {
        (p.dist(self.center) - self.radius).abs() <= tol * self.radius
    }
}

/// An axis-aligned-then-rotated ellipse with semi-axes `a >= b > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse {
    pub center: P2,
    pub semi_major: f64,
    pub semi_minor: f64,
    pub rotation: f64,
}

impl Ellipse {
    pub fn new(center: P2, semi_major: f64, semi_minor: f64, rotation: f64) -> Result<Self> {
        let ok = center.is_finite()
            && semi_major.is_finite()
            && semi_minor.is_finite()
            && rotation.is_finite()
            && semi_major >= semi_minor
            && semi_minor > 0.0;
        if !ok {
            return Err(GeomError::InvalidInput(
                "ellipse needs semi-axes a >= b > 0".into(),
            ));
        }
        Ok(Ellipse { center, semi_major, semi_minor, rotation })
    }

    /// Point at parameter angle `t`.
    pub fn point_at(&self, t: f64) -> P2 {
        let (s, c) = self.rotation.sin_cos();
        let x = self.semi_major * t.cos();
        let y = self.semi_minor * t.sin();
        self.center + p2(c * x - s * y, s * x + c * y)
    }
}

/// A plane through `point` with unit `normal`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    pub point: P3,
    pub normal: P3,
}

impl Plane {
    /// Requires `normal` to be unit within 1e-12.
    pub fn new(point: P3, normal: P3) -> Result<Self> {
        if !point.is_finite() || !normal.is_finite() {
            return Err(GeomError::InvalidInput("non-finite plane data".into()));
        }
        if (normal.norm() - 1.0).abs() > 1e-12 {
            return Err(GeomError::NonUnitNormal);
        }
        Ok(Plane { point, normal })
    }
}

/// Internal-division ratio: `X` divides `PQ` in ratio `k` iff ‖PX‖ = k·‖XQ‖
/// with `X` strictly between `P` and `Q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ratio(f64);

impl Ratio {
    pub fn new(k: f64) -> Result<Self> {
        if k.is_finite() && k > 0.0 {
            Ok(Ratio(k))
        } else {
            Err(GeomError::OutOfDomain(format!("ratio k must be positive, got {k}")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_normalizes_ccw() {
        let t = Triangle::new(p2(0.0, 0.0), p2(0.0, 1.0), p2(1.0, 0.0)).unwrap();
        assert!(t.signed_area() > 0.0);
        assert!(Triangle::new(p2(0.0, 0.0), p2(1.0, 1.0), p2(2.0, 2.0)).is_err());
    }

    #[test]
    fn triangle_sides_named_opposite() {
        let t = Triangle::new(p2(0.0, 3.0), p2(0.0, 0.0), p2(4.0, 0.0)).unwrap();
        // a = ‖BC‖, b = ‖CA‖, c = ‖AB‖ regardless of orientation swap.
        let mut sides = [t.side_a(), t.side_b(), t.side_c()];
        sides.sort_by(f64::total_cmp);
        assert_eq!(sides, [3.0, 4.0, 5.0]);
    }

    #[test]
    fn right_triangle_not_acute() {
        let t = Triangle::new(p2(0.0, 0.0), p2(4.0, 0.0), p2(0.0, 3.0)).unwrap();
        assert!(!t.is_acute());
        let t = Triangle::new(p2(0.0, 0.0), p2(4.0, 0.0), p2(1.0, 3.0)).unwrap();
        assert!(t.is_acute());
    }

    #[test]
    fn polygon_simple_flag() {
        let square = Polygon::new(vec![p2(0.0, 0.0), p2(1.0, 0.0), p2(1.0, 1.0), p2(0.0, 1.0)])
            .unwrap();
        assert!(square.is_simple());
        assert!(square.contains(p2(0.5, 0.5)));
        assert!(!square.contains(p2(1.5, 0.5)));
        // Figure-eight vertex cycle.
        let bow = Polygon::new(vec![p2(0.0, 0.0), p2(1.0, 1.0), p2(1.0, 0.0), p2(0.0, 1.0)])
            .unwrap();
        assert!(!bow.is_simple());
    }

    #[test]
    fn polygon_orientation_normalized() {
        let cw = Polygon::new(vec![p2(0.0, 0.0), p2(0.0, 1.0), p2(1.0, 1.0), p2(1.0, 0.0)])
            .unwrap();
        assert!(cw.signed_area() > 0.0);
    }

    #[test]
    fn ellipse_param_point() {
        let e = Ellipse::new(p2(1.0, 0.0), 2.0, 1.0, 0.0).unwrap();
        let p = e.point_at(0.0);
        assert!((p.x() - 3.0).abs() < 1e-15 && p.y().abs() < 1e-15);
        assert!(Ellipse::new(p2(0.0, 0.0), 1.0, 2.0, 0.0).is_err());
    }

    #[test]
    fn ratio_rejects_nonpositive() {
        assert!(Ratio::new(0.0).is_err());
        assert!(Ratio::new(-1.0).is_err());
        assert!(Ratio::new(2.0).is_ok());
    }

    #[test]
    fn circumcenter_equidistant() {
        let t = Triangle::new(p2(0.2, 0.1), p2(4.0, 0.5), p2(1.0, 3.0)).unwrap();
        let o = t.circumcenter();
        let r = o.dist(t.a());
        assert!((o.dist(t.b()) - r).abs() < 1e-12);
        assert!((o.dist(t.c()) - r).abs() < 1e-12);
    }
}
