//! The constructions the checkers and experiments are assembled from.
//! Everything here is a pure function of its arguments.

use crate::error::{GeomError, Result};
use crate::geom::point::{Point, P2, P3};
use crate::geom::shapes::{Ball, Circle, Line2, Plane, Ratio, Segment, Sphere};

/// Foot of the perpendicular from `m` onto the supporting line of `line`,
/// plus whether the foot falls inside the closed segment.
pub fn project_to_line<const N: usize>(
    m: Point<N>,
    line: &Segment<N>,
) -> (Point<N>, bool) {
    let d = line.delta();
    let t = (m - line.a).dot(d) / d.norm_sq();
    (line.a + d * t, (0.0..=1.0).contains(&t))
}

/// Foot of the perpendicular from `m` onto `plane`.
pub fn project_to_plane(m: P3, plane: &Plane) -> P3 {
    let h = (m - plane.point).dot(plane.normal);
    m - plane.normal * h
}

/// The point `X` strictly between `p` and `q` with ‖pX‖ = k·‖Xq‖.
pub fn divide_segment<const N: usize>(p: Point<N>, q: Point<N>, k: Ratio) -> Result<Point<N>> {
    if p.dist_sq(q) == 0.0 {
        return Err(GeomError::InvalidInput("cannot divide a zero-length segment".into()));
    }
    let k = k.get();
    Ok((p + q * k) * (1.0 / (1.0 + k)))
}

/// Intersection of two infinite lines. Distinguishes coincident from disjoint
/// parallels; the threshold is 1e-12 scaled by the direction magnitudes.
pub fn line_line_intersection_2d(l1: &Line2, l2: &Line2) -> Result<P2> {
    let denom = l1.dir.cross(l2.dir);
    let scale = l1.dir.norm() * l2.dir.norm();
    if denom.abs() < 1e-12 * scale {
        let offset = l2.point - l1.point;
        let coincident =
            l1.dir.cross(offset).abs() <= 1e-12 * l1.dir.norm() * offset.norm().max(1.0);
        return Err(GeomError::ParallelLines { coincident });
    }
    let t = (l2.point - l1.point).cross(l2.dir) / denom;
    Ok(l1.point + l1.dir * t)
}

/// Intersection of the line through `vertex` and `through` with the supporting
/// line of `opposite_side`. Returns the foot and its parameter `t` on that
/// line (`t ∈ (0,1)` when the foot is interior to the side).
pub fn cevian_foot(vertex: P2, through: P2, opposite_side: &Segment<2>) -> Result<(P2, f64)> {
    if vertex.dist_sq(through) == 0.0 {
        return Err(GeomError::InvalidInput("cevian vertex and interior point coincide".into()));
    }
    let cev_dir = through - vertex;
    let side_dir = opposite_side.delta();
    let denom = cev_dir.cross(side_dir);
    if denom.abs() < 1e-12 * cev_dir.norm() * side_dir.norm() {
        return Err(GeomError::ParallelLines { coincident: false });
    }
    let t = (opposite_side.a - vertex).cross(cev_dir) / -denom;
    Ok((opposite_side.a + side_dir * t, t))
}

/// Squared Cevian length from the vertex opposite `side_a` when the foot
/// divides that side at fraction `k` from its first endpoint:
/// `(1−k)·c² + k·b² − (1−k)·k·a²`.
pub fn stewart_cevian_length_sq(side_a: f64, side_b: f64, side_c: f64, k: f64) -> Result<f64> {
    let strict = side_a < side_b + side_c && side_b < side_c + side_a && side_c < side_a + side_b;
    if !(side_a > 0.0 && side_b > 0.0 && side_c > 0.0 && strict) {
        return Err(GeomError::TriangleInequality);
    }
    if !(k > 0.0 && k < 1.0) {
        return Err(GeomError::OutOfDomain(format!("k must lie in (0,1), got {k}")));
    }
    Ok((1.0 - k) * side_c * side_c + k * side_b * side_b - (1.0 - k) * k * side_a * side_a)
}

/// Second intersection of the circle/sphere with the line through `through`
/// (which must lie on the surface) in `direction`. Equals `through` itself
/// exactly when the line is tangent.
pub fn circle_line_second_intersection<const N: usize>(
    ball: &Ball<N>,
    through: Point<N>,
    direction: Point<N>,
) -> Result<Point<N>> {
    if !ball.on_surface(through, 1e-9) {
        return Err(GeomError::PointNotOnSurface);
    }
    let dir = direction
        .normalized()
        .ok_or_else(|| GeomError::InvalidInput("zero direction".into()))?;
    let t = -2.0 * (through - ball.center).dot(dir);
    Ok(through + dir * t)
}

/// Tangent line to a circle at a point on it.
pub fn tangent_line_at(c: &Circle, p: P2) -> Result<Line2> {
    if !c.on_surface(p, 1e-9) {
        return Err(GeomError::PointNotOnSurface);
    }
    let dir = (p - c.center)
        .perp()
        .normalized()
        .ok_or(GeomError::PointNotOnSurface)?;
    Line2::new(p, dir)
}

/// Both intersection points of two transversally intersecting circles.
/// The first returned point is on the counterclockwise side of the
/// center-to-center direction.
pub fn circle_circle_intersection(c1: &Circle, c2: &Circle) -> Result<(P2, P2)> {
    let d = c1.center.dist(c2.center);
    if !(d > (c1.radius - c2.radius).abs() && d < c1.radius + c2.radius) {
        return Err(GeomError::NotTransversal);
    }
    let a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    let h = (c1.radius * c1.radius - a * a).sqrt();
    let u = (c2.center - c1.center) * (1.0 / d);
    let base = c1.center + u * a;
    Ok((base + u.perp() * h, base - u.perp() * h))
}

/// The circle in which two transversally intersecting spheres meet:
/// `(center, radius, unit plane normal)`, the normal parallel to `c2 − c1`.
pub fn sphere_sphere_intersection_circle(s1: &Sphere, s2: &Sphere) -> Result<(P3, f64, P3)> {
    let d = s1.center.dist(s2.center);
    if !(d > (s1.radius - s2.radius).abs() && d < s1.radius + s2.radius) {
        return Err(GeomError::NotTransversal);
    }
    let a = (d * d + s1.radius * s1.radius - s2.radius * s2.radius) / (2.0 * d);
    let radius = (s1.radius * s1.radius - a * a).sqrt();
    let normal = (s2.center - s1.center) * (1.0 / d);
    Ok((s1.center + normal * a, radius, normal))
}

/// Feet of the three altitudes of a strictly acute triangle, in vertex order:
/// foot from A onto BC, from B onto CA, from C onto AB.
pub fn orthic_feet(t: &crate::geom::shapes::Triangle) -> Result<[P2; 3]> {
    if !t.is_acute() {
        return Err(GeomError::NonAcuteTriangle);
    }
    let [a, b, c] = t.vertices();
    let fa = project_to_line(a, &Segment::new(b, c)?).0;
    let fb = project_to_line(b, &Segment::new(c, a)?).0;
    let fc = project_to_line(c, &Segment::new(a, b)?).0;
    Ok([fa, fb, fc])
}

/// Signed telescoping sum of the projection identity over a closed vertex
/// cycle: `Σᵢ (‖MᵢAᵢ‖² − ‖MᵢAᵢ₊₁‖²)` normalized by `Σ sideᵢ²`, where `Mᵢ` is
/// the foot of `m` on the supporting line of edge `AᵢAᵢ₊₁`. Dimension-free.
pub fn cycle_projection_residual<const N: usize>(cycle: &[Point<N>], m: Point<N>) -> Result<f64> {
    if cycle.len() < 3 {
        return Err(GeomError::InvalidInput("cycle needs at least 3 vertices".into()));
    }
    let n = cycle.len();
    let mut sum = 0.0;
    let mut scale = 0.0;
    for i in 0..n {
        let a = cycle[i];
        let b = cycle[(i + 1) % n];
        let edge = Segment::new(a, b)?;
        let (foot, _) = project_to_line(m, &edge);
        sum += foot.dist_sq(a) - foot.dist_sq(b);
        scale += a.dist_sq(b);
    }
    Ok(sum.abs() / scale)
}

/// Projection sum over an arbitrary directed edge list plus per-vertex
/// (out − in) degree imbalance. The sum telescopes to zero exactly when every
/// vertex is balanced.
pub fn directed_projection_sum<const N: usize>(
    points: &[Point<N>],
    edges: &[(usize, usize)],
    m: Point<N>,
) -> Result<(f64, Vec<i64>)> {
    let mut imbalance = vec![0i64; points.len()];
    let mut sum = 0.0;
    let mut scale = 0.0;
    for &(tail, head) in edges {
        if tail >= points.len() || head >= points.len() {
            return Err(GeomError::InvalidInput("edge index out of range".into()));
        }
        let (a, b) = (points[tail], points[head]);
        let edge = Segment::new(a, b)?;
        let (foot, _) = project_to_line(m, &edge);
        sum += foot.dist_sq(a) - foot.dist_sq(b);
        scale += a.dist_sq(b);
        imbalance[tail] += 1;
        imbalance[head] -= 1;
    }
    Ok((sum / scale, imbalance))
}

/// Convex hull (counterclockwise, no collinear interior points) via Andrew's
/// monotone chain.
pub fn convex_hull(points: &[P2]) -> Vec<P2> {
    let mut pts: Vec<P2> = points.to_vec();
    pts.sort_by(|p, q| p.x().total_cmp(&q.x()).then(p.y().total_cmp(&q.y())));
    pts.dedup_by(|p, q| p == q);
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: P2, a: P2, b: P2| (a - o).cross(b - o);
    let mut hull: Vec<P2> = Vec::with_capacity(pts.len() * 2);
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}
