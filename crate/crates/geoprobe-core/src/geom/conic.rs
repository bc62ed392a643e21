//! Circles and ellipses as quadratic forms, for line-conic second
//! intersections and conic-pair intersection points.

use crate::error::{GeomError, Result};
use crate::geom::point::{p2, P2};
use crate::geom::shapes::{Circle, Ellipse};

/// Central conic in the normalized form ‖M·(p − center)‖² = 1, where `M`
/// maps the conic onto the unit circle.
#[derive(Debug, Clone, Copy)]
pub struct Conic {
    pub center: P2,
    m: [[f64; 2]; 2],
}

impl Conic {
    pub fn from_circle(c: &Circle) -> Self {
        let inv_r = 1.0 / c.radius;
        Conic { center: c.center, m: [[inv_r, 0.0], [0.0, inv_r]] }
    }

    pub fn from_ellipse(e: &Ellipse) -> Self {
        // M = diag(1/a, 1/b) · R(−rotation)
        let (s, c) = e.rotation.sin_cos();
        let (ia, ib) = (1.0 / e.semi_major, 1.0 / e.semi_minor);
        Conic {
            center: e.center,
            m: [[ia * c, ia * s], [-ib * s, ib * c]],
        }
    }

    fn map(&self, v: P2) -> P2 {
        p2(
            self.m[0][0] * v.x() + self.m[0][1] * v.y(),
            self.m[1][0] * v.x() + self.m[1][1] * v.y(),
        )
    }

    /// Signed quadratic value: zero on the conic, negative inside.
    pub fn eval(&self, p: P2) -> f64 {
        self.map(p - self.center).norm_sq() - 1.0
    }

    /// Second intersection of the conic with the line through `through`
    /// (which must lie on the conic within 1e-9) in `direction`. Tangent
    /// lines return `through` itself.
    pub fn second_intersection(&self, through: P2, direction: P2) -> Result<P2> {
        if self.eval(through).abs() > 1e-9 {
            return Err(GeomError::PointNotOnSurface);
        }
        let dir = direction
            .normalized()
            .ok_or_else(|| GeomError::InvalidInput("zero direction".into()))?;
        let q = self.map(through - self.center);
        let w = self.map(dir);
        let t = -2.0 * q.dot(w) / w.norm_sq();
        Ok(through + dir * t)
    }
}

/// A circle or ellipse with its parametrization kept around.
#[derive(Debug, Clone, Copy)]
pub enum ConicShape {
    Circle(Circle),
    Ellipse(Ellipse),
}

impl ConicShape {
    pub fn conic(&self) -> Conic {
        match self {
            ConicShape::Circle(c) => Conic::from_circle(c),
            ConicShape::Ellipse(e) => Conic::from_ellipse(e),
        }
    }

    pub fn point_at(&self, t: f64) -> P2 {
        match self {
            ConicShape::Circle(c) => c.center + p2(c.radius * t.cos(), c.radius * t.sin()),
            ConicShape::Ellipse(e) => e.point_at(t),
        }
    }

    pub fn scale(&self) -> f64 {
        match self {
            ConicShape::Circle(c) => c.radius,
            ConicShape::Ellipse(e) => e.semi_major,
        }
    }
}

/// The two transversal intersection points of a conic pair. Scans the first
/// shape's parameter circle for sign changes of the second conic's quadratic
/// and bisects each bracket. Errors unless exactly two crossings exist.
pub fn conic_pair_intersections(s1: &ConicShape, s2: &ConicShape) -> Result<(P2, P2)> {
    if let (ConicShape::Circle(c1), ConicShape::Circle(c2)) = (s1, s2) {
        return crate::geom::ops::circle_circle_intersection(c1, c2);
    }
    let q2 = s2.conic();
    let samples = 4096;
    let step = std::f64::consts::TAU / samples as f64;
    let mut roots = Vec::new();
    let mut prev = q2.eval(s1.point_at(0.0));
    for i in 1..=samples {
        let t = step * i as f64;
        let val = q2.eval(s1.point_at(t));
        if prev == 0.0 {
            roots.push(step * (i - 1) as f64);
        } else if prev * val < 0.0 {
            let (mut lo, mut hi) = (step * (i - 1) as f64, t);
            let (mut flo, _) = (prev, val);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fmid = q2.eval(s1.point_at(mid));
                if fmid == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if flo * fmid < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fmid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev = val;
    }
    if roots.len() != 2 {
        return Err(GeomError::NotTransversal);
    }
    Ok((s1.point_at(roots[0]), s1.point_at(roots[1])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conic_matches_circle_second_intersection() {
        let c = Circle::new(p2(0.4, -0.2), 1.7).unwrap();
        let conic = Conic::from_circle(&c);
        let through = c.center + p2(1.7, 0.0);
        let dir = p2(-0.3, 0.9);
        let via_conic = conic.second_intersection(through, dir).unwrap();
        let via_circle =
            crate::geom::ops::circle_line_second_intersection(&c, through, dir).unwrap();
        assert!(via_conic.dist(via_circle) < 1e-12);
    }

    #[test]
    fn ellipse_second_intersection_stays_on_ellipse() {
        let e = Ellipse::new(p2(0.0, 0.0), 2.0, 1.0, 0.4).unwrap();
        let conic = Conic::from_ellipse(&e);
        let through = e.point_at(1.1);
        assert!(conic.eval(through).abs() < 1e-12);
        let hit = conic.second_intersection(through, p2(0.6, -0.8)).unwrap();
        assert!(conic.eval(hit).abs() < 1e-10);
    }

    #[test]
    fn ellipse_circle_two_point_intersection() {
        // x²/4 + y² = 1 meets the unit circle at (1.5,0) exactly at (1, ±√3/2).
        let e = ConicShape::Ellipse(Ellipse::new(p2(0.0, 0.0), 2.0, 1.0, 0.0).unwrap());
        let c = ConicShape::Circle(Circle::new(p2(1.5, 0.0), 1.0).unwrap());
        let (a, b) = conic_pair_intersections(&e, &c).unwrap();
        let expect_y = 0.75_f64.sqrt();
        let mut ys = [a.y(), b.y()];
        ys.sort_by(f64::total_cmp);
        assert!((a.x() - 1.0).abs() < 1e-9 && (b.x() - 1.0).abs() < 1e-9);
        assert!((ys[0] + expect_y).abs() < 1e-9 && (ys[1] - expect_y).abs() < 1e-9);
    }
}
