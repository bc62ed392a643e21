//! Small convex polyhedra: fixed solids plus a brute-force hull for point
//! sets in general position (no four coplanar points), which is all the
//! randomized experiments need.

use crate::error::{GeomError, Result};
use crate::geom::point::{p2, p3, P2, P3};

#[derive(Debug, Clone)]
pub struct Face {
    pub indices: Vec<usize>,
    /// Outward unit normal.
    pub normal: P3,
}

#[derive(Debug, Clone)]
pub struct ConvexPolyhedron {
    pub vertices: Vec<P3>,
    pub faces: Vec<Face>,
}

impl ConvexPolyhedron {
    /// Regular tetrahedron with unit circumradius, centered at the origin.
    pub fn tetrahedron() -> Self {
        let s = 1.0 / 3.0_f64.sqrt();
        let vertices = vec![
            p3(s, s, s),
            p3(s, -s, -s),
            p3(-s, s, -s),
            p3(-s, -s, s),
        ];
        let face_ids = [[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]];
        let faces = face_ids
            .iter()
            .map(|ids| Face {
                indices: ids.to_vec(),
                normal: outward_normal(&vertices, ids, P3::ZERO),
            })
            .collect();
        ConvexPolyhedron { vertices, faces }
    }

    /// Axis-aligned cube with half-extent 1, centered at the origin.
    pub fn cube() -> Self {
        let mut vertices = Vec::with_capacity(8);
        for &z in &[-1.0, 1.0] {
            for &y in &[-1.0, 1.0] {
                for &x in &[-1.0, 1.0] {
                    vertices.push(p3(x, y, z));
                }
            }
        }
        let face_ids: [[usize; 4]; 6] = [
            [0, 1, 3, 2],
            [4, 6, 7, 5],
            [0, 4, 5, 1],
            [2, 3, 7, 6],
            [0, 2, 6, 4],
            [1, 5, 7, 3],
        ];
        let faces = face_ids
            .iter()
            .map(|ids| Face {
                indices: ids.to_vec(),
                normal: outward_normal(&vertices, ids, P3::ZERO),
            })
            .collect();
        ConvexPolyhedron { vertices, faces }
    }

    /// Hull of points in general position: every face is a triangle found by
    /// the O(n⁴) side test. Near-coplanar quadruples are rejected.
    pub fn from_points(points: &[P3]) -> Result<Self> {
        let n = points.len();
        if n < 4 {
            return Err(GeomError::InvalidInput("hull needs at least 4 points".into()));
        }
        let scale = points
            .iter()
            .flat_map(|p| p.coords)
            .fold(0.0f64, |m, c| m.max(c.abs()))
            .max(1e-12);
        let eps = 1e-9 * scale * scale * scale;
        let mut faces = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let normal = (points[j] - points[i]).cross(points[k] - points[i]);
                    if normal.norm() < eps {
                        continue;
                    }
                    let mut pos = 0usize;
                    let mut neg = 0usize;
                    let mut coplanar = false;
                    for (l, p) in points.iter().enumerate() {
                        if l == i || l == j || l == k {
                            continue;
                        }
                        let side = (*p - points[i]).dot(normal);
                        if side.abs() < eps {
                            coplanar = true;
                            break;
                        }
                        if side > 0.0 {
                            pos += 1;
                        } else {
                            neg += 1;
                        }
                    }
                    if coplanar {
                        return Err(GeomError::InvalidInput(
                            "points not in general position".into(),
                        ));
                    }
                    if pos == 0 || neg == 0 {
                        // All remaining points on one side: hull face. Orient
                        // the triangle so its normal points away from them.
                        let (indices, normal) = if neg == 0 {
                            ([i, k, j], -normal)
                        } else {
                            ([i, j, k], normal)
                        };
                        faces.push(Face {
                            indices: indices.to_vec(),
                            normal: normal.normalized().unwrap(),
                        });
                    }
                }
            }
        }
        if faces.len() < 4 {
            return Err(GeomError::InvalidInput("degenerate hull".into()));
        }
        Ok(ConvexPolyhedron { vertices: points.to_vec(), faces })
    }

    pub fn face_vertices(&self, face: &Face) -> Vec<P3> {
        face.indices.iter().map(|&i| self.vertices[i]).collect()
    }

    pub fn face_area(&self, face: &Face) -> f64 {
        let vs = self.face_vertices(face);
        let mut acc = P3::ZERO;
        for i in 1..vs.len() - 1 {
            acc = acc + (vs[i] - vs[0]).cross(vs[i + 1] - vs[0]);
        }
        0.5 * acc.norm()
    }

    pub fn contains(&self, p: P3, margin: f64) -> bool {
        self.faces.iter().all(|f| {
            let v0 = self.vertices[f.indices[0]];
            (p - v0).dot(f.normal) < -margin
        })
    }

    pub fn diameter(&self) -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                best = best.max(self.vertices[i].dist(self.vertices[j]));
            }
        }
        best
    }

    /// Foot of `m` on the face plane plus whether it lands inside the face.
    pub fn face_foot(&self, face: &Face, m: P3) -> (P3, bool) {
        let v0 = self.vertices[face.indices[0]];
        let h = (m - v0).dot(face.normal);
        let foot = m - face.normal * h;
        // 2D containment in the face plane.
        let e1 = (self.vertices[face.indices[1]] - v0).normalized().unwrap();
        let e2 = face.normal.cross(e1);
        let to_2d = |p: P3| p2((p - v0).dot(e1), (p - v0).dot(e2));
        let poly: Vec<P2> = self.face_vertices(face).into_iter().map(to_2d).collect();
        let q = to_2d(foot);
        let mut inside = false;
        let n = poly.len();
        for i in 0..n {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            if (a.y() > q.y()) != (b.y() > q.y()) {
                let x = a.x() + (q.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
                if q.x() < x {
                    inside = !inside;
                }
            }
        }
        (foot, inside)
    }
}

fn outward_normal(vertices: &[P3], ids: &[usize], interior: P3) -> P3 {
    let (a, b, c) = (vertices[ids[0]], vertices[ids[1]], vertices[ids[2]]);
    let mut n = (b - a).cross(c - a).normalized().unwrap();
    if (a - interior).dot(n) < 0.0 {
        n = -n;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_feet_from_centroid_are_equal() {
        let t = ConvexPolyhedron::tetrahedron();
        assert_eq!(t.faces.len(), 4);
        let dists: Vec<f64> = t
            .faces
            .iter()
            .map(|f| {
                let (foot, inside) = t.face_foot(f, P3::ZERO);
                assert!(inside);
                foot.norm()
            })
            .collect();
        for d in &dists {
            assert!((d - dists[0]).abs() < 1e-12);
        }
        // Inradius of a regular tetrahedron is one third of the circumradius.
        assert!((dists[0] - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn cube_feet_from_center_hit_face_centers() {
        let c = ConvexPolyhedron::cube();
        assert_eq!(c.faces.len(), 6);
        for f in &c.faces {
            let (foot, inside) = c.face_foot(f, P3::ZERO);
            assert!(inside);
            assert!((foot.norm() - 1.0).abs() < 1e-12);
            assert!((c.face_area(f) - 4.0).abs() < 1e-12);
        }
        assert!(c.contains(P3::ZERO, 0.5));
        assert!(!c.contains(p3(2.0, 0.0, 0.0), 0.0));
    }

    #[test]
    fn brute_force_hull_of_octahedron_like_cloud() {
        let pts = [
            p3(1.1, 0.0, 0.01),
            p3(-1.0, 0.02, 0.0),
            p3(0.0, 1.2, -0.01),
            p3(0.03, -1.0, 0.0),
            p3(0.01, 0.0, 0.9),
            p3(0.0, 0.04, -1.1),
        ];
        let hull = ConvexPolyhedron::from_points(&pts).unwrap();
        assert_eq!(hull.faces.len(), 8);
        assert!(hull.contains(P3::ZERO, 1e-6));
    }

    #[test]
    fn coplanar_points_rejected() {
        let pts = [
            p3(0.0, 0.0, 0.0),
            p3(1.0, 0.0, 0.0),
            p3(0.0, 1.0, 0.0),
            p3(1.0, 1.0, 0.0),
            p3(0.5, 0.5, 1.0),
        ];
        assert!(ConvexPolyhedron::from_points(&pts).is_err());
    }
}
