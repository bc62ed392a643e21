//! Circle/sphere fitting: algebraic least squares for the initial guess,
//! refined by geometric Gauss-Newton on `‖p − c‖ − r`. The algebraic fit
//! alone biases the radius on partial arcs, so both stages always run.

use crate::error::{GeomError, Result};
use crate::geom::point::Point;

#[derive(Debug, Clone)]
pub struct SurfaceFit<const N: usize> {
    pub center: Point<N>,
    pub radius: f64,
    pub rms_residual: f64,
    pub max_residual: f64,
    pub iterations: usize,
}

/// Least-squares circle (N=2) or sphere (N=3) through a point cloud.
pub fn fit_hypersphere<const N: usize>(points: &[Point<N>]) -> Result<SurfaceFit<N>> {
    if points.len() < N + 1 {
        return Err(GeomError::InvalidInput(format!(
            "need at least {} points to fit, got {}",
            N + 1,
            points.len()
        )));
    }

    // Algebraic (Kåsa) stage: ‖p‖² = 2c·p + (r² − ‖c‖²) is linear in (c, d).
    let dim = N + 1;
    let mut ata = vec![0.0; dim * dim];
    let mut atb = vec![0.0; dim];
    for p in points {
        let mut row = [0.0; 4];
        for i in 0..N {
            row[i] = 2.0 * p.coords[i];
        }
        row[N] = 1.0;
        let rhs = p.norm_sq();
        for i in 0..dim {
            for j in 0..dim {
                ata[i * dim + j] += row[i] * row[j];
            }
            atb[i] += row[i] * rhs;
        }
    }
    let sol = solve_linear(dim, &mut ata, &mut atb)?;
    let mut center = Point::<N>::ZERO;
    center.coords.copy_from_slice(&sol[..N]);
    let mut radius = (sol[N] + center.norm_sq()).max(0.0).sqrt();

    // Geometric stage: Gauss-Newton on g_i = ‖p_i − c‖ − r.
    let mut iterations = 0;
    for _ in 0..50 {
        iterations += 1;
        let mut jtj = vec![0.0; dim * dim];
        let mut jtg = vec![0.0; dim];
        for p in points {
            let diff = *p - center;
            let dist = diff.norm();
            if dist < 1e-300 {
                continue;
            }
            let g = dist - radius;
            let mut jac = [0.0; 4];
            for i in 0..N {
                jac[i] = -diff.coords[i] / dist;
            }
            jac[N] = -1.0;
            for i in 0..dim {
                for j in 0..dim {
                    jtj[i * dim + j] += jac[i] * jac[j];
                }
                jtg[i] += jac[i] * g;
            }
        }
        for v in &mut jtg {
            *v = -*v;
        }
        let delta = match solve_linear(dim, &mut jtj, &mut jtg) {
            Ok(d) => d,
            Err(_) => break,
        };
        let mut shift = 0.0;
        for i in 0..N {
            center.coords[i] += delta[i];
            shift += delta[i] * delta[i];
        }
        radius += delta[N];
        shift += delta[N] * delta[N];
        if shift.sqrt() < 1e-14 * radius.abs().max(1.0) {
            break;
        }
    }

    let mut sum_sq = 0.0;
    let mut max_res: f64 = 0.0;
    for p in points {
        let r = (p.dist(center) - radius).abs();
        sum_sq += r * r;
        max_res = max_res.max(r);
    }
    Ok(SurfaceFit {
        center,
        radius,
        rms_residual: (sum_sq / points.len() as f64).sqrt(),
        max_residual: max_res,
        iterations,
    })
}

/// Gaussian elimination with partial pivoting; `a` is row-major n×n.
pub fn solve_linear(n: usize, a: &mut [f64], b: &mut [f64]) -> Result<Vec<f64>> {
    for col in 0..n {
        let mut pivot = col;
        for row in (col + 1)..n {
            if a[row * n + col].abs() > a[pivot * n + col].abs() {
                pivot = row;
            }
        }
        if a[pivot * n + col].abs() < 1e-300 {
            return Err(GeomError::InvalidInput("singular linear system".into()));
        }
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            b.swap(col, pivot);
        }
        let diag = a[col * n + col];
        for row in (col + 1)..n {
            let factor = a[row * n + col] / diag;
            if factor == 0.0 {
                continue;
            }
            for j in col..n {
                a[row * n + j] -= factor * a[col * n + j];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for j in (row + 1)..n {
            acc -= a[row * n + j] * x[j];
        }
        x[row] = acc / a[row * n + row];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::point::{p2, p3};

    #[test]
    fn exact_circle_recovered() {
        let center = p2(1.5, -2.0);
        let radius = 3.25;
        let pts: Vec<_> = (0..40)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / 40.0;
                center + p2(radius * t.cos(), radius * t.sin())
            })
            .collect();
        let fit = fit_hypersphere(&pts).unwrap();
        assert!(fit.center.dist(center) < 1e-12);
        assert!((fit.radius - radius).abs() < 1e-12);
        assert!(fit.max_residual < 1e-12);
        assert!(fit.rms_residual <= fit.max_residual);
    }

    #[test]
    fn partial_arc_geometric_refinement() {
        // Quarter arc: the geometric stage must still land on the true circle.
        let center = p2(0.0, 0.0);
        let radius = 2.0;
        let pts: Vec<_> = (0..25)
            .map(|i| {
                let t = 0.1 + 1.4 * i as f64 / 24.0;
                center + p2(radius * t.cos(), radius * t.sin())
            })
            .collect();
        let fit = fit_hypersphere(&pts).unwrap();
        assert!(fit.center.dist(center) < 1e-9);
        assert!((fit.radius - radius).abs() < 1e-9);
    }

    #[test]
    fn exact_sphere_recovered() {
        let center = p3(0.3, 0.7, -1.1);
        let radius = 1.75;
        let mut pts = Vec::new();
        for i in 0..12 {
            for j in 0..6 {
                let phi = std::f64::consts::TAU * i as f64 / 12.0;
                let theta = std::f64::consts::PI * (j as f64 + 0.5) / 6.0;
                pts.push(
                    center
                        + p3(
                            radius * theta.sin() * phi.cos(),
                            radius * theta.sin() * phi.sin(),
                            radius * theta.cos(),
                        ),
                );
            }
        }
        let fit = fit_hypersphere(&pts).unwrap();
        assert!(fit.center.dist(center) < 1e-11);
        assert!((fit.radius - radius).abs() < 1e-11);
    }

    #[test]
    fn too_few_points_rejected() {
        assert!(fit_hypersphere(&[p2(0.0, 0.0), p2(1.0, 0.0)]).is_err());
    }
}
