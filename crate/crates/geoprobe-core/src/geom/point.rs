use std::ops::{Add, Mul, Neg, Sub};

/// A point (or displacement) in `N`-dimensional Euclidean space, `N` = 2 or 3.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point<const N: usize> {
    pub coords: [f64; N],
}

pub type P2 = Point<2>;
pub type P3 = Point<3>;

pub const fn p2(x: f64, y: f64) -> P2 {
    Point { coords: [x, y] }
}

pub const fn p3(x: f64, y: f64, z: f64) -> P3 {
    Point { coords: [x, y, z] }
}

impl<const N: usize> Point<N> {
    pub const ZERO: Self = Point { coords: [0.0; N] };

    pub fn dot(self, other: Self) -> f64 {
        let mut acc = 0.0;
        for i in 0..N {
            acc += self.coords[i] * other.coords[i];
        }
        acc
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist_sq(self, other: Self) -> f64 {
        (self - other).norm_sq()
    }

    pub fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }

    /// Point at parameter `t` on the line through `self` (t=0) and `other` (t=1).
    pub fn lerp(self, other: Self, t: f64) -> Self {
        self + (other - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    /// Unit vector in the same direction, or `None` for (near-)zero input.
    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self * (1.0 / n))
        } else {
            None
        }
    }
}

impl P2 {
    /// z-component of the 3D cross product of two planar vectors.
    pub fn cross(self, other: Self) -> f64 {
        self.coords[0] * other.coords[1] - self.coords[1] * other.coords[0]
    }

    /// Counterclockwise perpendicular.
    pub fn perp(self) -> Self {
        p2(-self.coords[1], self.coords[0])
    }

    pub fn angle(self) -> f64 {
        self.coords[1].atan2(self.coords[0])
    }

    pub fn x(self) -> f64 {
        self.coords[0]
    }

    pub fn y(self) -> f64 {
        self.coords[1]
    }
}

impl P3 {
    pub fn cross(self, other: Self) -> Self {
        let [ax, ay, az] = self.coords;
        let [bx, by, bz] = other.coords;
        p3(ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx)
    }

    pub fn x(self) -> f64 {
        self.coords[0]
    }

    pub fn y(self) -> f64 {
        self.coords[1]
    }

    pub fn z(self) -> f64 {
        self.coords[2]
    }
}

impl<const N: usize> Add for Point<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut coords = self.coords;
        for i in 0..N {
            coords[i] += rhs.coords[i];
        }
        Point { coords }
    }
}

impl<const N: usize> Sub for Point<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut coords = self.coords;
        for i in 0..N {
            coords[i] -= rhs.coords[i];
        }
        Point { coords }
    }
}

impl<const N: usize> Mul<f64> for Point<N> {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        let mut coords = self.coords;
        for c in &mut coords {
            *c *= rhs;
        }
        Point { coords }
    }
}

impl<const N: usize> Neg for Point<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_algebra() {
        let a = p2(1.0, 2.0);
        let b = p2(3.0, -1.0);
        assert_eq!(a + b, p2(4.0, 1.0));
        assert_eq!(a - b, p2(-2.0, 3.0));
        assert_eq!(a * 2.0, p2(2.0, 4.0));
        assert_eq!(a.dot(b), 1.0);
        assert_eq!(a.cross(b), -7.0);
        assert_eq!(p3(1.0, 0.0, 0.0).cross(p3(0.0, 1.0, 0.0)), p3(0.0, 0.0, 1.0));
    }

    #[test]
    fn lerp_endpoints() {
        let a = p3(0.0, 1.0, 2.0);
        let b = p3(4.0, -3.0, 6.0);
        assert_eq!(a.lerp(b, 0.0), a);
        assert_eq!(a.lerp(b, 1.0), b);
        assert_eq!(a.lerp(b, 0.5), p3(2.0, -1.0, 4.0));
    }
}
