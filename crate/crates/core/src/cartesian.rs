//! Cartesian embedding of a triangle: B at the origin, C on the positive
//! x-axis and A in the upper half-plane.
//!
//! The embedding is exact when the height of A is rational. Otherwise it
//! falls back to `f64` and says so.

use serde::Serialize;

use crate::error::Result;
use crate::point::BaryPoint;
use crate::scalar::Scalar;
use crate::triangle::Triangle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartesianPoint {
    pub x: Scalar,
    pub y: Scalar,
}

impl CartesianPoint {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        CartesianPoint { x, y }
    }

    pub fn sub(&self, other: &CartesianPoint) -> CartesianPoint {
        CartesianPoint::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn dot(&self, other: &CartesianPoint) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [self.x.to_f64(), self.y.to_f64()]
    }
}

/// Result of embedding a barycentric point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Embedded {
    Exact(CartesianPoint),
    /// The triangle's height is irrational; coordinates are approximate.
    Approx([f64; 2]),
}

impl Embedded {
    pub fn is_exact(&self) -> bool {
        matches!(self, Embedded::Exact(_))
    }

    pub fn to_f64(&self) -> [f64; 2] {
        match self {
            Embedded::Exact(p) => p.to_f64(),
            Embedded::Approx(p) => *p,
        }
    }
}

/// Vertex positions for a triangle, exact when possible.
#[derive(Debug, Clone)]
pub struct Frame {
    /// x-coordinate of A, always rational.
    x_a: Scalar,
    /// Exact height of A when it is rational.
    height: Option<Scalar>,
    height_f64: f64,
    a: Scalar,
}

impl Frame {
    pub fn new(t: &Triangle) -> Result<Frame> {
        let two = Scalar::from(2);
        let x_a = (t.a().square() + t.c().square() - t.b().square()).checked_div(&(&two * t.a()))?;
        let h2 = t.c().square() - x_a.square();
        let height = h2.sqrt_exact();
        let height_f64 = h2.to_f64().sqrt();
        Ok(Frame { x_a, height, height_f64, a: t.a().clone() })
    }

    pub fn is_exact(&self) -> bool {
        self.height.is_some()
    }

    /// Embeds a normalized point. Homogeneous input is normalized first.
    pub fn embed(&self, p: &BaryPoint) -> Result<Embedded> {
        let p = p.normalize()?;
        // B contributes nothing: B = (0, 0).
        let x = p.alpha() * &self.x_a + p.gamma() * &self.a;
        Ok(match &self.height {
            Some(h) => Embedded::Exact(CartesianPoint::new(x, p.alpha() * h)),
            None => Embedded::Approx([x.to_f64(), p.alpha().to_f64() * self.height_f64]),
        })
    }

    /// Float embedding of a float barycentric triple (sum assumed to be 1).
    pub fn embed_f64(&self, [alpha, _beta, gamma]: [f64; 3]) -> [f64; 2] {
        [alpha * self.x_a.to_f64() + gamma * self.a.to_f64(), alpha * self.height_f64]
    }
}

pub fn embed_cartesian(t: &Triangle, p: &BaryPoint) -> Result<Embedded> {
    Frame::new(t)?.embed(p)
}
