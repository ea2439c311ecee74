//! Pedal feet of a point, their k-scaled images, and the six coefficients
//! M, N, P, Q, R, S that drive the concurrence criterion.
//!
//! For a normalized point (α, β, γ) the feet on BC, CA, AB are
//!
//! ```text
//! A' = (0, β + m, γ + n)    B' = (α + q, 0, γ + p)    C' = (α + r, β + s, 0)
//! ```
//!
//! and the scaled point X'' with `PX'' = k·PX'` replaces every coefficient by
//! k times itself and the vanishing coordinate by `(1 − k)` times the source
//! coordinate.

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::point::BaryPoint;
use crate::scalar::Scalar;
use crate::triangle::Triangle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PedalTriangle {
    pub foot_bc: BaryPoint,
    pub foot_ca: BaryPoint,
    pub foot_ab: BaryPoint,
}

impl PedalTriangle {
    pub fn feet(&self) -> [&BaryPoint; 3] {
        [&self.foot_bc, &self.foot_ca, &self.foot_ab]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaledPedal {
    pub a_double: BaryPoint,
    pub b_double: BaryPoint,
    pub c_double: BaryPoint,
    pub k: Scalar,
}

impl ScaledPedal {
    pub fn points(&self) -> [&BaryPoint; 3] {
        [&self.a_double, &self.b_double, &self.c_double]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coefficients {
    pub m: Scalar,
    pub n: Scalar,
    pub p: Scalar,
    pub q: Scalar,
    pub r: Scalar,
    pub s: Scalar,
}

/// Computes M..S from their polynomial definitions,
/// e.g. `m = α(a² + b² − c²)/(2a²)` and `s = γ(−a² + b² + c²)/(2c²)`.
pub fn coefficients(t: &Triangle, point: &BaryPoint) -> Result<Coefficients> {
    point.require_normalized()?;
    Ok(coefficients_unchecked(t, point))
}

/// Same formulas applied to an arbitrary homogeneous triple.
fn coefficients_unchecked(t: &Triangle, point: &BaryPoint) -> Coefficients {
    let (a2, b2, c2) = (t.a().square(), t.b().square(), t.c().square());
    let [alpha, beta, gamma] = point.coords();
    let two = Scalar::from(2);
    // Denominators are positive for any valid triangle.
    let over = |num: Scalar, side2: &Scalar| num.checked_div(&(&two * side2)).expect("positive side length");
    Coefficients {
        m: over(alpha * (&a2 + &b2 - &c2), &a2),
        n: over(alpha * (&a2 - &b2 + &c2), &a2),
        p: over(beta * (&b2 + &c2 - &a2), &b2),
        q: over(beta * (&a2 + &b2 - &c2), &b2),
        r: over(gamma * (&a2 - &b2 + &c2), &c2),
        s: over(gamma * (&b2 + &c2 - &a2), &c2),
    }
}

fn require_k(k: &Scalar) -> Result<()> {
    if k.is_zero() {
        Err(GeomError::ZeroK)
    } else {
        Ok(())
    }
}

pub(crate) fn scaled_points(point: &BaryPoint, co: &Coefficients, k: &Scalar) -> [BaryPoint; 3] {
    let [alpha, beta, gamma] = point.coords();
    let one_minus_k = Scalar::one() - k;
    let pt =
        |x: Scalar, y: Scalar, z: Scalar| BaryPoint::new(x, y, z).expect("scaled pedal point has coordinate sum 1");
    [
        pt(&one_minus_k * alpha, beta + k * &co.m, gamma + k * &co.n),
        pt(alpha + k * &co.q, &one_minus_k * beta, gamma + k * &co.p),
        pt(alpha + k * &co.r, beta + k * &co.s, &one_minus_k * gamma),
    ]
}

pub fn pedal_triangle(t: &Triangle, point: &BaryPoint) -> Result<PedalTriangle> {
    let co = coefficients(t, point)?;
    let [foot_bc, foot_ca, foot_ab] = scaled_points(point, &co, &Scalar::one());
    Ok(PedalTriangle { foot_bc, foot_ca, foot_ab })
}

/// The points A'', B'', C'' with `PA'' = k·PA'` and cyclically.
pub fn scale_pedal(t: &Triangle, point: &BaryPoint, k: &Scalar) -> Result<ScaledPedal> {
    require_k(k)?;
    let co = coefficients(t, point)?;
    let [a_double, b_double, c_double] = scaled_points(point, &co, k);
    Ok(ScaledPedal { a_double, b_double, c_double, k: k.clone() })
}
