//! Homogeneous barycentric points and lines.
//!
//! Points are stored homogeneously; [`BaryPoint::normalize`] produces the
//! representative with coordinate sum 1. A point whose coordinates sum to
//! zero lies on the line at infinity and is a legal value, but it cannot be
//! normalized.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[Scalar; 3]", into = "[Scalar; 3]")]
pub struct BaryPoint {
    alpha: Scalar,
    beta: Scalar,
    gamma: Scalar,
}

impl BaryPoint {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar) -> Result<Self> {
        if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
            return Err(GeomError::ZeroPoint);
        }
        Ok(BaryPoint { alpha, beta, gamma })
    }

    /// Builds a point from small integer ratios `(n, d)`; panics on invalid input.
    pub fn from_ratios(c: [(i64, i64); 3]) -> Self {
        Self::new(Scalar::ratio(c[0].0, c[0].1), Scalar::ratio(c[1].0, c[1].1), Scalar::ratio(c[2].0, c[2].1))
            .expect("zero point")
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(alpha.into(), beta.into(), gamma.into()).expect("zero point")
    }

    pub fn vertex_a() -> Self {
        Self::from_ints(1, 0, 0)
    }

    pub fn vertex_b() -> Self {
        Self::from_ints(0, 1, 0)
    }

    pub fn vertex_c() -> Self {
        Self::from_ints(0, 0, 1)
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn gamma(&self) -> &Scalar {
        &self.gamma
    }

    pub fn coords(&self) -> [&Scalar; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    pub fn sum(&self) -> Scalar {
        &self.alpha + &self.beta + &self.gamma
    }

    pub fn is_normalized(&self) -> bool {
        self.sum().is_one()
    }

    pub fn is_at_infinity(&self) -> bool {
        self.sum().is_zero()
    }

    pub fn normalize(&self) -> Result<Self> {
        let s = self.sum();
        if s.is_zero() {
            return Err(GeomError::PointAtInfinity);
        }
        Ok(BaryPoint {
            alpha: self.alpha.checked_div(&s)?,
            beta: self.beta.checked_div(&s)?,
            gamma: self.gamma.checked_div(&s)?,
        })
    }

    /// Normalized form when finite; the homogeneous triple itself otherwise.
    pub fn normalize_or_keep(&self) -> Self {
        self.normalize().unwrap_or_else(|_| self.clone())
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(GeomError::NotNormalized)
        }
    }

    pub fn scale(&self, t: &Scalar) -> Result<Self> {
        Self::new(&self.alpha * t, &self.beta * t, &self.gamma * t)
    }

    /// True when both triples represent the same projective point.
    pub fn projectively_eq(&self, other: &BaryPoint) -> bool {
        cross(self.coords(), other.coords()).iter().all(Scalar::is_zero)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.alpha.to_f64(), self.beta.to_f64(), self.gamma.to_f64()]
    }
}

impl TryFrom<[Scalar; 3]> for BaryPoint {
    type Error = GeomError;
    fn try_from([a, b, c]: [Scalar; 3]) -> Result<Self> {
        BaryPoint::new(a, b, c)
    }
}

impl From<BaryPoint> for [Scalar; 3] {
    fn from(p: BaryPoint) -> Self {
        [p.alpha, p.beta, p.gamma]
    }
}

impl fmt::Display for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}, {}", self.alpha, self.beta, self.gamma)
    }
}

impl fmt::Debug for BaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A line `l·x + m·y + n·z = 0` in homogeneous barycentric coordinates.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaryLine {
    l: Scalar,
    m: Scalar,
    n: Scalar,
}

impl BaryLine {
    pub fn new(l: Scalar, m: Scalar, n: Scalar) -> Result<Self> {
        if l.is_zero() && m.is_zero() && n.is_zero() {
            return Err(GeomError::ZeroLine);
        }
        Ok(BaryLine { l, m, n })
    }

    pub fn coeffs(&self) -> [&Scalar; 3] {
        [&self.l, &self.m, &self.n]
    }

    /// Value of `l·x + m·y + n·z`; zero exactly when the point is on the line.
    pub fn incidence(&self, p: &BaryPoint) -> Scalar {
        &self.l * p.alpha() + &self.m * p.beta() + &self.n * p.gamma()
    }

    pub fn contains(&self, p: &BaryPoint) -> bool {
        self.incidence(p).is_zero()
    }

    pub fn projectively_eq(&self, other: &BaryLine) -> bool {
        cross(self.coeffs(), other.coeffs()).iter().all(Scalar::is_zero)
    }
}

impl fmt::Debug for BaryLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.l, self.m, self.n)
    }
}

fn cross(u: [&Scalar; 3], v: [&Scalar; 3]) -> [Scalar; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

pub fn line_through(p: &BaryPoint, q: &BaryPoint) -> Result<BaryLine> {
    let [l, m, n] = cross(p.coords(), q.coords());
    BaryLine::new(l, m, n).map_err(|_| GeomError::CoincidentPoints)
}

/// Common point of two lines. Parallel lines meet at a point at infinity,
/// which is returned as is.
pub fn intersect(l1: &BaryLine, l2: &BaryLine) -> Result<BaryPoint> {
    let [x, y, z] = cross(l1.coeffs(), l2.coeffs());
    BaryPoint::new(x, y, z).map_err(|_| GeomError::CoincidentLines)
}

pub fn determinant(p: &BaryPoint, q: &BaryPoint, r: &BaryPoint) -> Scalar {
    let [x, y, z] = cross(q.coords(), r.coords());
    p.alpha() * &x + p.beta() * &y + p.gamma() * &z
}

pub fn collinear(p: &BaryPoint, q: &BaryPoint, r: &BaryPoint) -> bool {
    determinant(p, q, r).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            BaryPoint::from_ints(2, 2, 2).normalize().unwrap(),
            BaryPoint::from_ratios([(1, 3), (1, 3), (1, 3)])
        );
        assert_eq!(
            BaryPoint::from_ints(288, 288, 0).normalize().unwrap(),
            BaryPoint::from_ratios([(1, 2), (1, 2), (0, 1)])
        );
        assert_eq!(BaryPoint::from_ints(1, -1, 0).normalize(), Err(GeomError::PointAtInfinity));
    }

    #[test]
    fn zero_point_rejected() {
        assert_eq!(BaryPoint::new(Scalar::zero(), Scalar::zero(), Scalar::zero()), Err(GeomError::ZeroPoint));
    }

    #[test]
    fn line_through_examples() {
        let a = BaryPoint::vertex_a();
        let a2 = BaryPoint::from_ratios([(-1, 2), (1, 2), (1, 1)]);
        let l = line_through(&a, &a2).unwrap();
        assert!(l.contains(&a) && l.contains(&a2));

        let ab = line_through(&a, &BaryPoint::vertex_b()).unwrap();
        assert!(ab.projectively_eq(&BaryLine::new(0.into(), 0.into(), 1.into()).unwrap()));

        assert_eq!(line_through(&a, &BaryPoint::from_ints(2, 0, 0)), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn intersect_examples() {
        let x0 = BaryLine::new(1.into(), 0.into(), 0.into()).unwrap();
        let y0 = BaryLine::new(0.into(), 1.into(), 0.into()).unwrap();
        assert!(intersect(&x0, &y0).unwrap().projectively_eq(&BaryPoint::vertex_c()));
        assert_eq!(intersect(&x0, &x0.clone()), Err(GeomError::CoincidentLines));

        // Two parallel cevians from A and B meet at infinity.
        let from_a = line_through(&BaryPoint::vertex_a(), &BaryPoint::from_ints(0, 1, 1)).unwrap();
        let dir = BaryPoint::from_ints(-2, 1, 1);
        let from_b = line_through(&BaryPoint::vertex_b(), &{
            // B + direction of the median from A
            BaryPoint::new(s(-2, 1), s(2, 1), s(1, 1)).unwrap()
        })
        .unwrap();
        let meet = intersect(&from_a, &from_b).unwrap();
        assert!(meet.is_at_infinity());
        assert!(meet.projectively_eq(&dir));
    }

    #[test]
    fn collinear_examples() {
        let o = BaryPoint::from_ratios([(1, 2), (1, 2), (0, 1)]);
        let g = BaryPoint::from_ratios([(1, 3), (1, 3), (1, 3)]);
        assert!(collinear(&o, &g, &BaryPoint::vertex_c()));
        assert!(!collinear(&BaryPoint::vertex_a(), &BaryPoint::vertex_b(), &BaryPoint::vertex_c()));
        assert!(collinear(&o, &o, &g));
    }

    fn arb_point() -> impl Strategy<Value = BaryPoint> {
        (-50i64..50, -50i64..50, -50i64..50, 1i64..9)
            .prop_filter("nonzero", |(a, b, c, _)| (a, b, c) != (&0, &0, &0))
            .prop_map(|(a, b, c, d)| BaryPoint::new(s(a, d), s(b, d + 1), s(c, 1)).unwrap())
    }

    proptest! {
        #[test]
        fn normalize_idempotent_and_scale_invariant(p in arb_point(), tn in -20i64..20, td in 1i64..20) {
            prop_assume!(tn != 0 && !p.is_at_infinity());
            let n = p.normalize().unwrap();
            prop_assert!(n.is_normalized());
            prop_assert!(n.projectively_eq(&p));
            prop_assert_eq!(n.normalize().unwrap(), n.clone());
            let scaled = p.scale(&s(tn, td)).unwrap();
            prop_assert_eq!(scaled.normalize().unwrap(), n);
        }

        #[test]
        fn two_lines_through_a_point_meet_there(p in arb_point(), q in arb_point(), r in arb_point()) {
            prop_assume!(!collinear(&p, &q, &r));
            let meet = intersect(&line_through(&p, &q).unwrap(), &line_through(&p, &r).unwrap()).unwrap();
            prop_assert!(meet.projectively_eq(&p));
        }
    }
}
