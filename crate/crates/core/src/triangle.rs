//! Triangles given by their side lengths.

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::scalar::Scalar;

/// A triangle ABC with side lengths a = |BC|, b = |CA|, c = |AB|.
///
/// The semiperimeter and the three cosines are derived once, exactly,
/// from the law of cosines. No angle is ever evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triangle {
    a: Scalar,
    b: Scalar,
    c: Scalar,
    #[serde(skip)]
    p: Scalar,
    #[serde(skip)]
    cos: [Scalar; 3],
}

impl Triangle {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        if !(a.is_positive() && b.is_positive() && c.is_positive()) {
            return Err(GeomError::NonPositiveSide);
        }
        if a >= &b + &c || b >= &c + &a || c >= &a + &b {
            return Err(GeomError::TriangleInequalityViolated);
        }
        let (a2, b2, c2) = (a.square(), b.square(), c.square());
        let two = Scalar::from(2);
        let cos_a = (&b2 + &c2 - &a2).checked_div(&(&two * &b * &c))?;
        let cos_b = (&c2 + &a2 - &b2).checked_div(&(&two * &c * &a))?;
        let cos_c = (&a2 + &b2 - &c2).checked_div(&(&two * &a * &b))?;
        let p = (&a + &b + &c) * Scalar::ratio(1, 2);
        Ok(Triangle { a, b, c, p, cos: [cos_a, cos_b, cos_c] })
    }

    /// Convenience constructor from integer side lengths.
    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn sides(&self) -> [&Scalar; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Semiperimeter (a + b + c) / 2.
    pub fn semiperimeter(&self) -> &Scalar {
        &self.p
    }

    pub fn cos_a(&self) -> &Scalar {
        &self.cos[0]
    }

    pub fn cos_b(&self) -> &Scalar {
        &self.cos[1]
    }

    pub fn cos_c(&self) -> &Scalar {
        &self.cos[2]
    }

    pub fn is_equilateral(&self) -> bool {
        self.a == self.b && self.b == self.c
    }

    pub fn is_scalene(&self) -> bool {
        self.a != self.b && self.b != self.c && self.c != self.a
    }

    pub fn to_f64(&self) -> TriangleF64 {
        TriangleF64::new(self.a.to_f64(), self.b.to_f64(), self.c.to_f64())
    }
}

/// Floating-point mirror of [`Triangle`], used only by the locus explorer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleF64 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub cos_a: f64,
    pub cos_b: f64,
    pub cos_c: f64,
}

impl TriangleF64 {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        let (a2, b2, c2) = (a * a, b * b, c * c);
        TriangleF64 {
            a,
            b,
            c,
            cos_a: (b2 + c2 - a2) / (2.0 * b * c),
            cos_b: (c2 + a2 - b2) / (2.0 * c * a),
            cos_c: (a2 + b2 - c2) / (2.0 * a * b),
        }
    }
}
