//! Named triangle centers and the concurrence points built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::concurrence::scaled_concurrence;
use crate::error::{GeomError, Result};
use crate::point::{collinear, BaryPoint};
use crate::scalar::Scalar;
use crate::triangle::Triangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterKind {
    Centroid,
    Incenter,
    Circumcenter,
    Orthocenter,
    ExcenterA,
    ExcenterB,
    ExcenterC,
}

impl CenterKind {
    pub const ALL: [CenterKind; 7] = [
        CenterKind::Centroid,
        CenterKind::Incenter,
        CenterKind::Circumcenter,
        CenterKind::Orthocenter,
        CenterKind::ExcenterA,
        CenterKind::ExcenterB,
        CenterKind::ExcenterC,
    ];

    pub const EXCENTERS: [CenterKind; 3] = [CenterKind::ExcenterA, CenterKind::ExcenterB, CenterKind::ExcenterC];

    pub fn name(self) -> &'static str {
        match self {
            CenterKind::Centroid => "centroid",
            CenterKind::Incenter => "incenter",
            CenterKind::Circumcenter => "circumcenter",
            CenterKind::Orthocenter => "orthocenter",
            CenterKind::ExcenterA => "excenter_a",
            CenterKind::ExcenterB => "excenter_b",
            CenterKind::ExcenterC => "excenter_c",
        }
    }

    pub fn is_excenter(self) -> bool {
        Self::EXCENTERS.contains(&self)
    }
}

impl fmt::Display for CenterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CenterKind {
    type Err = GeomError;
    fn from_str(s: &str) -> Result<Self> {
        CenterKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| GeomError::UnknownCenter(s.to_string()))
    }
}

fn normalized(x: Scalar, y: Scalar, z: Scalar) -> BaryPoint {
    BaryPoint::new(x, y, z).and_then(|p| p.normalize()).expect("center of a valid triangle is a finite point")
}

/// Exact normalized coordinates of a named center.
///
/// The circumcenter uses `a²(b² + c² − a²) : …`, which equals the sine form
/// `(R²/2S)·sin 2A : …` once `sin 2A = 2 sin A cos A` and `sin A = a/2R` are
/// substituted. The orthocenter uses `S_B·S_C : S_C·S_A : S_A·S_B` with
/// `S_A = (b² + c² − a²)/2`, which stays finite for right triangles.
pub fn center(t: &Triangle, kind: CenterKind) -> BaryPoint {
    let [a, b, c] = t.sides().map(Scalar::clone);
    let (a2, b2, c2) = (a.square(), b.square(), c.square());
    let s_a = &b2 + &c2 - &a2;
    let s_b = &c2 + &a2 - &b2;
    let s_c = &a2 + &b2 - &c2;
    match kind {
        CenterKind::Centroid => normalized(1.into(), 1.into(), 1.into()),
        CenterKind::Incenter => normalized(a, b, c),
        CenterKind::Circumcenter => normalized(&a2 * &s_a, &b2 * &s_b, &c2 * &s_c),
        CenterKind::Orthocenter => normalized(&s_b * &s_c, &s_c * &s_a, &s_a * &s_b),
        CenterKind::ExcenterA => normalized(-a, b, c),
        CenterKind::ExcenterB => normalized(a, -b, c),
        CenterKind::ExcenterC => normalized(a, b, -c),
    }
}

fn concurrence_point(t: &Triangle, kind: CenterKind, k: &Scalar) -> Result<BaryPoint> {
    let report = scaled_concurrence(t, &center(t, kind), k)?;
    report.point.ok_or(GeomError::NotConcurrent)
}

/// Common point of the cevians through the k-scaled pedal points of the
/// incenter. At k = 1 this is the Gergonne point.
pub fn kariya_point(t: &Triangle, k: &Scalar) -> Result<BaryPoint> {
    concurrence_point(t, CenterKind::Incenter, k)
}

/// Common point of the cevians through the k-scaled pedal points of the
/// circumcenter. `k` follows `OA'' = k·OA'`.
pub fn franke_point(t: &Triangle, k: &Scalar) -> Result<BaryPoint> {
    concurrence_point(t, CenterKind::Circumcenter, k)
}

pub fn excenter_point(t: &Triangle, which: CenterKind, k: &Scalar) -> Result<BaryPoint> {
    if !which.is_excenter() {
        return Err(GeomError::NotAnExcenter(which.name()));
    }
    concurrence_point(t, which, k)
}

/// Exact collinearity with the circumcenter and the centroid.
pub fn euler_line_contains(t: &Triangle, point: &BaryPoint) -> Result<bool> {
    let o = center(t, CenterKind::Circumcenter);
    let g = center(t, CenterKind::Centroid);
    if o.projectively_eq(&g) {
        return Err(GeomError::EquilateralEulerLineUndefined);
    }
    Ok(collinear(&o, &g, point))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartesian::{Embedded, Frame};
    use crate::concurrence::condition_values;

    fn tri345() -> Triangle {
        Triangle::from_ints(3, 4, 5).unwrap()
    }

    fn pt(c: [(i64, i64); 3]) -> BaryPoint {
        BaryPoint::from_ratios(c)
    }

    #[test]
    fn catalog_on_345() {
        let t = tri345();
        assert_eq!(center(&t, CenterKind::Incenter), pt([(1, 4), (1, 3), (5, 12)]));
        assert_eq!(center(&t, CenterKind::Circumcenter), pt([(1, 2), (1, 2), (0, 1)]));
        assert_eq!(center(&t, CenterKind::ExcenterA), pt([(-1, 2), (2, 3), (5, 6)]));
        assert_eq!(center(&t, CenterKind::ExcenterB), pt([(3, 4), (-1, 1), (5, 4)]));
        assert_eq!(center(&t, CenterKind::ExcenterC), pt([(3, 2), (2, 1), (-5, 2)]));
        assert_eq!(center(&t, CenterKind::Orthocenter), BaryPoint::vertex_c());
        assert_eq!(center(&t, CenterKind::Centroid), pt([(1, 3), (1, 3), (1, 3)]));
    }

    #[test]
    fn incenter_matches_semiperimeter_form() {
        let t = Triangle::from_ints(7, 8, 11).unwrap();
        let two_p = t.semiperimeter() * Scalar::from(2);
        let i = center(&t, CenterKind::Incenter);
        assert_eq!(i.alpha(), &t.a().checked_div(&two_p).unwrap());
        let p_minus_a = t.semiperimeter() - t.a();
        let ia = center(&t, CenterKind::ExcenterA);
        assert_eq!(ia.alpha(), &(-t.a()).checked_div(&(&p_minus_a * Scalar::from(2))).unwrap());
    }

    #[test]
    fn circumcenter_equidistant_in_cartesian_frame() {
        // 13-14-15 and 3-4-5 both embed exactly.
        for t in [Triangle::from_ints(14, 15, 13).unwrap(), tri345()] {
            let f = Frame::new(&t).unwrap();
            let emb = |q: &BaryPoint| match f.embed(q).unwrap() {
                Embedded::Exact(c) => c,
                Embedded::Approx(_) => unreachable!(),
            };
            let o = emb(&center(&t, CenterKind::Circumcenter));
            let d: Vec<Scalar> = [BaryPoint::vertex_a(), BaryPoint::vertex_b(), BaryPoint::vertex_c()]
                .iter()
                .map(|v| {
                    let r = emb(v).sub(&o);
                    r.dot(&r)
                })
                .collect();
            assert_eq!(d[0], d[1]);
            assert_eq!(d[1], d[2]);
            // R = abc / 4S, so R² = (abc)² / (16 S²).
            let area = match f.embed(&BaryPoint::vertex_a()).unwrap() {
                Embedded::Exact(a) => &a.y * t.a() * Scalar::ratio(1, 2),
                Embedded::Approx(_) => unreachable!(),
            };
            let abc = t.a() * t.b() * t.c();
            assert_eq!(d[0], abc.square().checked_div(&(Scalar::from(16) * area.square())).unwrap());
        }
    }

    #[test]
    fn kariya_examples() {
        assert_eq!(kariya_point(&tri345(), &1.into()).unwrap(), pt([(2, 11), (3, 11), (6, 11)]));
        let eq = Triangle::from_ints(1, 1, 1).unwrap();
        for k in [Scalar::from(-1), Scalar::ratio(1, 2), Scalar::from(3)] {
            assert_eq!(kariya_point(&eq, &k).unwrap(), pt([(1, 3), (1, 3), (1, 3)]));
            assert_eq!(franke_point(&eq, &k).unwrap(), pt([(1, 3), (1, 3), (1, 3)]));
        }
        // At k = -2 the scaled feet of the equilateral center are the vertices.
        assert_eq!(kariya_point(&eq, &(-2).into()), Err(GeomError::DegenerateCevian { vertex: 'A' }));
        assert!(kariya_point(&tri345(), &(-1).into()).is_ok());
        assert_eq!(kariya_point(&tri345(), &Scalar::zero()), Err(GeomError::ZeroK));
    }

    #[test]
    fn kariya_degenerates_when_a_scaled_foot_hits_a_vertex() {
        // For the 3-4-5 incenter, A'' = ((1-k)/4, 1/3, 5/12 + k/4) lies on AB at k = -5/3.
        assert_eq!(kariya_point(&tri345(), &Scalar::ratio(-5, 3)), Err(GeomError::DegenerateCevian { vertex: 'A' }));
    }

    #[test]
    fn franke_examples() {
        assert_eq!(franke_point(&tri345(), &1.into()).unwrap(), pt([(1, 3), (1, 3), (1, 3)]));
        assert_eq!(franke_point(&tri345(), &2.into()).unwrap(), pt([(1, 4), (1, 4), (1, 2)]));
    }

    #[test]
    fn excenter_examples() {
        let t = tri345();
        assert!(excenter_point(&t, CenterKind::ExcenterA, &1.into()).is_ok());
        assert!(condition_values(&t, &center(&t, CenterKind::ExcenterA)).unwrap().both_zero());
        assert!(excenter_point(&t, CenterKind::ExcenterB, &3.into()).is_ok());
        assert_eq!(excenter_point(&t, CenterKind::Incenter, &1.into()), Err(GeomError::NotAnExcenter("incenter")));

        let eq = Triangle::from_ints(1, 1, 1).unwrap();
        let p = excenter_point(&eq, CenterKind::ExcenterA, &1.into()).unwrap();
        assert_eq!(p.beta(), p.gamma());
    }

    #[test]
    fn euler_line_examples() {
        let t = tri345();
        assert!(euler_line_contains(&t, &pt([(1, 4), (1, 4), (1, 2)])).unwrap());
        assert!(euler_line_contains(&t, &BaryPoint::vertex_c()).unwrap());
        assert!(!euler_line_contains(&t, &center(&t, CenterKind::Incenter)).unwrap());
        let eq = Triangle::from_ints(2, 2, 2).unwrap();
        assert_eq!(euler_line_contains(&eq, &BaryPoint::vertex_a()), Err(GeomError::EquilateralEulerLineUndefined));
    }

    #[test]
    fn orthocenter_on_euler_line() {
        let t = Triangle::from_ints(6, 7, 9).unwrap();
        assert!(euler_line_contains(&t, &center(&t, CenterKind::Orthocenter)).unwrap());
    }

    #[test]
    fn names_round_trip() {
        for k in CenterKind::ALL {
            assert_eq!(k.name().parse::<CenterKind>().unwrap(), k);
            assert_eq!(serde_json::to_string(&k).unwrap(), format!("\"{}\"", k.name()));
        }
        assert!("nine_point".parse::<CenterKind>().is_err());
    }
}
