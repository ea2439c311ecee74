//! Ceva-type concurrence of cevians and the two cubic conditions under which
//! the cevians through the k-scaled pedal points concur for every k.

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::pedal::{coefficients, scale_pedal, scaled_points, Coefficients};
use crate::point::{intersect, line_through, BaryPoint};
use crate::scalar::Scalar;
use crate::triangle::Triangle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConcurrenceReport {
    pub ceva_product: Scalar,
    pub concurrent: bool,
    /// Common point, normalized when finite. Present iff `concurrent`.
    pub point: Option<BaryPoint>,
    /// Some cevian runs along a side of the triangle.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionValues {
    pub cond1: Scalar,
    pub cond2: Scalar,
}

impl ConditionValues {
    pub fn both_zero(&self) -> bool {
        self.cond1.is_zero() && self.cond2.is_zero()
    }
}

/// `(b1/c1)(c2/a2)(a3/b3)` for cevians AQ1, BQ2, CQ3.
pub fn ceva_product(q1: &BaryPoint, q2: &BaryPoint, q3: &BaryPoint) -> Result<Scalar> {
    let (num, den) = ceva_terms(q1, q2, q3)?;
    num.checked_div(&den)
}

fn ceva_terms(q1: &BaryPoint, q2: &BaryPoint, q3: &BaryPoint) -> Result<(Scalar, Scalar)> {
    for (vertex, d) in [('A', q1.gamma()), ('B', q2.alpha()), ('C', q3.beta())] {
        if d.is_zero() {
            return Err(GeomError::DegenerateCevian { vertex });
        }
    }
    Ok((q1.beta() * q2.gamma() * q3.alpha(), q1.gamma() * q2.alpha() * q3.beta()))
}

pub fn cevian_intersection(q1: &BaryPoint, q2: &BaryPoint, q3: &BaryPoint) -> Result<ConcurrenceReport> {
    let product = ceva_product(q1, q2, q3)?;
    let degenerate = q1.beta().is_zero() || q2.gamma().is_zero() || q3.alpha().is_zero();
    let not_concurrent = |ceva_product| ConcurrenceReport { ceva_product, concurrent: false, point: None, degenerate };
    if degenerate || !product.is_one() {
        return Ok(not_concurrent(product));
    }
    let from_a = line_through(&BaryPoint::vertex_a(), q1)?;
    let from_b = line_through(&BaryPoint::vertex_b(), q2)?;
    let from_c = line_through(&BaryPoint::vertex_c(), q3)?;
    let meet = intersect(&from_a, &from_b)?;
    if !from_c.contains(&meet) {
        return Ok(not_concurrent(product));
    }
    Ok(ConcurrenceReport { ceva_product: product, concurrent: true, point: Some(meet.normalize_or_keep()), degenerate })
}

/// The two cubic forms evaluated on any homogeneous triple.
///
/// ```text
/// cond1 = αβc(β/b·cosA − α/a·cosB) + βγa(γ/c·cosB − β/b·cosC) + γαb(α/a·cosC − γ/c·cosA)
/// cond2 = α²/a²·cosA(γ/c·cosB − β/b·cosC) + β²/b²·cosB(α/a·cosC − γ/c·cosA)
///       + γ²/c²·cosC(β/b·cosA − α/a·cosB)
/// ```
pub fn condition_forms(t: &Triangle, point: &BaryPoint) -> ConditionValues {
    let [a, b, c] = t.sides();
    let (cos_a, cos_b, cos_c) = (t.cos_a(), t.cos_b(), t.cos_c());
    let [alpha, beta, gamma] = point.coords();
    let div = |x: &Scalar, y: &Scalar| x.checked_div(y).expect("positive side length");
    let (x, y, z) = (div(alpha, a), div(beta, b), div(gamma, c));

    let cond1 = alpha * beta * c * (&y * cos_a - &x * cos_b)
        + beta * gamma * a * (&z * cos_b - &y * cos_c)
        + gamma * alpha * b * (&x * cos_c - &z * cos_a);
    let cond2 = x.square() * cos_a * (&z * cos_b - &y * cos_c)
        + y.square() * cos_b * (&x * cos_c - &z * cos_a)
        + z.square() * cos_c * (&y * cos_a - &x * cos_b);
    ConditionValues { cond1, cond2 }
}

pub fn condition_values(t: &Triangle, point: &BaryPoint) -> Result<ConditionValues> {
    point.require_normalized()?;
    Ok(condition_forms(t, point))
}

/// Second route to the conditions, through the coefficient differences
/// `αβ(p − n) + βγ(r − q) + γα(m − s)` and
/// `[α(ns − mp) + β(nq − pr) + γ(qs − rm)] / abc`.
pub fn condition_values_via_coefficients(t: &Triangle, point: &BaryPoint) -> Result<ConditionValues> {
    let co = coefficients(t, point)?;
    Ok(conditions_from_coefficients(t, point, &co))
}

fn conditions_from_coefficients(t: &Triangle, point: &BaryPoint, co: &Coefficients) -> ConditionValues {
    let [alpha, beta, gamma] = point.coords();
    let Coefficients { m, n, p, q, r, s } = co;
    let cond1 = alpha * beta * (p - n) + beta * gamma * (r - q) + gamma * alpha * (m - s);
    let numer = alpha * (n * s - m * p) + beta * (n * q - p * r) + gamma * (q * s - r * m);
    let abc = t.a() * t.b() * t.c();
    ConditionValues { cond1, cond2: numer.checked_div(&abc).expect("positive side lengths") }
}

/// Coefficients of the cross-multiplied Ceva relation for the scaled
/// cevians, as a polynomial in k:
/// `(β + kM)(γ + kP)(α + kR) − (γ + kN)(α + kQ)(β + kS) = k·linear + k²·quadratic + k³·cubic`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationBrackets {
    /// `(αβP + βγR + γαM) − (αβN + βγQ + γαS)`, equal to cond1.
    pub linear: Scalar,
    /// `(αMP + βPR + γRM) − (αNS + βNQ + γQS)`, equal to −abc·cond2.
    pub quadratic: Scalar,
    /// `MPR − NQS`, identically zero.
    pub cubic: Scalar,
}

impl RelationBrackets {
    pub fn at(&self, k: &Scalar) -> Scalar {
        let k2 = k.square();
        k * &self.linear + &k2 * &self.quadratic + &k2 * k * &self.cubic
    }
}

pub fn relation_brackets(t: &Triangle, point: &BaryPoint) -> Result<RelationBrackets> {
    let co = coefficients(t, point)?;
    Ok(brackets_from(point, &co))
}

fn brackets_from(point: &BaryPoint, co: &Coefficients) -> RelationBrackets {
    let [alpha, beta, gamma] = point.coords();
    let Coefficients { m, n, p, q, r, s } = co;
    let ab = alpha * beta;
    let bg = beta * gamma;
    let ga = gamma * alpha;
    RelationBrackets {
        linear: (&ab * p + &bg * r + &ga * m) - (&ab * n + &bg * q + &ga * s),
        quadratic: (alpha * m * p + beta * p * r + gamma * r * m) - (alpha * n * s + beta * n * q + gamma * q * s),
        cubic: m * p * r - n * q * s,
    }
}

/// Left side minus right side of the Ceva relation for the cevians through
/// the k-scaled pedal points, after cross-multiplication. Zero exactly when
/// the cevians satisfy the Ceva criterion at this k.
pub fn relation_residual(t: &Triangle, point: &BaryPoint, k: &Scalar) -> Result<Scalar> {
    if k.is_zero() {
        return Err(GeomError::ZeroK);
    }
    Ok(relation_brackets(t, point)?.at(k))
}

/// Whether the cevians through the k-scaled pedal points concur for every k.
///
/// Requires the pedal cevians (k = 1) to concur, and then checks that both
/// cubic conditions vanish exactly.
pub fn concurrence_conditions_hold(t: &Triangle, point: &BaryPoint) -> Result<bool> {
    let co = coefficients(t, point)?;
    let feet = scaled_points(point, &co, &Scalar::one());
    if !ceva_product(&feet[0], &feet[1], &feet[2])?.is_one() {
        return Err(GeomError::PedalCeviansNotConcurrent);
    }
    Ok(conditions_from_coefficients(t, point, &co).both_zero())
}

/// The concurrence report for the cevians through `scale_pedal(t, point, k)`.
pub fn scaled_concurrence(t: &Triangle, point: &BaryPoint, k: &Scalar) -> Result<ConcurrenceReport> {
    let sp = scale_pedal(t, point, k)?;
    cevian_intersection(&sp.a_double, &sp.b_double, &sp.c_double)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centers::{center, CenterKind};

    fn tri345() -> Triangle {
        Triangle::from_ints(3, 4, 5).unwrap()
    }

    fn pt(c: [(i64, i64); 3]) -> BaryPoint {
        BaryPoint::from_ratios(c)
    }

    #[test]
    fn ceva_examples() {
        let medians = [pt([(0, 1), (1, 1), (1, 1)]), pt([(1, 1), (0, 1), (1, 1)]), pt([(1, 1), (1, 1), (0, 1)])];
        assert_eq!(ceva_product(&medians[0], &medians[1], &medians[2]).unwrap(), Scalar::one());
        let q1 = pt([(0, 1), (1, 1), (2, 1)]);
        assert_eq!(ceva_product(&q1, &medians[1], &medians[2]).unwrap(), Scalar::ratio(1, 2));
        let touch = [pt([(0, 1), (1, 3), (2, 3)]), pt([(1, 4), (0, 1), (3, 4)]), pt([(2, 5), (3, 5), (0, 1)])];
        assert_eq!(ceva_product(&touch[0], &touch[1], &touch[2]).unwrap(), Scalar::one());
    }

    #[test]
    fn ceva_degenerate_denominator() {
        let on_ab = pt([(1, 2), (1, 2), (0, 1)]);
        let m = pt([(1, 1), (0, 1), (1, 1)]);
        assert_eq!(ceva_product(&on_ab, &m, &m), Err(GeomError::DegenerateCevian { vertex: 'A' }));
    }

    #[test]
    fn gergonne_and_centroid() {
        let touch = [pt([(0, 1), (1, 3), (2, 3)]), pt([(1, 4), (0, 1), (3, 4)]), pt([(2, 5), (3, 5), (0, 1)])];
        let rep = cevian_intersection(&touch[0], &touch[1], &touch[2]).unwrap();
        assert!(rep.concurrent && !rep.degenerate);
        assert_eq!(rep.point, Some(pt([(2, 11), (3, 11), (6, 11)])));

        let mids = [pt([(0, 1), (1, 2), (1, 2)]), pt([(1, 2), (0, 1), (1, 2)]), pt([(1, 2), (1, 2), (0, 1)])];
        let rep = cevian_intersection(&mids[0], &mids[1], &mids[2]).unwrap();
        assert_eq!(rep.point, Some(pt([(1, 3), (1, 3), (1, 3)])));
    }

    #[test]
    fn franke_k2_on_345() {
        let o = pt([(1, 2), (1, 2), (0, 1)]);
        let rep = scaled_concurrence(&tri345(), &o, &2.into()).unwrap();
        assert!(rep.concurrent);
        assert_eq!(rep.point, Some(pt([(1, 4), (1, 4), (1, 2)])));
    }

    #[test]
    fn non_concurrent_report_has_no_point() {
        let q1 = pt([(0, 1), (1, 1), (2, 1)]);
        let m = [pt([(1, 1), (0, 1), (1, 1)]), pt([(1, 1), (1, 1), (0, 1)])];
        let rep = cevian_intersection(&q1, &m[0], &m[1]).unwrap();
        assert!(!rep.concurrent && rep.point.is_none());
    }

    #[test]
    fn side_cevian_is_degenerate() {
        // Q1 on CA: the cevian from A is the side AC itself.
        let q1 = pt([(1, 2), (0, 1), (1, 2)]);
        let m = [pt([(1, 1), (0, 1), (1, 1)]), pt([(1, 1), (1, 1), (0, 1)])];
        let rep = cevian_intersection(&q1, &m[0], &m[1]).unwrap();
        assert!(rep.degenerate && !rep.concurrent && rep.point.is_none());
        assert!(rep.ceva_product.is_zero());
    }

    #[test]
    fn conditions_vanish_at_incenter_and_circumcenter() {
        let t = tri345();
        for p in [pt([(1, 4), (1, 3), (5, 12)]), pt([(1, 2), (1, 2), (0, 1)])] {
            assert!(condition_values(&t, &p).unwrap().both_zero());
            assert!(condition_values_via_coefficients(&t, &p).unwrap().both_zero());
        }
    }

    #[test]
    fn conditions_at_generic_point() {
        let t = tri345();
        let p = pt([(1, 2), (1, 4), (1, 4)]);
        let direct = condition_values(&t, &p).unwrap();
        assert_eq!(direct.cond1, Scalar::ratio(-73, 1600));
        assert!(!direct.cond2.is_zero());
        assert_eq!(condition_values_via_coefficients(&t, &p).unwrap(), direct);
    }

    #[test]
    fn equilateral_centroid_conditions() {
        let t = Triangle::from_ints(1, 1, 1).unwrap();
        let g = pt([(1, 3), (1, 3), (1, 3)]);
        assert!(condition_values_via_coefficients(&t, &g).unwrap().both_zero());
    }

    #[test]
    fn residual_examples() {
        let t = tri345();
        let i = pt([(1, 4), (1, 3), (5, 12)]);
        assert!(relation_residual(&t, &i, &Scalar::ratio(7, 3)).unwrap().is_zero());
        assert_eq!(relation_residual(&t, &i, &Scalar::zero()), Err(GeomError::ZeroK));

        let p = pt([(1, 2), (1, 4), (1, 4)]);
        let br = relation_brackets(&t, &p).unwrap();
        assert!(br.cubic.is_zero());
        assert_eq!(br.linear, Scalar::ratio(-73, 1600));
        let cond = condition_values(&t, &p).unwrap();
        assert_eq!(br.quadratic, -(t.a() * t.b() * t.c() * &cond.cond2));
        let r1 = relation_residual(&t, &p, &1.into()).unwrap();
        assert!(!r1.is_zero());
        assert_eq!(r1, &br.linear + &br.quadratic);
    }

    #[test]
    fn residual_matches_cross_multiplied_ceva() {
        let t = Triangle::from_ints(5, 7, 9).unwrap();
        let p = pt([(2, 9), (4, 9), (1, 3)]);
        for k in [Scalar::ratio(-3, 2), Scalar::ratio(1, 3), Scalar::from(4)] {
            let sp = scale_pedal(&t, &p, &k).unwrap();
            let [q1, q2, q3] = sp.points();
            let diff = q1.beta() * q2.gamma() * q3.alpha() - q1.gamma() * q2.alpha() * q3.beta();
            assert_eq!(relation_residual(&t, &p, &k).unwrap(), diff);
        }
    }

    #[test]
    fn concurrence_conditions_examples() {
        let t = tri345();
        assert!(concurrence_conditions_hold(&t, &pt([(1, 4), (1, 3), (5, 12)])).unwrap());
        assert!(concurrence_conditions_hold(&t, &pt([(1, 2), (1, 2), (0, 1)])).unwrap());
        assert_eq!(
            concurrence_conditions_hold(&t, &pt([(1, 2), (1, 4), (1, 4)])),
            Err(GeomError::PedalCeviansNotConcurrent)
        );
    }

    #[test]
    fn orthocenter_satisfies_both_conditions() {
        // Scaled feet of H stay on the altitudes, so the cevians are the
        // altitudes themselves for every k.
        let t = Triangle::from_ints(5, 6, 7).unwrap();
        let h = center(&t, CenterKind::Orthocenter);
        assert_eq!(concurrence_conditions_hold(&t, &h), Ok(true));
        for k in [Scalar::from(-3), Scalar::ratio(2, 5), Scalar::from(4)] {
            assert_eq!(scaled_concurrence(&t, &h, &k).unwrap().point, Some(h.clone()));
        }
    }

    #[test]
    fn de_longchamps_premise_holds_but_conditions_fail() {
        // L = 2O − H lies on the cubic where the pedal cevians concur, but
        // not on the common zero set of both conditions.
        let t = Triangle::from_ints(5, 6, 7).unwrap();
        let o = center(&t, CenterKind::Circumcenter);
        let h = center(&t, CenterKind::Orthocenter);
        let two = Scalar::from(2);
        let l = BaryPoint::new(&two * o.alpha() - h.alpha(), &two * o.beta() - h.beta(), &two * o.gamma() - h.gamma())
            .unwrap();
        assert_eq!(concurrence_conditions_hold(&t, &l), Ok(false));
        assert!(scaled_concurrence(&t, &l, &1.into()).unwrap().concurrent);
        assert!(!scaled_concurrence(&t, &l, &2.into()).unwrap().concurrent);
        assert!(!relation_residual(&t, &l, &2.into()).unwrap().is_zero());
    }
}
