//! Algebraic invariants of the pedal coefficients and the concurrence conditions.

mod common;

use barycev_core::*;
use common::*;
use proptest::prelude::*;

const ROOT_CENTERS: [CenterKind; 6] = [
    CenterKind::Incenter,
    CenterKind::Circumcenter,
    CenterKind::Orthocenter,
    CenterKind::ExcenterA,
    CenterKind::ExcenterB,
    CenterKind::ExcenterC,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dual_path_conditions_agree(t in arb_triangle(), p in arb_point()) {
        prop_assert_eq!(condition_values(&t, &p).unwrap(), condition_values_via_coefficients(&t, &p).unwrap());
    }

    #[test]
    fn coefficient_identities(t in arb_triangle(), p in arb_point()) {
        let co = coefficients(&t, &p).unwrap();
        prop_assert_eq!(&co.m + &co.n, p.alpha().clone());
        prop_assert_eq!(&co.p + &co.q, p.beta().clone());
        prop_assert_eq!(&co.r + &co.s, p.gamma().clone());
        prop_assert_eq!(&co.m * &co.p * &co.r, &co.n * &co.q * &co.s);
        if !(co.q.is_zero() || co.s.is_zero() || co.n.is_zero()) {
            let prod = co.m.checked_div(&co.q).unwrap() * co.p.checked_div(&co.s).unwrap() * co.r.checked_div(&co.n).unwrap();
            prop_assert!(prod.is_one() || co.m.is_zero() || co.p.is_zero() || co.r.is_zero());
        }
        // Trigonometric forms, e.g. m = (α/a)·b·cosC and s = (γ/c)·b·cosA.
        let over = |x: &Scalar, side: &Scalar| x.checked_div(side).unwrap();
        prop_assert_eq!(&co.m, &(over(p.alpha(), t.a()) * t.b() * t.cos_c()));
        prop_assert_eq!(&co.n, &(over(p.alpha(), t.a()) * t.c() * t.cos_b()));
        prop_assert_eq!(&co.p, &(over(p.beta(), t.b()) * t.c() * t.cos_a()));
        prop_assert_eq!(&co.q, &(over(p.beta(), t.b()) * t.a() * t.cos_c()));
        prop_assert_eq!(&co.r, &(over(p.gamma(), t.c()) * t.a() * t.cos_b()));
        prop_assert_eq!(&co.s, &(over(p.gamma(), t.c()) * t.b() * t.cos_a()));
    }

    #[test]
    fn conditions_are_cubic_forms(t in arb_triangle(), p in arb_point(), tn in -9i64..9, td in 1i64..9) {
        prop_assume!(tn != 0);
        let scale = s(tn, td);
        let base = condition_forms(&t, &p);
        let scaled = condition_forms(&t, &p.scale(&scale).unwrap());
        let cube = scale.square() * &scale;
        prop_assert_eq!(scaled.cond1, &base.cond1 * &cube);
        prop_assert_eq!(scaled.cond2, &base.cond2 * &cube);
    }

    #[test]
    fn residual_is_the_cross_multiplied_ceva_difference(t in arb_triangle(), p in arb_point(), k in arb_k()) {
        let sp = scale_pedal(&t, &p, &k).unwrap();
        let [q1, q2, q3] = sp.points();
        let diff = q1.beta() * q2.gamma() * q3.alpha() - q1.gamma() * q2.alpha() * q3.beta();
        prop_assert_eq!(relation_residual(&t, &p, &k).unwrap(), diff);
        let br = relation_brackets(&t, &p).unwrap();
        prop_assert!(br.cubic.is_zero());
        let cond = condition_values(&t, &p).unwrap();
        prop_assert_eq!(br.linear, cond.cond1);
        prop_assert_eq!(br.quadratic, -(t.a() * t.b() * t.c() * &cond.cond2));
    }

    #[test]
    fn named_roots_concur_for_all_k(t in arb_triangle(), which in 0usize..6, k in arb_k()) {
        let p = center(&t, ROOT_CENTERS[which]);
        prop_assert!(condition_values(&t, &p).unwrap().both_zero());
        prop_assert!(relation_residual(&t, &p, &k).unwrap().is_zero());
        // Right triangles put H on a vertex, where the pedal cevians degenerate.
        match concurrence_conditions_hold(&t, &p) {
            Ok(holds) => prop_assert!(holds),
            Err(GeomError::DegenerateCevian { .. }) => prop_assert_eq!(ROOT_CENTERS[which], CenterKind::Orthocenter),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
        match scaled_concurrence(&t, &p, &k) {
            Ok(r) => prop_assert!(r.concurrent && r.ceva_product.is_one()),
            Err(GeomError::DegenerateCevian { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn conditions_check_is_invariant_under_rescaling(t in arb_triangle(), p in arb_point(), tn in 1i64..9) {
        let rescaled = p.scale(&s(tn, 3)).unwrap().normalize().unwrap();
        prop_assert_eq!(concurrence_conditions_hold(&t, &p), concurrence_conditions_hold(&t, &rescaled));
    }

    #[test]
    fn pedal_ceva_equals_one_where_pedal_cevians_concur(t in arb_triangle(), which in 0usize..6) {
        let p = center(&t, ROOT_CENTERS[which]);
        let feet = pedal_triangle(&t, &p).unwrap();
        let co = coefficients(&t, &p).unwrap();
        if let Ok(prod) = ceva_product(&feet.foot_bc, &feet.foot_ca, &feet.foot_ab) {
            prop_assert!(prod.is_one());
            // (M + β)/(N + γ) · (P + γ)/(Q + α) · (R + α)/(S + β) = 1
            let f = |x: Scalar, y: Scalar| x.checked_div(&y).unwrap();
            let expanded = f(&co.m + p.beta(), &co.n + p.gamma())
                * f(&co.p + p.gamma(), &co.q + p.alpha())
                * f(&co.r + p.alpha(), &co.s + p.beta());
            prop_assert!(expanded.is_one());
        }
    }

    #[test]
    fn franke_points_lie_on_the_euler_line(t in arb_triangle(), k in arb_k()) {
        prop_assume!(!t.is_equilateral());
        if let Ok(x) = franke_point(&t, &k) {
            prop_assert!(euler_line_contains(&t, &x).unwrap());
        }
    }

    #[test]
    fn kariya_at_one_is_gergonne(t in arb_triangle()) {
        let p = t.semiperimeter();
        let inv = |side: &Scalar| (p - side).recip().unwrap();
        let gergonne = BaryPoint::new(inv(t.a()), inv(t.b()), inv(t.c())).unwrap().normalize().unwrap();
        prop_assert_eq!(kariya_point(&t, &Scalar::one()).unwrap(), gergonne);
    }
}
