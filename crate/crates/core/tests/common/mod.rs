#![allow(dead_code)]

use barycev_core::{BaryPoint, Scalar, Triangle};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn s(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

/// Ravi substitution: a = v + w, b = w + u, c = u + v.
pub fn ravi(u: Scalar, v: Scalar, w: Scalar) -> Triangle {
    Triangle::new(&v + &w, &w + &u, &u + &v).unwrap()
}

pub fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Scalar {
    s(rng.gen_range(lo..=hi), rng.gen_range(1..=max_den))
}

pub fn random_scalene(rng: &mut ChaCha8Rng) -> Triangle {
    loop {
        let t = ravi(random_rational(rng, 1, 40, 7), random_rational(rng, 1, 40, 7), random_rational(rng, 1, 40, 7));
        if t.is_scalene() {
            return t;
        }
    }
}

/// Normalized point with α, β in [−2, 2].
pub fn random_point(rng: &mut ChaCha8Rng) -> BaryPoint {
    let a = random_rational(rng, -40, 40, 20);
    let b = random_rational(rng, -40, 40, 20);
    let g = Scalar::one() - &a - &b;
    BaryPoint::new(a, b, g).unwrap()
}

/// A triangle with rational height: two rational right triangles of height 1
/// glued along the altitude from A. `t`, `u` parametrize the unit circle.
pub fn embeddable(t: Scalar, u: Scalar) -> Option<Triangle> {
    let leg = |t: &Scalar| (Scalar::one() - t.square()).checked_div(&(Scalar::from(2) * t)).unwrap();
    let hyp = |t: &Scalar| (Scalar::one() + t.square()).checked_div(&(Scalar::from(2) * t)).unwrap();
    let (x1, c) = (leg(&t), hyp(&t));
    let (x2, b) = (leg(&u), hyp(&u));
    Triangle::new(&x1 + &x2, b, c).ok()
}

pub fn arb_triangle() -> impl Strategy<Value = Triangle> {
    (1i64..50, 1i64..50, 1i64..50, 1i64..6, 1i64..6)
        .prop_map(|(u, v, w, d1, d2)| ravi(s(u, d1), s(v, d2), Scalar::from(w)))
}

pub fn arb_point() -> impl Strategy<Value = BaryPoint> {
    (-60i64..60, 1i64..25, -60i64..60, 1i64..25).prop_map(|(an, ad, bn, bd)| {
        let (a, b) = (s(an, ad), s(bn, bd));
        let g = Scalar::one() - &a - &b;
        BaryPoint::new(a, b, g).unwrap()
    })
}

pub fn arb_k() -> impl Strategy<Value = Scalar> {
    (-30i64..30, 1i64..10).prop_filter("k != 0", |(n, _)| *n != 0).prop_map(|(n, d)| s(n, d))
}

pub fn arb_embeddable() -> impl Strategy<Value = Triangle> {
    (1i64..12, 2i64..13, 1i64..30, 2i64..13)
        .prop_filter_map("valid", |(tn, td, un, ud)| embeddable(s(tn, td), s(un, ud)))
}

/// Float foot of the perpendicular from `p` onto the line through `a`, `b`.
pub fn foot_f64(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    let d = [b[0] - a[0], b[1] - a[1]];
    let t = ((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]) / (d[0] * d[0] + d[1] * d[1]);
    [a[0] + t * d[0], a[1] + t * d[1]]
}

/// Float intersection of lines p1p2 and q1q2.
pub fn line_meet_f64(p1: [f64; 2], p2: [f64; 2], q1: [f64; 2], q2: [f64; 2]) -> [f64; 2] {
    let d1 = [p2[0] - p1[0], p2[1] - p1[1]];
    let d2 = [q2[0] - q1[0], q2[1] - q1[1]];
    let den = d1[0] * d2[1] - d1[1] * d2[0];
    let w = [q1[0] - p1[0], q1[1] - p1[1]];
    let u = (w[0] * d2[1] - w[1] * d2[0]) / den;
    [p1[0] + u * d1[0], p1[1] + u * d1[1]]
}
