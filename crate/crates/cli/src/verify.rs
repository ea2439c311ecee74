use barycev_core::{
    center, collinear, intersect, line_through, scale_pedal, scaled_concurrence, BaryPoint, CenterKind, GeomError,
    Scalar, Triangle,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: CheckStatus,
    /// Stable verdict string, e.g. "PASS (exact)".
    pub verdict: String,
    /// Configurations, as "center k=…", where a cevian ran along a side line.
    pub degenerate: Vec<String>,
    /// Configurations where a scaled foot coincides with its vertex, so
    /// the cevian is undefined.
    pub undefined: Vec<String>,
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str, status: CheckStatus, verdict: &str) -> Self {
        CheckOutcome {
            name,
            status,
            verdict: verdict.into(),
            degenerate: Vec::new(),
            undefined: Vec::new(),
            detail: None,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckOutcome { detail: Some(detail), ..Self::new(name, CheckStatus::Fail, "FAIL") }
    }
}

enum Concurrence {
    Point(BaryPoint),
    /// Concurrent, with a cevian along a side line.
    Degenerate(BaryPoint),
    /// Some cevian is undefined.
    Undefined,
}

/// Concurrence of the scaled-pedal cevians at `p`. A cevian along a side
/// line has no finite Ceva ratio; there the cross-multiplied product and a
/// direct three-line intersection decide.
fn concur(t: &Triangle, p: &BaryPoint, k: &Scalar) -> Result<Concurrence, String> {
    let sp = scale_pedal(t, p, k).map_err(|e| e.to_string())?;
    let [q1, q2, q3] = sp.points();
    let vertices = [BaryPoint::vertex_a(), BaryPoint::vertex_b(), BaryPoint::vertex_c()];
    if [q1, q2, q3].iter().zip(&vertices).any(|(q, v)| q.projectively_eq(v)) {
        return Ok(Concurrence::Undefined);
    }
    match scaled_concurrence(t, p, k) {
        Ok(r) if r.concurrent && r.ceva_product.is_one() => {
            r.point.map(Concurrence::Point).ok_or_else(|| "no point".into())
        }
        Ok(r) => Err(format!("ceva product {}", r.ceva_product)),
        Err(GeomError::DegenerateCevian { .. }) => {
            if q1.beta() * q2.gamma() * q3.alpha() != q1.gamma() * q2.alpha() * q3.beta() {
                return Err("cross-multiplied ceva product differs".into());
            }
            let meet = (|| {
                let a = line_through(&BaryPoint::vertex_a(), q1)?;
                let b = line_through(&BaryPoint::vertex_b(), q2)?;
                let c = line_through(&BaryPoint::vertex_c(), q3)?;
                let x = intersect(&a, &b)?;
                Ok::<_, GeomError>(c.contains(&x).then(|| x.normalize_or_keep()))
            })()
            .map_err(|e| e.to_string())?;
            meet.map(Concurrence::Degenerate).ok_or_else(|| "not concurrent".into())
        }
        Err(e) => Err(e.to_string()),
    }
}

fn concurrence_check(name: &'static str, t: &Triangle, kinds: &[CenterKind], k_set: &[Scalar]) -> CheckOutcome {
    let mut out = CheckOutcome::new(name, CheckStatus::Pass, "PASS (exact)");
    for kind in kinds {
        let p = center(t, *kind);
        for k in k_set {
            match concur(t, &p, k) {
                Ok(Concurrence::Point(_)) => {}
                Ok(Concurrence::Degenerate(_)) => out.degenerate.push(format!("{kind} k={k}")),
                Ok(Concurrence::Undefined) => out.undefined.push(format!("{kind} k={k}")),
                Err(why) => return CheckOutcome::fail(name, format!("{kind} k={k}: {why}")),
            }
        }
    }
    out
}

fn euler_check(t: &Triangle, k_set: &[Scalar]) -> CheckOutcome {
    const NAME: &str = "franke points on euler line";
    if t.is_equilateral() {
        return CheckOutcome::new(NAME, CheckStatus::Skip, "SKIP (equilateral)");
    }
    let o = center(t, CenterKind::Circumcenter);
    let g = center(t, CenterKind::Centroid);
    for k in k_set {
        let x = match concur(t, &o, k) {
            Ok(Concurrence::Point(x) | Concurrence::Degenerate(x)) => x,
            Ok(Concurrence::Undefined) => continue,
            Err(why) => return CheckOutcome::fail(NAME, format!("k={k}: {why}")),
        };
        if !collinear(&x, &o, &g) {
            return CheckOutcome::fail(NAME, format!("k={k}: {x} off the line OG"));
        }
    }
    CheckOutcome::new(NAME, CheckStatus::Pass, "PASS on k-set")
}

fn conditions_check(t: &Triangle) -> CheckOutcome {
    const NAME: &str = "conditions vanish at incenter, circumcenter, excenters";
    let kinds = [
        CenterKind::Incenter,
        CenterKind::Circumcenter,
        CenterKind::ExcenterA,
        CenterKind::ExcenterB,
        CenterKind::ExcenterC,
    ];
    for kind in kinds {
        let p = center(t, kind);
        let first = barycev_core::condition_values(t, &p);
        let second = barycev_core::condition_values_via_coefficients(t, &p);
        let detail = match (first, second) {
            (Err(e), _) | (_, Err(e)) => e.to_string(),
            (Ok(a), Ok(b)) if a != b => "evaluation paths disagree".into(),
            (Ok(a), _) if !a.both_zero() => format!("({}, {})", a.cond1, a.cond2),
            _ => continue,
        };
        return CheckOutcome::fail(NAME, format!("{kind}: {detail}"));
    }
    CheckOutcome::new(NAME, CheckStatus::Pass, "PASS (exact)")
}

/// Runs every exact suite on one triangle over `k_set`.
pub fn verify_triangle(t: &Triangle, k_set: &[Scalar]) -> Vec<CheckOutcome> {
    vec![
        concurrence_check("kariya concurrence", t, &[CenterKind::Incenter], k_set),
        concurrence_check("franke concurrence", t, &[CenterKind::Circumcenter], k_set),
        concurrence_check("excenter concurrence", t, &CenterKind::EXCENTERS, k_set),
        euler_check(t, k_set),
        conditions_check(t),
    ]
}
