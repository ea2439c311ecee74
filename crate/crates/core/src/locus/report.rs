use serde::Serialize;

use super::contour::Segment;
use super::scan::ScanRegion;
use super::{Classification, LocusCandidate, BEZOUT_BOUND};
use crate::scalar::Scalar;
use crate::triangle::Triangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReportFlags {
    /// More distinct converged roots than two cubics can share.
    pub exceeds_bezout: bool,
    /// Several unknown roots on one line: the zero sets may share a curve.
    pub possibly_one_dimensional: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TriangleSides {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocusReport {
    pub schema_version: &'static str,
    pub triangle: TriangleSides,
    pub region: ScanRegion,
    /// Largest absolute grid value of each condition; residual tolerances are relative to it.
    pub scale: [f64; 2],
    pub raw_crossings: usize,
    pub flags: ReportFlags,
    pub candidates: Vec<LocusCandidate>,
    #[serde(skip)]
    pub curves: [Vec<Segment>; 2],
}

const CSV_HEADER: [&str; 7] = ["alpha", "beta", "gamma", "residual1", "residual2", "classification", "refined"];

impl LocusReport {
    pub(super) fn new(
        t: &Triangle,
        region: ScanRegion,
        scale: [f64; 2],
        raw_crossings: usize,
        candidates: Vec<LocusCandidate>,
        curves: [Vec<Segment>; 2],
    ) -> Self {
        let flags = flags_for(&candidates);
        LocusReport {
            schema_version: "1",
            triangle: TriangleSides { a: t.a().clone(), b: t.b().clone(), c: t.c().clone() },
            region,
            scale,
            raw_crossings,
            flags,
            candidates,
            curves,
        }
    }

    pub fn refined(&self) -> impl Iterator<Item = &LocusCandidate> {
        self.candidates.iter().filter(|c| c.refined)
    }

    /// Largest converged residual, each component divided by its grid scale.
    pub fn max_scaled_residual(&self) -> f64 {
        self.refined()
            .map(|c| (c.residual1.abs() / self.scale[0]).max(c.residual2.abs() / self.scale[1]))
            .fold(0.0, f64::max)
    }

    pub fn find(&self, class: Classification) -> Option<&LocusCandidate> {
        self.refined().find(|c| c.classification == class)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for c in &self.candidates {
            w.write_record([
                format!("{:e}", c.alpha),
                format!("{:e}", c.beta),
                format!("{:e}", c.gamma),
                format!("{:e}", c.residual1),
                format!("{:e}", c.residual2),
                c.classification.to_string(),
                c.refined.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

fn flags_for(candidates: &[LocusCandidate]) -> ReportFlags {
    let refined: Vec<&LocusCandidate> = candidates.iter().filter(|c| c.refined).collect();
    let unknown: Vec<[f64; 2]> =
        refined.iter().filter(|c| c.classification == Classification::Unknown).map(|c| [c.alpha, c.beta]).collect();
    let collinear = unknown.len() >= 4 && {
        let (p, q) = (unknown[0], unknown[1]);
        let d = [q[0] - p[0], q[1] - p[1]];
        let len = d[0].hypot(d[1]).max(f64::MIN_POSITIVE);
        unknown[2..].iter().all(|r| ((r[0] - p[0]) * d[1] - (r[1] - p[1]) * d[0]).abs() / len < 1e-6)
    };
    ReportFlags {
        exceeds_bezout: refined.len() > BEZOUT_BOUND,
        possibly_one_dimensional: collinear || refined.len() > BEZOUT_BOUND,
    }
}
