use std::fmt;

use serde::{Serialize, Serializer};

use super::LocusCandidate;
use crate::centers::{center, CenterKind};
use crate::triangle::Triangle;

/// Distance (Euclidean, in normalized barycentrics) under which a candidate
/// is identified with a known point.
pub const MATCH_RADIUS: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    KnownCenter(CenterKind),
    /// Vertex index 0, 1, 2 for A, B, C.
    Vertex(u8),
    Unknown,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::KnownCenter(k) => f.write_str(k.name()),
            Classification::Vertex(v) => write!(f, "vertex_{}", ['a', 'b', 'c'][*v as usize]),
            Classification::Unknown => f.write_str("unknown"),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

const TARGETS: [CenterKind; 5] = [
    CenterKind::Incenter,
    CenterKind::Circumcenter,
    CenterKind::ExcenterA,
    CenterKind::ExcenterB,
    CenterKind::ExcenterC,
];

fn distance(p: [f64; 3], q: [f64; 3]) -> f64 {
    p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

pub fn classify_point(t: &Triangle, p: [f64; 3]) -> Classification {
    // Coinciding targets (I = O when equilateral) resolve in TARGETS order.
    for kind in TARGETS {
        if distance(p, center(t, kind).to_f64()) <= MATCH_RADIUS {
            return Classification::KnownCenter(kind);
        }
    }
    for v in 0..3u8 {
        let mut vertex = [0.0; 3];
        vertex[v as usize] = 1.0;
        if distance(p, vertex) <= MATCH_RADIUS {
            return Classification::Vertex(v);
        }
    }
    // Checked after the vertices: H is the right-angle vertex of a right triangle.
    if distance(p, center(t, CenterKind::Orthocenter).to_f64()) <= MATCH_RADIUS {
        return Classification::KnownCenter(CenterKind::Orthocenter);
    }
    Classification::Unknown
}

pub fn classify_candidates(t: &Triangle, candidates: &mut [LocusCandidate]) {
    for c in candidates {
        c.classification = classify_point(t, [c.alpha, c.beta, c.gamma]);
    }
}
