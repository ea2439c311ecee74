//! Numeric exploration of the common zero set of the two concurrence
//! conditions.
//!
//! Pipeline: sample both conditions on a grid over the normalized (α, β)
//! chart, contour each zero set with marching squares, intersect the two
//! curve sets, polish every crossing with damped Newton and tag the roots
//! that coincide with known points.

mod candidates;
mod classify;
mod contour;
mod refine;
mod report;
mod scan;

pub use candidates::{dedup_points, find_crossings, segment_intersection};
pub use classify::{classify_candidates, classify_point, Classification, MATCH_RADIUS};
pub use contour::{extract_zero_curves, Condition, Segment};
pub use refine::{jacobian, refine_candidate, refine_scaled, RefineFailure, MAX_HALVINGS};
pub use report::{LocusReport, ReportFlags};
pub use scan::{condition_term_magnitudes, conditions_f64, scan_conditions, Grid, ScanRegion, MIN_RESOLUTION};

use rayon::prelude::*;
use serde::Serialize;

use crate::triangle::Triangle;

/// Bézout bound for two plane cubics.
pub const BEZOUT_BOUND: usize = 9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocusCandidate {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub residual1: f64,
    pub residual2: f64,
    pub classification: Classification,
    pub refined: bool,
    #[serde(skip)]
    pub iterations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<RefineFailure>,
}

impl LocusCandidate {
    /// An unrefined candidate at a chart position.
    pub fn at(t: &Triangle, alpha: f64, beta: f64) -> Self {
        let gamma = 1.0 - alpha - beta;
        let [residual1, residual2] = conditions_f64(&t.to_f64(), [alpha, beta, gamma]);
        LocusCandidate {
            alpha,
            beta,
            gamma,
            residual1,
            residual2,
            classification: Classification::Unknown,
            refined: false,
            iterations: 0,
            failure: None,
        }
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }
}

/// Unrefined candidates at the crossings of the two curve sets.
pub fn find_candidates(
    t: &Triangle,
    curves1: &[Segment],
    curves2: &[Segment],
    dedup_radius: f64,
) -> Vec<LocusCandidate> {
    find_crossings(curves1, curves2, dedup_radius).into_iter().map(|[a, b]| LocusCandidate::at(t, a, b)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocusOptions {
    /// Residual tolerance relative to the largest grid magnitude of each condition.
    pub tol: f64,
    pub max_iter: usize,
    /// Post-refinement de-duplication radius.
    pub merge_radius: f64,
}

impl Default for LocusOptions {
    fn default() -> Self {
        LocusOptions { tol: 1e-10, max_iter: 50, merge_radius: 1e-8 }
    }
}

/// Runs the whole pipeline on one triangle and region.
pub fn explore(t: &Triangle, region: &ScanRegion, opts: &LocusOptions) -> LocusReport {
    let grid = scan_conditions(t, region);
    let curves1 = extract_zero_curves(&grid, Condition::First);
    let curves2 = extract_zero_curves(&grid, Condition::Second);
    let raw = find_candidates(t, &curves1, &curves2, region.cell_diagonal());

    let scale = grid.magnitude();
    let tol = [opts.tol * scale[0], opts.tol * scale[1]];
    let tf = t.to_f64();
    let polished: Vec<LocusCandidate> = raw.par_iter().map(|c| refine_scaled(&tf, c, tol, opts.max_iter)).collect();

    // Converged roots first, each kept once; failures are retained after them.
    let mut candidates: Vec<LocusCandidate> = Vec::new();
    for c in polished.iter().filter(|c| c.refined) {
        let dup = candidates.iter().any(|k| (k.alpha - c.alpha).hypot(k.beta - c.beta) <= opts.merge_radius);
        if !dup {
            candidates.push(c.clone());
        }
    }
    candidates.extend(polished.iter().filter(|c| !c.refined).cloned());
    classify_candidates(t, &mut candidates);

    LocusReport::new(t, *region, scale, raw.len(), candidates, [curves1, curves2])
}
