//! Damped Newton polish of a candidate on the (α, β) chart.

use serde::Serialize;

use super::scan::conditions_f64;
use super::LocusCandidate;
use crate::triangle::{Triangle, TriangleF64};

/// Why a refinement did not converge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RefineFailure {
    SingularJacobian,
    /// No halving of the Newton step reduced the residual.
    Stalled,
    MaxIterations,
    NonFinite,
}

/// Maximum number of step halvings per Newton iteration.
pub const MAX_HALVINGS: usize = 8;

/// Relative Newton step size below which a converged iterate is final.
const STEP_FLOOR: f64 = 1e-13;

fn eval(t: &TriangleF64, x: [f64; 2]) -> [f64; 2] {
    conditions_f64(t, [x[0], x[1], 1.0 - x[0] - x[1]])
}

/// Per-component tolerance test: `|F_i| < tol_i`.
fn converged(f: [f64; 2], tol: [f64; 2]) -> bool {
    f[0].abs() < tol[0] && f[1].abs() < tol[1]
}

/// Residual norm with each component measured in units of its tolerance.
fn norm(f: [f64; 2], tol: [f64; 2]) -> f64 {
    (f[0] / tol[0]).hypot(f[1] / tol[1])
}

/// Central-difference Jacobian with step `1e−6·(1 + |x_i|)`.
pub fn jacobian(t: &TriangleF64, x: [f64; 2]) -> [[f64; 2]; 2] {
    let mut jac = [[0.0; 2]; 2];
    for col in 0..2 {
        let h = 1e-6 * (1.0 + x[col].abs());
        let (mut fwd, mut back) = (x, x);
        fwd[col] += h;
        back[col] -= h;
        let (fp, fm) = (eval(t, fwd), eval(t, back));
        for row in 0..2 {
            jac[row][col] = (fp[row] - fm[row]) / (2.0 * h);
        }
    }
    jac
}

/// Refines `cand` until both residuals are below `tol` in absolute value or
/// `max_iter` Newton steps have been taken. A candidate that fails keeps its
/// last iterate and residuals, with `refined = false`.
pub fn refine_candidate(t: &Triangle, cand: &LocusCandidate, tol: f64, max_iter: usize) -> LocusCandidate {
    refine_scaled(&t.to_f64(), cand, [tol; 2], max_iter)
}

/// As [`refine_candidate`] with a separate absolute tolerance per condition.
pub fn refine_scaled(t: &TriangleF64, cand: &LocusCandidate, tol: [f64; 2], max_iter: usize) -> LocusCandidate {
    let mut x = [cand.alpha, cand.beta];
    let mut f = eval(t, x);
    let mut failure = None;
    let mut iterations = 0;

    // Once the residuals pass, keep taking Newton steps while they still
    // move the point and do not increase the residual: near a multiple root
    // the residual test alone stops far from the root.
    loop {
        let done = converged(f, tol);
        if iterations == max_iter {
            if !done {
                failure = Some(RefineFailure::MaxIterations);
            }
            break;
        }
        let j = jacobian(t, x);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        let jmax = j.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
        if !det.is_finite() || jmax == 0.0 || det.abs() <= 1e-14 * jmax * jmax {
            if !done {
                failure = Some(RefineFailure::SingularJacobian);
            }
            break;
        }
        let step = [-(j[1][1] * f[0] - j[0][1] * f[1]) / det, -(-j[1][0] * f[0] + j[0][0] * f[1]) / det];
        let size = step[0].hypot(step[1]);
        if done && size <= STEP_FLOOR * (1.0 + x[0].hypot(x[1])) {
            break;
        }
        let current = norm(f, tol);
        let mut lambda = 1.0;
        let mut accepted = None;
        for _ in 0..=MAX_HALVINGS {
            let trial = [x[0] + lambda * step[0], x[1] + lambda * step[1]];
            let ft = eval(t, trial);
            let n = norm(ft, tol);
            if n < current || (done && n <= current) {
                accepted = Some((trial, ft));
                break;
            }
            lambda *= 0.5;
        }
        let Some((nx, nf)) = accepted else {
            if !done {
                failure = Some(RefineFailure::Stalled);
            }
            break;
        };
        if !(nx[0].is_finite() && nx[1].is_finite()) {
            failure = Some(RefineFailure::NonFinite);
            break;
        }
        iterations += 1;
        x = nx;
        f = nf;
    }

    LocusCandidate {
        alpha: x[0],
        beta: x[1],
        gamma: 1.0 - x[0] - x[1],
        residual1: f[0],
        residual2: f[1],
        classification: cand.classification,
        refined: failure.is_none(),
        iterations,
        failure,
    }
}
