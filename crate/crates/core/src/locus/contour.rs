//! Marching squares over one component of a [`Grid`].

use serde::Serialize;

use super::scan::Grid;

/// A straight piece of a zero curve, in (α, β) chart coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Segment {
    pub start: [f64; 2],
    pub end: [f64; 2],
}

impl Segment {
    pub fn new(start: [f64; 2], end: [f64; 2]) -> Self {
        Segment { start, end }
    }

    pub fn bbox(&self) -> [f64; 4] {
        [
            self.start[0].min(self.end[0]),
            self.start[1].min(self.end[1]),
            self.start[0].max(self.end[0]),
            self.start[1].max(self.end[1]),
        ]
    }
}

/// Which condition of the grid to contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    First,
    Second,
}

impl Condition {
    fn index(self) -> usize {
        match self {
            Condition::First => 0,
            Condition::Second => 1,
        }
    }
}

impl TryFrom<u8> for Condition {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, String> {
        match v {
            1 => Ok(Condition::First),
            2 => Ok(Condition::Second),
            _ => Err(format!("condition must be 1 or 2, got {v}")),
        }
    }
}

fn crossing(p: [f64; 2], q: [f64; 2], fp: f64, fq: f64) -> [f64; 2] {
    let t = fp / (fp - fq);
    [p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]
}

/// Zero-crossing segments of one condition, one or two per cell, emitted in
/// row-major cell order. Non-negative values count as "above".
pub fn extract_zero_curves(grid: &Grid, which: Condition) -> Vec<Segment> {
    let k = which.index();
    let n = grid.region.resolution;
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..n {
            // Corners counter-clockwise from the lower-left.
            let idx = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let pos = idx.map(|(i, j)| grid.position(i, j));
            let val = idx.map(|(i, j)| grid.node(i, j)[k]);
            let above = val.map(|v| v >= 0.0);
            let case = above.iter().enumerate().fold(0u8, |acc, (b, &up)| acc | ((up as u8) << b));
            if case == 0 || case == 0b1111 {
                continue;
            }
            // Edge e joins corner e and corner e + 1.
            let edge = |e: usize| {
                let f = (e + 1) % 4;
                crossing(pos[e], pos[f], val[e], val[f])
            };
            let cut: Vec<usize> = (0..4).filter(|&e| above[e] != above[(e + 1) % 4]).collect();
            match cut.len() {
                2 => out.push(Segment::new(edge(cut[0]), edge(cut[1]))),
                4 => {
                    let center_above = grid.center(i, j)[k] >= 0.0;
                    if center_above == above[0] {
                        // Corners 0 and 2 connect through the center: isolate 1 and 3.
                        out.push(Segment::new(edge(0), edge(1)));
                        out.push(Segment::new(edge(2), edge(3)));
                    } else {
                        out.push(Segment::new(edge(3), edge(0)));
                        out.push(Segment::new(edge(1), edge(2)));
                    }
                }
                _ => unreachable!("a cell has an even number of sign changes"),
            }
        }
    }
    out
}
