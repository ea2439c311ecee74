use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::triangle::{Triangle, TriangleF64};

/// Rectangle in the normalized (α, β) chart; γ = 1 − α − β.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRegion {
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub beta_min: f64,
    pub beta_max: f64,
    /// Cells per axis.
    pub resolution: usize,
}

pub const MIN_RESOLUTION: usize = 8;

impl ScanRegion {
    pub fn new(alpha: (f64, f64), beta: (f64, f64), resolution: usize) -> Result<Self, String> {
        let r = ScanRegion { alpha_min: alpha.0, alpha_max: alpha.1, beta_min: beta.0, beta_max: beta.1, resolution };
        r.validate().map(|_| r)
    }

    /// `[−0.5, 1.5]²` at 512 cells per axis.
    pub fn default_region() -> Self {
        ScanRegion::new((-0.5, 1.5), (-0.5, 1.5), 512).unwrap()
    }

    /// `[−2.5, 3.5]²` at 512 cells per axis, wide enough for the excenters.
    pub fn extended_region() -> Self {
        ScanRegion::new((-2.5, 3.5), (-2.5, 3.5), 512).unwrap()
    }

    pub fn validate(&self) -> Result<(), String> {
        let finite = [self.alpha_min, self.alpha_max, self.beta_min, self.beta_max].iter().all(|v| v.is_finite());
        if !finite {
            return Err("region bounds must be finite".into());
        }
        if self.alpha_min >= self.alpha_max || self.beta_min >= self.beta_max {
            return Err("region bounds must satisfy min < max".into());
        }
        if self.resolution < MIN_RESOLUTION {
            return Err(format!("resolution must be at least {MIN_RESOLUTION}"));
        }
        Ok(())
    }

    pub fn alpha_at(&self, i: usize) -> f64 {
        lerp(self.alpha_min, self.alpha_max, i, self.resolution)
    }

    pub fn beta_at(&self, j: usize) -> f64 {
        lerp(self.beta_min, self.beta_max, j, self.resolution)
    }

    pub fn cell_width(&self) -> [f64; 2] {
        let n = self.resolution as f64;
        [(self.alpha_max - self.alpha_min) / n, (self.beta_max - self.beta_min) / n]
    }

    pub fn cell_diagonal(&self) -> f64 {
        let [w, h] = self.cell_width();
        w.hypot(h)
    }

    pub fn contains(&self, alpha: f64, beta: f64) -> bool {
        (self.alpha_min..=self.alpha_max).contains(&alpha) && (self.beta_min..=self.beta_max).contains(&beta)
    }
}

fn lerp(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if i == n {
        hi
    } else {
        lo + (hi - lo) * (i as f64 / n as f64)
    }
}

/// Both conditions in `f64`, mirroring the exact cubic forms term by term.
pub fn conditions_f64(t: &TriangleF64, [alpha, beta, gamma]: [f64; 3]) -> [f64; 2] {
    let (x, y, z) = (alpha / t.a, beta / t.b, gamma / t.c);
    let (ca, cb, cc) = (t.cos_a, t.cos_b, t.cos_c);
    let cond1 = alpha * beta * t.c * (y * ca - x * cb)
        + beta * gamma * t.a * (z * cb - y * cc)
        + gamma * alpha * t.b * (x * cc - z * ca);
    let cond2 = x * x * ca * (z * cb - y * cc) + y * y * cb * (x * cc - z * ca) + z * z * cc * (y * ca - x * cb);
    [cond1, cond2]
}

/// Sum of the absolute values of the monomials in each condition, i.e. the
/// magnitude against which `f64` roundoff in [`conditions_f64`] is measured.
pub fn condition_term_magnitudes(t: &TriangleF64, [alpha, beta, gamma]: [f64; 3]) -> [f64; 2] {
    let (x, y, z) = (alpha / t.a, beta / t.b, gamma / t.c);
    let (ca, cb, cc) = (t.cos_a.abs(), t.cos_b.abs(), t.cos_c.abs());
    let (x, y, z) = (x.abs(), y.abs(), z.abs());
    let (ab, bg, ga) = ((alpha * beta).abs(), (beta * gamma).abs(), (gamma * alpha).abs());
    let m1 = ab * t.c * (y * ca + x * cb) + bg * t.a * (z * cb + y * cc) + ga * t.b * (x * cc + z * ca);
    let m2 = x * x * ca * (z * cb + y * cc) + y * y * cb * (x * cc + z * ca) + z * z * cc * (y * ca + x * cb);
    [m1, m2]
}

/// Samples of a two-component field on the nodes of a [`ScanRegion`], plus
/// one sample at each cell center for saddle disambiguation.
#[derive(Debug, Clone)]
pub struct Grid {
    pub region: ScanRegion,
    /// Row-major: index `j * (resolution + 1) + i` holds node (α_i, β_j).
    pub nodes: Vec<[f64; 2]>,
    /// Row-major over cells: index `j * resolution + i`.
    pub centers: Vec<[f64; 2]>,
}

impl Grid {
    /// Evaluates `f(α, β)` at every node and cell center. Rows are filled in
    /// parallel; the layout does not depend on the thread count.
    pub fn from_fn<F>(region: ScanRegion, f: F) -> Grid
    where
        F: Fn(f64, f64) -> [f64; 2] + Sync,
    {
        let n = region.resolution;
        let mut nodes = vec![[0.0; 2]; (n + 1) * (n + 1)];
        nodes.par_chunks_mut(n + 1).enumerate().for_each(|(j, row)| {
            let beta = region.beta_at(j);
            for (i, v) in row.iter_mut().enumerate() {
                *v = f(region.alpha_at(i), beta);
            }
        });
        let mut centers = vec![[0.0; 2]; n * n];
        let [w, h] = region.cell_width();
        centers.par_chunks_mut(n).enumerate().for_each(|(j, row)| {
            let beta = region.beta_at(j) + 0.5 * h;
            for (i, v) in row.iter_mut().enumerate() {
                *v = f(region.alpha_at(i) + 0.5 * w, beta);
            }
        });
        Grid { region, nodes, centers }
    }

    pub fn node(&self, i: usize, j: usize) -> [f64; 2] {
        self.nodes[j * (self.region.resolution + 1) + i]
    }

    pub fn center(&self, i: usize, j: usize) -> [f64; 2] {
        self.centers[j * self.region.resolution + i]
    }

    pub fn position(&self, i: usize, j: usize) -> [f64; 2] {
        [self.region.alpha_at(i), self.region.beta_at(j)]
    }

    /// Largest absolute node value of each component, floored at the
    /// smallest positive normal so it can serve as a divisor.
    pub fn magnitude(&self) -> [f64; 2] {
        self.nodes.iter().fold([f64::MIN_POSITIVE; 2], |acc, v| [acc[0].max(v[0].abs()), acc[1].max(v[1].abs())])
    }
}

pub fn scan_conditions(t: &Triangle, region: &ScanRegion) -> Grid {
    let tf = t.to_f64();
    Grid::from_fn(*region, |alpha, beta| conditions_f64(&tf, [alpha, beta, 1.0 - alpha - beta]))
}
