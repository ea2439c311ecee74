use std::collections::HashMap;

use super::contour::Segment;

/// Proper or endpoint intersection of two segments, `None` when parallel.
pub fn segment_intersection(s: &Segment, t: &Segment) -> Option<[f64; 2]> {
    let d1 = [s.end[0] - s.start[0], s.end[1] - s.start[1]];
    let d2 = [t.end[0] - t.start[0], t.end[1] - t.start[1]];
    let denom = d1[0] * d2[1] - d1[1] * d2[0];
    let scale = (d1[0].hypot(d1[1]) * d2[0].hypot(d2[1])).max(f64::MIN_POSITIVE);
    if denom.abs() <= 1e-14 * scale {
        return None;
    }
    let w = [t.start[0] - s.start[0], t.start[1] - s.start[1]];
    let u = (w[0] * d2[1] - w[1] * d2[0]) / denom;
    let v = (w[0] * d1[1] - w[1] * d1[0]) / denom;
    const EPS: f64 = 1e-12;
    if (-EPS..=1.0 + EPS).contains(&u) && (-EPS..=1.0 + EPS).contains(&v) {
        Some([s.start[0] + u * d1[0], s.start[1] + u * d1[1]])
    } else {
        None
    }
}

/// Greedy de-duplication in input order: a point is dropped when it lies
/// within `radius` of an earlier kept point.
pub fn dedup_points(points: impl IntoIterator<Item = [f64; 2]>, radius: f64) -> Vec<[f64; 2]> {
    let mut kept: Vec<[f64; 2]> = Vec::new();
    for p in points {
        if !kept.iter().any(|q| (p[0] - q[0]).hypot(p[1] - q[1]) <= radius) {
            kept.push(p);
        }
    }
    kept
}

/// All crossings between the two curve sets, de-duplicated within
/// `dedup_radius`. Output order follows `curves1`, then `curves2`.
pub fn find_crossings(curves1: &[Segment], curves2: &[Segment], dedup_radius: f64) -> Vec<[f64; 2]> {
    if curves1.is_empty() || curves2.is_empty() {
        return Vec::new();
    }
    // Bucket the second set on a uniform hash sized to its longest extent.
    let extent = curves2
        .iter()
        .map(|s| {
            let [x0, y0, x1, y1] = s.bbox();
            (x1 - x0).max(y1 - y0)
        })
        .fold(0.0f64, f64::max)
        .max(1e-9);
    let key = |x: f64, y: f64| ((x / extent).floor() as i64, (y / extent).floor() as i64);
    let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (idx, s) in curves2.iter().enumerate() {
        let [x0, y0, x1, y1] = s.bbox();
        let (i0, j0) = key(x0, y0);
        let (i1, j1) = key(x1, y1);
        for i in i0..=i1 {
            for j in j0..=j1 {
                buckets.entry((i, j)).or_default().push(idx);
            }
        }
    }

    let mut hits = Vec::new();
    let mut near = Vec::new();
    for s in curves1 {
        let [x0, y0, x1, y1] = s.bbox();
        let (i0, j0) = key(x0, y0);
        let (i1, j1) = key(x1, y1);
        near.clear();
        for i in i0..=i1 {
            for j in j0..=j1 {
                if let Some(v) = buckets.get(&(i, j)) {
                    near.extend_from_slice(v);
                }
            }
        }
        near.sort_unstable();
        near.dedup();
        hits.extend(near.iter().filter_map(|&idx| segment_intersection(s, &curves2[idx])));
    }
    dedup_points(hits, dedup_radius)
}
