//! SVG drawings in the cartesian frame: B at the origin, C on the positive
//! x-axis, A above. SVG's y axis points down, so y is negated on output.

use std::fmt::Write;

use crate::cartesian::Frame;
use crate::concurrence::scaled_concurrence;
use crate::error::Result;
use crate::locus::{Classification, LocusReport, Segment};
use crate::pedal::{pedal_triangle, scale_pedal};
use crate::point::BaryPoint;
use crate::scalar::Scalar;
use crate::triangle::Triangle;

const STYLE: &str = "\
.triangle{fill:none;stroke:#222}\
.cond1{fill:none;stroke:#1f77b4}\
.cond2{fill:none;stroke:#d62728}\
.cevian{fill:none;stroke:#2ca02c;stroke-dasharray:4 2}\
.pedal{fill:none;stroke:#9467bd}\
.marker{fill:#ff7f0e;stroke:#222}\
.known{fill:#17becf;stroke:#222}\
text{font-family:sans-serif}";

/// Collects primitives in frame coordinates and renders them with a
/// viewBox fitted to everything drawn.
struct Canvas {
    body: String,
    min: [f64; 2],
    max: [f64; 2],
}

impl Canvas {
    fn new() -> Self {
        Canvas { body: String::new(), min: [f64::INFINITY; 2], max: [f64::NEG_INFINITY; 2] }
    }

    fn include(&mut self, p: [f64; 2]) {
        if p[0].is_finite() && p[1].is_finite() {
            for (k, v) in p.into_iter().enumerate() {
                self.min[k] = self.min[k].min(v);
                self.max[k] = self.max[k].max(v);
            }
        }
    }

    fn extent(&self) -> f64 {
        (self.max[0] - self.min[0]).max(self.max[1] - self.min[1]).max(1e-9)
    }

    fn polygon(&mut self, class: &str, pts: &[[f64; 2]]) {
        pts.iter().for_each(|&p| self.include(p));
        let coords: Vec<String> = pts.iter().map(|p| format!("{:.6},{:.6}", p[0], -p[1])).collect();
        let _ = writeln!(self.body, r#"<polygon class="{class}" points="{}"/>"#, coords.join(" "));
    }

    fn segments(&mut self, class: &str, segs: &[[[f64; 2]; 2]]) {
        if segs.is_empty() {
            return;
        }
        let mut d = String::new();
        for [p, q] in segs {
            self.include(*p);
            self.include(*q);
            let _ = write!(d, "M{:.6},{:.6}L{:.6},{:.6}", p[0], -p[1], q[0], -q[1]);
        }
        let _ = writeln!(self.body, r#"<path class="{class}" d="{d}"/>"#);
    }

    fn marker(&mut self, class: &str, p: [f64; 2], label: &str) {
        self.include(p);
        let _ = writeln!(
            self.body,
            r#"<g class="label"><circle class="{class}" cx="{:.6}" cy="{:.6}" r="{{R}}"/><text x="{:.6}" y="{:.6}" font-size="{{F}}">{}</text></g>"#,
            p[0],
            -p[1],
            p[0],
            -p[1],
            escape(label)
        );
    }

    fn finish(self) -> String {
        let e = self.extent();
        let pad = 0.05 * e;
        let (x, y) = (self.min[0] - pad, -self.max[1] - pad);
        let (w, h) = (self.max[0] - self.min[0] + 2.0 * pad, self.max[1] - self.min[1] + 2.0 * pad);
        let stroke = e / 400.0;
        let body = self.body.replace("{R}", &format!("{:.6}", e / 120.0)).replace("{F}", &format!("{:.6}", e / 40.0));
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x:.6} {y:.6} {w:.6} {h:.6}\">\n\
             <style>{STYLE}path,polygon{{stroke-width:{stroke:.6}}}circle{{stroke-width:{:.6}}}</style>\n\
             {body}</svg>\n",
            stroke / 2.0
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn chart_to_frame(frame: &Frame, [alpha, beta]: [f64; 2]) -> [f64; 2] {
    frame.embed_f64([alpha, beta, 1.0 - alpha - beta])
}

fn vertices(frame: &Frame) -> Result<[[f64; 2]; 3]> {
    Ok([
        frame.embed(&BaryPoint::vertex_a())?.to_f64(),
        frame.embed(&BaryPoint::vertex_b())?.to_f64(),
        frame.embed(&BaryPoint::vertex_c())?.to_f64(),
    ])
}

/// Triangle outline, both zero-curve sets and labelled candidate markers.
/// The viewBox covers the scanned region mapped into the frame.
pub fn locus_svg(t: &Triangle, report: &LocusReport) -> Result<String> {
    let frame = Frame::new(t)?;
    let mut canvas = Canvas::new();
    let r = &report.region;
    for corner in
        [[r.alpha_min, r.beta_min], [r.alpha_max, r.beta_min], [r.alpha_max, r.beta_max], [r.alpha_min, r.beta_max]]
    {
        canvas.include(chart_to_frame(&frame, corner));
    }
    canvas.polygon("triangle", &vertices(&frame)?);
    let map = |segs: &[Segment]| -> Vec<[[f64; 2]; 2]> {
        segs.iter().map(|s| [chart_to_frame(&frame, s.start), chart_to_frame(&frame, s.end)]).collect()
    };
    canvas.segments("cond1", &map(&report.curves[0]));
    canvas.segments("cond2", &map(&report.curves[1]));
    for c in report.refined() {
        let class = if c.classification == Classification::Unknown { "marker" } else { "known" };
        canvas.marker(class, chart_to_frame(&frame, [c.alpha, c.beta]), &c.classification.to_string());
    }
    Ok(canvas.finish())
}

/// Triangle, pedal triangle of `point`, the k-scaled points with their
/// cevians, and the concurrence point when there is one.
pub fn pedal_svg(t: &Triangle, point: &BaryPoint, k: &Scalar) -> Result<String> {
    let frame = Frame::new(t)?;
    let verts = vertices(&frame)?;
    let feet = pedal_triangle(t, point)?;
    let scaled = scale_pedal(t, point, k)?;
    let report = scaled_concurrence(t, point, k)?;
    let emb = |q: &BaryPoint| frame.embed(q).map(|e| e.to_f64());

    let mut canvas = Canvas::new();
    canvas.polygon("triangle", &verts);
    canvas.polygon("pedal", &[emb(&feet.foot_bc)?, emb(&feet.foot_ca)?, emb(&feet.foot_ab)?]);
    let mut cevians = Vec::new();
    for (v, q) in verts.iter().zip(scaled.points()) {
        let q = emb(q)?;
        cevians.push([*v, q]);
        if let Some(Ok(x)) = report.point.as_ref().filter(|p| !p.is_at_infinity()).map(emb) {
            cevians.push([q, x]);
        }
    }
    canvas.segments("cevian", &cevians);
    let p = emb(point)?;
    canvas.marker("known", p, "P");
    for (label, q) in ["A'", "B'", "C'"].iter().zip(feet.feet()) {
        canvas.marker("marker", emb(q)?, label);
    }
    for (label, q) in ["A''", "B''", "C''"].iter().zip(scaled.points()) {
        canvas.marker("marker", emb(q)?, label);
    }
    if let Some(x) = report.point.as_ref().filter(|p| !p.is_at_infinity()) {
        canvas.marker("known", emb(x)?, "X");
    }
    for (label, v) in ["A", "B", "C"].iter().zip(verts) {
        canvas.marker("known", v, label);
    }
    Ok(canvas.finish())
}
