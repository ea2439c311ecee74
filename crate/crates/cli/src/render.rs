use std::fmt::Write;

use barycev_core::locus::LocusReport;
use barycev_core::{
    pedal_triangle, scale_pedal, scaled_concurrence, BaryPoint, ConditionValues, GeomError, Scalar, Triangle,
};
use serde_json::{json, Value};

use crate::verify::{CheckOutcome, CheckStatus};
use crate::{CliError, Construction, Format};

fn sides_json(t: &Triangle) -> Value {
    json!({ "a": t.a(), "b": t.b(), "c": t.c() })
}

fn coords(p: &BaryPoint) -> [String; 3] {
    p.coords().map(|c| c.to_string())
}

fn joined<T: std::fmt::Display>(values: impl IntoIterator<Item = T>) -> String {
    values.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values always serialize");
    s.push('\n');
    s
}

fn csv_rows(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut s = format!("{header}\n");
    for row in rows {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

/// Quotes a CSV field when it contains a separator or quote.
fn field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub(crate) fn verify(t: &Triangle, k_set: &[Scalar], outcomes: &[CheckOutcome], format: Format) -> String {
    let passed = outcomes.iter().all(|o| o.status != CheckStatus::Fail);
    match format {
        Format::Json => pretty(json!({
            "schema_version": "1",
            "command": "verify",
            "triangle": sides_json(t),
            "k_set": k_set,
            "passed": passed,
            "checks": outcomes,
        })),
        Format::Csv => csv_rows(
            "check,status,verdict,degenerate,undefined,detail",
            outcomes.iter().map(|o| {
                let status = serde_json::to_value(o.status).unwrap();
                format!(
                    "{},{},{},{},{},{}",
                    field(o.name),
                    status.as_str().unwrap(),
                    field(&o.verdict),
                    field(&o.degenerate.join("; ")),
                    field(&o.undefined.join("; ")),
                    field(o.detail.as_deref().unwrap_or("")),
                )
            }),
        ),
        _ => {
            let mut s = format!("triangle: {}\nk-set: {}\n", joined(t.sides()), joined(k_set));
            for o in outcomes {
                write!(s, "{}: {}", o.name, o.verdict).unwrap();
                if let Some(d) = &o.detail {
                    write!(s, " ({d})").unwrap();
                }
                if !o.degenerate.is_empty() {
                    write!(s, " [cevian along a side: {}]", o.degenerate.join("; ")).unwrap();
                }
                if !o.undefined.is_empty() {
                    write!(s, " [cevian undefined: {}]", o.undefined.join("; ")).unwrap();
                }
                s.push('\n');
            }
            s
        }
    }
}

pub(crate) fn point(construction: Construction, k: &Scalar, x: &BaryPoint, format: Format) -> String {
    match format {
        Format::Json => pretty(json!({
            "schema_version": "1",
            "command": "point",
            "construction": construction.name(),
            "k": k,
            "point": coords(x),
        })),
        Format::Csv => csv_rows("alpha,beta,gamma", [coords(x).join(",")]),
        _ => format!("{x}\n"),
    }
}

pub(crate) fn conditions(p: &BaryPoint, v: &ConditionValues, holds: Result<bool, GeomError>, format: Format) -> String {
    match format {
        Format::Json => {
            let (holds, note) = match holds {
                Ok(h) => (json!(h), Value::Null),
                Err(e) => (json!(false), json!(e.to_string())),
            };
            pretty(json!({
                "schema_version": "1",
                "command": "conditions",
                "point": coords(p),
                "cond1": v.cond1,
                "cond2": v.cond2,
                "both_zero": v.both_zero(),
                "concurrence_holds": holds,
                "note": note,
            }))
        }
        Format::Csv => csv_rows("cond1,cond2", [format!("{},{}", v.cond1, v.cond2)]),
        _ => format!("cond1 = {}, cond2 = {}\n", v.cond1, v.cond2),
    }
}

pub(crate) fn pedal(t: &Triangle, p: &BaryPoint, k: &Scalar, format: Format) -> Result<String, CliError> {
    if format == Format::Svg {
        return Ok(barycev_core::svg::pedal_svg(t, p, k)?);
    }
    let feet = pedal_triangle(t, p)?;
    let scaled = scale_pedal(t, p, k)?;
    let concurrence = match scaled_concurrence(t, p, k) {
        Ok(r) => json!({
            "ceva_product": r.ceva_product,
            "concurrent": r.concurrent,
            "point": r.point.as_ref().map(coords),
            "degenerate": r.degenerate,
        }),
        Err(GeomError::DegenerateCevian { vertex }) => json!({
            "ceva_product": null,
            "concurrent": null,
            "point": null,
            "degenerate": true,
            "degenerate_vertex": vertex.to_string(),
        }),
        Err(e) => return Err(e.into()),
    };
    let rows = [
        ("P", p),
        ("foot_bc", &feet.foot_bc),
        ("foot_ca", &feet.foot_ca),
        ("foot_ab", &feet.foot_ab),
        ("scaled_a", &scaled.a_double),
        ("scaled_b", &scaled.b_double),
        ("scaled_c", &scaled.c_double),
    ];
    Ok(match format {
        Format::Json => {
            let mut body = json!({
                "schema_version": "1",
                "command": "pedal",
                "triangle": sides_json(t),
                "k": k,
                "concurrence": concurrence,
            });
            for (label, q) in rows {
                body[label.to_lowercase()] = json!(coords(q));
            }
            pretty(body)
        }
        Format::Csv => {
            csv_rows("label,alpha,beta,gamma", rows.iter().map(|(label, q)| format!("{label},{}", coords(q).join(","))))
        }
        _ => {
            let mut s = format!("k: {k}\n");
            for (label, q) in rows {
                writeln!(s, "{label}: {q}").unwrap();
            }
            match concurrence["degenerate_vertex"].as_str() {
                Some(v) => writeln!(s, "cevians: degenerate at vertex {v}").unwrap(),
                None => {
                    writeln!(s, "ceva product: {}", concurrence["ceva_product"].as_str().unwrap()).unwrap();
                    match concurrence["point"].as_array() {
                        Some(x) => {
                            let x: Vec<&str> = x.iter().filter_map(Value::as_str).collect();
                            writeln!(s, "concurrent at: {}", x.join(", ")).unwrap()
                        }
                        None => writeln!(s, "concurrent: no").unwrap(),
                    }
                }
            }
            s
        }
    })
}

pub(crate) fn locus(t: &Triangle, report: &LocusReport, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => report.to_csv(),
        Format::Svg => barycev_core::svg::locus_svg(t, report)?,
        Format::Text => {
            let r = &report.region;
            let mut s = format!("triangle: {}\n", joined(t.sides()));
            writeln!(
                s,
                "region: alpha [{}, {}], beta [{}, {}], resolution {}",
                r.alpha_min, r.alpha_max, r.beta_min, r.beta_max, r.resolution
            )
            .unwrap();
            writeln!(s, "raw crossings: {}", report.raw_crossings).unwrap();
            let mut flags = Vec::new();
            if report.flags.exceeds_bezout {
                flags.push("exceeds_bezout");
            }
            if report.flags.possibly_one_dimensional {
                flags.push("possibly_one_dimensional");
            }
            writeln!(s, "flags: {}", if flags.is_empty() { "none".into() } else { flags.join(", ") }).unwrap();
            writeln!(s, "candidates: {} ({} refined)", report.candidates.len(), report.refined().count()).unwrap();
            for c in &report.candidates {
                writeln!(
                    s,
                    "  {:>+.12} {:>+.12} {:>+.12}  {:<12} {}",
                    c.alpha + 0.0,
                    c.beta + 0.0,
                    c.gamma + 0.0,
                    c.classification.to_string(),
                    if c.refined { "refined" } else { "unrefined" }
                )
                .unwrap();
            }
            s
        }
    })
}
