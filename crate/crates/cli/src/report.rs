//! JSON and text renderings of an algorithm run.

use std::fmt::Write as _;

use hcstd::semistd::AlgorithmReport;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointJson {
    pub prime: Option<u32>,
    pub point: Option<Vec<i64>>,
    pub outcome: String,
    pub dp: Option<u64>,
    pub d0: Option<u64>,
    pub hc: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TimingsJson {
    pub probe: f64,
    pub bound: f64,
    pub main: f64,
    pub verify: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportJson {
    pub ring: String,
    pub basis: Vec<String>,
    pub leading_ideal: Vec<String>,
    pub hc: String,
    pub vdim: u64,
    pub d0: u64,
    pub dp: Option<u64>,
    pub bound: String,
    pub retries: usize,
    pub points_tried: Vec<PointJson>,
    pub fallback: bool,
    /// Wall-clock times per phase; `null` unless requested, so that
    /// repeated runs print identical reports.
    pub timings_ms: Option<TimingsJson>,
}

/// `char[,params],(vars),ordering` as in a session file.
pub fn ring_line(report: &AlgorithmReport) -> String {
    let params = report.domain.parameters();
    let ch = report.domain.characteristic();
    let head = if params.is_empty() {
        ch.to_string()
    } else {
        format!("({ch},{})", params.join(","))
    };
    format!("{head},({}),{}", report.ring.vars().join(","), report.ring.order())
}

pub fn to_json(report: &AlgorithmReport, with_timings: bool) -> ReportJson {
    let names = report.ring.vars();
    ReportJson {
        ring: ring_line(report),
        basis: report.basis.elements.iter().map(|g| g.to_string()).collect(),
        leading_ideal: report
            .staircase
            .generators()
            .iter()
            .map(|m| m.display(names).to_string())
            .collect(),
        hc: report.hc0.display(names),
        vdim: report.d0,
        d0: report.d0,
        dp: report.dp,
        bound: report.bound.display(names),
        retries: report.retries(),
        points_tried: report
            .points_tried
            .iter()
            .map(|r| PointJson {
                prime: r.point.prime,
                point: r.point.point.clone(),
                outcome: r.outcome.label().to_string(),
                dp: r.dp,
                d0: r.d0,
                hc: r.hc.map(|h| h.display(names)),
            })
            .collect(),
        fallback: report.fallback,
        timings_ms: with_timings.then_some(TimingsJson {
            probe: report.timings.probe,
            bound: report.timings.bound,
            main: report.timings.main,
            verify: report.timings.verify,
        }),
    }
}

fn opt(v: Option<u64>) -> String {
    v.map_or("-".to_string(), |x| x.to_string())
}

/// Human-readable summary: basis, staircase, corner, dimension, points.
pub fn to_text(report: &AlgorithmReport, with_timings: bool) -> String {
    let j = to_json(report, with_timings);
    let mut out = String::new();
    let _ = writeln!(out, "ring: {}", j.ring);
    let _ = writeln!(out, "basis ({} elements):", j.basis.len());
    for g in &j.basis {
        let _ = writeln!(out, "  {g}");
    }
    let _ = writeln!(out, "leading ideal: {}", j.leading_ideal.join(", "));
    let _ = writeln!(out, "highest corner: {}", j.hc);
    let _ = writeln!(out, "vdim: {}", j.vdim);
    let _ = writeln!(out, "d0: {}  dp: {}", j.d0, opt(j.dp));
    let _ = writeln!(out, "bound: {}", j.bound);
    if j.points_tried.is_empty() {
        let _ = writeln!(out, "points tried: none");
    } else {
        let _ = writeln!(out, "points tried:");
        for (r, p) in report.points_tried.iter().zip(&j.points_tried) {
            let _ = writeln!(
                out,
                "  {}: {} (dp {}, d0 {}, hc {})",
                r.point,
                p.outcome,
                opt(p.dp),
                opt(p.d0),
                p.hc.as_deref().unwrap_or("-")
            );
        }
    }
    let _ = writeln!(out, "fallback: {}", if j.fallback { "yes" } else { "no" });
    if let Some(t) = &j.timings_ms {
        let _ = writeln!(
            out,
            "timings (ms): probe {:.1}, bound {:.1}, main {:.1}, verify {:.1}",
            t.probe, t.bound, t.main, t.verify
        );
    }
    out
}
