use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::classify::{ClassificationReport, CoveringRecord};
use super::PipelineError;

pub const CSV_HEADER: &str = "theorem_case,base,phi_v,phi_h,cover,involution,index,equiv_class";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Md,
    Json,
    Dot,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Md => "md",
            Format::Json => "json",
            Format::Dot => "dot",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(format!("unknown format '{s}' (expected csv, md, json or dot)")),
        }
    }
}

fn value(r: &CoveringRecord, g: &str) -> String {
    r.phi_of(g).map(|v| v.to_string()).unwrap_or_default()
}

pub fn render_csv(report: &ClassificationReport) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in &report.records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.theorem_case,
            r.base,
            value(r, "v"),
            value(r, "h"),
            r.cover,
            r.involution,
            r.index,
            r.equiv_class
        )
        .unwrap();
    }
    out
}

pub fn render_md(report: &ClassificationReport) -> String {
    let mut out = String::from("| case | N (base) | phi(v) | phi(h) | M (cover) | involution | index | class |\n");
    out.push_str("|---|---|---|---|---|---|---|---|\n");
    for r in &report.records {
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            r.theorem_case,
            r.base,
            value(r, "v"),
            value(r, "h"),
            r.cover,
            r.involution,
            r.index,
            r.equiv_class
        )
        .unwrap();
    }
    out
}

pub fn render_json(report: &ClassificationReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

/// Covering graph: arrows go from the cover to the base, labelled by the index.
pub fn render_dot(report: &ClassificationReport) -> String {
    let mut out = String::from("digraph covers {\n");
    for n in &report.nodes {
        writeln!(out, "  \"{n}\";").unwrap();
    }
    for (cover, base, index) in report.edges() {
        writeln!(out, "  \"{cover}\" -> \"{base}\" [label=\"ind={index}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn render_cross_check(report: &ClassificationReport) -> String {
    let mut out = String::from(
        "cube cross-check: (a) computed, (b) literal sum reading, (c) both-nonzero reading, (d) reference index\n",
    );
    for c in report.cross_check.iter().flatten() {
        for row in &c.rows {
            let phi: Vec<String> = row.phi.iter().map(u8::to_string).collect();
            let nz = |b: bool| if b { "nonzero" } else { "zero" };
            let reference = row.reference.map_or("n/a", nz);
            write!(
                out,
                "{} ({}): a={} b={} c={} d={}",
                c.base,
                phi.join(","),
                nz(row.computed),
                nz(row.literal_sum),
                nz(row.both_nonzero),
                reference
            )
            .unwrap();
            if row.disagreements.is_empty() {
                out.push_str(" agree\n");
            } else {
                writeln!(out, " DISAGREE: {}", row.disagreements.join("; ")).unwrap();
            }
        }
    }
    out
}

pub fn render(report: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Csv => render_csv(report),
        Format::Md => render_md(report),
        Format::Json => render_json(report),
        Format::Dot => render_dot(report),
    }
}

/// Writes `classification.<ext>`, plus `cross_check.txt` when the report has one.
pub fn emit_reports(
    report: &ClassificationReport,
    format: Format,
    out_dir: &Path,
) -> Result<Vec<PathBuf>, PipelineError> {
    let io = |p: &Path, e: std::io::Error| PipelineError::Io(format!("{}: {e}", p.display()));
    std::fs::create_dir_all(out_dir).map_err(|e| io(out_dir, e))?;
    let mut written = Vec::new();
    let path = out_dir.join(format!("classification.{}", format.extension()));
    std::fs::write(&path, render(report, format)).map_err(|e| io(&path, e))?;
    written.push(path);
    if report.cross_check.is_some() {
        let path = out_dir.join("cross_check.txt");
        std::fs::write(&path, render_cross_check(report)).map_err(|e| io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}
