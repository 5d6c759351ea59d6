//! `stiefel sweep`: one row per valid `(n, k)` in a rectangle of parameters.
//!
//! Rows are computed in parallel and assembled in n-major, k-minor order, so
//! output is byte-identical across runs. Pairs violating the family's
//! constraints are skipped and counted on stderr.

use std::fs::File;
use std::io::{BufWriter, Write};

use rayon::prelude::*;
use serde::Serialize;
use stiefel::classes::dual_top_index;
use stiefel::cohomology::presentation;
use stiefel::invariants::{full_report, Verdict, VerdictStatus};
use stiefel::{Family, ManifoldId};

use crate::render::SCHEMA_VERSION;
use crate::{Format, SweepArgs};

pub const COLUMNS: [&str; 15] = [
    "family",
    "n",
    "k",
    "dim",
    "cutoff",
    "m",
    "skew_lower_bound",
    "non_immersion_dim",
    "stable_span_upper_bound",
    "ucharrank_status",
    "ucharrank_value",
    "ucharrank_rule",
    "parallelizable_status",
    "parallelizable_value",
    "parallelizable_rule",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub dim: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skew_lower_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_immersion_dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable_span_upper_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ucharrank: Option<Verdict<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parallelizable: Option<Verdict<bool>>,
}

pub fn row(id: ManifoldId) -> stiefel::Result<Row> {
    let p = presentation(id)?;
    let report = full_report(id)?;
    let m = match id.family() {
        Family::PV | Family::Y => Some(dual_top_index(id)?),
        _ => None,
    };
    Ok(Row {
        family: id.family(),
        n: id.n(),
        k: id.k(),
        dim: report.dim,
        cutoff: p.polynomial.map(|x| x.truncation),
        m,
        skew_lower_bound: report.skew_embed_lower_bound,
        non_immersion_dim: report.non_immersion_dim,
        stable_span_upper_bound: report.stable_span_upper_bound,
        ucharrank: report.ucharrank,
        parallelizable: report.parallelizable,
    })
}

/// Valid ids in the rectangle, in output order, and the number skipped.
pub fn ids(
    family: Family,
    n_range: std::ops::RangeInclusive<u32>,
    k_range: std::ops::RangeInclusive<u32>,
) -> (Vec<ManifoldId>, u64) {
    let mut valid = Vec::new();
    let mut skipped = 0;
    for n in n_range {
        for k in k_range.clone() {
            match ManifoldId::new(family, n, k) {
                Ok(id) => valid.push(id),
                Err(_) => skipped += 1,
            }
        }
    }
    (valid, skipped)
}

pub fn rows(ids: &[ManifoldId]) -> stiefel::Result<Vec<Row>> {
    ids.par_iter().map(|&id| row(id)).collect()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn status_text(s: VerdictStatus) -> &'static str {
    match s {
        VerdictStatus::Determined => "Determined",
        VerdictStatus::OutOfTheoremRange => "OutOfTheoremRange",
        VerdictStatus::Unknown => "Unknown",
    }
}

fn verdict_cells<T: std::fmt::Display>(v: &Option<Verdict<T>>) -> [String; 3] {
    match v {
        Some(v) => [
            status_text(v.status()).to_string(),
            opt(v.value()),
            v.rule().to_string(),
        ],
        None => Default::default(),
    }
}

/// Cells in [`COLUMNS`] order.
pub fn cells(r: &Row) -> Vec<String> {
    let mut out = vec![
        r.family.to_string(),
        r.n.to_string(),
        r.k.to_string(),
        r.dim.to_string(),
        opt(r.cutoff),
        opt(r.m),
        opt(r.skew_lower_bound),
        opt(r.non_immersion_dim),
        opt(r.stable_span_upper_bound),
    ];
    out.extend(verdict_cells(&r.ucharrank));
    out.extend(verdict_cells(&r.parallelizable));
    out
}

#[derive(Serialize)]
struct SweepDocument<'a> {
    spec_version: &'static str,
    family: Family,
    skipped: u64,
    rows: &'a [Row],
}

pub fn render(
    family: Family,
    rows: &[Row],
    skipped: u64,
    format: Format,
) -> Result<String, Box<dyn std::error::Error>> {
    Ok(match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(COLUMNS)?;
            for r in rows {
                w.write_record(cells(r))?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Json => {
            let doc = SweepDocument {
                spec_version: SCHEMA_VERSION,
                family,
                skipped,
                rows,
            };
            let mut s = serde_json::to_string_pretty(&doc)?;
            s.push('\n');
            s
        }
        Format::Markdown => markdown(rows),
        Format::Plain => plain(rows),
    })
}

/// Rule texts are long, so the table refers to them by footnote number.
fn markdown(rows: &[Row]) -> String {
    let rule_cols = [11, 14];
    let mut rules: Vec<String> = Vec::new();
    let mut s = format!(
        "| {} |\n|{}\n",
        COLUMNS.join(" | "),
        "---|".repeat(COLUMNS.len())
    );
    for r in rows {
        let mut c = cells(r);
        for &i in &rule_cols {
            if c[i].is_empty() {
                continue;
            }
            let idx = match rules.iter().position(|x| *x == c[i]) {
                Some(p) => p,
                None => {
                    rules.push(c[i].clone());
                    rules.len() - 1
                }
            };
            c[i] = format!("[{}]", idx + 1);
        }
        s.push_str(&format!("| {} |\n", c.join(" | ")));
    }
    if !rules.is_empty() {
        s.push('\n');
        for (i, rule) in rules.iter().enumerate() {
            s.push_str(&format!("[{}] {}\n", i + 1, rule.replace('|', "\\|")));
        }
    }
    s
}

fn plain(rows: &[Row]) -> String {
    let mut s = String::new();
    for r in rows {
        let c = cells(r);
        let fields: Vec<String> = COLUMNS
            .iter()
            .zip(&c)
            .filter(|(name, v)| !v.is_empty() && !name.ends_with("_rule"))
            .map(|(name, v)| format!("{name}={v}"))
            .collect();
        s.push_str(&fields.join(" "));
        s.push('\n');
    }
    s
}

pub fn run(args: &SweepArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), String> {
    let (valid, skipped) = ids(args.family, args.n_range.clone(), args.k_range.clone());
    let rows = rows(&valid).map_err(|e| e.to_string())?;
    let text = render(args.family, &rows, skipped, args.format).map_err(|e| e.to_string())?;
    match &args.out {
        Some(path) => {
            let file =
                File::create(path).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            let mut w = BufWriter::new(file);
            w.write_all(text.as_bytes())
                .and_then(|_| w.flush())
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string())?,
    }
    if skipped > 0 {
        let _ = writeln!(stderr, "skipped {skipped} invalid (n, k) pairs");
    }
    Ok(())
}
