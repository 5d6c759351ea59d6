//! Output documents for the single-manifold commands and their renderings.
//!
//! Every command builds one [`Document`]. JSON is its direct serialization;
//! plain, markdown and CSV all flatten the same JSON tree into
//! `path: value` pairs, so the formats carry identical content.

use serde::Serialize;
use serde_json::Value;
use stiefel::classes::{self, char_class_report};
use stiefel::cohomology::{self, charrank_of_canonical_bundle, presentation};
use stiefel::invariants::{self, full_report, Verdict};
use stiefel::{Family, ManifoldId, TruncatedGF2Poly};

use crate::Format;

/// Version of the JSON layout below.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct Document {
    pub spec_version: &'static str,
    pub manifold: ManifoldDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassesDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsDoc>,
    pub citations: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ManifoldDoc {
    pub family: Family,
    pub n: u32,
    pub k: u32,
    pub name: String,
}

#[derive(Debug, Serialize)]
pub struct Cutoff {
    pub name: &'static str,
    pub value: u64,
}

#[derive(Debug, Serialize)]
pub struct PresentationDoc {
    pub dim: u64,
    pub exterior_generators: Vec<String>,
    pub exterior_degrees: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<Cutoff>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excluded_generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excluded_degree: Option<u64>,
    pub total_rank: u128,
    pub betti: Vec<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charrank_canonical_bundle: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct ClassDoc {
    pub text: String,
    pub exponents: Vec<usize>,
    /// Cohomological degrees of the nonzero terms.
    pub degrees: Vec<u64>,
}

impl ClassDoc {
    fn new(p: &TruncatedGF2Poly, x_degree: u64) -> Self {
        let graded = p.graded_terms(x_degree);
        ClassDoc {
            text: p.to_string(),
            exponents: graded.iter().map(|&(e, _)| e).collect(),
            degrees: graded.iter().map(|&(_, d)| d).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassesDoc {
    pub x_degree: u64,
    pub truncation: usize,
    pub total_sw: ClassDoc,
    pub inverse_sw: ClassDoc,
    pub m: u64,
    pub dual_top_degree: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p1_coefficient: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p1_generator_nonzero: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct InvariantsDoc {
    pub dim: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skew_embed_lower_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_immersion_dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable_span_upper_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ucharrank: Option<Verdict<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parallelizable: Option<Verdict<bool>>,
}

fn manifold_doc(id: ManifoldId) -> ManifoldDoc {
    ManifoldDoc {
        family: id.family(),
        n: id.n(),
        k: id.k(),
        name: id.to_string(),
    }
}

fn empty_document(id: ManifoldId) -> Document {
    Document {
        spec_version: SCHEMA_VERSION,
        manifold: manifold_doc(id),
        presentation: None,
        classes: None,
        invariants: None,
        citations: Vec::new(),
    }
}

pub fn presentation_document(id: ManifoldId) -> stiefel::Result<Document> {
    let p = presentation(id)?;
    let poly = p.polynomial;
    let doc = PresentationDoc {
        dim: p.manifold_dim,
        exterior_generators: p
            .exterior
            .iter()
            .map(|g| format!("y_{}", g.index))
            .collect(),
        exterior_degrees: p.exterior_degrees(),
        x_degree: poly.map(|x| x.degree),
        cutoff: poly.map(|x| Cutoff {
            name: if id.family() == Family::Y { "J" } else { "N" },
            value: x.truncation,
        }),
        excluded_generator: poly.map(|x| format!("y_{}", x.excluded.index)),
        excluded_degree: poly.map(|x| x.excluded.degree),
        total_rank: p.total_rank()?,
        betti: p.betti_numbers()?,
        charrank_canonical_bundle: charrank_of_canonical_bundle(&p).ok(),
    };
    let mut d = empty_document(id);
    d.presentation = Some(doc);
    d.citations = cohomology::citations(id.family())
        .iter()
        .map(|s| s.to_string())
        .collect();
    Ok(d)
}

pub fn classes_document(id: ManifoldId) -> stiefel::Result<Document> {
    let r = char_class_report(id)?;
    let doc = ClassesDoc {
        x_degree: r.poly_degree,
        truncation: r.total_sw.truncation(),
        total_sw: ClassDoc::new(&r.total_sw, r.poly_degree),
        inverse_sw: ClassDoc::new(&r.inverse_sw, r.poly_degree),
        m: r.m,
        dual_top_degree: r.dual_top_cohomological_degree,
        p1_coefficient: r.p1_coefficient,
        p1_generator_nonzero: r.p1_generator_nonzero,
    };
    let mut d = empty_document(id);
    d.classes = Some(doc);
    d.citations = classes::citations(id.family())
        .iter()
        .map(|s| s.to_string())
        .collect();
    Ok(d)
}

pub fn invariants_document(id: ManifoldId) -> stiefel::Result<Document> {
    let r = full_report(id)?;
    let mut citations = Vec::new();
    if r.skew_embed_lower_bound.is_some() {
        citations.push(invariants::RULE_SKEW.to_string());
    }
    if r.non_immersion_dim.is_some() {
        citations.push(invariants::RULE_NON_IMMERSION.to_string());
    }
    if r.stable_span_upper_bound.is_some() {
        citations.push(invariants::RULE_STABLE_SPAN.to_string());
    }
    if let Some(v) = &r.ucharrank {
        citations.push(v.rule().to_string());
    }
    if let Some(v) = &r.parallelizable {
        citations.push(v.rule().to_string());
    }
    let mut d = empty_document(id);
    d.invariants = Some(InvariantsDoc {
        dim: r.dim,
        skew_embed_lower_bound: r.skew_embed_lower_bound,
        non_immersion_dim: r.non_immersion_dim,
        stable_span_upper_bound: r.stable_span_upper_bound,
        ucharrank: r.ucharrank,
        parallelizable: r.parallelizable,
    });
    d.citations = citations;
    Ok(d)
}

/// Scalar rendering shared by the flat formats. Arrays print as
/// `[a, b, c]`; strings print bare.
pub fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", inner.join(", "))
        }
        other => other.to_string(),
    }
}

/// Depth-first `(dotted.path, value)` pairs of a JSON tree, in document
/// order. Arrays of scalars stay whole; arrays of objects are indexed.
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        let join = |key: &str| {
            if prefix.is_empty() {
                key.to_string()
            } else {
                format!("{prefix}.{key}")
            }
        };
        match v {
            Value::Object(map) => {
                for (key, child) in map {
                    walk(&join(key), child, out);
                }
            }
            Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                for (i, child) in items.iter().enumerate() {
                    walk(&join(&i.to_string()), child, out);
                }
            }
            Value::Array(items) if prefix.ends_with("citations") => {
                for (i, child) in items.iter().enumerate() {
                    out.push((join(&(i + 1).to_string()), scalar_text(child)));
                }
            }
            _ => out.push((prefix.to_string(), scalar_text(v))),
        }
    }
    let mut out = Vec::new();
    walk("", v, &mut out);
    out
}

pub fn render_document(
    doc: &Document,
    format: Format,
) -> Result<String, Box<dyn std::error::Error>> {
    let value = serde_json::to_value(doc)?;
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value)?;
            s.push('\n');
            s
        }
        Format::Plain => {
            let mut s = format!("{}\n", doc.manifold.name);
            for (k, v) in flatten(&value) {
                s.push_str(&format!("{k}: {v}\n"));
            }
            s
        }
        Format::Markdown => {
            let mut s = format!(
                "### {}\n\n| field | value |\n|---|---|\n",
                doc.manifold.name
            );
            for (k, v) in flatten(&value) {
                s.push_str(&format!("| {} | {} |\n", k, v.replace('|', "\\|")));
            }
            s
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(["field", "value"])?;
            for (k, v) in flatten(&value) {
                w.write_record([k, v])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(f: Family, n: u32, k: u32) -> ManifoldId {
        ManifoldId::new(f, n, k).unwrap()
    }

    fn lookup(flat: &[(String, String)], key: &str) -> String {
        flat.iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| panic!("missing {key}"))
    }

    #[test]
    fn pv_5_2_presentation_fields() {
        let doc = presentation_document(id(Family::PV, 5, 2)).unwrap();
        let flat = flatten(&serde_json::to_value(&doc).unwrap());
        assert_eq!(lookup(&flat, "presentation.exterior_generators"), "[y_4]");
        assert_eq!(lookup(&flat, "presentation.cutoff.value"), "4");
        assert_eq!(
            lookup(&flat, "presentation.betti"),
            "[1, 1, 1, 1, 1, 1, 1, 1]"
        );
        assert_eq!(lookup(&flat, "manifold.family"), "PV");
        assert!(lookup(&flat, "citations.1").contains("Gitler-Handel"));
    }

    #[test]
    fn absent_fields_are_omitted() {
        let doc = presentation_document(id(Family::V, 5, 1)).unwrap();
        let json = serde_json::to_value(&doc).unwrap();
        let p = json["presentation"].as_object().unwrap();
        assert!(!p.contains_key("cutoff"));
        assert!(!p.contains_key("x_degree"));
        assert!(!json.as_object().unwrap().contains_key("classes"));
        assert!(!serde_json::to_string(&doc).unwrap().contains("null"));
    }

    #[test]
    fn y_classes_use_doubled_degrees() {
        let doc = classes_document(id(Family::Y, 7, 1)).unwrap();
        let c = doc.classes.unwrap();
        assert_eq!(c.inverse_sw.text, "1 + x");
        assert_eq!(c.inverse_sw.degrees, vec![0, 2]);
        assert_eq!(c.dual_top_degree, 2);
        assert_eq!(c.p1_coefficient, Some(3));
    }

    #[test]
    fn csv_quotes_commas() {
        let doc = presentation_document(id(Family::PV, 5, 2)).unwrap();
        let text = render_document(&doc, Format::Csv).unwrap();
        assert!(text.starts_with("field,value\n"));
        assert!(text.contains("\"[1, 1, 1, 1, 1, 1, 1, 1]\""));
        assert!(!text.contains('\r'));
    }
}
