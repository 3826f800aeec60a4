//! Stable JSON and plain-text serialization for the CLI.
//!
//! Counts are rendered as decimal strings (multiplicities outgrow the
//! float-safe integer range quickly) and JSON objects are emitted with
//! sorted keys, so identical invocations produce byte-identical output.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::facet::FacetProfile;
use crate::grid::{GridShape, Vertex};
use crate::ideal::Generators;
use crate::oracle::FaceCensus;
use crate::shelling::{ShellingOrder, ShellingWitness, VerifyReport};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct VertexJson {
    pub layer: String,
    pub row: u32,
    pub col: u32,
}

impl From<Vertex> for VertexJson {
    fn from(v: Vertex) -> Self {
        VertexJson {
            layer: v.layer.letter().to_string(),
            row: v.row,
            col: v.col,
        }
    }
}

fn vertices_json<'a>(vs: impl IntoIterator<Item = &'a Vertex>) -> Value {
    Value::Array(
        vs.into_iter()
            .map(|v| serde_json::to_value(VertexJson::from(*v)).expect("serializable"))
            .collect(),
    )
}

fn profile_json(f: &FacetProfile) -> Value {
    json!({
        "mu": {"row": f.mu().row, "col": f.mu().col},
        "x_steps": f.x_path().step_string(),
        "y_upper_steps": f.y_upper().step_string(),
        "y_lower_steps": f.y_lower().step_string(),
    })
}

/// Wrap a payload into the versioned output document.
pub fn document(command: &str, shape: GridShape, payload: Value) -> Value {
    let mut doc = BTreeMap::new();
    doc.insert("schema_version".to_string(), json!(SCHEMA_VERSION));
    doc.insert("command".to_string(), json!(command));
    doc.insert(
        "shape".to_string(),
        json!({"m": shape.rows(), "n": shape.cols()}),
    );
    if let Value::Object(map) = payload {
        for (k, v) in map {
            doc.insert(k, v);
        }
    }
    Value::Object(doc.into_iter().collect())
}

/// Pretty-printed document with a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn generators_output(gens: &Generators) -> (Value, String) {
    let mut families = Vec::new();
    let mut text = String::new();
    for family in gens.families() {
        text.push_str(&format!("# family {}\n", family.tag.letter()));
        for m in &family.members {
            text.push_str(&format!("{m}\n"));
        }
        families.push(json!({
            "family": family.tag.letter().to_string(),
            "count": family.members.len().to_string(),
            "members": Value::Array(
                family.members.iter().map(|m| vertices_json(m.vertices())).collect()
            ),
        }));
    }
    let payload = json!({
        "generator_count": gens.len().to_string(),
        "families": families,
    });
    (payload, text)
}

pub fn facets_output(facets: &[FacetProfile], with_profiles: bool) -> (Value, String) {
    let mut rows = Vec::new();
    let mut text = String::new();
    for f in facets {
        let set = f.vertex_set();
        let line = set
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("*");
        let mut entry = BTreeMap::new();
        entry.insert("vertices".to_string(), vertices_json(&set));
        if with_profiles {
            entry.insert("profile".to_string(), profile_json(f));
            text.push_str(&format!(
                "{line} | mu=({},{}) x={} yu={} yl={}\n",
                f.mu().row,
                f.mu().col,
                f.x_path().step_string(),
                f.y_upper().step_string(),
                f.y_lower().step_string(),
            ));
        } else {
            text.push_str(&line);
            text.push('\n');
        }
        rows.push(Value::Object(entry.into_iter().collect()));
    }
    let payload = json!({
        "facet_count": facets.len().to_string(),
        "facets": rows,
    });
    let text = format!("facet_count: {}\n{}", facets.len(), text);
    (payload, text)
}

pub fn oracle_output(census: &FaceCensus) -> (Value, String) {
    let f_vec: Vec<String> = census.f_vector().iter().map(|c| c.to_string()).collect();
    let facets: Vec<Value> = census.facets.iter().map(vertices_json).collect();
    let payload = json!({
        "f_vector": f_vec,
        "face_count": census.face_count().to_string(),
        "facet_count": census.facets.len().to_string(),
        "facets": facets,
    });
    let mut text = format!(
        "face_count: {}\nfacet_count: {}\nf_vector: {}\n",
        census.face_count(),
        census.facets.len(),
        f_vec.join(" ")
    );
    for facet in &census.facets {
        text.push_str(
            &facet
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("*"),
        );
        text.push('\n');
    }
    (payload, text)
}

pub fn count_output(sum: &BigUint, closed: &BigUint, dimension: u32) -> (Value, String) {
    let agree = sum == closed;
    let payload = json!({
        "sum_formula": sum.to_string(),
        "closed_form": closed.to_string(),
        "agree": agree,
        "krull_dimension": dimension,
    });
    let text = format!(
        "sum_formula: {sum}\nclosed_form: {closed}\nagree: {agree}\nkrull_dimension: {dimension}\n"
    );
    (payload, text)
}

pub fn check_output(oracle_count: usize, structured_count: usize, equal: bool) -> (Value, String) {
    let payload = json!({
        "oracle_facets": oracle_count.to_string(),
        "structured_facets": structured_count.to_string(),
        "equal": equal,
    });
    let text = format!(
        "oracle_facets: {oracle_count}\nstructured_facets: {structured_count}\nequal: {equal}\n"
    );
    (payload, text)
}

fn witness_case_name(w: &ShellingWitness) -> String {
    use crate::shelling::WitnessCase::*;
    match w.case {
        PivotStep { special: false } => "pivot_step".to_string(),
        PivotStep { special: true } => "pivot_step_special".to_string(),
        XCornerFlip => "x_corner_flip".to_string(),
        UpperCornerFlip { cascade: false } => "upper_corner_flip".to_string(),
        UpperCornerFlip { cascade: true } => "upper_corner_flip_cascade".to_string(),
        LowerCornerFlip => "lower_corner_flip".to_string(),
    }
}

pub fn shelling_output(
    order: &ShellingOrder,
    report: &VerifyReport,
    witnesses: &[(usize, usize, ShellingWitness)],
    witnesses_validated: bool,
) -> (Value, String) {
    let index_of: BTreeMap<_, usize> = order
        .vertex_sets()
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let witness_rows: Vec<Value> = witnesses
        .iter()
        .map(|(earlier, later, w)| {
            json!({
                "earlier": earlier,
                "later": later,
                "vertex": serde_json::to_value(VertexJson::from(w.pivot_vertex))
                    .expect("serializable"),
                "intermediate": index_of[&w.intermediate.vertex_set()],
                "case": witness_case_name(w),
            })
        })
        .collect();
    let payload = json!({
        "facets": report.facet_count.to_string(),
        "pairs_checked": report.pairs_checked.to_string(),
        "verified": report.is_shelling(),
        "failure": report.failure.map(|f| json!({
            "later": f.later,
            "earlier": f.earlier,
        })),
        "witnesses_validated": witnesses_validated,
        "witnesses": witness_rows,
    });
    let text = format!(
        "facets: {}, pairs_checked: {}, witnesses_validated: {}\nverified: {}\n",
        report.facet_count,
        report.pairs_checked,
        witnesses_validated,
        report.is_shelling(),
    );
    (payload, text)
}

pub fn hvector_output(h: &[BigUint]) -> (Value, String) {
    let entries: Vec<String> = h.iter().map(|x| x.to_string()).collect();
    let sum: BigUint = h.iter().sum();
    let payload = json!({
        "h_vector": entries,
        "sum": sum.to_string(),
    });
    let text = format!("h: {}\nsum: {sum}\n", entries.join(" "));
    (payload, text)
}
