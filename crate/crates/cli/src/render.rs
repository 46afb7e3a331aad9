use std::fmt::Write;

use fricke::geometry::{format_rational, format_rationals, ProjectivePoint, QuadraticRoot, Rational};
use fricke::sections::SectionPoint;
use fricke::tree::{FrobeniusReport, TreeNode};
use fricke::ComposeResult;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::Format;

pub struct Output {
    json: Value,
    plain: String,
    dot: Option<String>,
    pub failed: bool,
}

impl Output {
    pub fn json_and_plain(json: Value, plain: String) -> Self {
        Self { json, plain, dot: None, failed: false }
    }

    pub fn failed(mut self, failed: bool) -> Self {
        self.failed = failed;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json.to_string(),
            Format::Plain => self.plain.clone(),
            Format::Dot => self.dot.clone().unwrap_or_default(),
        }
    }
}

fn strings(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(format_rational(v))).collect())
}

fn ints(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

fn join(values: &[BigInt]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn triple(coords: &[Rational; 3]) -> Output {
    Output::json_and_plain(json!({ "result": strings(coords) }), format!("({})", format_rationals(coords)))
}

pub fn rational(v: &Rational) -> Output {
    Output::json_and_plain(json!({ "result": format_rational(v) }), format_rational(v))
}

pub fn projective<const N: usize>(p: &ProjectivePoint<N>) -> Output {
    Output::json_and_plain(json!({ "result": p.to_string() }), p.to_string())
}

pub fn section_point(p: &SectionPoint) -> Output {
    Output::json_and_plain(json!({ "result": strings(&[p.x.clone(), p.z.clone()]) }), p.to_string())
}

pub fn compose(r: ComposeResult<[Rational; 3]>) -> Output {
    match r {
        ComposeResult::Finite(coords) => triple(&coords),
        ComposeResult::Infinite(p) => {
            Output::json_and_plain(json!({ "result": "infinity", "point": p.to_string() }), format!("infinity {p}"))
        }
        ComposeResult::Undefined(reason) => Output::json_and_plain(
            json!({ "result": "undefined", "reason": reason.code() }),
            format!("undefined {}", reason.code()),
        ),
    }
}

pub fn quadratic_roots(roots: &[QuadraticRoot; 2]) -> Output {
    let values: Vec<String> = roots.iter().map(ToString::to_string).collect();
    Output::json_and_plain(json!({ "result": values }), values.join("\n"))
}

pub fn tree(nodes: &[TreeNode]) -> Output {
    let entries: Vec<Value> = nodes
        .iter()
        .map(|n| {
            json!({
                "triple": ints(&n.triple),
                "depth": n.depth,
                "parent": n.parent.as_ref().map(|p| ints(p)),
                "move": n.edge.map(|e| e.to_string()),
            })
        })
        .collect();
    let mut plain = String::new();
    let mut dot = String::from("digraph tree {\n");
    for n in nodes {
        let id = join(&n.triple);
        writeln!(plain, "{} ({id})", n.depth).unwrap();
        writeln!(dot, "  \"{id}\" [label=\"({id})\"];").unwrap();
        if let (Some(parent), Some(edge)) = (&n.parent, n.edge) {
            writeln!(dot, "  \"{}\" -> \"{id}\" [label=\"{edge}\"];", join(parent)).unwrap();
        }
    }
    dot.push('}');
    Output { json: json!({ "result": entries }), plain: plain.trim_end().to_owned(), dot: Some(dot), failed: false }
}

pub fn frobenius(report: &FrobeniusReport) -> Output {
    let groups: Vec<Value> = report
        .by_largest
        .iter()
        .map(|(k, v)| json!({ "largest": k.to_string(), "triples": v.iter().map(|t| ints(t)).collect::<Vec<_>>() }))
        .collect();
    let duplicates: Vec<String> = report.duplicates().iter().map(|(k, _)| k.to_string()).collect();
    let plain = format!(
        "{} triples, {} distinct largest components, duplicates: {}",
        report.triple_count(),
        report.by_largest.len(),
        if duplicates.is_empty() { "none".to_owned() } else { duplicates.join(",") }
    );
    Output::json_and_plain(
        json!({ "result": { "triples": report.triple_count(), "groups": groups, "duplicates": duplicates } }),
        plain,
    )
}
