//! Report types and their JSON, CSV and text renderings.
//!
//! Wall-clock times are kept out of JSON and CSV so that reports from
//! different runs and worker counts compare byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Generators of the offending subgroup, e.g. `<(1 2)(3 4)>`.
    pub subgroup: String,
    pub order: usize,
    pub class_size: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroups: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<usize>,
    pub classes_checked: usize,
    pub elements_checked: usize,
    /// Rows whose two independent computations disagreed.
    pub self_check_failures: usize,
    #[serde(skip)]
    pub wall_time: Duration,
}

/// Outcome of one verification target on one group.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationResult {
    pub target: String,
    pub group: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub stats: Stats,
    /// Observations that differ from the expected proof steps; these never
    /// change the status.
    pub notes: Vec<String>,
}

impl VerificationResult {
    pub fn new(target: &str, group: &str) -> Self {
        VerificationResult {
            target: target.to_string(),
            group: group.to_string(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            counterexamples: Vec::new(),
            stats: Stats::default(),
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    /// Sets the status from the counterexample list.
    pub fn finish(mut self, elapsed: Duration) -> Self {
        self.stats.wall_time = elapsed;
        if self.status != Status::Skipped {
            self.status = if self.counterexamples.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            };
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// `target[group]`, used when listing failures.
    pub fn label(&self) -> String {
        format!("{}[{}]", self.target, self.group)
    }
}

/// Serialized rows of a generating-pair classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub rep_generators: Vec<String>,
    pub subgroup_order: usize,
    pub class_size: usize,
    pub is_ff: bool,
    pub cover_size: usize,
    pub generating_count: usize,
    pub lemma13_consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub ambient: String,
    pub order: u128,
    pub classes: Vec<ClassRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupRecord {
    pub index: usize,
    pub order: usize,
    pub generators: Vec<String>,
    pub maximal: bool,
    pub class_id: usize,
    pub type_label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrattiniRecord {
    pub index: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeExport {
    pub ambient: String,
    pub order: u128,
    pub subgroup_count: usize,
    pub subgroups: Vec<SubgroupRecord>,
    pub frattini: FrattiniRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OvergroupRecord {
    pub order: usize,
    pub generators: Vec<String>,
    pub type_label: String,
    pub structure: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub ambient: String,
    pub order: u128,
    pub subgroup: Vec<String>,
    pub subgroup_order: u128,
    pub overgroups: Vec<OvergroupRecord>,
    pub cover_size: usize,
    pub is_ff: bool,
    pub generating_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuestionCandidate {
    pub group: Vec<String>,
    pub group_order: usize,
    pub subgroup: Vec<String>,
    pub subgroup_order: usize,
    /// Conjugates of the subgroup inside the group.
    pub class_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuestionReport {
    pub max_degree: usize,
    pub max_order: u128,
    /// Conjugacy classes of subgroups of the symmetric group that were looked at.
    pub groups_scanned: usize,
    pub two_generated: usize,
    pub candidates: Vec<QuestionCandidate>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<()>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w)?;
    let bytes = w
        .into_inner()
        .map_err(|e| HarnessError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn results_csv(results: &[VerificationResult]) -> Result<String> {
    csv_string(|w| {
        w.write_record([
            "target",
            "group",
            "parameters",
            "status",
            "counterexamples",
            "classes_checked",
            "elements_checked",
            "self_check_failures",
            "notes",
        ])?;
        for r in results {
            w.write_record([
                r.target.clone(),
                r.group.clone(),
                serde_json::to_string(&r.parameters)?,
                r.status.as_str().to_string(),
                r.counterexamples
                    .iter()
                    .map(|c| c.subgroup.as_str())
                    .collect::<Vec<_>>()
                    .join(" "),
                r.stats.classes_checked.to_string(),
                r.stats.elements_checked.to_string(),
                r.stats.self_check_failures.to_string(),
                r.notes.join(" | "),
            ])?;
        }
        Ok(())
    })
}

pub fn results_text(results: &[VerificationResult]) -> String {
    let mut out = String::new();
    for r in results {
        let params: Vec<String> = r
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = write!(
            out,
            "{:<7} {} [{}] {}",
            r.status.as_str().to_uppercase(),
            r.target,
            r.group,
            params.join(" ")
        );
        if let Some(s) = r.stats.subgroups {
            let _ = write!(out, " subgroups={s}");
        }
        let _ = writeln!(
            out,
            " classes_checked={} elements_checked={} time={:.2}s",
            r.stats.classes_checked,
            r.stats.elements_checked,
            r.stats.wall_time.as_secs_f64()
        );
        for c in &r.counterexamples {
            let _ = writeln!(
                out,
                "        counterexample {} order={} class_size={}: {}",
                c.subgroup, c.order, c.class_size, c.reason
            );
        }
        for n in &r.notes {
            let _ = writeln!(out, "        note: {n}");
        }
    }
    out
}

pub fn render_results(results: &[VerificationResult], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&results),
        Format::Csv => results_csv(results),
        Format::Text => Ok(results_text(results)),
    }
}

pub fn classification_csv(report: &ClassificationReport) -> Result<String> {
    csv_string(|w| {
        w.write_record([
            "rep_generators",
            "subgroup_order",
            "class_size",
            "is_ff",
            "cover_size",
            "generating_count",
            "lemma13_consistent",
        ])?;
        for c in &report.classes {
            w.write_record([
                c.rep_generators.join(", "),
                c.subgroup_order.to_string(),
                c.class_size.to_string(),
                c.is_ff.to_string(),
                c.cover_size.to_string(),
                c.generating_count.to_string(),
                c.lemma13_consistent.to_string(),
            ])?;
        }
        Ok(())
    })
}

pub fn render_classification(report: &ClassificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => classification_csv(report),
        Format::Text => {
            let mut out = format!("{} (order {})\n", report.ambient, report.order);
            for c in &report.classes {
                let _ = writeln!(
                    out,
                    "  <{}> order={} class_size={} ff={} cover={} generating={} consistent={}",
                    c.rep_generators.join(", "),
                    c.subgroup_order,
                    c.class_size,
                    c.is_ff,
                    c.cover_size,
                    c.generating_count,
                    c.lemma13_consistent
                );
            }
            Ok(out)
        }
    }
}

pub fn render_cover(report: &CoverReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => csv_string(|w| {
            w.write_record(["overgroup", "order", "type_label", "structure"])?;
            for o in &report.overgroups {
                w.write_record([
                    o.generators.join(", "),
                    o.order.to_string(),
                    o.type_label.clone(),
                    o.structure.clone(),
                ])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut out = format!(
                "group {} order {}\nsubgroup <{}> order {}\n",
                report.ambient,
                report.order,
                report.subgroup.join(", "),
                report.subgroup_order
            );
            let _ = writeln!(out, "maximal overgroups: {}", report.overgroups.len());
            for o in &report.overgroups {
                let _ = writeln!(
                    out,
                    "  <{}> order={} type={} structure={}",
                    o.generators.join(", "),
                    o.order,
                    o.type_label,
                    o.structure
                );
            }
            let _ = writeln!(out, "cover size: {}", report.cover_size);
            let _ = writeln!(out, "FF: {}", report.is_ff);
            let _ = writeln!(out, "generating elements: {}", report.generating_count);
            Ok(out)
        }
    }
}

pub fn render_question(report: &QuestionReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => csv_string(|w| {
            w.write_record([
                "group",
                "group_order",
                "subgroup",
                "subgroup_order",
                "class_size",
            ])?;
            for c in &report.candidates {
                w.write_record([
                    c.group.join(", "),
                    c.group_order.to_string(),
                    c.subgroup.join(", "),
                    c.subgroup_order.to_string(),
                    c.class_size.to_string(),
                ])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut out = format!(
                "degree <= {}, order <= {}: {} subgroup classes scanned, {} two-generated\n",
                report.max_degree, report.max_order, report.groups_scanned, report.two_generated
            );
            if report.candidates.is_empty() {
                out.push_str("no candidate found\n");
            }
            for c in &report.candidates {
                let _ = writeln!(
                    out,
                    "candidate: G = <{}> (order {}), H = <{}> (order {}, class size {})",
                    c.group.join(", "),
                    c.group_order,
                    c.subgroup.join(", "),
                    c.subgroup_order,
                    c.class_size
                );
            }
            for n in &report.notes {
                let _ = writeln!(out, "note: {n}");
            }
            Ok(out)
        }
    }
}

pub fn render_lattice(export: &LatticeExport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(export),
        Format::Csv => csv_string(|w| {
            w.write_record([
                "index",
                "order",
                "generators",
                "maximal",
                "class_id",
                "type_label",
            ])?;
            for s in &export.subgroups {
                w.write_record([
                    s.index.to_string(),
                    s.order.to_string(),
                    s.generators.join(", "),
                    s.maximal.to_string(),
                    s.class_id.to_string(),
                    s.type_label.clone(),
                ])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut out = format!(
                "{} (order {}): {} subgroups, Frattini <{}> of order {}\n",
                export.ambient,
                export.order,
                export.subgroup_count,
                export.frattini.generators.join(", "),
                export.frattini.order
            );
            for s in &export.subgroups {
                let _ = writeln!(
                    out,
                    "  #{} order={} class={} {}{} <{}>",
                    s.index,
                    s.order,
                    s.class_id,
                    s.type_label,
                    if s.maximal { " maximal" } else { "" },
                    s.generators.join(", ")
                );
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_counterexamples() {
        let r = VerificationResult::new("t", "G").finish(Duration::ZERO);
        assert_eq!(r.status, Status::Pass);
        let mut r = VerificationResult::new("t", "G");
        r.counterexamples.push(Counterexample {
            subgroup: "<(1 2)>".into(),
            order: 2,
            class_size: 1,
            reason: "not FF".into(),
        });
        r.notes.push("a note".into());
        let r = r.finish(Duration::ZERO);
        assert_eq!(r.status, Status::Fail);
        assert!(!r.passed());
    }

    #[test]
    fn json_omits_timing() {
        let mut r = VerificationResult::new("t", "G").param("n", 3);
        r.stats.wall_time = Duration::from_secs(5);
        let a = to_json(&[r.clone()]).unwrap();
        r.stats.wall_time = Duration::from_millis(1);
        assert_eq!(a, to_json(&[r.clone()]).unwrap());
        assert!(!a.contains("wall"));
        assert!(results_text(&[r]).contains("time="));
    }

    #[test]
    fn csv_has_header_and_rows() {
        let r = VerificationResult::new("t", "G")
            .param("n", 3)
            .finish(Duration::ZERO);
        let csv = results_csv(&[r]).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("target,group,parameters,status"));
        assert!(lines[1].starts_with("t,G,"));
    }
}
