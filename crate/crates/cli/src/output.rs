//! Serializable report documents, one per command.
//!
//! Field order in the unsorted JSON rendering follows struct declaration
//! order; `--sorted-keys` re-serializes through `serde_json::Value`, whose
//! map is a `BTreeMap`, giving alphabetically sorted, byte-stable output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use bott_limit::classify::{ClassificationReport, ConditionReport};
use bott_limit::curves::{CurveClass, MoriIndexSet};
use bott_limit::selftest::SelfTestReport;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RayEntry {
    pub ray: String,
    pub vector: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanReport {
    pub command: String,
    pub word_length: usize,
    pub rays: Vec<RayEntry>,
    pub maximal_cones: u64,
    pub smooth: bool,
    pub smoothness_method: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixReport {
    pub command: String,
    pub word_length: usize,
    pub entries: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositionJson {
    pub position: usize,
    pub holds: bool,
    pub clause: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConditionJson {
    pub holds: bool,
    pub positions: Vec<PositionJson>,
}

impl From<&ConditionReport> for ConditionJson {
    fn from(report: &ConditionReport) -> Self {
        ConditionJson {
            holds: report.holds,
            positions: report
                .positions
                .iter()
                .map(|p| PositionJson {
                    position: p.position,
                    holds: p.holds,
                    clause: p.clause.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscrepancyJson {
    pub claim: String,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyReport {
    pub command: String,
    pub word_length: usize,
    pub condition_i: ConditionJson,
    pub condition_ii: ConditionJson,
    pub fano_semantic: bool,
    pub weak_fano_semantic: bool,
    pub d_values: Vec<i64>,
    pub mori_rays: Vec<bool>,
    pub discrepancies: Vec<DiscrepancyJson>,
    pub notes: Vec<String>,
}

impl ClassifyReport {
    pub fn from_report(word_length: usize, report: &ClassificationReport) -> Self {
        ClassifyReport {
            command: "classify".to_string(),
            word_length,
            condition_i: (&report.condition_i).into(),
            condition_ii: (&report.condition_ii).into(),
            fano_semantic: report.fano_semantic,
            weak_fano_semantic: report.weak_fano_semantic,
            d_values: report.d_values.clone(),
            mori_rays: report.mori_rays.clone(),
            discrepancies: report
                .discrepancies
                .iter()
                .map(|d| DiscrepancyJson {
                    claim: d.claim.clone(),
                    source: d.source.clone(),
                })
                .collect(),
            notes: report.notes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorVerdictReport {
    pub command: String,
    pub word_length: usize,
    pub d_values: Vec<i64>,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceJson {
    pub level: usize,
    pub index: usize,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoriClassEntry {
    pub position: usize,
    pub index_set: Vec<usize>,
    pub a_trace: Vec<TraceJson>,
    pub intersections: BTreeMap<String, i64>,
    pub mori_ray: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoriReport {
    pub command: String,
    pub word_length: usize,
    pub classes: Vec<MoriClassEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallJson {
    pub signs: String,
    pub flip: usize,
    pub intersections: BTreeMap<String, i64>,
    pub in_basis: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntersectReport {
    pub command: String,
    pub word_length: usize,
    /// K·L_j for j = 1..r.
    pub k_dot_lines: Vec<i64>,
    pub walls: Vec<WallJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogFanoJson {
    pub command: String,
    pub word_length: usize,
    pub b: Vec<i64>,
    /// Exact rationals rendered as strings ("2" or "2/3").
    pub f: Vec<String>,
    pub log_fano: bool,
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvertReport {
    pub command: String,
    pub word_length: usize,
    /// `h_table[j-1][i-1]` = h_j^i.
    pub h_table: Vec<Vec<i64>>,
    pub g_values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckJson {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelfTestJson {
    pub command: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

impl SelfTestJson {
    pub fn from_report(seed: u64, report: &SelfTestReport) -> Self {
        SelfTestJson {
            command: "self-test".to_string(),
            seed,
            passed: report.passed(),
            checks: report
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name.clone(),
                    cases: c.cases,
                    failures: c.failures.clone(),
                })
                .collect(),
        }
    }
}

/// One emitted document; serializes as the inner report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Fan(FanReport),
    Matrix(MatrixReport),
    Classify(ClassifyReport),
    DivisorVerdict(DivisorVerdictReport),
    Mori(MoriReport),
    Intersect(IntersectReport),
    LogFano(LogFanoJson),
    Convert(ConvertReport),
    SelfTest(SelfTestJson),
}

/// Intersection functional as a `label -> value` map over nonzero entries.
pub fn class_to_map(class: &CurveClass) -> BTreeMap<String, i64> {
    class
        .nonzero()
        .into_iter()
        .map(|(ray, v)| (ray.to_string(), v))
        .collect()
}

pub fn trace_json(set: &MoriIndexSet) -> Vec<TraceJson> {
    set.trace
        .iter()
        .map(|t| TraceJson {
            level: t.level,
            index: t.index,
            value: t.value,
        })
        .collect()
}

/// Pretty JSON; `sorted` re-keys every object alphabetically.
pub fn render_json(report: &Report, sorted: bool) -> serde_json::Result<String> {
    if sorted {
        let value = serde_json::to_value(report)?;
        serde_json::to_string_pretty(&value)
    } else {
        serde_json::to_string_pretty(report)
    }
}

/// Compact single-line JSON for batch output.
pub fn render_json_line(report: &Report, sorted: bool) -> serde_json::Result<String> {
    if sorted {
        let value = serde_json::to_value(report)?;
        serde_json::to_string(&value)
    } else {
        serde_json::to_string(report)
    }
}
