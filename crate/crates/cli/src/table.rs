//! Human-readable rendering of the report documents. Tables only ever go to
//! stdout as the sole output of a run; they are never mixed with JSON.

use crate::output::{
    ClassifyReport, ConditionJson, ConvertReport, DivisorVerdictReport, FanReport, IntersectReport,
    LogFanoJson, MatrixReport, MoriReport, Report, SelfTestJson,
};

pub fn render(report: &Report) -> String {
    match report {
        Report::Fan(r) => fan(r),
        Report::Matrix(r) => matrix(r),
        Report::Classify(r) => classify(r),
        Report::DivisorVerdict(r) => divisor_verdict(r),
        Report::Mori(r) => mori(r),
        Report::Intersect(r) => intersect(r),
        Report::LogFano(r) => log_fano(r),
        Report::Convert(r) => convert(r),
        Report::SelfTest(r) => self_test(r),
    }
}

fn int_row(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:>4}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn fan(r: &FanReport) -> String {
    let mut out = format!("fan of a Bott tower, dimension {}\n", r.word_length);
    out.push_str("ray   vector\n");
    for entry in &r.rays {
        out.push_str(&format!("{:<5} {}\n", entry.ray, int_row(&entry.vector)));
    }
    out.push_str(&format!("maximal cones: {}\n", r.maximal_cones));
    out.push_str(&format!("smooth: {} ({})\n", r.smooth, r.smoothness_method));
    out
}

fn matrix(r: &MatrixReport) -> String {
    let mut out = format!("pairing matrix, r = {}\n", r.word_length);
    for row in &r.entries {
        out.push_str(&int_row(row));
        out.push('\n');
    }
    out
}

fn condition(label: &str, c: &ConditionJson) -> String {
    let mut out = format!("{label}: {}\n", c.holds);
    for p in &c.positions {
        out.push_str(&format!(
            "  position {}: {} ({})\n",
            p.position,
            if p.holds { "ok" } else { "FAILS" },
            p.clause
        ));
    }
    out
}

fn classify(r: &ClassifyReport) -> String {
    let mut out = format!("classification, r = {}\n", r.word_length);
    out.push_str(&condition("condition I ", &r.condition_i));
    out.push_str(&condition("condition II", &r.condition_ii));
    out.push_str(&format!("fano (ample -K)     : {}\n", r.fano_semantic));
    out.push_str(&format!("weak fano (nef -K)  : {}\n", r.weak_fano_semantic));
    out.push_str(&format!("d values            : {}\n", int_row(&r.d_values)));
    out.push_str(&format!(
        "mori rays           : {}\n",
        r.mori_rays
            .iter()
            .map(|&b| if b { "yes" } else { "no" })
            .collect::<Vec<_>>()
            .join(" ")
    ));
    if r.discrepancies.is_empty() {
        out.push_str("discrepancies       : none\n");
    } else {
        out.push_str("discrepancies:\n");
        for d in &r.discrepancies {
            out.push_str(&format!("  - {} ({})\n", d.claim, d.source));
        }
    }
    for note in &r.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

fn divisor_verdict(r: &DivisorVerdictReport) -> String {
    format!(
        "{} test, r = {}\nd values: {}\nverdict : {}\n",
        r.command,
        r.word_length,
        int_row(&r.d_values),
        r.verdict
    )
}

fn mori(r: &MoriReport) -> String {
    let mut out = format!("Mori cone data, r = {}\n", r.word_length);
    for class in &r.classes {
        out.push_str(&format!(
            "r(P_{}) index set {:?}  mori ray: {}\n",
            class.position, class.index_set, class.mori_ray
        ));
        if !class.a_trace.is_empty() {
            let trace: Vec<String> = class
                .a_trace
                .iter()
                .map(|t| format!("a({},{})={}", t.level, t.index, t.value))
                .collect();
            out.push_str(&format!("  trace: {}\n", trace.join(" ")));
        }
        let pairs: Vec<String> = class
            .intersections
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        out.push_str(&format!("  intersections: {}\n", pairs.join(" ")));
    }
    out
}

fn intersect(r: &IntersectReport) -> String {
    let mut out = format!("intersection numbers, r = {}\n", r.word_length);
    out.push_str("K . L_j:\n");
    for (j, v) in r.k_dot_lines.iter().enumerate() {
        out.push_str(&format!("  j={} : {v}\n", j + 1));
    }
    for wall in &r.walls {
        out.push_str(&format!("wall signs {} flip {}\n", wall.signs, wall.flip));
        let pairs: Vec<String> = wall
            .intersections
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        out.push_str(&format!("  intersections: {}\n", pairs.join(" ")));
        out.push_str(&format!("  in basis     : {}\n", int_row(&wall.in_basis)));
    }
    out
}

fn log_fano(r: &LogFanoJson) -> String {
    let mut out = format!("log-Fano test, r = {}\n", r.word_length);
    out.push_str(&format!("b values: {}\n", int_row(&r.b)));
    out.push_str(&format!("f values: {}\n", r.f.join(" ")));
    out.push_str(&format!("log Fano: {}\n", r.log_fano));
    if let Some(w) = r.witness {
        out.push_str(&format!("first nonpositive f at position {w}\n"));
    }
    out
}

fn convert(r: &ConvertReport) -> String {
    let mut out = format!("divisor conversion, r = {}\n", r.word_length);
    out.push_str("h table (row j, column i):\n");
    for row in &r.h_table {
        out.push_str(&format!("  {}\n", int_row(row)));
    }
    out.push_str(&format!("g values: {}\n", int_row(&r.g_values)));
    out
}

fn self_test(r: &SelfTestJson) -> String {
    let mut out = format!("self-test, seed {}\n", r.seed);
    for check in &r.checks {
        if check.failures.is_empty() {
            out.push_str(&format!(
                "{:<28} {:>5} cases  ok\n",
                check.name, check.cases
            ));
        } else {
            out.push_str(&format!(
                "{:<28} {:>5} cases  {} FAILURES\n",
                check.name,
                check.cases,
                check.failures.len()
            ));
            for failure in &check.failures {
                out.push_str(&format!("    {failure}\n"));
            }
        }
    }
    out.push_str(&format!("passed: {}\n", r.passed));
    out
}
