//! Fixed-width text and JSON renderings of verification results.

use super::{ComparisonMatrix, VerificationReport};

pub fn report_table(reports: &[VerificationReport]) -> String {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = format!("{:<width$}  {:<6}  {:<14}  {}\n", "id", "result", "verdict", "stages", width = width);
    for r in reports {
        let stages: Vec<String> = r
            .stages
            .iter()
            .map(|s| format!("{}:{}", serde_json::to_value(s.stage).unwrap().as_str().unwrap(), if s.passed { "ok" } else { "FAIL" }))
            .collect();
        out.push_str(&format!(
            "{:<width$}  {:<6}  {:<14}  {}\n",
            r.id,
            if r.passed() { "PASS" } else { "FAIL" },
            format!("{:?}", r.verdict),
            stages.join(" "),
            width = width
        ));
    }
    out
}

pub fn report_json(reports: &[VerificationReport], matrices: &[ComparisonMatrix]) -> String {
    let doc = serde_json::json!({ "entries": reports, "matrices": matrices });
    serde_json::to_string_pretty(&doc).expect("reports serialize")
}

pub fn matrix_table(m: &ComparisonMatrix) -> String {
    let width = m.ids.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out = format!("{}:\n", m.family);
    for (i, id) in m.ids.iter().enumerate() {
        let cells: Vec<String> = m.verdicts[i].iter().map(|v| format!("{:<12}", v.label())).collect();
        out.push_str(&format!("  {}. {:<width$}  {}\n", i + 1, id, cells.join(" ").trim_end(), width = width));
    }
    out
}
