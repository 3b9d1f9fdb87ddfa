//! Runs every catalog entry through present, simplify, compare and bigness,
//! printing the report table, or JSON with `--json`.

use conic_pi1::catalog::{comparison_matrix, family_names, report_json, report_table, verify_all};

fn main() {
    let reports = verify_all().unwrap();
    if std::env::args().any(|a| a == "--json") {
        let matrices: Vec<_> = family_names().iter().map(|f| comparison_matrix(f).unwrap()).collect();
        println!("{}", report_json(&reports, &matrices));
    } else {
        print!("{}", report_table(&reports));
        let failed = reports.iter().filter(|r| !r.passed()).count();
        println!("\n{} entries, {} failed", reports.len(), failed);
    }
}
