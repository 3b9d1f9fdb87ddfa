//! Pairwise comparison matrices for the catalog's one-line and two-line
//! families, with the witness for every separated pair.

use conic_pi1::catalog::{comparison_matrix, family_names, matrix_table};
use conic_pi1::invariants::ComparisonVerdict;

fn main() {
    for name in family_names() {
        let m = comparison_matrix(&name).unwrap();
        print!("{}", matrix_table(&m));
        for (i, row) in m.verdicts.iter().enumerate() {
            for (j, v) in row.iter().enumerate().filter(|&(j, _)| j > i) {
                if let ComparisonVerdict::Distinct { witness } = v {
                    println!("    {} / {}: {}", i + 1, j + 1, witness);
                }
            }
        }
        println!("  separated: {}\n", m.pairwise_separated());
    }
}
