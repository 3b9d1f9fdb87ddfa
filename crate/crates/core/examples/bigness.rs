//! Certificates that arrangement groups surject onto Z/2 * Z/3, so contain
//! free subgroups of rank 2.

use conic_pi1::catalog::{entries, source_presentation};
use conic_pi1::invariants::bigness_certificate;

fn main() {
    for e in entries() {
        let p = source_presentation(e).unwrap().unwrap_or_else(|| e.expected.clone());
        match bigness_certificate(&p, &e.bigness) {
            Ok(c) if e.id == "two-conics" => println!("{}:\n{}\n", e.id, c.script()),
            Ok(c) => println!("{}: {}", e.id, c.steps[0].note),
            Err(err) => println!("{}: {}", e.id, err),
        }
    }
}
