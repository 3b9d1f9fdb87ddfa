//! The two-conic arrangement end to end: assemble the braid monodromy from
//! its Lefschetz table, present it, simplify, and compare with the expected
//! group.

use conic_pi1::braid::{full_twist, same_action};
use conic_pi1::invariants::{compare, invariant_bundle, Target};
use conic_pi1::van_kampen::{assemble, parse_table, present, table_to_text};
use conic_pi1::word::{parse_relations, simplify, Presentation};

fn main() {
    let (n, rows) = parse_table(include_str!("../data/two_conics_table.txt")).unwrap();
    print!("{}", table_to_text(n, &rows));

    let f = assemble(&rows, n).unwrap();
    for (i, b) in f.factors().iter().enumerate() {
        println!("factor {}: {}", i + 1, b);
    }
    println!("product is the full twist: {}", same_action(&f.product(), &full_twist(n, 1, n).unwrap()));

    let p = present(&f, true);
    println!("\nvan Kampen presentation: {} generators, {} relators", p.ngen(), p.relators().len());
    let s = simplify(&p, 10_000).unwrap();
    println!("simplified in {} moves:\n{}", s.trace.len(), s.presentation.to_text());

    let expected = Presentation::new(2, parse_relations("(x1 x2)^2 = (x2 x1)^2 = e").unwrap()).unwrap();
    println!("invariants: {}", invariant_bundle(&s.presentation, &Target::DEFAULT).unwrap());
    println!("versus <x1, x2 | (x1 x2)^2 = (x2 x1)^2 = e>: {}", compare(&s.presentation, &expected).unwrap().label());
}
