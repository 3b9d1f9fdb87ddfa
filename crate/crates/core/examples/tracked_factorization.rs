//! Tracks the braid monodromy of a whole real curve, here a hyperbola and
//! an ellipse tangent to it at two points, and checks the result against
//! the table-assembled factorization.

use conic_pi1::braid::same_action;
use conic_pi1::invariants::compare;
use conic_pi1::tracker::{singular_values, CurvePoly};
use conic_pi1::van_kampen::{assemble, parse_table, present, tracked_factorization};

fn main() {
    let curve = CurvePoly::parse("(x^2 - y^2 - 1)*(x^2 - y^2 - 1 + 2*(y - x/10 - 3/10)^2)").unwrap();
    let sv: Vec<f64> = singular_values(&curve).unwrap().iter().map(|z| z.re).collect();
    println!("singular values: {:.4?}", sv);

    let tracked = tracked_factorization(&curve).unwrap();
    let (n, rows) = parse_table(include_str!("../data/two_conics_table.txt")).unwrap();
    let table = assemble(&rows, n).unwrap();
    for (i, (t, a)) in tracked.factors().iter().zip(table.factors()).enumerate() {
        println!("{}: tracked {:<28} table {:<28} same action: {}", i + 1, t.to_string(), a.to_string(), same_action(t, a));
    }
    let verdict = compare(&present(&tracked, true), &present(&table, true)).unwrap();
    println!("tracked vs table presentations: {}", verdict.label());
}
