//! Abelianization and homomorphism counts for a handful of small groups.

use conic_pi1::invariants::{abelianization, count_homs, invariant_bundle, smith_normal_form, exponent_matrix, FiniteGroup, Target};
use conic_pi1::word::{parse_relations, Presentation};

fn main() {
    let groups = [
        ("F2", 2, ""),
        ("<a,b | (ab)^2 = (ba)^2>", 2, "(x1 x2)^2 = (x2 x1)^2"),
        ("two-conic group", 2, "(x1 x2)^2 = (x2 x1)^2 = e"),
        ("Z + F2", 3, "[x1, x3]; [x2, x3]"),
        ("Z/2 * Z/3", 2, "x1^2; x2^3"),
        ("B3", 2, "x1 x2 x1 = x2 x1 x2"),
    ];
    let s5 = FiniteGroup::symmetric(5);
    for (name, n, rels) in groups {
        let p = Presentation::new(n, parse_relations(rels).unwrap()).unwrap();
        let snf = smith_normal_form(&exponent_matrix(&p));
        println!("{}", name);
        println!("  SNF diagonal {:?}", snf.diagonal.iter().map(|d| d.to_string()).collect::<Vec<_>>());
        println!("  H1 = {}", abelianization(&p));
        println!("  {}", invariant_bundle(&p, &Target::DEFAULT).unwrap());
        println!("  |Hom(-, S5)| = {}", count_homs(&p, &s5).unwrap());
    }
}
