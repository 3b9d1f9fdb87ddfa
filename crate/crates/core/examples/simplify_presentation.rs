//! Simplifies a published van Kampen presentation and prints the Tietze
//! moves that got there. Pass a catalog id to pick another one.
//!
//! ```text
//! cargo run --release --example simplify_presentation -- two-lines-4
//! ```

use conic_pi1::catalog::{get_entry, source_presentation};
use conic_pi1::word::{simplify, TietzeMove};

fn main() {
    let id = std::env::args().nth(1).unwrap_or_else(|| "one-line-simple-tangency".into());
    let entry = get_entry(&id).unwrap();
    let p = source_presentation(entry).unwrap().expect("entry has a source presentation");
    println!("{} ({})\n{}", entry.id, entry.description, p.to_text());

    let s = simplify(&p, 10_000).unwrap();
    for (i, mv) in s.trace.iter().enumerate() {
        let line = match mv {
            TietzeMove::EliminateGenerator { generator, definition } => format!("eliminate x{} = {}", generator.index(), definition),
            TietzeMove::RemoveRelator { index, reason } => format!("remove relator {} ({})", index + 1, reason),
            TietzeMove::AddConsequence { relator, derivation } => format!("add {} ({})", relator, derivation),
            TietzeMove::RenameGenerators { map } => format!("rename {:?}", map),
            TietzeMove::AddGenerator { definition, label } => format!("add generator {} = {}", label, definition),
        };
        println!("{:>3}. {}", i + 1, line);
    }
    println!("\nresult:\n{}", s.presentation.to_text());
    assert_eq!(p.replay(&s.trace).unwrap(), s.presentation);
}
