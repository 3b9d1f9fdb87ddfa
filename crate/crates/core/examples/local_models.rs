//! Lists the local singularity models and re-derives each one's relations
//! from its braid, comparing against the published set by invariants.
//!
//! ```text
//! cargo run --example local_models
//! ```

use conic_pi1::braid::braid_permutation;
use conic_pi1::invariants::{invariant_bundle, Target};
use conic_pi1::local_models::{generalized_tangency, induced_relations, list_models};
use conic_pi1::word::Presentation;

fn main() {
    for m in list_models() {
        let induced = induced_relations(m);
        let ours = invariant_bundle(&induced, &Target::DEFAULT).unwrap();
        let theirs = invariant_bundle(&m.paper_presentation(), &Target::DEFAULT).unwrap();
        println!("{} ({} strands, {})", m.id, m.strands, m.provenance);
        println!("  equation     {}", m.equation);
        println!("  braid        {}", m.braid);
        println!("  half braid   {}", m.half_braid);
        println!("  permutation  {}", braid_permutation(&m.braid));
        println!("  relations    {}", m.published_relations);
        println!("  invariants   {} [{}]", ours, if ours.same_group_invariants(&theirs) { "match" } else { "MISMATCH" });
    }

    println!();
    for n in 2..=5 {
        let (braid, relators) = generalized_tangency(n).unwrap();
        let p = Presentation::new(n, relators).unwrap();
        println!("{} branches tangent at a point: braid {}, {} relators", n, braid, p.relators().len());
    }
}
