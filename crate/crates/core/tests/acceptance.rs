//! End-to-end acceptance checks, one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use conic_pi1::braid::{artin_apply, same_action, BraidWord, GBase};
use conic_pi1::catalog::{comparison_matrix, entries, family, get_entry, source_presentation, verify};
use conic_pi1::invariants::{
    abelianization, bigness_certificate, compare, count_homs, exponent_matrix, invariant_bundle, smith_normal_form, AbelianInvariants,
    ComparisonVerdict, FiniteGroup, IntMatrix, Target,
};
use conic_pi1::local_models::{get_model, list_models};
use conic_pi1::tracker::{track, CurvePoly, LoopSpec};
use conic_pi1::van_kampen::{assemble, parse_table, present, Factorization};
use conic_pi1::word::{derive_trivial, parse_relations, simplify, Presentation, SearchLimits, Word};

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn pres(n: usize, rels: &str) -> Presentation {
    Presentation::new(n, parse_relations(rels).unwrap()).unwrap()
}

/// Local relations: each model's braid, presented affinely and simplified,
/// has the invariants of the published relation set.
fn local_relations() -> Outcome {
    let start = Instant::now();
    for m in list_models() {
        let f = Factorization::new(m.strands, vec![m.braid.clone()]).map_err(|e| e.to_string())?;
        let s = simplify(&present(&f, false), 10_000).map_err(|e| format!("{}: {}", m.id, e))?;
        let ours = invariant_bundle(&s.presentation, &Target::DEFAULT).map_err(|e| e.to_string())?;
        let theirs = invariant_bundle(&m.paper_presentation(), &Target::DEFAULT).map_err(|e| e.to_string())?;
        ensure(ours.same_group_invariants(&theirs), || format!("{}: {} vs {}", m.id, ours, theirs))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(5), || format!("took {:.2?}", t))?;
    Ok(format!("{} models invariant-equal in {:.2?}", list_models().len(), t))
}

fn timed_track(eq: &str, range: (f64, f64)) -> Result<(conic_pi1::tracker::TrackedBraid, Duration), String> {
    let p = CurvePoly::parse(eq).map_err(|e| e.to_string())?;
    let lp = LoopSpec::unit().with_samples(256).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let t = track(&p, &lp, range).map_err(|e| format!("{}: {}", eq, e))?;
    let el = start.elapsed();
    ensure(el < Duration::from_secs(10), || format!("{} took {:.2?}", eq, el))?;
    Ok((t, el))
}

/// Tracker calibration on the branch point, the conic tangency and the
/// rotation-type point.
fn tracker_calibration() -> Outcome {
    let br = |n, s| BraidWord::parse(n, s).unwrap();
    let (branch, _) = timed_track("y^2 - x", (0.0, 1.0))?;
    ensure(same_action(&branch.braid, &br(2, "s1")), || format!("branch point gave {}", branch.braid))?;
    let (full, _) = timed_track("(y + x^2)*(y - x^2)", (0.0, 1.0))?;
    ensure(same_action(&full.braid, &br(2, "s1^4")), || format!("tangency full loop gave {}", full.braid))?;
    let (half, _) = timed_track("(y + x^2)*(y - x^2)", (0.5, 1.0))?;
    ensure(same_action(&half.braid, &br(2, "s1^2")), || format!("tangency half loop gave {}", half.braid))?;
    let (rot, el) = timed_track("y*(y^2 + x)*(y^2 - x)", (0.0, 1.0))?;
    ensure(rot.permutation.images() == [5, 4, 3, 2, 1], || format!("rotation permutation {}", rot.permutation))?;
    let model = get_model("3comp-rotation").unwrap();
    let induced = conic_pi1::braid::induced_relators(&rot.braid);
    let limits = SearchLimits { max_nodes: 20_000, slack: 2, max_growth: 8 };
    let derivable = |ws: &[Word], from: &[Word]| ws.iter().all(|w| derive_trivial(w, from, limits).is_some());
    ensure(derivable(&induced, &model.paper_relations) && derivable(&model.paper_relations, &induced), || {
        "rotation relations are not mutually derivable with the published set".into()
    })?;
    Ok(format!("s1, s1^4, s1^2, {} with matching relations ({:.2?} for the rotation)", rot.permutation, el))
}

/// The two-conic table, with brute-force oracles for the abelianization and
/// Hom counts into S3.
fn two_conics() -> Outcome {
    let (n, rows) = parse_table(include_str!("../data/two_conics_table.txt")).map_err(|e| e.to_string())?;
    let p = present(&assemble(&rows, n).map_err(|e| e.to_string())?, true);
    let s = simplify(&p, 10_000).map_err(|e| e.to_string())?.presentation;
    let expected = pres(2, "(x1 x2)^2 = (x2 x1)^2 = e");
    let v = compare(&s, &expected).map_err(|e| e.to_string())?;
    let ComparisonVerdict::Equivalent(cert) = &v else { return Err(format!("verdict {:?}", v)) };
    ensure(cert.verify(&s, &expected).map_err(|e| e.to_string())?, || "certificate does not replay".into())?;

    let oracle = determinantal_invariants(&exponent_rows(&p), p.ngen());
    ensure(oracle == (1, vec![2]), || format!("oracle abelianization of the full presentation {:?}", oracle))?;
    let ab = abelianization(&p);
    ensure(ab == AbelianInvariants { free_rank: 1, torsion: vec![2] }, || format!("abelianization {}", ab))?;
    let (c, e) = (brute_force_homs(&s, 3), brute_force_homs(&expected, 3));
    ensure(c == e, || format!("brute-force S3 counts {} vs {}", c, e))?;
    let lib = count_homs(&s, &FiniteGroup::symmetric(3)).map_err(|e| e.to_string())?;
    ensure(lib == c, || format!("library S3 count {} vs brute force {}", lib, c))?;
    Ok(format!("Equivalent, H1 = {}, |Hom(-, S3)| = {}", ab, c))
}

/// Published presentations reach their claimed groups; the comparison
/// matrices never call two different items equivalent.
fn propositions() -> Outcome {
    let mut sourced = 0;
    for e in entries() {
        if source_presentation(e).map_err(|e| e.to_string())?.is_none() {
            continue;
        }
        let r = verify(e).map_err(|err| format!("{}: {}", e.id, err))?;
        ensure(r.verdict == conic_pi1::catalog::Verdict::Equivalent, || format!("{}: {:?}", e.id, r.verdict))?;
        sourced += 1;
    }
    let mut pairs = 0;
    for name in ["one-line", "two-lines"] {
        let m = comparison_matrix(name).map_err(|e| e.to_string())?;
        ensure(m.pairwise_separated(), || format!("{}: an off-diagonal pair is Equivalent", name))?;
        pairs += m.ids.len() * (m.ids.len() - 1) / 2;
    }

    let f2 = Presentation::free(2);
    let g = pres(2, "(x1 x2)^2 = (x2 x1)^2");
    ensure((brute_force_homs(&f2, 3), brute_force_homs(&g, 3)) == (36, 30), || "S3 oracle counts for F2 and G".into())?;
    let v = compare(&f2, &g).map_err(|e| e.to_string())?;
    ensure(matches!(&v, ComparisonVerdict::Distinct { witness } if witness.contains("36 vs 30")), || format!("F2 vs G: {:?}", v))?;

    let zf2 = &get_entry("two-lines-4").unwrap().expected;
    let zg = &get_entry("two-lines-different-conics").unwrap().expected;
    let (a, b) = (brute_force_homs(zf2, 3), brute_force_homs(zg, 3));
    ensure((a, b) == (66, 60), || format!("S3 oracle counts for Z + F2 and Z + G: {} {}", a, b))?;
    let v = compare(zf2, zg).map_err(|e| e.to_string())?;
    ensure(matches!(&v, ComparisonVerdict::Distinct { witness } if witness.contains("Hom")), || format!("Z + F2 vs Z + G: {:?}", v))?;
    Ok(format!("{} presentations Equivalent, {} pairs separated", sourced, pairs))
}

/// Bigness certificates for the two-conic group and every family member.
fn bigness() -> Outcome {
    let final_set = pres(2, "x1^2; x2^3").canonical_relator_set();
    let mut checked = vec![get_entry("two-conics").unwrap()];
    checked.extend(family("one-line").unwrap());
    checked.extend(family("two-lines").unwrap());
    for e in &checked {
        let p = source_presentation(e).map_err(|e| e.to_string())?.unwrap_or_else(|| e.expected.clone());
        let c = bigness_certificate(&p, &e.bigness).map_err(|err| format!("{}: {}", e.id, err))?;
        let last = c.steps.last().unwrap();
        let q = Presentation::from_text(&last.presentation).map_err(|e| e.to_string())?;
        ensure(c.verified && last.step == 'd' && q.canonical_relator_set() == final_set, || format!("{}: ends at {}", e.id, last.presentation))?;
    }
    Ok(format!("{} groups map onto <x, y | x^2, y^3>", checked.len()))
}

fn artin_products() -> Result<(), String> {
    let mut r = rng(1);
    for _ in 0..1000 {
        let n = rand::Rng::gen_range(&mut r, 2..=8);
        let b = random_braid(&mut r, n, 30);
        let g = GBase::standard(n);
        let out = artin_apply(&b, &g).map_err(|e| e.to_string())?;
        ensure(out.product() == g.product(), || format!("product not preserved by {}", b))?;
    }
    Ok(())
}

fn tietze_bundles() -> Result<(), String> {
    let mut pool: Vec<Presentation> = Vec::new();
    for e in entries() {
        if let Some(p) = source_presentation(e).map_err(|e| e.to_string())? {
            pool.push(p);
        }
        pool.push(e.expected.clone());
    }
    let mut r = rng(2);
    for k in 0..200 {
        let p = &pool[k % pool.len()];
        let steps = rand::Rng::gen_range(&mut r, 1..=5);
        let q = random_tietze(p, &mut r, steps);
        let (a, b) = (invariant_bundle(p, &Target::DEFAULT), invariant_bundle(&q, &Target::DEFAULT));
        let (a, b) = (a.map_err(|e| e.to_string())?, b.map_err(|e| e.to_string())?);
        ensure(a.same_group_invariants(&b), || format!("sequence {}: {} became {}", k, a, b))?;
    }
    Ok(())
}

fn snf_invariance() -> Result<(), String> {
    let mut r = rng(3);
    let pool: Vec<IntMatrix> = entries().iter().map(|e| exponent_matrix(&e.expected)).filter(|m| m.rows() > 0).collect();
    for k in 0..100 {
        let m = &pool[k % pool.len()];
        let u = IntMatrix::from_rows(random_unimodular(&mut r, m.rows(), 12));
        let v = IntMatrix::from_rows(random_unimodular(&mut r, m.cols(), 12));
        let d0 = smith_normal_form(m).diagonal;
        let d1 = smith_normal_form(&u.mul(m).mul(&v)).diagonal;
        ensure(d0 == d1, || format!("transform {}: {:?} vs {:?}", k, d0, d1))?;
    }
    Ok(())
}

fn segment_concatenation() -> Result<usize, String> {
    let mut n = 0;
    for m in list_models().iter().filter(|m| m.trackable) {
        let lp = LoopSpec::unit();
        let tr = |a, b| track(&m.equation, &lp, (a, b)).map_err(|e| format!("{}: {}", m.id, e));
        let (first, second, whole) = (tr(0.0, 0.5)?, tr(0.5, 1.0)?, tr(0.0, 1.0)?);
        ensure(same_action(&first.braid.mul(&second.braid), &whole.braid), || format!("{}: halves disagree with the full loop", m.id))?;
        n += 1;
    }
    Ok(n)
}

fn property_suites() -> Outcome {
    artin_products().map_err(|e| format!("Artin: {}", e))?;
    tietze_bundles().map_err(|e| format!("Tietze: {}", e))?;
    snf_invariance().map_err(|e| format!("SNF: {}", e))?;
    let curves = segment_concatenation()?;
    Ok(format!("1000 braids, 200 move sequences, 100 SNF transforms, {} curves", curves))
}

fn main() -> ExitCode {
    // Keep `cargo test -- <filter>` and `--list` usable.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("1 local relation reproduction", local_relations),
        ("2 tracker calibration", tracker_calibration),
        ("3 two-conic group end to end", two_conics),
        ("4 one- and two-line presentations", propositions),
        ("5 bigness certificates", bigness),
        ("6 property suites", property_suites),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {} [{:.2?}]", name, detail, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {} [{:.2?}]", name, why, start.elapsed());
            }
        }
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
