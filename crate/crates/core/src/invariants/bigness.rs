//! Certificate that a group surjects onto `Z/2 * Z/3`.
//!
//! The script: (a) project onto a two-generator quotient by killing
//! generators, (b) pass to `x = ab, y = b`, (c) check the relators are
//! `x^2` and a conjugate of it, (d) add `y^3` and check the result is
//! literally `<x, y | x^2, y^3>`.

use serde::Serialize;

use super::InvariantError;
use crate::word::{derive_trivial, simplify, GeneratorId, Presentation, SearchLimits, Word, WordError};

const BUDGET: usize = 10_000;

/// How to project onto the two-conic group before running the script:
/// kill `kill`, then add `extra` (written in the surviving generators,
/// renumbered after simplification).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BignessPlan {
    pub kill: Vec<GeneratorId>,
    pub extra: Vec<Word>,
}

impl BignessPlan {
    pub fn killing(gens: &[u32]) -> Self {
        BignessPlan { kill: gens.iter().map(|&g| GeneratorId::new(g)).collect(), extra: Vec::new() }
    }

    pub fn adding(mut self, relators: Vec<Word>) -> Self {
        self.extra = relators;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BignessStep {
    pub step: char,
    pub note: String,
    pub presentation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BignessCertificate {
    pub steps: Vec<BignessStep>,
    pub verified: bool,
}

impl BignessCertificate {
    pub fn script(&self) -> String {
        self.steps.iter().map(|s| format!("({}) {}\n{}", s.step, s.note, s.presentation)).collect::<Vec<_>>().join("\n")
    }
}

fn fail(step: char, reason: impl Into<String>) -> InvariantError {
    InvariantError::ScriptStepFailed { step, reason: reason.into() }
}

fn simplified(p: &Presentation) -> Result<Presentation, WordError> {
    match simplify(p, BUDGET) {
        Ok(s) => Ok(s.presentation),
        Err(WordError::BudgetExhausted { best, .. }) => Ok(best.presentation),
        Err(e) => Err(e),
    }
}

fn relator_set(words: &[&str]) -> Vec<Word> {
    let mut v: Vec<Word> = words.iter().map(|w| crate::word::parse_word(w).canonical_relator()).collect();
    v.sort();
    v
}

pub fn bigness_certificate(p: &Presentation, plan: &BignessPlan) -> Result<BignessCertificate, InvariantError> {
    let mut steps = Vec::new();
    let mut record = |step: char, note: String, q: &Presentation| {
        steps.push(BignessStep { step, note, presentation: q.to_text() });
    };

    let mut projected = simplified(&p.kill_generators(&plan.kill)?)?;
    if projected.ngen() != 2 {
        return Err(fail('a', format!("projection has {} generators, expected 2", projected.ngen())));
    }
    let killed: Vec<String> = plan.kill.iter().map(|g| p.label(*g).to_string()).collect();
    let mut note = if killed.is_empty() { "simplify".to_string() } else { format!("kill [{}] and simplify", killed.join(", ")) };
    if !plan.extra.is_empty() {
        projected = simplified(&projected.add_relators(&plan.extra)?)?;
        if projected.ngen() != 2 {
            return Err(fail('a', format!("quotient has {} generators, expected 2", projected.ngen())));
        }
        let added: Vec<String> = plan.extra.iter().map(|w| w.to_string()).collect();
        note.push_str(&format!(", add [{}]", added.join(", ")));
    }
    record('a', note, &projected);

    // Both choices of which generator is `a`, with either orientation.
    let x2 = relator_set(&["x1^2"]);
    let limits = SearchLimits { max_nodes: 20_000, slack: 2, max_growth: 8 };
    let mut found = None;
    'outer: for (a, b) in [(1u32, 2u32), (2, 1)] {
        for signs in 0..4 {
            let sa = if signs & 1 == 0 { Word::generator(a) } else { Word::generator(a).inverse() };
            let sb = if signs & 2 == 0 { Word::generator(b) } else { Word::generator(b).inverse() };
            // x = ab, y = b;  a = x y^-1, b = y
            let new_in_old = [sa.mul(&sb), sb.clone()];
            let (xa, yb) = (Word::from_signed(&[1, -2]), Word::generator(2));
            let mut old_in_new = vec![Word::identity(), Word::identity()];
            old_in_new[a as usize - 1] = if signs & 1 == 0 { xa.clone() } else { xa.inverse() };
            old_in_new[b as usize - 1] = if signs & 2 == 0 { yb.clone() } else { yb.inverse() };
            let changed = projected
                .change_generators(&new_in_old, &old_in_new, Some(vec!["x".into(), "y".into()]))?
                .without_trace();
            let syntactic = changed.canonical_relator_set() == x2;
            let derived = syntactic
                || (changed.relators().iter().all(|r| derive_trivial(r, &x2, limits).is_some())
                    && derive_trivial(&x2[0], changed.relators(), limits).is_some());
            if derived {
                found = Some((a, b, signs, changed, syntactic));
                break 'outer;
            }
        }
    }
    let Some((a, b, signs, changed, syntactic)) = found else {
        return Err(fail('c', "no choice of a, b gives relators x^2 and a conjugate of x^2"));
    };
    let name = |g: u32, inv: bool| format!("{}{}", projected.label(GeneratorId::new(g)), if inv { "^-1" } else { "" });
    record('b', format!("x = a b, y = b with a = {}, b = {}", name(a, signs & 1 != 0), name(b, signs & 2 != 0)), &changed);
    let how = if syntactic { "relators are x^2 up to conjugation" } else { "relators generate the normal closure of x^2" };
    record('c', how.to_string(), &changed);

    let quotient = simplified(&changed.add_relators(&[Word::generator(2).pow(3)])?)?;
    if quotient.ngen() != 2 || quotient.canonical_relator_set() != relator_set(&["x1^2", "x2^3"]) {
        return Err(fail('d', format!("quotient simplified to {}", quotient.to_text().trim())));
    }
    record('d', "add y^3: the quotient is <x, y | x^2, y^3>".to_string(), &quotient);
    Ok(BignessCertificate { steps, verified: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_relations;

    #[test]
    fn two_conic_group_is_certified() {
        let p = Presentation::new(2, parse_relations("(x1 x2)^2 = (x2 x1)^2 = e").unwrap()).unwrap();
        let c = bigness_certificate(&p, &BignessPlan::default()).unwrap();
        assert!(c.verified);
        assert_eq!(c.steps.iter().map(|s| s.step).collect::<String>(), "abcd");
    }

    #[test]
    fn free_group_fails_at_c() {
        let err = bigness_certificate(&Presentation::free(2), &BignessPlan::default()).unwrap_err();
        assert!(matches!(err, InvariantError::ScriptStepFailed { step: 'c', .. }), "{:?}", err);
    }

    #[test]
    fn free_group_passes_through_an_added_relator() {
        let plan = BignessPlan::default().adding(parse_relations("(x1 x2)^2 = e").unwrap());
        assert!(bigness_certificate(&Presentation::free(2), &plan).unwrap().verified);
    }

    #[test]
    fn extra_generators_must_be_killed() {
        let p = Presentation::new(3, parse_relations("(x1 x2)^2 = (x2 x1)^2 = e").unwrap()).unwrap();
        assert!(matches!(bigness_certificate(&p, &BignessPlan::default()), Err(InvariantError::ScriptStepFailed { step: 'a', .. })));
        assert!(bigness_certificate(&p, &BignessPlan::killing(&[3])).unwrap().verified);
    }
}
