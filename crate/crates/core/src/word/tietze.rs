//! Tietze moves and the deterministic simplifier.

use std::collections::HashMap;

use super::rewrite::{shorten, SearchLimits};
use super::{GeneratorId, Letter, Presentation, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TietzeMove {
    /// Replace `generator` by `definition` everywhere and drop it.
    EliminateGenerator { generator: GeneratorId, definition: Word },
    RemoveRelator { index: usize, reason: String },
    AddConsequence { relator: Word, derivation: String },
    /// `map[i]` is the signed image of generator `i + 1`.
    RenameGenerators { map: Vec<Letter> },
    /// New last generator `x_{n+1}` together with the relator `x_{n+1} = definition`.
    AddGenerator { definition: Word, label: String },
}

impl TietzeMove {
    pub fn is_removal(&self) -> bool {
        matches!(self, TietzeMove::RemoveRelator { .. } | TietzeMove::EliminateGenerator { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: Presentation,
    /// Moves applied by this call, in order. Replaying them on the input
    /// reproduces `presentation`.
    pub trace: Vec<TietzeMove>,
}

struct Run {
    p: Presentation,
    trace: Vec<TietzeMove>,
    budget: usize,
}

impl Run {
    fn push(&mut self, mv: TietzeMove) -> Result<(), WordError> {
        if self.trace.len() >= self.budget {
            return Err(WordError::BudgetExhausted {
                used: self.trace.len(),
                best: Box::new(Simplified { presentation: self.p.clone(), trace: self.trace.clone() }),
            });
        }
        self.p = self.p.apply(mv.clone())?;
        self.trace.push(mv);
        Ok(())
    }

    /// The cheapest elimination available: over every generator occurring
    /// exactly once in some relator, the one minimising the resulting total
    /// length, ties broken by lower generator index then lower relator index.
    fn best_elimination(&self) -> Option<(GeneratorId, Word)> {
        let mut best: Option<(usize, GeneratorId, Word)> = None;
        for gi in 1..=self.p.ngen() as u32 {
            let g = GeneratorId::new(gi);
            for r in self.p.relators() {
                if r.occurrences(g) != 1 {
                    continue;
                }
                let pos = r.letters().iter().position(|l| l.generator() == g).unwrap();
                let rot = r.rotate(pos);
                let rest = Word::from_letters(rot.letters()[1..].iter().copied());
                let def = if rot.letters()[0].is_positive() { rest.inverse() } else { rest };
                let cost: usize = self
                    .p
                    .relators()
                    .iter()
                    .map(|s| s.substitute(g, &def).cyclically_reduced().len())
                    .sum();
                if best.as_ref().map_or(true, |b| cost < b.0) {
                    best = Some((cost, g, def));
                }
            }
        }
        best.map(|(_, g, d)| (g, d))
    }

    fn dedup(&mut self) -> Result<bool, WordError> {
        let mut changed = false;
        loop {
            let mut first: HashMap<Word, usize> = HashMap::new();
            let mut dup = None;
            for (i, r) in self.p.relators().iter().enumerate() {
                let c = r.canonical_relator();
                if let Some(&j) = first.get(&c) {
                    dup = Some((i, j));
                    break;
                }
                first.insert(c, i);
            }
            let Some((i, j)) = dup else { return Ok(changed) };
            self.push(TietzeMove::RemoveRelator { index: i, reason: format!("duplicate of relator {}", j + 1) })?;
            changed = true;
        }
    }

    /// One greedy pass: each relator in turn is rewritten against the others
    /// and replaced when a strictly shorter form is found.
    fn reduce_lengths(&mut self, limits: SearchLimits) -> Result<bool, WordError> {
        let mut changed = false;
        let mut i = 0;
        while i < self.p.relators().len() {
            let rels = self.p.relators();
            let r = rels[i].clone();
            let others: Vec<Word> = rels.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, w)| w.clone()).collect();
            let (best, nodes) = shorten(&r, &others, limits);
            if best.is_identity() {
                self.push(TietzeMove::RemoveRelator {
                    index: i,
                    reason: format!("consequence of the others ({} search nodes)", nodes),
                })?;
                changed = true;
                continue;
            }
            if best.len() < r.len() {
                self.push(TietzeMove::AddConsequence {
                    relator: best,
                    derivation: format!("relator {} rewritten against the others", i + 1),
                })?;
                self.push(TietzeMove::RemoveRelator { index: i, reason: "replaced by a shorter form".into() })?;
                changed = true;
                continue;
            }
            i += 1;
        }
        Ok(changed)
    }
}

/// Simplifies with default search limits. See [`simplify_with`].
pub fn simplify(p: &Presentation, budget: usize) -> Result<Simplified, WordError> {
    simplify_with(p, budget, SearchLimits::default())
}

/// Deterministic Tietze simplification. Each round performs one generator
/// elimination, then removes duplicate relators, then runs a length-reduction
/// pass; rounds repeat until nothing changes. `budget` bounds the number of
/// moves; on exhaustion the best presentation so far is returned inside the
/// error.
pub fn simplify_with(p: &Presentation, budget: usize, limits: SearchLimits) -> Result<Simplified, WordError> {
    let mut run = Run { p: p.clone(), trace: Vec::new(), budget };
    loop {
        let mut changed = false;
        if let Some((g, def)) = run.best_elimination() {
            run.push(TietzeMove::EliminateGenerator { generator: g, definition: def })?;
            changed = true;
        }
        changed |= run.dedup()?;
        changed |= run.reduce_lengths(limits)?;
        if !changed {
            break;
        }
    }
    Ok(Simplified { presentation: run.p, trace: run.trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_relations;

    fn pres(n: usize, rels: &str) -> Presentation {
        Presentation::new(n, parse_relations(rels).unwrap()).unwrap()
    }

    #[test]
    fn single_relation_eliminates_a_generator() {
        let s = simplify(&pres(2, "x2 = x1"), 100).unwrap();
        assert_eq!(s.presentation.ngen(), 1);
        assert!(s.presentation.relators().is_empty());
    }

    #[test]
    fn duplicates_are_removed() {
        let s = simplify(&pres(2, "x1 x2 x1 x2 = x2 x1 x2 x1; x2 x1 x2 x1 = x1 x2 x1 x2"), 100).unwrap();
        assert_eq!(s.presentation.relators().len(), 1);
    }

    #[test]
    fn trace_replays_exactly() {
        let p = pres(4, "x4 x3 x2 x1 = e; x3 = x4; x1 = x4 x2 x4^-1; (x2 x4)^2 = (x4 x2)^2");
        let s = simplify(&p, 1000).unwrap();
        assert_eq!(p.replay(&s.trace).unwrap(), s.presentation);
    }

    #[test]
    fn zero_budget_reports_exhaustion() {
        match simplify(&pres(2, "x2 = x1"), 0) {
            Err(WordError::BudgetExhausted { used, best }) => {
                assert_eq!(used, 0);
                assert_eq!(best.presentation.ngen(), 2);
            }
            other => panic!("unexpected {:?}", other),
        }
    }
}
