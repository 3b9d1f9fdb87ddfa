use std::fmt;

use super::text;
use super::tietze::TietzeMove;
use super::{GeneratorId, Letter, Word, WordError};

/// A finite presentation `<x1..xn | r1, r2, ...>`.
///
/// A relation `u = v` is stored as the relator `u v^-1`. Relators are kept
/// freely and cyclically reduced, and trivial relators are dropped. Every
/// operation that changes the presentation goes through [`Presentation::apply`],
/// so the recorded trace replays exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    ngen: usize,
    relators: Vec<Word>,
    labels: Vec<String>,
    trace: Vec<TietzeMove>,
}

pub(crate) fn default_label(i: usize) -> String {
    format!("x{}", i)
}

impl Presentation {
    pub fn new(ngen: usize, relators: Vec<Word>) -> Result<Self, WordError> {
        let labels = (1..=ngen).map(default_label).collect();
        Self::with_labels(ngen, relators, labels)
    }

    pub fn with_labels(ngen: usize, relators: Vec<Word>, labels: Vec<String>) -> Result<Self, WordError> {
        assert_eq!(labels.len(), ngen, "one label per generator");
        for r in &relators {
            let m = r.max_generator();
            if m as usize > ngen {
                return Err(WordError::GeneratorOutOfRange(m, ngen));
            }
        }
        let relators = relators
            .into_iter()
            .map(|r| r.cyclically_reduced())
            .filter(|r| !r.is_identity())
            .collect();
        Ok(Presentation { ngen, relators, labels, trace: Vec::new() })
    }

    /// The free group of rank `n`.
    pub fn free(n: usize) -> Self {
        Self::new(n, Vec::new()).expect("no relators")
    }

    pub fn ngen(&self) -> usize {
        self.ngen
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: GeneratorId) -> &str {
        &self.labels[g.index() as usize - 1]
    }

    pub fn trace(&self) -> &[TietzeMove] {
        &self.trace
    }

    /// Drops the recorded trace, making this presentation a new origin.
    pub fn without_trace(&self) -> Self {
        Presentation { trace: Vec::new(), ..self.clone() }
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    /// Same presentation with relabelled generators.
    pub fn relabelled(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.ngen);
        Presentation { labels, ..self.clone() }
    }

    /// Presentation with every relator read right to left.
    ///
    /// Word reversal is an anti-automorphism of the free group, so the result
    /// presents an isomorphic group. It translates between the ascending
    /// g-base product used by the braid action and the descending product
    /// `x_n ... x_1` of the published relations.
    pub fn reversed(&self) -> Self {
        Presentation {
            relators: self.relators.iter().map(Word::reversed).collect(),
            ..self.without_trace()
        }
    }

    fn check_word(&self, w: &Word) -> Result<(), WordError> {
        let m = w.max_generator();
        if m as usize > self.ngen {
            return Err(WordError::GeneratorOutOfRange(m, self.ngen));
        }
        Ok(())
    }

    /// Applies one Tietze move and records it in the trace.
    pub fn apply(&self, mv: TietzeMove) -> Result<Self, WordError> {
        let mut next = self.apply_untraced(&mv)?;
        next.trace = self.trace.clone();
        next.trace.push(mv);
        Ok(next)
    }

    fn apply_untraced(&self, mv: &TietzeMove) -> Result<Self, WordError> {
        match mv {
            TietzeMove::EliminateGenerator { generator, definition } => {
                let g = *generator;
                if g.index() as usize > self.ngen {
                    return Err(WordError::GeneratorOutOfRange(g.index(), self.ngen));
                }
                if definition.contains_generator(g) {
                    return Err(WordError::DefinitionContainsTarget(g.index()));
                }
                self.check_word(definition)?;
                let gi = g.index();
                let shift = |w: &Word| {
                    Word::from_letters(w.letters().iter().map(|&l| {
                        if l.index() > gi {
                            Letter::new(GeneratorId::new(l.index() - 1), l.is_positive())
                        } else {
                            l
                        }
                    }))
                };
                let relators = self
                    .relators
                    .iter()
                    .map(|r| shift(&r.substitute(g, definition).cyclically_reduced()))
                    .filter(|r| !r.is_identity())
                    .collect();
                let mut labels = self.labels.clone();
                labels.remove(gi as usize - 1);
                Ok(Presentation { ngen: self.ngen - 1, relators, labels, trace: Vec::new() })
            }
            TietzeMove::RemoveRelator { index, .. } => {
                if *index >= self.relators.len() {
                    return Err(WordError::Replay(*index, "relator index out of range".into()));
                }
                let mut relators = self.relators.clone();
                relators.remove(*index);
                Ok(Presentation { relators, ..self.without_trace() })
            }
            TietzeMove::AddConsequence { relator, .. } => {
                self.check_word(relator)?;
                let mut relators = self.relators.clone();
                let r = relator.cyclically_reduced();
                if !r.is_identity() {
                    relators.push(r);
                }
                Ok(Presentation { relators, ..self.without_trace() })
            }
            TietzeMove::RenameGenerators { map } => {
                if map.len() != self.ngen {
                    return Err(WordError::Replay(0, "rename map has wrong length".into()));
                }
                let mut seen = vec![false; self.ngen];
                for l in map {
                    let i = l.index() as usize;
                    if i == 0 || i > self.ngen || seen[i - 1] {
                        return Err(WordError::Replay(0, "rename map is not a bijection".into()));
                    }
                    seen[i - 1] = true;
                }
                let relators = self
                    .relators
                    .iter()
                    .map(|r| {
                        r.map_generators(|g| {
                            Word::from_letters([map[g.index() as usize - 1]])
                        })
                    })
                    .collect();
                let mut labels = vec![String::new(); self.ngen];
                for (old, l) in map.iter().enumerate() {
                    labels[l.index() as usize - 1] = self.labels[old].clone();
                }
                Ok(Presentation { ngen: self.ngen, relators, labels, trace: Vec::new() })
            }
            TietzeMove::AddGenerator { definition, label } => {
                self.check_word(definition)?;
                let new = Word::generator(self.ngen as u32 + 1);
                let mut relators = self.relators.clone();
                relators.push(new.mul(&definition.inverse()).cyclically_reduced());
                let mut labels = self.labels.clone();
                labels.push(label.clone());
                Ok(Presentation { ngen: self.ngen + 1, relators, labels, trace: Vec::new() })
            }
        }
    }

    /// Replays a sequence of moves from this presentation.
    pub fn replay(&self, moves: &[TietzeMove]) -> Result<Self, WordError> {
        let mut p = self.clone();
        for (i, mv) in moves.iter().enumerate() {
            p = p.apply(mv.clone()).map_err(|e| match e {
                WordError::Replay(_, msg) => WordError::Replay(i, msg),
                other => WordError::Replay(i, other.to_string()),
            })?;
        }
        Ok(p)
    }

    /// Eliminates `g` using `g = def`.
    pub fn substitute(&self, g: GeneratorId, def: &Word) -> Result<Self, WordError> {
        self.apply(TietzeMove::EliminateGenerator { generator: g, definition: def.clone() })
    }

    /// The quotient by the normal closure of `rs`. This is not a Tietze move:
    /// the result is a new group and starts with an empty trace.
    pub fn add_relators(&self, rs: &[Word]) -> Result<Self, WordError> {
        let mut relators = self.relators.clone();
        for r in rs {
            self.check_word(r)?;
            relators.push(r.clone());
        }
        Self::with_labels(self.ngen, relators, self.labels.clone())
    }

    /// Quotient killing the listed generators.
    pub fn kill_generators(&self, gens: &[GeneratorId]) -> Result<Self, WordError> {
        let rs: Vec<Word> = gens.iter().map(|g| Word::generator(g.index())).collect();
        self.add_relators(&rs)
    }

    /// Rewrites the presentation over new generators.
    ///
    /// `new_in_old[k]` expresses new generator `k+1` in the old generators and
    /// `old_in_new[g]` expresses old generator `g+1` in the new ones. The maps
    /// must be mutually inverse substitutions. The change is carried out as
    /// `AddGenerator` moves followed by eliminations of the old generators.
    pub fn change_generators(
        &self,
        new_in_old: &[Word],
        old_in_new: &[Word],
        new_labels: Option<Vec<String>>,
    ) -> Result<Self, WordError> {
        let n = self.ngen;
        let m = new_in_old.len();
        if old_in_new.len() != n {
            return Err(WordError::MapsNotInverse);
        }
        for w in new_in_old {
            self.check_word(w)?;
        }
        for w in old_in_new {
            if w.max_generator() as usize > m {
                return Err(WordError::GeneratorOutOfRange(w.max_generator(), m));
            }
        }
        for (g, w) in old_in_new.iter().enumerate() {
            let back = w.map_generators(|h| new_in_old[h.index() as usize - 1].clone());
            if back != Word::generator(g as u32 + 1) {
                return Err(WordError::MapsNotInverse);
            }
        }
        for (h, w) in new_in_old.iter().enumerate() {
            let back = w.map_generators(|g| old_in_new[g.index() as usize - 1].clone());
            if back != Word::generator(h as u32 + 1) {
                return Err(WordError::MapsNotInverse);
            }
        }
        let labels = new_labels.unwrap_or_else(|| (1..=m).map(|i| format!("y{}", i)).collect());
        assert_eq!(labels.len(), m);
        let mut p = self.clone();
        for (k, def) in new_in_old.iter().enumerate() {
            p = p.apply(TietzeMove::AddGenerator { definition: def.clone(), label: labels[k].clone() })?;
        }
        // Old generator 1 is always at index 1 once its predecessors are gone;
        // new generator k sits at index (remaining olds) + k.
        for (g, def) in old_in_new.iter().enumerate() {
            let remaining_old = (n - g) as u32;
            let shifted = Word::from_letters(def.letters().iter().map(|l| {
                Letter::new(GeneratorId::new(l.index() + remaining_old), l.is_positive())
            }));
            p = p.apply(TietzeMove::EliminateGenerator { generator: GeneratorId::new(1), definition: shifted })?;
        }
        Ok(p)
    }

    /// Relator set as canonical forms, sorted and deduplicated.
    pub fn canonical_relator_set(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.relators.iter().map(Word::canonical_relator).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Serializes in the plain-text presentation format.
    pub fn to_text(&self) -> String {
        text::format_presentation(self)
    }

    pub fn from_text(s: &str) -> Result<Self, WordError> {
        text::parse_presentation(s)
    }

    /// Human-readable relations `u = v`, one per relator, using the labels.
    pub fn display_relations(&self) -> Vec<String> {
        let name = |g: GeneratorId| self.label(g).to_string();
        self.relators.iter().map(|r| text::format_relation(r, &name)).collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | {} >", self.labels.join(", "), self.display_relations().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_relations;

    fn pres(n: usize, rels: &str) -> Presentation {
        Presentation::new(n, parse_relations(rels).unwrap()).unwrap()
    }

    #[test]
    fn substitute_prop_relation() {
        let p = pres(
            4,
            "x4 x3 x2 x1 = e; x3 = x4; (x2 x4)^2 = (x4 x2)^2; x1 = x4 x2 x4^-1; \
             x1 = x3 x2 x3^-1; (x2 x3)^2 = (x3 x2)^2; x3 = x4",
        );
        let q = p.substitute(GeneratorId::new(1), &parse_word("x3 x2 x3^-1")).unwrap();
        assert_eq!(q.ngen(), 3);
        assert_eq!(q.labels(), &["x2", "x3", "x4"]);
        assert!(q.relators().iter().all(|r| r.max_generator() <= 3));
        assert_eq!(q.trace().len(), 1);
    }

    use crate::word::parse_word;

    #[test]
    fn substitute_dead_generator() {
        let p = Presentation::free(2);
        let q = p.substitute(GeneratorId::new(1), &Word::identity()).unwrap();
        assert_eq!(q.ngen(), 1);
        assert!(q.relators().is_empty());
        assert_eq!(q.labels(), &["x2"]);
    }

    #[test]
    fn substitute_rejects_self_reference() {
        let p = Presentation::free(2);
        let err = p.substitute(GeneratorId::new(1), &parse_word("x2 x1")).unwrap_err();
        assert_eq!(err, WordError::DefinitionContainsTarget(1));
    }

    #[test]
    fn substitution_in_line_tangent_case() {
        // Generators x1, x2, x3, x5 renumbered 1..4; x2 := x5 x3 x5^-1.
        let p = pres(4, "x4^2 x3 x2 x1 = e; x1 x2 = x2 x1; (x3 x4)^2 = (x4 x3)^2; x2 = x4 x3 x4^-1; x1 x4 = x4 x1");
        let q = p.substitute(GeneratorId::new(2), &parse_word("x4 x3 x4^-1")).unwrap();
        assert_eq!(q.ngen(), 3);
        // Modulo x1 x3 = x3 x1, the first two relations become
        // x3 x2 x3 x2 x1 = e and x1 x2 = x2 x1.
        let comm = parse_word("x1 x3 x1^-1 x3^-1");
        let limits = crate::word::SearchLimits::default();
        for (k, want) in [(0, "x3 x2 x3 x2 x1"), (1, "x1 x2 x1^-1 x2^-1")] {
            let got = q.relators()[k].clone();
            let want = parse_word(want);
            let d = |w: &Word, r: &Word| crate::word::derive_trivial(w, &[r.clone(), comm.clone()], limits).is_some();
            assert!(d(&got, &want) && d(&want, &got), "relation {}", k + 1);
        }
    }

    #[test]
    fn add_relators_examples() {
        let p = pres(1, "");
        let q = p.add_relators(&[Word::identity()]).unwrap();
        assert_eq!(q.relators(), p.relators());
        let t = p.add_relators(&[Word::generator(1)]).unwrap();
        assert_eq!(t.relators(), &[Word::generator(1)]);
    }

    #[test]
    fn change_generators_big_quotient_shape() {
        let p = pres(2, "(x1 x2)^2 = e; (x2 x1)^2 = e");
        // x = ab, y = b  ;  a = x y^-1, b = y
        let new_in_old = vec![parse_word("x1 x2"), parse_word("x2")];
        let old_in_new = vec![parse_word("x1 x2^-1"), parse_word("x2")];
        let q = p.change_generators(&new_in_old, &old_in_new, Some(vec!["x".into(), "y".into()])).unwrap();
        assert_eq!(q.ngen(), 2);
        assert_eq!(q.relators(), &[parse_word("x1^2"), parse_word("x1^2")]);
        // The trace replays to the same result.
        assert_eq!(p.replay(q.trace()).unwrap(), q);
    }

    #[test]
    fn change_generators_identity_and_round_trip() {
        let p = pres(2, "x1 x2 x1 = x2 x1 x2");
        let id = vec![Word::generator(1), Word::generator(2)];
        let q = p.change_generators(&id, &id, Some(p.labels().to_vec())).unwrap();
        assert_eq!(q.relators(), p.relators());
        let swap = vec![Word::generator(2), Word::generator(1)];
        let s = p.change_generators(&swap, &swap, None).unwrap();
        let back = s.change_generators(&swap, &swap, Some(p.labels().to_vec())).unwrap();
        assert_eq!(back.relators(), p.relators());
    }

    #[test]
    fn change_generators_rejects_non_inverse_maps() {
        let p = Presentation::free(2);
        let a = vec![parse_word("x1 x2"), parse_word("x2")];
        let b = vec![parse_word("x1"), parse_word("x2")];
        assert_eq!(p.change_generators(&a, &b, None).unwrap_err(), WordError::MapsNotInverse);
    }
}
