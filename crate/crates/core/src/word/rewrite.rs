//! Bounded rewriting of cyclic words against a relator set.
//!
//! A piece `u` of a cyclic word that is a prefix of some rotation `u v` of a
//! relator (or its inverse) can be replaced by `v^-1`. Pieces at least half a
//! relator long never lengthen the word; `slack` admits slightly shorter
//! pieces, which lengthen the word by at most `2 * slack` letters.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use super::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: usize,
    pub slack: usize,
    pub max_growth: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_nodes: 4000, slack: 1, max_growth: 4 }
    }
}

struct RuleSet {
    by_first: HashMap<Letter, Vec<Word>>,
}

impl RuleSet {
    fn new(relators: &[Word]) -> Self {
        let mut by_first: HashMap<Letter, Vec<Word>> = HashMap::new();
        let mut seen = HashSet::new();
        for r in relators {
            let r = r.cyclically_reduced();
            if r.is_identity() {
                continue;
            }
            for w in [r.clone(), r.inverse()] {
                for k in 0..w.len() {
                    let rot = w.rotate(k);
                    if seen.insert(rot.clone()) {
                        by_first.entry(rot.letters()[0]).or_default().push(rot);
                    }
                }
            }
        }
        RuleSet { by_first }
    }

    /// All words reachable in one rewriting step.
    fn successors(&self, w: &Word, slack: usize) -> Vec<Word> {
        let m = w.len();
        let letters = w.letters();
        let mut out = Vec::new();
        for p in 0..m {
            let Some(rules) = self.by_first.get(&letters[p]) else { continue };
            for rot in rules {
                let l = rot.len();
                let rl = rot.letters();
                let mut k = 0;
                while k < l && k < m && letters[(p + k) % m] == rl[k] {
                    k += 1;
                }
                let lo = l.div_ceil(2).saturating_sub(slack).max(1);
                if k < lo {
                    continue;
                }
                // Rotate so the match starts at 0, then swap the matched piece
                // for the inverse of the rest of the relator.
                let rest = Word::from_letters(rl[k..].iter().copied()).inverse();
                let tail = (0..m - k).map(|i| letters[(p + k + i) % m]);
                let next = Word::from_letters(rest.letters().iter().copied().chain(tail)).cyclically_reduced();
                out.push(next);
            }
        }
        out
    }
}

/// Best-first search for the shortest word cyclically equivalent to `w`
/// modulo `relators`. Returns the shortest word found and the number of
/// nodes expanded.
pub(crate) fn shorten(w: &Word, relators: &[Word], limits: SearchLimits) -> (Word, usize) {
    let rules = RuleSet::new(relators);
    let start = w.cyclically_reduced();
    let cap = start.len() + limits.max_growth;
    let mut best = start.clone();
    let mut seen: HashSet<Word> = HashSet::new();
    let mut heap = BinaryHeap::new();
    let mut counter = 0usize;
    seen.insert(start.canonical_relator());
    heap.push(Reverse((start.len(), counter, start)));
    let mut nodes = 0;
    while let Some(Reverse((_, _, cur))) = heap.pop() {
        if cur.len() < best.len() {
            best = cur.clone();
        }
        if best.is_identity() || nodes >= limits.max_nodes {
            break;
        }
        nodes += 1;
        for next in rules.successors(&cur, limits.slack) {
            if next.len() > cap {
                continue;
            }
            if seen.insert(next.canonical_relator()) {
                counter += 1;
                heap.push(Reverse((next.len(), counter, next)));
            }
        }
    }
    (best, nodes)
}

/// Tries to show that `w` is trivial in the group presented by `relators`.
/// Returns the number of search nodes used on success.
pub fn derive_trivial(w: &Word, relators: &[Word], limits: SearchLimits) -> Option<usize> {
    let (best, nodes) = shorten(w, relators, limits);
    best.is_identity().then_some(nodes)
}
