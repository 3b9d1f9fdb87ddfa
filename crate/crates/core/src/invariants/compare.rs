//! Deciding (as far as possible) whether two presentations give the same group.

use serde::Serialize;

use super::finite::permutations;
use super::{invariant_bundle, InvariantError, Target};
use crate::word::{derive_trivial, simplify_with, Letter, Presentation, SearchLimits, Simplified, TietzeMove, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareLimits {
    pub simplify_budget: usize,
    /// Rewriting limits for the simplifier's length reduction.
    pub simplify_search: SearchLimits,
    /// Rewriting limits for the mutual-derivability fallback.
    pub search: SearchLimits,
    /// Relabelings are tried only up to this many generators.
    pub max_relabel_gens: usize,
    pub targets: Vec<Target>,
}

impl Default for CompareLimits {
    fn default() -> Self {
        CompareLimits {
            simplify_budget: 10_000,
            simplify_search: SearchLimits::default(),
            search: SearchLimits { max_nodes: 20_000, slack: 2, max_growth: 8 },
            max_relabel_gens: 5,
            targets: Target::DEFAULT.to_vec(),
        }
    }
}

/// A replayable proof that two presentations define isomorphic groups:
/// simplify both sides, rename the left generators, then apply `extra`
/// moves; the two relator sets then agree up to cyclic permutation and
/// inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub left_trace: Vec<TietzeMove>,
    pub right_trace: Vec<TietzeMove>,
    pub relabel: Vec<Letter>,
    pub extra: Vec<TietzeMove>,
}

impl Certificate {
    /// Replays the certificate and checks that both sides meet.
    pub fn verify(&self, left: &Presentation, right: &Presentation) -> Result<bool, WordError> {
        let l = left
            .replay(&self.left_trace)?
            .apply(TietzeMove::RenameGenerators { map: self.relabel.clone() })?
            .replay(&self.extra)?;
        let r = right.replay(&self.right_trace)?;
        Ok(l.ngen() == r.ngen() && l.canonical_relator_set() == r.canonical_relator_set())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ComparisonVerdict {
    Equivalent(#[serde(skip)] Box<Certificate>),
    Distinct { witness: String },
    Inconclusive { reason: String },
}

impl ComparisonVerdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, ComparisonVerdict::Equivalent(_))
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, ComparisonVerdict::Distinct { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            ComparisonVerdict::Equivalent(_) => "Equivalent",
            ComparisonVerdict::Distinct { .. } => "Distinct",
            ComparisonVerdict::Inconclusive { .. } => "Inconclusive",
        }
    }
}

fn simplified(p: &Presentation, limits: &CompareLimits) -> Result<Simplified, WordError> {
    match simplify_with(p, limits.simplify_budget, limits.simplify_search) {
        Ok(s) => Ok(s),
        Err(WordError::BudgetExhausted { best, .. }) => Ok(*best),
        Err(e) => Err(e),
    }
}

/// All signed permutations of `n` generators, identity first.
fn relabelings(n: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for p in permutations(n) {
        for signs in 0..(1u32 << n) {
            out.push(p.iter().enumerate().map(|(i, &g)| {
                let g = g as u32 + 1;
                if signs >> i & 1 == 0 { Letter::pos(g) } else { Letter::neg(g) }
            }).collect());
        }
    }
    out
}

fn derivable_all(ws: &[Word], from: &[Word], limits: SearchLimits) -> bool {
    ws.iter().all(|w| derive_trivial(w, from, limits).is_some())
}

pub fn compare(p1: &Presentation, p2: &Presentation) -> Result<ComparisonVerdict, InvariantError> {
    compare_with(p1, p2, &CompareLimits::default())
}

pub fn compare_with(p1: &Presentation, p2: &Presentation, limits: &CompareLimits) -> Result<ComparisonVerdict, InvariantError> {
    let b1 = invariant_bundle(p1, &limits.targets)?;
    let b2 = invariant_bundle(p2, &limits.targets)?;
    if let Some(witness) = b1.first_difference(&b2) {
        return Ok(ComparisonVerdict::Distinct { witness });
    }
    let s1 = simplified(p1, limits)?;
    let s2 = simplified(p2, limits)?;
    let (l, r) = (&s1.presentation, &s2.presentation);
    if l.ngen() != r.ngen() {
        return Ok(ComparisonVerdict::Inconclusive {
            reason: format!("simplified forms have {} and {} generators", l.ngen(), r.ngen()),
        });
    }
    if l.ngen() > limits.max_relabel_gens {
        return Ok(ComparisonVerdict::Inconclusive { reason: format!("{} generators exceed the relabeling limit", l.ngen()) });
    }
    let target = r.canonical_relator_set();
    let maps = relabelings(l.ngen());
    let certificate = |relabel: Vec<Letter>, extra: Vec<TietzeMove>| {
        ComparisonVerdict::Equivalent(Box::new(Certificate {
            left_trace: s1.trace.clone(),
            right_trace: s2.trace.clone(),
            relabel,
            extra,
        }))
    };
    let renamed: Vec<Presentation> = maps
        .iter()
        .map(|m| l.apply(TietzeMove::RenameGenerators { map: m.clone() }))
        .collect::<Result<_, _>>()?;
    for (m, lr) in maps.iter().zip(&renamed) {
        if lr.canonical_relator_set() == target {
            return Ok(certificate(m.clone(), Vec::new()));
        }
    }
    for (m, lr) in maps.iter().zip(&renamed) {
        if derivable_all(r.relators(), lr.relators(), limits.search) && derivable_all(lr.relators(), r.relators(), limits.search) {
            let mut extra: Vec<TietzeMove> = r
                .relators()
                .iter()
                .map(|w| TietzeMove::AddConsequence { relator: w.clone(), derivation: "rewriting search".into() })
                .collect();
            for _ in 0..lr.relators().len() {
                extra.push(TietzeMove::RemoveRelator { index: 0, reason: "consequence of the added relators".into() });
            }
            return Ok(certificate(m.clone(), extra));
        }
    }
    Ok(ComparisonVerdict::Inconclusive { reason: "no relabeling matched within the search limits".into() })
}
