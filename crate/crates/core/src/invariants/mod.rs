//! Computable group invariants: abelianization, homomorphism counts,
//! comparison verdicts and the bigness certificate.

mod bigness;
mod compare;
mod finite;
mod homs;
mod snf;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::word::{GeneratorId, Presentation, WordError};

pub use bigness::{bigness_certificate, BignessCertificate, BignessPlan, BignessStep};
pub use compare::{compare, compare_with, Certificate, CompareLimits, ComparisonVerdict};
pub use finite::FiniteGroup;
pub use homs::{count_homs, count_homs_with, evaluate, DEFAULT_HOM_BUDGET};
pub use snf::{smith_normal_form, IntMatrix, Snf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("homomorphism search exceeded {0} nodes")]
    BudgetExceeded(u64),
    #[error("invalid finite group: {0}")]
    BadGroup(String),
    #[error("bigness script failed at step ({step}): {reason}")]
    ScriptStepFailed { step: char, reason: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | d_2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{}", d)));
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Relator exponent sums: one row per relator, one column per generator.
pub fn exponent_matrix(p: &Presentation) -> IntMatrix {
    let mut m = IntMatrix::zeros(p.relators().len(), p.ngen());
    for (i, r) in p.relators().iter().enumerate() {
        for g in 1..=p.ngen() as u32 {
            m.set(i, g as usize - 1, BigInt::from(r.exponent_sum(GeneratorId::new(g))));
        }
    }
    m
}

pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let snf = smith_normal_form(&exponent_matrix(p));
    let rank = snf.rank();
    let torsion = snf
        .diagonal
        .iter()
        .filter(|d| !d.is_zero() && !d.abs().is_one())
        .map(|d| u64::try_from(d.abs()).expect("torsion coefficient fits in u64"))
        .collect();
    AbelianInvariants { free_rank: p.ngen() - rank, torsion }
}

/// Finite targets for homomorphism counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Target {
    S3,
    S4,
    S5,
}

impl Target {
    pub fn group(self) -> FiniteGroup {
        match self {
            Target::S3 => FiniteGroup::symmetric(3),
            Target::S4 => FiniteGroup::symmetric(4),
            Target::S5 => FiniteGroup::symmetric(5),
        }
    }

    pub const DEFAULT: [Target; 2] = [Target::S3, Target::S4];
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorStats {
    pub generators: usize,
    pub relators: usize,
    pub total_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub abelian: AbelianInvariants,
    pub hom_counts: BTreeMap<Target, u64>,
    /// Descriptive only; not a group invariant and never compared.
    pub relator_stats: RelatorStats,
}

impl InvariantBundle {
    /// Whether the group invariants (abelianization and hom counts) agree.
    pub fn same_group_invariants(&self, o: &InvariantBundle) -> bool {
        self.abelian == o.abelian && self.hom_counts == o.hom_counts
    }

    /// The first invariant that differs, as a human-readable witness.
    pub fn first_difference(&self, o: &InvariantBundle) -> Option<String> {
        if self.abelian != o.abelian {
            return Some(format!("abelianization {} vs {}", self.abelian, o.abelian));
        }
        for (t, a) in &self.hom_counts {
            if let Some(b) = o.hom_counts.get(t) {
                if a != b {
                    return Some(format!("|Hom(-, {})| {} vs {}", t, a, b));
                }
            }
        }
        None
    }
}

impl fmt::Display for InvariantBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H1 = {}", self.abelian)?;
        for (t, c) in &self.hom_counts {
            write!(f, ", |Hom(-, {})| = {}", t, c)?;
        }
        write!(f, ", {} gens / {} relators / length {}", self.relator_stats.generators, self.relator_stats.relators, self.relator_stats.total_length)
    }
}

pub fn invariant_bundle(p: &Presentation, targets: &[Target]) -> Result<InvariantBundle, InvariantError> {
    let mut hom_counts = BTreeMap::new();
    for &t in targets {
        hom_counts.insert(t, count_homs(p, &t.group())?);
    }
    Ok(InvariantBundle {
        abelian: abelianization(p),
        hom_counts,
        relator_stats: RelatorStats { generators: p.ngen(), relators: p.relators().len(), total_length: p.total_length() },
    })
}
