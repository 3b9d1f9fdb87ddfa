//! Free-group words, finite presentations and Tietze simplification.
//!
//! Generators are 1-based (`x1, x2, ...`). A [`Word`] is always freely
//! reduced; relators inside a [`Presentation`] are additionally cyclically
//! reduced.

mod presentation;
mod rewrite;
mod text;
mod tietze;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

pub use presentation::Presentation;
pub use rewrite::{derive_trivial, SearchLimits};
pub use text::{parse_relation, parse_relations, parse_word, try_parse_word};
pub use tietze::{simplify, simplify_with, Simplified, TietzeMove};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("definition of x{0} mentions x{0}")]
    DefinitionContainsTarget(u32),
    #[error("generator x{0} is out of range (presentation has {1} generators)")]
    GeneratorOutOfRange(u32, usize),
    #[error("generator maps are not mutually inverse")]
    MapsNotInverse,
    #[error("simplification budget exhausted after {used} moves")]
    BudgetExhausted { used: usize, best: Box<Simplified> },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("replay failed at move {0}: {1}")]
    Replay(usize, String),
}

/// 1-based generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(u32);

impl GeneratorId {
    pub fn new(index: u32) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        GeneratorId(index)
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A signed generator. Stored as a nonzero `i32`: `+k` is `x_k`, `-k` is `x_k^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: GeneratorId, positive: bool) -> Self {
        let g = generator.0 as i32;
        Letter(if positive { g } else { -g })
    }

    pub fn pos(index: u32) -> Self {
        Letter::new(GeneratorId::new(index), true)
    }

    pub fn neg(index: u32) -> Self {
        Letter::new(GeneratorId::new(index), false)
    }

    pub(crate) fn from_raw(raw: i32) -> Self {
        debug_assert!(raw != 0);
        Letter(raw)
    }

    pub fn generator(self) -> GeneratorId {
        GeneratorId(self.0.unsigned_abs())
    }

    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    fn sort_key(self) -> (u32, bool) {
        (self.index(), self.0 < 0)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A freely reduced word in the free group on `x1, x2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(index: u32) -> Self {
        Word(vec![Letter::pos(index)])
    }

    /// Builds a word from letters, freely reducing on the way.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Builds from signed indices (`-2` is `x2^-1`).
    pub fn from_signed(raw: &[i32]) -> Self {
        Word::from_letters(raw.iter().map(|&r| Letter::from_raw(r)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, exponent: i32) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..exponent.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `c w c^-1`, reduced.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.mul(self).mul(&by.inverse())
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    pub fn contains_generator(&self, g: GeneratorId) -> bool {
        self.0.iter().any(|l| l.generator() == g)
    }

    pub fn occurrences(&self, g: GeneratorId) -> usize {
        self.0.iter().filter(|l| l.generator() == g).count()
    }

    pub fn max_generator(&self) -> u32 {
        self.0.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Exponent sum of generator `g`.
    pub fn exponent_sum(&self, g: GeneratorId) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator() == g)
            .map(|l| if l.is_positive() { 1 } else { -1 })
            .sum()
    }

    /// The same letters read right to left. This is an anti-automorphism of
    /// the free group; it converts between the two g-base orderings.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Strips letters that cancel cyclically (`a w a^-1` becomes `w`).
    pub fn cyclically_reduced(&self) -> Word {
        let v = &self.0;
        let mut lo = 0;
        let mut hi = v.len();
        while hi - lo >= 2 && v[lo] == v[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word(v[lo..hi].to_vec())
    }

    /// Rotation by `k` letters, freely reduced (a rotation of a word that is
    /// not cyclically reduced can cancel at the seam).
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word::from_letters(v)
    }

    /// Canonical representative of the relator class: least cyclic rotation
    /// of the cyclic reduction or of its inverse.
    pub fn canonical_relator(&self) -> Word {
        let r = self.cyclically_reduced();
        if r.is_identity() {
            return r;
        }
        let inv = r.inverse();
        let mut best = r.clone();
        for w in [&r, &inv] {
            for k in 0..w.len() {
                let cand = w.rotate(k);
                if cand < best {
                    best = cand;
                }
            }
        }
        best
    }

    /// Replaces every occurrence of generator `g` by `def` (and `g^-1` by
    /// `def^-1`).
    pub fn substitute(&self, g: GeneratorId, def: &Word) -> Word {
        let inv = def.inverse();
        let mut out = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if l.generator() == g {
                out.extend_from_slice(if l.is_positive() { &def.0 } else { &inv.0 });
            } else {
                out.push(l);
            }
        }
        Word::from_letters(out)
    }

    /// Applies a map generator -> word to every letter.
    pub fn map_generators<F: Fn(GeneratorId) -> Word>(&self, f: F) -> Word {
        let mut out = Vec::new();
        for &l in &self.0 {
            let img = f(l.generator());
            if l.is_positive() {
                out.extend_from_slice(&img.0);
            } else {
                out.extend_from_slice(&img.inverse().0);
            }
        }
        Word::from_letters(out)
    }
}

/// `reduce` as a free function: the freely reduced form of a letter sequence.
pub fn reduce(letters: &[Letter]) -> Word {
    Word::from_letters(letters.iter().copied())
}

/// `c w c^-1`, reduced.
pub fn conjugate(w: &Word, c: &Word) -> Word {
    w.conjugate(c)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_word(self, &|g: GeneratorId| format!("x{}", g.index())))
    }
}
