//! Braid words and the Artin action on a geometric base of the free group.
//!
//! `σ_i` sends `(e_i, e_{i+1})` to `(e_i e_{i+1} e_i^-1, e_i)`. Words act left
//! to right, so the action of `b1 b2` is that of `b1` followed by that of `b2`.
//! The preserved product is the ascending one, `e_1 e_2 ... e_n`.

use std::fmt;

use thiserror::Error;

use crate::word::{try_parse_word, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("braid on {braid} strands applied to a g-base of size {base}")]
    StrandMismatch { braid: usize, base: usize },
    #[error("bad block [{0}..{1}] on {2} strands")]
    BadBlock(usize, usize, usize),
    #[error("strand {0} is not adjacent to block [{1}..{2}]")]
    NonAdjacentMover(usize, usize, usize),
    #[error("generator s{0} out of range for {1} strands")]
    IndexOutOfRange(usize, usize),
    #[error("braid parse error: {0}")]
    Parse(String),
}

/// `σ_index^{±1}`, with `1 <= index < strands`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sigma {
    pub index: usize,
    pub positive: bool,
}

impl Sigma {
    pub fn inverse(self) -> Sigma {
        Sigma { positive: !self.positive, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Sigma>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Sigma>) -> Result<Self, BraidError> {
        assert!(strands >= 1, "a braid needs at least one strand");
        for s in &letters {
            if s.index == 0 || s.index >= strands {
                return Err(BraidError::IndexOutOfRange(s.index, strands));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// `σ_i^k`.
    pub fn sigma(strands: usize, i: usize, k: i32) -> Result<Self, BraidError> {
        let s = Sigma { index: i, positive: k > 0 };
        BraidWord::new(strands, vec![s; k.unsigned_abs() as usize])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Sigma] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn pow(&self, k: i32) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|s| s.inverse()).collect() }
    }

    /// `c b c^-1`.
    pub fn conjugate(&self, c: &BraidWord) -> BraidWord {
        c.mul(self).mul(&c.inverse())
    }

    /// Sum of the signs of all letters (the degree of the braid).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|s| if s.positive { 1 } else { -1 }).sum()
    }

    /// The same braid on `n` strands with strand 1 placed at position `offset + 1`.
    pub fn embed(&self, n: usize, offset: usize) -> Result<BraidWord, BraidError> {
        if offset + self.strands > n {
            return Err(BraidError::BadBlock(offset + 1, offset + self.strands, n));
        }
        let letters = self.letters.iter().map(|s| Sigma { index: s.index + offset, ..*s }).collect();
        Ok(BraidWord { strands: n, letters })
    }

    /// Parses `s1 s2^-1 (s1 s2)^3`; `e` is the identity.
    pub fn parse(strands: usize, s: &str) -> Result<BraidWord, BraidError> {
        if s.contains('x') {
            return Err(BraidError::Parse(format!("unexpected 'x' in {:?}", s)));
        }
        let w = try_parse_word(&s.replace('s', "x")).map_err(|e| BraidError::Parse(e.to_string().replace('x', "s")))?;
        let letters = w.letters().iter().map(|l| Sigma { index: l.index() as usize, positive: l.is_positive() }).collect();
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i + 1;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = if l.positive { run } else { -run };
            parts.push(if exp == 1 { format!("s{}", l.index) } else { format!("s{}^{}", l.index, exp) });
            i = j;
        }
        f.write_str(&parts.join(" "))
    }
}

/// An ordered tuple of free-group words, the image of the standard
/// geometric base `(x1, ..., xn)` under some braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GBase(Vec<Word>);

impl GBase {
    pub fn standard(n: usize) -> Self {
        GBase((1..=n as u32).map(Word::generator).collect())
    }

    pub fn from_entries(entries: Vec<Word>) -> Self {
        GBase(entries)
    }

    pub fn entries(&self) -> &[Word] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `e_1 e_2 ... e_n`, invariant under the Artin action.
    pub fn product(&self) -> Word {
        self.0.iter().fold(Word::identity(), |acc, w| acc.mul(w))
    }
}

pub fn artin_apply(b: &BraidWord, g: &GBase) -> Result<GBase, BraidError> {
    if b.strands != g.len() {
        return Err(BraidError::StrandMismatch { braid: b.strands, base: g.len() });
    }
    let mut e = g.0.clone();
    for s in &b.letters {
        let i = s.index - 1;
        let (a, c) = (e[i].clone(), e[i + 1].clone());
        if s.positive {
            e[i] = c.conjugate(&a);
            e[i + 1] = a;
        } else {
            e[i] = c.clone();
            e[i + 1] = a.conjugate(&c.inverse());
        }
    }
    Ok(GBase(e))
}

/// The van Kampen relators `e_k x_k^-1` of the g-base `b` produces from
/// the standard one, trivial ones dropped.
pub fn induced_relators(b: &BraidWord) -> Vec<Word> {
    let g = artin_apply(b, &GBase::standard(b.strands)).expect("standard base has matching size");
    g.0.iter()
        .enumerate()
        .map(|(k, e)| e.mul(&Word::generator(k as u32 + 1).inverse()))
        .filter(|w| !w.is_identity())
        .collect()
}

/// Whether two braids induce the same automorphism. The Artin
/// representation is faithful, so this decides braid equality.
pub fn same_action(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands == b.strands && {
        let g = GBase::standard(a.strands);
        artin_apply(a, &g) == artin_apply(b, &g)
    }
}

fn check_block(n: usize, i: usize, j: usize) -> Result<(), BraidError> {
    if i < 1 || i > j || j > n {
        return Err(BraidError::BadBlock(i, j, n));
    }
    Ok(())
}

fn ascending(i: usize, j: usize) -> Vec<Sigma> {
    (i..j).map(|k| Sigma { index: k, positive: true }).collect()
}

/// The positive half twist `Δ_{[i,j]} = (σ_i ... σ_{j-1})(σ_i ... σ_{j-2}) ... (σ_i)`.
pub fn half_twist(n: usize, i: usize, j: usize) -> Result<BraidWord, BraidError> {
    check_block(n, i, j)?;
    let mut letters = Vec::new();
    for top in (i..j).rev() {
        letters.extend(ascending(i, top + 1));
    }
    BraidWord::new(n, letters)
}

/// The full twist `Δ²_{[i,j]} = (σ_i ... σ_{j-1})^{j-i+1}`.
pub fn full_twist(n: usize, i: usize, j: usize) -> Result<BraidWord, BraidError> {
    check_block(n, i, j)?;
    if i == j {
        return Err(BraidError::BadBlock(i, j, n));
    }
    let row = BraidWord::new(n, ascending(i, j))?;
    Ok(row.pow((j - i + 1) as i32))
}

/// Strand `mover` (adjacent to the block) goes `turns` times around the
/// whole block `[i..j]`; the block strands keep their order.
pub fn block_around(n: usize, mover: usize, i: usize, j: usize, turns: i32) -> Result<BraidWord, BraidError> {
    check_block(n, i, j)?;
    let there: Vec<Sigma> = if mover + 1 == i {
        (i - 1..j).map(|k| Sigma { index: k, positive: true }).collect()
    } else if mover == j + 1 {
        (i..=j).rev().map(|k| Sigma { index: k, positive: true }).collect()
    } else {
        return Err(BraidError::NonAdjacentMover(mover, i, j));
    };
    let back: Vec<Sigma> = there.iter().rev().copied().collect();
    let mut letters = there;
    letters.extend(back);
    Ok(BraidWord::new(n, letters)?.pow(turns))
}

/// A permutation of `1..=n`; `images()[k-1]` is the image of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &k in &images {
            assert!(k >= 1 && k <= images.len() && !seen[k - 1], "not a permutation: {:?}", images);
            seen[k - 1] = true;
        }
        Permutation(images)
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Nontrivial cycles in ascending order of their least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut c = vec![start];
            seen[start - 1] = true;
            let mut k = self.0[start - 1];
            while k != start {
                seen[k - 1] = true;
                c.push(k);
                k = self.0[k - 1];
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|k| k.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// The strand permutation: the strand starting at position `k` ends at
/// position `images()[k-1]`.
pub fn braid_permutation(b: &BraidWord) -> Permutation {
    // at[p] = starting position of the strand currently at position p
    let mut at: Vec<usize> = (1..=b.strands).collect();
    for s in &b.letters {
        at.swap(s.index - 1, s.index);
    }
    let mut images = vec![0; b.strands];
    for (p, &start) in at.iter().enumerate() {
        images[start - 1] = p + 1;
    }
    Permutation(images)
}
