//! Braid monodromy factorizations and their van Kampen presentations.
//!
//! A factorization is a list of braids, one per singular fiber in sweep
//! order. It can be assembled from a table of Lefschetz pairs, or tracked
//! numerically for a curve whose singular values are all real.
//!
//! Text formats (`#` starts a comment):
//!
//! ```text
//! strands: 4          strands: 4
//! s1^4                1 | P3    | 1 | s3
//! s2 s1^2 s2^-1       2 | <2,3> | 4 | s2^2
//! ```
//!
//! The left one is a factorization, one factor per line. The right one is a
//! table: row index, Lefschetz pair (`<a,b>`, or `Pk` for `<k,k+1>`),
//! exponent and the diffeomorphism as an explicit braid word.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::braid::{induced_relators, BraidError, BraidWord};
use crate::tracker::{singular_values, track, track_polyline, ComplexRational, CurvePoly, LoopSpec, TrackError};
use crate::word::{Presentation, Word};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VanKampenError {
    #[error("bad Lefschetz pair {0} on {1} strands")]
    BadPair(LefschetzPair, usize),
    #[error("exponent must be positive")]
    BadExponent,
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Track(#[from] TrackError),
    #[error("singular value {0} is not real")]
    NonRealSingularValue(String),
    #[error("line {0}: {1}")]
    Parse(usize, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    strands: usize,
    factors: Vec<BraidWord>,
}

impl Factorization {
    pub fn new(strands: usize, factors: Vec<BraidWord>) -> Result<Self, VanKampenError> {
        for f in &factors {
            if f.strands() != strands {
                return Err(BraidError::StrandMismatch { braid: f.strands(), base: strands }.into());
            }
        }
        Ok(Factorization { strands, factors })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[BraidWord] {
        &self.factors
    }

    /// `f_k ... f_1`: the monodromy of a loop around all singular values.
    /// It is the full twist when the curve meets the line at infinity
    /// transversally.
    pub fn product(&self) -> BraidWord {
        self.factors.iter().rev().fold(BraidWord::identity(self.strands), |acc, f| acc.mul(f))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("strands: {}\n", self.strands);
        for f in &self.factors {
            s.push_str(&f.to_string());
            s.push('\n');
        }
        s
    }

    pub fn parse(s: &str) -> Result<Self, VanKampenError> {
        let mut lines = content_lines(s);
        let strands = parse_strands(lines.next())?;
        let factors = lines
            .map(|(no, l)| BraidWord::parse(strands, l).map_err(|e| VanKampenError::Parse(no, e.to_string())))
            .collect::<Result<_, _>>()?;
        Factorization::new(strands, factors)
    }
}

fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_strands(line: Option<(usize, &str)>) -> Result<usize, VanKampenError> {
    let (no, l) = line.ok_or_else(|| VanKampenError::Parse(0, "empty input".into()))?;
    l.strip_prefix("strands:")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| VanKampenError::Parse(no, format!("expected 'strands: n', got {:?}", l)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LefschetzPair {
    Pair(usize, usize),
    /// `Pk`: the pair `<k, k+1>` that meets at a branch point.
    Point(usize),
}

impl LefschetzPair {
    pub fn endpoints(self) -> (usize, usize) {
        match self {
            LefschetzPair::Pair(a, b) => (a, b),
            LefschetzPair::Point(k) => (k, k + 1),
        }
    }
}

impl fmt::Display for LefschetzPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LefschetzPair::Pair(a, b) => write!(f, "<{},{}>", a, b),
            LefschetzPair::Point(k) => write!(f, "P{}", k),
        }
    }
}

impl FromStr for LefschetzPair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some(k) = s.strip_prefix('P') {
            return k.parse().map(LefschetzPair::Point).map_err(|_| format!("bad point label {:?}", s));
        }
        let inner = s.strip_prefix('<').and_then(|r| r.strip_suffix('>')).ok_or_else(|| format!("bad pair {:?}", s))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| format!("bad pair {:?}", s))?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad pair {:?}", s));
        Ok(LefschetzPair::Pair(num(a)?, num(b)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MtRow {
    pub index: usize,
    pub pair: LefschetzPair,
    pub epsilon: u32,
    /// The diffeomorphism of passing this fiber, as an explicit braid.
    pub delta: BraidWord,
}

/// Parses a table in the row format described in the module docs.
pub fn parse_table(s: &str) -> Result<(usize, Vec<MtRow>), VanKampenError> {
    let mut lines = content_lines(s);
    let strands = parse_strands(lines.next())?;
    let mut rows = Vec::new();
    for (no, l) in lines {
        let cols: Vec<&str> = l.split('|').map(str::trim).collect();
        if cols.len() != 4 {
            return Err(VanKampenError::Parse(no, format!("expected 4 columns, got {}", cols.len())));
        }
        let bad = |m: String| VanKampenError::Parse(no, m);
        rows.push(MtRow {
            index: cols[0].parse().map_err(|_| bad(format!("bad row index {:?}", cols[0])))?,
            pair: cols[1].parse().map_err(bad)?,
            epsilon: cols[2].parse().map_err(|_| bad(format!("bad exponent {:?}", cols[2])))?,
            delta: BraidWord::parse(strands, cols[3]).map_err(|e| bad(e.to_string()))?,
        });
    }
    Ok((strands, rows))
}

pub fn table_to_text(strands: usize, rows: &[MtRow]) -> String {
    let mut s = format!("strands: {}\n", strands);
    for r in rows {
        s.push_str(&format!("{} | {} | {} | {}\n", r.index, r.pair, r.epsilon, r.delta));
    }
    s
}

/// The band generator `c σ_a c^-1` with `c = σ_{b-1} ... σ_{a+1}`, the
/// positive half twist exchanging points `a < b`.
pub fn pair_half_twist(n: usize, pair: LefschetzPair) -> Result<BraidWord, VanKampenError> {
    let (a, b) = pair.endpoints();
    if a < 1 || a >= b || b > n {
        return Err(VanKampenError::BadPair(pair, n));
    }
    let mut c = BraidWord::identity(n);
    for k in (a + 1..b).rev() {
        c = c.mul(&BraidWord::sigma(n, k, 1)?);
    }
    Ok(c.mul(&BraidWord::sigma(n, a, 1)?).mul(&c.inverse()))
}

/// Factor `j` is the half twist on row `j`'s pair raised to its exponent,
/// conjugated by `d_{j-1} = delta_1 ... delta_{j-1}` as `d h d^-1`.
pub fn assemble(rows: &[MtRow], n: usize) -> Result<Factorization, VanKampenError> {
    let mut history = BraidWord::identity(n);
    let mut factors = Vec::with_capacity(rows.len());
    for r in rows {
        if r.epsilon == 0 {
            return Err(VanKampenError::BadExponent);
        }
        if r.delta.strands() != n {
            return Err(BraidError::StrandMismatch { braid: r.delta.strands(), base: n }.into());
        }
        let h = pair_half_twist(n, r.pair)?.pow(r.epsilon as i32);
        factors.push(h.conjugate(&history));
        history = history.mul(&r.delta);
    }
    Factorization::new(n, factors)
}

/// Generators `x1..xn`; for each factor the relators `e_k x_k^-1`; with
/// `projective`, also `x1 x2 ... xn`.
pub fn present(f: &Factorization, projective: bool) -> Presentation {
    let mut relators: Vec<Word> = f.factors.iter().flat_map(induced_relators).collect();
    if projective {
        relators.push(Word::from_signed(&(1..=f.strands as i32).collect::<Vec<_>>()));
    }
    Presentation::new(f.strands, relators).expect("relators use only x1..xn")
}

/// The braid monodromy of a curve whose singular values are all real,
/// by numerical tracking.
///
/// The base point sits left of the first singular value. The path to
/// value `j` runs along the real axis, passing below the earlier values on
/// small half circles, and the loop goes once counterclockwise around it.
pub fn tracked_factorization(p: &CurvePoly) -> Result<Factorization, VanKampenError> {
    let mut sv = Vec::new();
    for z in singular_values(p)? {
        if z.im.abs() > 1e-9 * z.norm().max(1.0) {
            return Err(VanKampenError::NonRealSingularValue(format!("{:.6}", z)));
        }
        sv.push(z.re);
    }
    sv.sort_by(f64::total_cmp);
    let n = p.degy();
    let radius = |j: usize| {
        let gap = sv.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, s)| (s - sv[j]).abs()).fold(1.0, f64::min);
        gap / 4.0
    };
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let base = sv.first().map_or(0.0, |s| s - 2.0 * radius(0));
    let mut factors = Vec::with_capacity(sv.len());
    let mut vertices = vec![c(base, 0.0)];
    for (j, &s) in sv.iter().enumerate() {
        let r = radius(j);
        vertices.push(c(s - r, 0.0));
        let path = track_polyline(p, &vertices, 16)?.braid;
        let center = ComplexRational::new(BigRational::from_float(s).expect("finite"), BigRational::zero());
        let lp = LoopSpec::new(center, BigRational::from_float(r).expect("finite"))?;
        let around = track(p, &lp, (0.5, 1.5))?.braid;
        factors.push(around.conjugate(&path));
        vertices.extend([c(s - r, -r), c(s + r, -r), c(s + r, 0.0)]);
    }
    Factorization::new(n, factors)
}
