//! Plain-text syntax for words, relations and presentations.
//!
//! Words: `x1 x2^-1 x1^2`, with `e` for the identity, parentheses with
//! powers `(x1 x2)^2` and commutators `[x1, x2]` (= `x1 x2 x1^-1 x2^-1`).
//! Relations: `u = v = w` chains, separated by `;` or newlines.
//!
//! Presentation files: a `gens: n` line, an optional `labels:` line, then one
//! relator per line. Lines starting with `#` are comments.

use super::presentation::default_label;
use super::{GeneratorId, Presentation, Word, WordError};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { src: s.as_bytes(), pos: 0 }
    }

    fn err(&self, msg: &str) -> WordError {
        WordError::Parse(format!("{} at byte {} of {:?}", msg, self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_whitespace() || self.src[self.pos] == b'*') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), WordError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn integer(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<i64>().map_err(|_| self.err("expected integer"))
    }

    fn word(&mut self) -> Result<Word, WordError> {
        let mut out = Word::identity();
        while let Some(c) = self.peek() {
            if c == b')' || c == b',' || c == b']' || c == b'=' || c == b';' {
                break;
            }
            let f = self.factor()?;
            out = out.mul(&f);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Word, WordError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.integer()?;
            let k = i32::try_from(k).map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Word, WordError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(b',')?;
                let b = self.word()?;
                self.expect(b']')?;
                Ok(Word::commutator(&a, &b))
            }
            Some(b'e') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let k: u32 = s.parse().map_err(|_| self.err("expected generator index"))?;
                if k == 0 {
                    return Err(self.err("generator indices start at 1"));
                }
                Ok(Word::generator(k))
            }
            _ => Err(self.err("unexpected character")),
        }
    }
}

/// Parses a single word. Panics on malformed input; use [`try_parse_word`]
/// for fallible parsing.
pub fn parse_word(s: &str) -> Word {
    try_parse_word(s).unwrap_or_else(|e| panic!("{}", e))
}

pub fn try_parse_word(s: &str) -> Result<Word, WordError> {
    let mut p = Parser::new(s);
    let w = p.word()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(w)
}

/// Parses one relation chain `u = v = ...` into relators `u v^-1, v w^-1, ...`.
/// A bare word is a relator.
pub fn parse_relation(s: &str) -> Result<Vec<Word>, WordError> {
    let mut p = Parser::new(s);
    let mut sides = vec![p.word()?];
    while p.peek() == Some(b'=') {
        p.pos += 1;
        sides.push(p.word()?);
    }
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    if sides.len() == 1 {
        return Ok(sides);
    }
    Ok(sides.windows(2).map(|w| w[0].mul(&w[1].inverse())).collect())
}

/// Parses relations separated by `;` or newlines.
pub fn parse_relations(s: &str) -> Result<Vec<Word>, WordError> {
    let mut out = Vec::new();
    for part in s.split([';', '\n']) {
        if part.trim().is_empty() {
            continue;
        }
        out.extend(parse_relation(part)?);
    }
    Ok(out)
}

pub(crate) fn format_word(w: &Word, name: &dyn Fn(GeneratorId) -> String) -> String {
    if w.is_identity() {
        return "e".to_string();
    }
    let letters = w.letters();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i + 1;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let run = (j - i) as i64;
        let exp = if l.is_positive() { run } else { -run };
        let base = name(l.generator());
        parts.push(if exp == 1 { base } else { format!("{}^{}", base, exp) });
        i = j;
    }
    parts.join(" ")
}

/// Renders a relator `r` as a relation `u = v` with `r = u v^-1`, picking the
/// rotation and split point with the fewest inverse letters and the most
/// balanced sides.
pub(crate) fn format_relation(r: &Word, name: &dyn Fn(GeneratorId) -> String) -> String {
    let n = r.len();
    if n == 0 {
        return "e = e".into();
    }
    let mut best: Option<((usize, usize), Word, Word)> = None;
    for rot in 0..n {
        let rw = r.rotate(rot);
        for k in 0..=rw.len() {
            let u = Word::from_letters(rw.letters()[..k].iter().copied());
            let v = Word::from_letters(rw.letters()[k..].iter().copied()).inverse();
            let negs = u.letters().iter().chain(v.letters()).filter(|l| !l.is_positive()).count();
            let imbalance = (u.len() as isize - v.len() as isize).unsigned_abs();
            let score = (negs, imbalance);
            if best.as_ref().map_or(true, |b| score < b.0) {
                best = Some((score, u, v));
            }
        }
    }
    let (_, u, v) = best.unwrap();
    format!("{} = {}", format_word(&u, name), format_word(&v, name))
}

pub(crate) fn format_presentation(p: &Presentation) -> String {
    let mut s = format!("gens: {}\n", p.ngen());
    let default = (1..=p.ngen()).all(|i| p.labels()[i - 1] == default_label(i));
    if !default {
        s.push_str(&format!("labels: {}\n", p.labels().join(" ")));
    }
    let name = |g: GeneratorId| format!("x{}", g.index());
    for r in p.relators() {
        s.push_str(&format_word(r, &name));
        s.push('\n');
    }
    s
}

pub(crate) fn parse_presentation(s: &str) -> Result<Presentation, WordError> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines.next().ok_or_else(|| WordError::Parse("empty presentation".into()))?;
    let n: usize = head
        .strip_prefix("gens:")
        .ok_or_else(|| WordError::Parse(format!("expected 'gens: n', got {:?}", head)))?
        .trim()
        .parse()
        .map_err(|_| WordError::Parse(format!("bad generator count in {:?}", head)))?;
    let mut labels: Vec<String> = (1..=n).map(default_label).collect();
    let mut relators = Vec::new();
    for line in lines {
        if let Some(rest) = line.strip_prefix("labels:") {
            let ls: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if ls.len() != n {
                return Err(WordError::Parse(format!("expected {} labels, got {}", n, ls.len())));
            }
            labels = ls;
            continue;
        }
        relators.extend(parse_relation(line)?);
    }
    Presentation::with_labels(n, relators, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_parse_with_powers_and_commutators() {
        assert_eq!(parse_word("(x1 x2)^2"), Word::from_signed(&[1, 2, 1, 2]));
        assert_eq!(parse_word("x1^-2 x3"), Word::from_signed(&[-1, -1, 3]));
        assert_eq!(parse_word("[x1, x2]"), Word::from_signed(&[1, 2, -1, -2]));
        assert_eq!(parse_word("e"), Word::identity());
        assert!(try_parse_word("x0").is_err());
        assert!(try_parse_word("x1 )").is_err());
    }

    #[test]
    fn relation_chains_become_consecutive_relators() {
        let rs = parse_relation("(x1 x2)^2 = (x2 x1)^2 = e").unwrap();
        assert_eq!(rs.len(), 2);
        assert_eq!(rs[1], parse_word("(x2 x1)^2"));
    }

    #[test]
    fn word_printing_groups_powers() {
        let w = parse_word("x1 x2^-1 x1^2");
        assert_eq!(w.to_string(), "x1 x2^-1 x1^2");
        assert_eq!(parse_word(&w.to_string()), w);
    }

    #[test]
    fn presentation_text_round_trip() {
        let text = "gens: 2\nx1 x2 x1 x2\nx2^-1 x1^3\n";
        let p = Presentation::from_text(text).unwrap();
        assert_eq!(p.to_text(), text);
        let labelled = "gens: 2\nlabels: a b\nx1 x2 x1^-1 x2^-1\n";
        assert_eq!(Presentation::from_text(labelled).unwrap().to_text(), labelled);
    }

    #[test]
    fn relation_display_splits_at_balanced_point() {
        let name = |g: GeneratorId| format!("x{}", g.index());
        let r = parse_word("(x1 x2)^2 (x2 x1)^-2");
        assert_eq!(format_relation(&r, &name), "x1 x2 x1 x2 = x2 x1 x2 x1");
        let c = parse_word("x1 x2 x1^-1 x2^-1");
        assert_eq!(format_relation(&c, &name), "x1 x2 = x2 x1");
    }
}
