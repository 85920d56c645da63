//! Cocycle labels: sets of lone signed indices and circular words over signed
//! indices and a touch symbol, taken modulo overline-reversal.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{DplError, Result};
use crate::words::{canonical_rotation, SignedIndex, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Index { base: u32, negative: bool },
    Touch,
}

impl Token {
    fn index(s: SignedIndex) -> Token {
        Token::Index { base: s.base, negative: !s.positive }
    }

    fn overline(self) -> Token {
        match self {
            Token::Index { base, negative } => Token::Index { base, negative: !negative },
            Token::Touch => Token::Touch,
        }
    }

    fn act(self, sigma: &SignedPermutation) -> Result<Token> {
        match self {
            Token::Index { base, negative } => {
                let img = sigma.apply(SignedIndex::new(base, !negative))?;
                Ok(Token::index(img))
            }
            Token::Touch => Ok(Token::Touch),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Index { base, negative: false } => write!(f, "{base}"),
            Token::Index { base, negative: true } => write!(f, "-{base}"),
            Token::Touch => write!(f, "."),
        }
    }
}

/// One part of a label: a lone index is a word of length one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part(Vec<Token>);

impl Part {
    fn canonical(&self) -> Part {
        Part(canonical_rotation(&self.0))
    }

    fn overline_reversed(&self) -> Part {
        Part(self.0.iter().rev().map(|t| t.overline()).collect())
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|t| matches!(t, Token::Index { base, .. } if *base > 9));
        let s: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", s.join(if wide { " " } else { "" }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CocycleLabel {
    parts: Vec<Part>,
}

impl CocycleLabel {
    pub fn new(parts: Vec<Vec<Token>>) -> Result<CocycleLabel> {
        if parts.iter().any(|p| p.is_empty()) {
            return Err(DplError::MalformedWord("empty part".into()));
        }
        if parts.iter().any(|p| p.len() == 1 && p[0] == Token::Touch) {
            return Err(DplError::MalformedWord("a lone touch symbol is not a part".into()));
        }
        Ok(CocycleLabel { parts: parts.into_iter().map(Part).collect() }.normalize())
    }

    fn canonical_parts(parts: &[Part]) -> Vec<Part> {
        let mut v: Vec<Part> = parts.iter().map(Part::canonical).collect();
        v.sort();
        v
    }

    /// Every part replaced by the reversal of its overlined version.
    pub fn overline_reversed(&self) -> CocycleLabel {
        CocycleLabel { parts: Self::canonical_parts(&self.parts.iter().map(Part::overline_reversed).collect::<Vec<_>>()) }
    }

    pub fn normalize(&self) -> CocycleLabel {
        let a = Self::canonical_parts(&self.parts);
        let b = Self::canonical_parts(&self.parts.iter().map(Part::overline_reversed).collect::<Vec<_>>());
        CocycleLabel { parts: a.min(b) }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn act(&self, sigma: &SignedPermutation) -> Result<CocycleLabel> {
        let parts = self
            .parts
            .iter()
            .map(|p| p.0.iter().map(|t| t.act(sigma)).collect::<Result<Vec<_>>>().map(Part))
            .collect::<Result<Vec<_>>>()?;
        Ok(CocycleLabel { parts }.normalize())
    }

    pub fn bases(&self) -> BTreeSet<u32> {
        self.parts
            .iter()
            .flat_map(|p| p.0.iter())
            .filter_map(|t| match t {
                Token::Index { base, .. } => Some(*base),
                Token::Touch => None,
            })
            .collect()
    }
}

impl fmt::Display for CocycleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

fn parse_part(s: &str) -> Result<Vec<Token>> {
    let bad = || DplError::MalformedWord(s.to_string());
    let mut out = Vec::new();
    if s.split_whitespace().count() > 1 {
        for t in s.split_whitespace() {
            if t == "." || t == "\u{b7}" {
                out.push(Token::Touch);
            } else {
                out.push(Token::index(t.parse::<SignedIndex>().map_err(|_| bad())?));
            }
        }
        return Ok(out);
    }
    let mut neg = false;
    for c in s.trim().chars() {
        match c {
            '.' | '\u{b7}' => {
                if neg {
                    return Err(bad());
                }
                out.push(Token::Touch);
            }
            '-' => {
                if neg {
                    return Err(bad());
                }
                neg = true;
            }
            '\u{304}' => match out.last_mut() {
                Some(Token::Index { negative, .. }) => *negative = !*negative,
                _ => return Err(bad()),
            },
            d if d.is_ascii_digit() && d != '0' => {
                out.push(Token::Index { base: d.to_digit(10).expect("digit"), negative: neg });
                neg = false;
            }
            _ => return Err(bad()),
        }
    }
    if neg || out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

impl FromStr for CocycleLabel {
    type Err = DplError;

    /// Parts are comma-separated; `.` is the touch symbol; `-` negates the
    /// next index. Tokens may be space-separated for multi-digit indices.
    fn from_str(s: &str) -> Result<CocycleLabel> {
        let parts = s.split(',').map(|p| parse_part(p.trim())).collect::<Result<Vec<_>>>()?;
        CocycleLabel::new(parts)
    }
}

/// Orbit of a set of labels under all signed permutations of `bases`.
pub fn orbit(reps: &[CocycleLabel], bases: &[u32]) -> Result<BTreeSet<CocycleLabel>> {
    let group = SignedPermutation::all(bases);
    let mut out = BTreeSet::new();
    for r in reps {
        for g in &group {
            out.insert(r.act(g)?);
        }
    }
    Ok(out)
}

/// A fixture line: a label, possibly quarantined with a leading `?`.
#[derive(Clone, Debug)]
pub struct FixtureLabel {
    pub label: CocycleLabel,
    pub text: String,
    pub quarantined: bool,
}

pub fn parse_fixture(text: &str) -> Result<Vec<FixtureLabel>> {
    let mut out = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (quarantined, body) = match line.strip_prefix('?') {
            Some(b) => (true, b.trim()),
            None => (false, line),
        };
        out.push(FixtureLabel { label: body.parse()?, text: body.to_string(), quarantined });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overline_reversal_example() {
        let a: CocycleLabel = "1.-2.-3.".parse().unwrap();
        let b: CocycleLabel = ".3.2.-1".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.overline_reversed().normalize(), a);
    }

    #[test]
    fn two_body_orbit() {
        let l: CocycleLabel = "12..".parse().unwrap();
        assert_eq!(orbit(&[l], &[1, 2]).unwrap().len(), 4);
    }

    #[test]
    fn malformed() {
        assert!("1-".parse::<CocycleLabel>().is_err());
        assert!("1,,2".parse::<CocycleLabel>().is_err());
        assert!("a".parse::<CocycleLabel>().is_err());
        assert!("12 0".parse::<CocycleLabel>().is_err());
    }

    #[test]
    fn piercing_labels() {
        let ls: Vec<CocycleLabel> =
            ["1.-2.-3.", "1.-3.2.", "1.2.3.", "1.3.-2."].iter().map(|s| s.parse().unwrap()).collect();
        let set: BTreeSet<_> = ls.iter().cloned().collect();
        assert_eq!(set.len(), 4);
        let orb = orbit(&ls[2..3], &[1, 2, 3]).unwrap();
        assert!(ls.iter().all(|l| orb.contains(l)));
    }
}
