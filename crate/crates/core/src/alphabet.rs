//! Named generator sets and the textual word grammar.
//!
//! Tokens are generator names matching `[A-Za-z][A-Za-z0-9]*` with an
//! optional `^<signed integer>` exponent, separated by whitespace. The
//! token `1` is the empty word. Formatting emits the reduced word with runs
//! collapsed into exponents, e.g. `a b^2 a^-1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Invalid(
                "alphabet must name at least one generator".into(),
            ));
        }
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::Invalid(format!("bad generator name {n:?}")));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate generator name {n:?}")));
            }
        }
        Ok(Alphabet { names })
    }

    fn fixed(names: &[&str]) -> Self {
        Alphabet {
            names: names.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// `{a, b}`: the free group F2 itself.
    pub fn ab() -> Self {
        Self::fixed(&["a", "b"])
    }

    /// `{ta, tb}`: the t-generators of pi.
    pub fn t() -> Self {
        Self::fixed(&["ta", "tb"])
    }

    /// `{x1, x2}`: the free complement inside F.
    pub fn x() -> Self {
        Self::fixed(&["x1", "x2"])
    }

    /// `{A1, A2}`: the free matrix generators.
    pub fn sanov() -> Self {
        Self::fixed(&["A1", "A2"])
    }

    /// `{g1, ..., gn}`.
    pub fn generic(n: u32) -> Self {
        Alphabet {
            names: (1..=n).map(|i| format!("g{i}")).collect(),
        }
    }

    /// `{h1, ..., hk}`, used for the base group of a semidirect product.
    pub fn base(k: u32) -> Self {
        Alphabet {
            names: (1..=k).map(|i| format!("h{i}")).collect(),
        }
    }

    /// `{a, b, z1, ..., zm}`, the target of the holomorph embedding.
    pub fn embedding(m: u32) -> Self {
        let mut names = vec!["a".to_string(), "b".to_string()];
        names.extend((1..=m).map(|i| format!("z{i}")));
        Alphabet { names }
    }

    /// Parse a comma-separated list such as `a,b,c`.
    pub fn parse_list(text: &str) -> Result<Self> {
        Alphabet::new(text.split(',').map(str::trim))
    }

    pub fn rank(&self) -> u32 {
        self.names.len() as u32
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: u32) -> &str {
        &self.names[index as usize - 1]
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as u32 + 1)
    }

    /// Parse a word; the result is reduced.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut raw = Vec::new();
        for (pos, token) in tokens(text) {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.find('^') {
                Some(i) => {
                    let e = &token[i + 1..];
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| Error::parse(pos + i + 1, format!("bad exponent {e:?}")))?;
                    (&token[..i], exp)
                }
                None => (token, 1),
            };
            if !valid_name(name) {
                return Err(Error::parse(pos, format!("bad token {token:?}")));
            }
            let index = self
                .index_of(name)
                .ok_or_else(|| Error::InvalidGenerator(format!("unknown name {name:?}")))?;
            let letter = if exp < 0 {
                Letter::neg(index)
            } else {
                Letter::pos(index)
            };
            let count = usize::try_from(exp.unsigned_abs())
                .map_err(|_| Error::parse(pos, "exponent too large"))?;
            raw.extend(std::iter::repeat_n(letter, count));
        }
        Word::reduce(self.rank(), raw)
    }

    /// Canonical text of a word; `1` for the identity.
    pub fn format_word(&self, w: &Word) -> String {
        self.display(w).to_string()
    }

    pub fn display<'a>(&'a self, w: &'a Word) -> WordDisplay<'a> {
        WordDisplay {
            alphabet: self,
            word: w,
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(","))
    }
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = (offset, &trimmed[..end]);
        offset += end;
        rest = &trimmed[end..];
        Some(tok)
    })
}

pub struct WordDisplay<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("1");
        }
        for (i, (l, n)) in self.word.syllables().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(l.index()))?;
            match (l.is_inverse(), n) {
                (false, 1) => {}
                (false, n) => write!(f, "^{n}")?,
                (true, n) => write!(f, "^-{n}")?,
            }
        }
        Ok(())
    }
}
