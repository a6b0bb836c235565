use std::collections::BTreeMap;
use std::fmt;

use super::ProjIsometry;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// A word in named generators: whitespace-separated `Name` or `Name^k`
/// tokens, with parenthesized groups `( … )^k` as shorthand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub items: Vec<WordItem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordItem {
    Gen { name: String, exp: i64 },
    Group { word: Word, exp: i64 },
}

impl Word {
    pub fn empty() -> Self {
        Word { items: Vec::new() }
    }

    pub fn parse(src: &str) -> Result<Word> {
        let mut lx = Lexer { src, pos: 0 };
        let w = lx.word(0)?;
        if lx.pos < src.len() {
            return Err(lx.err("unbalanced ')'"));
        }
        Ok(w)
    }

    /// Expands groups into a flat list of (generator, exponent).
    pub fn flatten(&self) -> Vec<(String, i64)> {
        let mut out = Vec::new();
        for item in &self.items {
            match item {
                WordItem::Gen { name, exp } => out.push((name.clone(), *exp)),
                WordItem::Group { word, exp } => {
                    let inner = word.flatten();
                    let inv: Vec<(String, i64)> = inner.iter().rev().map(|(n, e)| (n.clone(), -e)).collect();
                    let piece = if *exp < 0 { &inv } else { &inner };
                    for _ in 0..exp.unsigned_abs() {
                        out.extend(piece.iter().cloned());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, item) in self.items.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let exp = match item {
                WordItem::Gen { name, exp } => {
                    f.write_str(name)?;
                    *exp
                }
                WordItem::Group { word, exp } => {
                    write!(f, "({word})")?;
                    *exp
                }
            };
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl Lexer<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: format!("{msg} in word {:?}", self.src) }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn word(&mut self, depth: usize) -> Result<Word> {
        let mut items = Vec::new();
        loop {
            self.skip_ws();
            let Some(c) = self.rest().chars().next() else { break };
            if c == ')' {
                if depth == 0 {
                    return Err(self.err("unbalanced ')'"));
                }
                break;
            }
            if c == '(' {
                self.pos += 1;
                let inner = self.word(depth + 1)?;
                self.skip_ws();
                if !self.rest().starts_with(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                let exp = self.exponent()?;
                items.push(WordItem::Group { word: inner, exp });
            } else if c.is_alphabetic() {
                let len = self
                    .rest()
                    .char_indices()
                    .find(|&(_, ch)| !(ch.is_alphanumeric() || ch == '_' || ch == '\''))
                    .map_or(self.rest().len(), |(i, _)| i);
                let name = self.rest()[..len].to_string();
                self.pos += len;
                let exp = self.exponent()?;
                items.push(WordItem::Gen { name, exp });
            } else {
                return Err(self.err(&format!("unexpected {c:?}")));
            }
        }
        Ok(Word { items })
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.rest().starts_with('^') {
            return Ok(1);
        }
        self.pos += 1;
        let len = self
            .rest()
            .char_indices()
            .find(|&(i, ch)| !(ch.is_ascii_digit() || (i == 0 && (ch == '-' || ch == '+'))))
            .map_or(self.rest().len(), |(i, _)| i);
        let tok = &self.rest()[..len];
        let k = tok.parse::<i64>().map_err(|_| self.err("expected integer exponent"))?;
        self.pos += len;
        Ok(k)
    }
}

/// Exact product of a word, left to right.
pub fn eval_word<S: Scalar>(word: &Word, env: &BTreeMap<String, ProjIsometry<S>>) -> Result<ProjIsometry<S>> {
    let mut acc = ProjIsometry::identity();
    for (name, exp) in word.flatten() {
        let g = env.get(&name).ok_or_else(|| Error::UnboundName(name.clone()))?;
        acc = acc.compose(&g.pow(exp)?);
    }
    Ok(acc)
}
