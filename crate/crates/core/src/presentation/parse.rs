//! Presentation text format.
//!
//! ```text
//! # comment to end of line
//! <x, y, h | [x,y], h*x*H*(x^3*y^2)^-1, hyHXY>
//! ```
//!
//! Generator names are a lowercase letter followed by optional digits. In
//! relators the capitalized name denotes the inverse, `*` between factors is
//! optional, `[a,b]` is a·b·a⁻¹·b⁻¹, `^n` takes (possibly negative) powers and
//! `1` is the empty word.

use super::word::{Letter, Word};
use super::Presentation;
use crate::error::{Error, ParseError, Result};

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    // blank out comments so byte offsets stay meaningful
    let mut cleaned = String::with_capacity(text.len());
    for line in text.split_inclusive('\n') {
        match line.find('#') {
            Some(i) => {
                cleaned.push_str(&line[..i]);
                cleaned.extend(
                    line[i..]
                        .chars()
                        .map(|c| if c == '\n' { '\n' } else { ' ' }),
                );
            }
            None => cleaned.push_str(line),
        }
    }
    let mut p = Parser {
        src: cleaned.as_bytes(),
        pos: 0,
        names: Vec::new(),
    };
    p.presentation()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: Vec<String>,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse(ParseError::new(self.pos, msg)))
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    /// A letter followed by digits. Returns (start offset, token).
    fn name_token(&mut self) -> Option<(usize, String)> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let tok = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Some((start, tok.to_string()))
            }
            _ => None,
        }
    }

    fn presentation(&mut self) -> Result<Presentation> {
        self.expect(b'<')?;
        if self.peek() != Some(b'|') {
            loop {
                let Some((at, tok)) = self.name_token() else {
                    return self.err("expected generator name");
                };
                if !tok.as_bytes()[0].is_ascii_lowercase() {
                    return Err(Error::Parse(ParseError::new(
                        at,
                        format!("generator name '{tok}' must start with a lowercase letter"),
                    )));
                }
                if self.names.contains(&tok) {
                    return Err(Error::Parse(ParseError::new(
                        at,
                        format!("duplicate generator '{tok}'"),
                    )));
                }
                self.names.push(tok);
                if !self.eat(b',') {
                    break;
                }
            }
        }
        self.expect(b'|')?;
        let mut relators = Vec::new();
        if self.peek() != Some(b'>') {
            loop {
                relators.push(self.word()?);
                if !self.eat(b',') {
                    break;
                }
            }
        }
        self.expect(b'>')?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Presentation::new(std::mem::take(&mut self.names), relators)
    }

    fn word(&mut self) -> Result<Word> {
        let mut acc = self.item()?;
        loop {
            self.eat(b'*');
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'[' || c == b'(' || c == b'1' => {
                    acc = acc.concat(&self.item()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn item(&mut self) -> Result<Word> {
        let base = self.primary()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = self.eat(b'-');
        if !negative {
            self.eat(b'+');
        }
        self.peek();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let Ok(n) = digits.parse::<u32>() else {
            self.pos = start;
            return self.err("expected a power that fits in 32 bits");
        };
        let n = if negative { -(n as i64) } else { n as i64 };
        Ok(base.pow(n))
    }

    fn primary(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(b',')?;
                let b = self.word()?;
                self.expect(b']')?;
                Ok(Word::commutator(&a, &b))
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::empty())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let (at, tok) = self.name_token().expect("alphabetic");
                let inverse = c.is_ascii_uppercase();
                let lower = if inverse {
                    let mut s = tok.clone();
                    s[..1].make_ascii_lowercase();
                    s
                } else {
                    tok.clone()
                };
                match self.names.iter().position(|n| *n == lower) {
                    Some(gen) => Ok(Word::from_letters(vec![Letter::new(gen, inverse)])),
                    None => Err(Error::Parse(ParseError::new(
                        at,
                        format!("unknown generator '{tok}'"),
                    ))),
                }
            }
            _ => self.err("expected a word"),
        }
    }
}
