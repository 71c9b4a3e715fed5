//! Recursive-descent parser for Laurent polynomial text.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' ['-'|'+'] digits]
//! atom   := digits | var | '(' expr ')'
//! var    := 't' (arity 1) | 't' digits   (1-based index)
//! ```

use num_bigint::BigInt;
use num_traits::Signed;

use super::LaurentPoly;
use crate::error::ParseError;

const MAX_POLY_POWER: u32 = 4096;

/// Parses `text` as a Laurent polynomial in `arity` variables.
pub fn parse_poly(text: &str, arity: usize) -> Result<LaurentPoly, ParseError> {
    if arity == 0 {
        return Err(ParseError::new(0, "arity must be positive"));
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        arity,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
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

    fn expr(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected exponent"));
        }
        let n: u32 = digits
            .parse::<u32>()
            .ok()
            .filter(|&n| n <= i32::MAX as u32)
            .ok_or_else(|| ParseError::new(at, "exponent overflow"))?;
        if let Some(unit) = base.as_unit() {
            // exact monomial power; guard the exponent arithmetic
            let mut shift = Vec::with_capacity(self.arity);
            for &e in &unit.shift {
                let v = e
                    .checked_mul(n as i64)
                    .and_then(|v| if negative { v.checked_neg() } else { Some(v) })
                    .ok_or_else(|| ParseError::new(at, "exponent overflow"))?;
                shift.push(v);
            }
            let sign = if unit.sign < 0 && n % 2 == 1 { -1 } else { 1 };
            return Ok(LaurentPoly::monomial(shift, sign));
        }
        if negative {
            return Err(ParseError::new(at, "negative power of a non-unit"));
        }
        if n > MAX_POLY_POWER {
            return Err(ParseError::new(
                at,
                "exponent overflow: power of a non-monomial is capped",
            ));
        }
        Ok(base.pow(n))
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }

    fn atom(&mut self) -> Result<LaurentPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let v: BigInt = d.parse().expect("digits");
                debug_assert!(!v.is_negative());
                Ok(LaurentPoly::constant(self.arity, v))
            }
            Some(b't') => {
                let at = self.pos;
                self.pos += 1;
                let arity = self.arity;
                let d = self.digits().to_string();
                let index = if d.is_empty() {
                    if arity != 1 {
                        return Err(ParseError::new(
                            at,
                            format!("bare 't' needs arity 1; use t1..t{arity}"),
                        ));
                    }
                    0
                } else {
                    match d.parse::<usize>() {
                        Ok(i) if (1..=arity).contains(&i) => i - 1,
                        _ => {
                            return Err(ParseError::new(
                                at,
                                format!("variable t{d} out of range 1..={arity}"),
                            ))
                        }
                    }
                };
                Ok(LaurentPoly::var(self.arity, index))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
