//! Element grammar: generators `t[i,j;r]`, `tb[..]`, `s[..]`, `sb[..]`
//! (the level may be omitted), integers, `q`, `+ - * / ^` and parentheses.

use exactmath::QRat;

use crate::gens::{Fam, GenId, NCPoly, Word};
use crate::RttError;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

fn err(msg: impl Into<String>) -> RttError {
    RttError::Parse(msg.into())
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), RttError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(format!("expected '{}' at position {}", c as char, self.pos)))
        }
    }

    fn uint(&mut self) -> Result<u64, RttError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(format!("expected integer at position {}", start)));
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| err("integer too large"))
    }

    fn signed_int(&mut self) -> Result<i64, RttError> {
        if self.eat(b'(') {
            let v = self.signed_int()?;
            self.expect(b')')?;
            return Ok(v);
        }
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<NCPoly, RttError> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<NCPoly, RttError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                let c = d.as_scalar().ok_or_else(|| err("division by a non-scalar"))?;
                let inv = c.inv().map_err(|_| err("division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<NCPoly, RttError> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<NCPoly, RttError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let e = self.signed_int()?;
        pow(&base, e)
    }

    fn atom(&mut self) -> Result<NCPoly, RttError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.uint()?;
                Ok(NCPoly::scalar(QRat::from_int(v as i64)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                if name == "q" {
                    return Ok(NCPoly::scalar(QRat::q()));
                }
                let fam = Fam::from_prefix(name).ok_or_else(|| err(format!("unknown symbol '{}'", name)))?;
                self.expect(b'[')?;
                let i = self.uint()? as usize;
                self.expect(b',')?;
                let j = self.uint()? as usize;
                let r = if self.eat(b';') { self.uint()? as u32 } else { 0 };
                self.expect(b']')?;
                if i == 0 || j == 0 || i > 255 || j > 255 {
                    return Err(err(format!("index out of range in {}[{},{}]", name, i, j)));
                }
                Ok(NCPoly::gen(GenId::new(fam, i, j, r)))
            }
            Some(c) => Err(err(format!("unexpected '{}' at position {}", c as char, self.pos))),
            None => Err(err("unexpected end of input")),
        }
    }
}

fn pow(base: &NCPoly, e: i64) -> Result<NCPoly, RttError> {
    if let Some(c) = base.as_scalar() {
        if e < 0 && c.is_zero() {
            return Err(err("zero to a negative power"));
        }
        return Ok(NCPoly::scalar(c.pow(e as i32)));
    }
    if e >= 0 {
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = &acc * base;
        }
        return Ok(acc);
    }
    // negative powers only of a single letter
    let mut it = base.terms();
    match (it.next(), it.next()) {
        (Some((w, c)), None) if w.factors().len() == 1 && c.is_one() => {
            let (g, p) = w.factors()[0];
            Ok(NCPoly::word(Word::letter(g, p * e as i32)))
        }
        _ => Err(err("negative power of a non-letter")),
    }
}

/// Parses an element with unvalidated generators; see `Presentation::canonicalize`.
pub fn parse_element(s: &str) -> Result<NCPoly, RttError> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(err(format!("trailing input at position {}", p.pos)));
    }
    Ok(e)
}
