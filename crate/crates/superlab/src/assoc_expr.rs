//! Expressions in the free associative algebra written with Jordan and
//! Lie brackets, as tableau outputs are usually displayed:
//!
//! ```text
//! (x1 o x2) o (x3 o x4) - (x3 o x2) o (x1 o x4)
//! [x1,x3] o [x2,x4] + [x2,x3] o [x1,x4]
//! ```
//!
//! `a o b = ab + ba` (also written `∘`), `[a,b] = ab - ba`, juxtaposition
//! is the associative product, and a term may carry an integer factor
//! (`2*...`).

use superlab_core::tableaux::AssocPoly;
use superlab_core::QEps;

use crate::error::{Error, Result};

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Usage(format!("expression at byte {}: {msg}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.s[start..self.pos].parse().ok()
    }

    fn expr(&mut self) -> Result<AssocPoly> {
        let mut acc = if self.eat('-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<AssocPoly> {
        let save = self.pos;
        let coeff = match self.number() {
            Some(n) if self.eat('*') => n as i64,
            _ => {
                self.pos = save;
                1
            }
        };
        let mut acc = self.product()?;
        loop {
            self.skip_ws();
            if self.eat('∘') || self.s[self.pos..].starts_with("o ") && self.eat('o') {
                acc = acc.circ(&self.product()?);
            } else {
                return Ok(acc.scale(&QEps::from_int(coeff)));
            }
        }
    }

    /// Juxtaposed factors.
    fn product(&mut self) -> Result<AssocPoly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('x' | '(' | '[') => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<AssocPoly> {
        if self.eat('(') {
            let e = self.expr()?;
            if !self.eat(')') {
                return self.err("expected `)`");
            }
            return Ok(e);
        }
        if self.eat('[') {
            let a = self.expr()?;
            if !self.eat(',') {
                return self.err("expected `,`");
            }
            let b = self.expr()?;
            if !self.eat(']') {
                return self.err("expected `]`");
            }
            return Ok(a.commutator(&b));
        }
        if self.eat('x') {
            return match self.number() {
                Some(v) if v > 0 => Ok(AssocPoly::word(&[v])),
                _ => self.err("expected a variable index"),
            };
        }
        self.err("expected `x<i>`, `(` or `[`")
    }
}

pub fn parse(s: &str) -> Result<AssocPoly> {
    let mut p = Parser { s, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != s.len() {
        return p.err("trailing input");
    }
    Ok(e)
}
