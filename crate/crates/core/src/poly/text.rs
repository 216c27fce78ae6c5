//! Text form: `1/1*((x1 x2) x3) - 1/1*(x1 (x2 x3))`.
//!
//! Grammar (whitespace between tokens is free):
//!
//! ```text
//! poly  := "0" | term (("+" | "-") term)*
//! term  := [coeff "*"] tree
//! tree  := atom (("R" | "L") index)*
//! atom  := "x" index | "(" tree [tree] ")"
//! ```

use core::fmt;
use core::str::FromStr;

use super::{MultilinearPoly, Poly, Tree};
use crate::error::{Error, Result};
use crate::scalars::QEps;

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.s[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, alloc::format!("expected `{}`", b as char)))
        }
    }

    fn index(&mut self) -> Result<u32> {
        let start = self.pos;
        let bytes = self.s.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected variable index"));
        }
        self.s[start..self.pos].parse().map_err(|_| Error::parse(start, "index out of range"))
    }

    fn atom(&mut self) -> Result<Tree> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Tree::x(self.index()?))
            }
            Some(b'(') => {
                self.pos += 1;
                let a = self.tree()?;
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    return Ok(a);
                }
                let b = self.tree()?;
                self.expect(b')')?;
                Ok(Tree::mul(a, b))
            }
            _ => Err(Error::parse(self.pos, "expected `x<n>` or `(`")),
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        let mut t = self.atom()?;
        loop {
            match self.peek() {
                Some(b'R') => {
                    self.pos += 1;
                    t = t.r(self.index()?);
                }
                Some(b'L') => {
                    self.pos += 1;
                    t = t.l(self.index()?);
                }
                _ => return Ok(t),
            }
        }
    }

    fn term(&mut self) -> Result<(QEps, Tree)> {
        let c = match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let (c, used) = QEps::parse_prefix(&self.s[self.pos..], self.pos)?;
                self.pos += used;
                self.expect(b'*')?;
                c
            }
            _ => QEps::one(),
        };
        Ok((c, self.tree()?))
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut p = Poly::zero();
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        // a lone "0" is the zero polynomial
        {
            let rest = self.s[self.pos..].trim();
            if rest == "0" && !negate {
                self.pos = self.s.len();
                return Ok(p);
            }
        }
        loop {
            let (c, t) = self.term()?;
            p.add_term(if negate { -c } else { c }, t);
            match self.peek() {
                None => return Ok(p),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return Err(Error::parse(self.pos, "expected `+`, `-` or end of input")),
            }
            self.pos += 1;
        }
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let mut p = Parser { s, pos: 0 };
        if p.peek().is_none() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        p.poly()
    }
}

impl FromStr for MultilinearPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MultilinearPoly> {
        s.parse::<Poly>()?.into_multilinear()
    }
}

/// Parses a single tree such as `(x1 x2) R3 L4`.
pub fn parse_tree(s: &str) -> Result<Tree> {
    let mut p = Parser { s, pos: 0 };
    let t = p.tree()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.pos, "trailing input after tree"));
    }
    Ok(t)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write!(f, "{abs}*{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn round_trip() {
        for s in [
            "1/1*((x1 x2) x3) - 1/1*(x1 (x2 x3))",
            "-2/3+1/1E*(x1 x2) - 0/1+1/1E*(x2 x1)",
            "0",
            "1/2*x7",
        ] {
            let p: Poly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn operator_sugar() {
        let p: Poly = "(x1 x2) R3 L4".parse().unwrap();
        assert_eq!(p.to_string(), "1/1*(x4 ((x1 x2) x3))");
        let q: Poly = "((x1 x2) R3 x4)".parse().unwrap();
        assert_eq!(q.to_string(), "1/1*(((x1 x2) x3) x4)");
        assert!(matches!("x1 x2".parse::<Poly>(), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            "1/1*(x1 x2".parse::<Poly>(),
            Err(Error::Parse { pos: 10, msg: "expected `)`".into() })
        );
        assert!(matches!("1/1*(x1 y2)".parse::<Poly>(), Err(Error::Parse { pos: 8, .. })));
        assert!(matches!("".parse::<Poly>(), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!("1/0*x1".parse::<Poly>(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn cancellation_gives_zero() {
        let p: Poly = "1/1*(x1 x2) - 1/1*(x1 x2)".parse().unwrap();
        assert_eq!(p.to_string(), "0");
    }
}
