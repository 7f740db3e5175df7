//! Reader for the canonical coefficient strings, e.g. `q*t^2 + 2*t - 1`.
//!
//! Accepted grammar (whitespace is ignored):
//!
//! ```text
//! poly  := ["-"] term (("+" | "-") term)*
//! term  := int ["*" mono] | mono
//! mono  := factor ("*" factor)*
//! factor:= ("q" | "t") ["^" ["-"] int]
//! rat   := poly | "(" poly ")" "/" "(" poly ")"
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{Mono, PolyQT};
use super::rat::RatQT;
use crate::error::{Error, Result};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Cursor { chars, pos: 0, _src: src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i).unwrap_or_else(|| self._src.len())
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.to_string() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(s.parse().expect("digits"))
    }

    fn small_int(&mut self) -> Result<i32> {
        let neg = self.eat('-');
        let at = self.offset();
        let v = self.int()?;
        let v: i32 = v
            .try_into()
            .map_err(|_| Error::Parse { pos: at, msg: "exponent out of range".into() })?;
        Ok(if neg { -v } else { v })
    }

    fn mono(&mut self) -> Result<Mono> {
        let mut m = Mono::ONE;
        loop {
            let var = match self.peek() {
                Some(c @ ('q' | 't')) => c,
                _ => return self.err("expected 'q' or 't'"),
            };
            self.pos += 1;
            let e = if self.eat('^') { self.small_int()? } else { 1 };
            if var == 'q' {
                m.q += e;
            } else {
                m.t += e;
            }
            // A '*' followed by a variable continues the monomial.
            if self.peek() == Some('*') && matches!(self.chars.get(self.pos + 1), Some((_, 'q' | 't'))) {
                self.pos += 1;
            } else {
                return Ok(m);
            }
        }
    }

    fn term(&mut self) -> Result<(Mono, BigInt)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.int()?;
                if self.eat('*') {
                    Ok((self.mono()?, c))
                } else {
                    Ok((Mono::ONE, c))
                }
            }
            Some('q' | 't') => Ok((self.mono()?, BigInt::one())),
            _ => self.err("expected a term"),
        }
    }

    fn poly(&mut self) -> Result<PolyQT> {
        let mut terms = Vec::new();
        let mut neg = self.eat('-');
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { -c } else { c }));
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    neg = false;
                }
                Some('-') => {
                    self.pos += 1;
                    neg = true;
                }
                _ => break,
            }
        }
        Ok(PolyQT::from_terms(terms))
    }

    fn done(&self) -> Result<()> {
        if self.pos == self.chars.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }
}

impl FromStr for PolyQT {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let p = c.poly()?;
        c.done()?;
        Ok(p)
    }
}

impl FromStr for RatQT {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        if c.peek() == Some('(') {
            c.pos += 1;
            let num = c.poly()?;
            c.expect(')')?;
            if c.eat('/') {
                c.expect('(')?;
                let den = c.poly()?;
                c.expect(')')?;
                c.done()?;
                return RatQT::new(num, den);
            }
            c.done()?;
            return Ok(RatQT::from_poly(num));
        }
        let p = c.poly()?;
        c.done()?;
        Ok(RatQT::from_poly(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whitespace_insensitive() {
        let a: PolyQT = "q*t^2+2*t-1".parse().unwrap();
        let b: PolyQT = "  q * t ^ 2 + 2 * t - 1 ".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "q*t^2 + 2*t - 1");
    }

    #[test]
    fn errors_carry_position() {
        match "q + * t".parse::<PolyQT>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!("q t".parse::<PolyQT>().is_err());
        assert!("".parse::<PolyQT>().is_err());
    }

    #[test]
    fn rational_strings() {
        let r: RatQT = "(2 - 2*t)/(4)".parse().unwrap();
        assert_eq!(r.to_string(), "(-t + 1)/(2)");
        let p: RatQT = "q - 1".parse().unwrap();
        assert!(p.is_polynomial());
    }
}
