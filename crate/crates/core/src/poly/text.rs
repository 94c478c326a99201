//! Text format for polynomials.
//!
//! ```text
//! poly    := ['-'] term (('+'|'-') term)*
//! term    := coeff | powprod | coeff '*' powprod
//! powprod := factor ('*' factor)*
//! factor  := 'x' INT ['^' INT]
//! coeff   := INT ['/' INT]
//! ```
//!
//! Printing emits terms in decreasing order, factors in increasing variable
//! index, omits unit coefficients and denominators equal to 1, and never puts
//! `+` before the first term. ASCII whitespace is ignored when parsing.

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use super::{Monomial, Polynomial, Rational, Ring};
use crate::error::{AlgebraError, Result};

impl Ring {
    /// Parses a polynomial in this ring.
    pub fn parse(self, input: &str) -> Result<Polynomial> {
        let bytes: Vec<(usize, u8)> = input
            .bytes()
            .enumerate()
            .filter(|(_, b)| !b.is_ascii_whitespace())
            .collect();
        let mut parser = Parser { ring: self, src: &bytes, pos: 0, len: input.len() };
        parser.poly()
    }
}

struct Parser<'a> {
    ring: Ring,
    src: &'a [(usize, u8)],
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).map(|&(_, b)| b)
    }

    fn offset(&self) -> usize {
        self.src.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        if self.src.is_empty() {
            return self.err("empty input");
        }
        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let (c, m) = self.term()?;
            terms.push((if negative { -c } else { c }, m));
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(other) => return self.err(format!("unexpected `{}`", other as char)),
            }
            self.pos += 1;
        }
        self.ring.from_terms(terms)
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let c = self.coeff()?;
                let m = if self.eat(b'*') { self.powprod()? } else { Monomial::one(self.ring.arity()) };
                Ok((c, m))
            }
            Some(b'x') => Ok((Rational::one(), self.powprod()?)),
            Some(other) => self.err(format!("expected a term, found `{}`", other as char)),
            None => self.err("expected a term, found end of input"),
        }
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.eat(b'/') {
            let den = self.integer()?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn powprod(&mut self) -> Result<Monomial> {
        let mut exps = vec![0u32; self.ring.arity()];
        loop {
            self.factor(&mut exps)?;
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(Monomial::from_exps(exps))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        if !self.eat(b'x') {
            return self.err("expected a variable `x<i>`");
        }
        let at = self.offset();
        let var = self.small_int()?;
        if var == 0 || var as usize > exps.len() {
            return Err(AlgebraError::Parse {
                pos: at,
                msg: format!("variable x{var} is outside x1..x{}", exps.len()),
            });
        }
        let power = if self.eat(b'^') { self.small_int()? } else { 1 };
        let slot = &mut exps[var as usize - 1];
        *slot = match slot.checked_add(power) {
            Some(e) => e,
            None => return self.err("exponent overflow"),
        };
        Ok(())
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(self.src[start..self.pos].iter().map(|&(_, b)| b as char).collect())
    }

    fn integer(&mut self) -> Result<BigInt> {
        let d = self.digits()?;
        Ok(d.parse().expect("digit string"))
    }

    fn small_int(&mut self) -> Result<u32> {
        let at = self.offset();
        let d = self.digits()?;
        d.parse().map_err(|_| AlgebraError::Parse { pos: at, msg: format!("integer `{d}` too large") })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms().iter().enumerate() {
            let c = &t.coeff;
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono)?;
            } else {
                write!(f, "{abs}*{}", t.mono)?;
            }
        }
        Ok(())
    }
}
