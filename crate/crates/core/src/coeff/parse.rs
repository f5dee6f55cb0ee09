//! Reader for the textual form produced by `Display`, and for ordinary
//! arithmetic expressions in the two variables.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{CoeffError, RationalFunction, VarSet};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: VarSet,
}

type PResult<T> = Result<T, CoeffError>;

impl Parser<'_> {
    fn fail<T>(&self, message: &str) -> PResult<T> {
        Err(CoeffError::Syntax {
            position: self.pos,
            message: message.to_string(),
        })
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

    fn digits(&mut self) -> PResult<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self) -> PResult<RationalFunction> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<RationalFunction> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc.checked_mul(&self.power()?)?;
            } else if self.eat(b'/') {
                acc = acc.checked_div(&self.power()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> PResult<RationalFunction> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let e: i32 = match self.digits()?.parse() {
            Ok(e) => e,
            Err(_) => return self.fail("exponent too large"),
        };
        Ok(base.pow(e)?)
    }

    fn atom(&mut self) -> PResult<RationalFunction> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.fail("expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits()?.parse().unwrap();
                Ok(RationalFunction::from_rational(self.vars, BigRational::from_integer(n)))
            }
            Some(c) => {
                let names = self.vars.names();
                for (i, name) in names.iter().enumerate() {
                    if c == name.as_bytes()[0] {
                        self.pos += 1;
                        return Ok(RationalFunction::var(self.vars, i));
                    }
                }
                self.fail("unexpected character")
            }
            None => self.fail("unexpected end of input"),
        }
    }
}

pub(super) fn parse(text: &str, vars: VarSet) -> Result<RationalFunction, CoeffError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let value = p.expr()?;
    if p.peek().is_some() {
        return p.fail("trailing input");
    }
    Ok(value)
}
