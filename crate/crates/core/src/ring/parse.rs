use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use super::{Monomial, PolyRing, Polynomial, MAX_EXPONENT};
use crate::coeff::{DomainSpec, Field, Scalar};

/// Parse failure with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} (at offset {pos})")]
pub struct ParseError {
    pub message: String,
    pub pos: usize,
}

fn err<T>(message: impl Into<String>, pos: usize) -> Result<T, ParseError> {
    Err(ParseError {
        message: message.into(),
        pos,
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((Tok::Num(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return err(format!("unexpected character `{ch}`"), i);
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    ring: &'a Arc<PolyRing>,
    domain: &'a DomainSpec,
    shorthand: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.1).unwrap_or(self.end)
    }

    fn constant(&self, c: Scalar) -> Polynomial<Scalar> {
        Polynomial::constant(self.ring, c)
    }

    fn expr(&mut self) -> Result<Polynomial<Scalar>, ParseError> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign = match self.peek() {
            Some(Tok::Op('-')) => {
                self.at += 1;
                -1
            }
            Some(Tok::Op('+')) => {
                self.at += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Tok::Op('+')) => sign = 1,
                Some(Tok::Op('-')) => sign = -1,
                _ => return Ok(acc),
            }
            self.at += 1;
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Polynomial<Scalar>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.at += 1;
                    let pos = self.pos();
                    let rhs = self.factor()?;
                    acc = checked_mul(&acc, &rhs, pos)?;
                }
                Some(Tok::Op('/')) => {
                    self.at += 1;
                    let pos = self.pos();
                    let rhs = self.factor()?;
                    acc = self.divide(&acc, &rhs, pos)?;
                }
                _ if self.starts_factor() => {
                    let pos = self.pos();
                    let rhs = self.factor()?;
                    acc = checked_mul(&acc, &rhs, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn divide(
        &self,
        lhs: &Polynomial<Scalar>,
        rhs: &Polynomial<Scalar>,
        pos: usize,
    ) -> Result<Polynomial<Scalar>, ParseError> {
        if rhs.is_zero() {
            return err("division by zero", pos);
        }
        if rhs.len() != 1 || !rhs.lm().is_one() {
            return err("division is only allowed by constants", pos);
        }
        let inv = rhs.lc().inv().expect("nonzero field element");
        Ok(lhs.scale(&inv))
    }

    fn factor(&mut self) -> Result<Polynomial<Scalar>, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Op('^')) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        let e = match self.peek() {
            Some(Tok::Num(n)) => n.clone(),
            _ => return err("expected a nonnegative integer exponent", pos),
        };
        self.at += 1;
        let e: u32 = match u32::try_from(&e) {
            Ok(e) if e < MAX_EXPONENT => e,
            _ => return err("exponent too large", pos),
        };
        power(&base, e, self.domain, self.ring, pos)
    }

    fn primary(&mut self) -> Result<Polynomial<Scalar>, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(self.constant(self.domain.from_bigint(n)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                self.identifier(&name, pos)
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return err("expected `)`", self.pos());
                }
                self.at += 1;
                Ok(inner)
            }
            Some(Tok::Op(c)) => err(format!("unexpected `{c}`"), pos),
            None => err("unexpected end of input", pos),
        }
    }

    fn atom(&self, name: &str) -> Option<Polynomial<Scalar>> {
        if let Some(i) = self.ring.var_index(name) {
            let m = Monomial::var(self.ring.nvars(), i);
            return Some(Polynomial::term(self.ring, m, self.domain.one()));
        }
        let j = self.domain.parameters().iter().position(|p| p == name)?;
        Some(self.constant(self.domain.parameter(j)))
    }

    fn identifier(&self, name: &str, pos: usize) -> Result<Polynomial<Scalar>, ParseError> {
        if let Some(p) = self.atom(name) {
            return Ok(p);
        }
        if !self.shorthand {
            return err(format!("unknown identifier `{name}`"), pos);
        }
        // `x3y2` style: letters each followed by an optional exponent.
        let bytes = name.as_bytes();
        let mut acc = self.constant(self.domain.one());
        let mut i = 0;
        while i < bytes.len() {
            let letter = &name[i..i + 1];
            let Some(base) = self.atom(letter) else {
                return err(format!("unknown identifier `{name}`"), pos);
            };
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let e: u32 = if start == i {
                1
            } else {
                match name[start..i].parse::<u32>() {
                    Ok(e) if e < MAX_EXPONENT => e,
                    _ => return err("exponent too large", pos + start),
                }
            };
            let f = power(&base, e, self.domain, self.ring, pos)?;
            acc = checked_mul(&acc, &f, pos)?;
        }
        Ok(acc)
    }
}

fn max_exponents(p: &Polynomial<Scalar>) -> Vec<u64> {
    let mut out = vec![0u64; p.ring().nvars()];
    for m in p.monomials() {
        for (o, &e) in out.iter_mut().zip(m.exponents()) {
            *o = (*o).max(e as u64);
        }
    }
    out
}

fn checked_mul(
    a: &Polynomial<Scalar>,
    b: &Polynomial<Scalar>,
    pos: usize,
) -> Result<Polynomial<Scalar>, ParseError> {
    let (ea, eb) = (max_exponents(a), max_exponents(b));
    if ea.iter().zip(&eb).any(|(x, y)| x + y >= MAX_EXPONENT as u64) {
        return err("exponent too large", pos);
    }
    Ok(a.mul(b))
}

fn power(
    base: &Polynomial<Scalar>,
    e: u32,
    domain: &DomainSpec,
    ring: &Arc<PolyRing>,
    pos: usize,
) -> Result<Polynomial<Scalar>, ParseError> {
    if e == 0 {
        return Ok(Polynomial::constant(ring, domain.one()));
    }
    if max_exponents(base).iter().any(|&x| x * e as u64 >= MAX_EXPONENT as u64) {
        return err("exponent too large", pos);
    }
    Ok(base.pow(e))
}

/// Parses a polynomial in the ring's variables with coefficients in
/// `domain`. Parameter names may appear anywhere a coefficient can.
///
/// When every variable and parameter name is a single letter, glued
/// identifiers such as `x3y2` read as `x^3*y^2`.
pub fn parse_polynomial(
    text: &str,
    ring: &Arc<PolyRing>,
    domain: &DomainSpec,
) -> Result<Polynomial<Scalar>, ParseError> {
    let toks = lex(text)?;
    let shorthand = ring
        .vars()
        .iter()
        .chain(domain.parameters())
        .all(|n| n.len() == 1);
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        ring,
        domain,
        shorthand,
    };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return err("unexpected trailing input", p.pos());
    }
    Ok(out)
}
