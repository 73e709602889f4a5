//! Text syntax for polynomials, ring elements and ring descriptors.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' UINT)*
//! atom   := INT | INT '/' UINT | VAR | '(' expr ')'
//! ring   := "ZZ" | "QQ" | "Zmod(" n ")" | "GF(" p ")"
//!         | "Poly(" ring ";" v1 "," v2 ... ")"
//!         | "Quot(" "Poly(...)" ";" "[" g1 "," g2 ... "]" ")"
//! ```
//!
//! Expressions are evaluated directly in the target ring, so rationals are
//! rejected outside fields and unknown names are reported with their position.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{Elem, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
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
            let v: BigInt = text[start..i].parse().expect("digits");
            out.push(Token { tok: Tok::Int(v), pos: start });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(text[start..i].to_owned()), pos: start });
        } else if "+-*/^()[],;".contains(c) {
            out.push(Token { tok: Tok::Sym(c), pos: i });
            i += 1;
        } else {
            let ch = text[i..].chars().next().expect("char");
            return Err(Error::syntax(i, format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser { toks: lex(text)?, at: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.pos).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.tok.clone());
        self.at += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::syntax(self.pos(), format!("expected `{c}`")))
        }
    }

    fn expect_uint(&mut self) -> Result<BigInt> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(v),
            _ => Err(Error::syntax(pos, "expected an unsigned integer")),
        }
    }

    fn expect_ident(&mut self) -> Result<String> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Ident(s)) => Ok(s),
            _ => Err(Error::syntax(pos, "expected a name")),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.at < self.toks.len() {
            return Err(Error::syntax(self.pos(), "unexpected trailing input"));
        }
        Ok(())
    }

    fn expr(&mut self, ring: &Ring) -> Result<Elem> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term(ring)?;
        if negate {
            acc = ring.neg(&acc);
        }
        loop {
            if self.eat('+') {
                let t = self.term(ring)?;
                acc = ring.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term(ring)?;
                acc = ring.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, ring: &Ring) -> Result<Elem> {
        let mut acc = self.factor(ring)?;
        while self.eat('*') {
            let f = self.factor(ring)?;
            acc = ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self, ring: &Ring) -> Result<Elem> {
        let mut base = self.atom(ring)?;
        while self.eat('^') {
            let pos = self.pos();
            let e = self.expect_uint()?;
            let e = e.to_u32().ok_or_else(|| Error::syntax(pos, "exponent too large"))?;
            base = ring.pow(&base, e);
        }
        Ok(base)
    }

    fn atom(&mut self, ring: &Ring) -> Result<Elem> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.eat('/') {
                    let dpos = self.pos();
                    let d = self.expect_uint()?;
                    if d.is_zero() {
                        return Err(Error::syntax(dpos, "zero denominator"));
                    }
                    if !is_over_field(ring) {
                        return Err(Error::CoefficientNotInRing(format!("{n}/{d} in {ring}")));
                    }
                    ring.from_rational(&BigRational::new(n, d))
                } else {
                    Ok(ring.from_int(&n))
                }
            }
            Some(Tok::Ident(name)) => ring.var_elem(&name).ok_or(Error::UnknownVariable(name)),
            Some(Tok::Sym('(')) => {
                let v = self.expr(ring)?;
                self.expect(')')?;
                Ok(v)
            }
            Some(_) => Err(Error::syntax(pos, "expected a number, variable or `(`")),
            None => Err(Error::syntax(pos, "unexpected end of input")),
        }
    }

    fn ring(&mut self) -> Result<Ring> {
        let pos = self.pos();
        let name = self.expect_ident()?;
        match name.as_str() {
            "ZZ" => Ok(Ring::ZZ),
            "QQ" => Ok(Ring::QQ),
            "Zmod" | "GF" => {
                self.expect('(')?;
                let npos = self.pos();
                let n = self.expect_uint()?;
                self.expect(')')?;
                let n = n.to_u64().ok_or_else(|| Error::syntax(npos, "modulus must fit in 64 bits"))?;
                if name == "Zmod" {
                    Ring::zmod(n)
                } else {
                    Ring::gf(n)
                }
            }
            "Poly" => {
                self.expect('(')?;
                let base = self.ring()?;
                self.expect(';')?;
                let mut vars = vec![self.expect_ident()?];
                while self.eat(',') {
                    vars.push(self.expect_ident()?);
                }
                self.expect(')')?;
                Ring::poly(base, vars)
            }
            "Quot" => {
                self.expect('(')?;
                let poly = self.ring()?;
                self.expect(';')?;
                self.expect('[')?;
                let mut gens = Vec::new();
                if !self.eat(']') {
                    loop {
                        let g = self.expr(&poly)?;
                        gens.push(g.into_poly().ok_or_else(|| {
                            Error::InvalidRing("Quot needs a polynomial ring".into())
                        })?);
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                self.expect(')')?;
                Ring::quot(poly, gens)
            }
            _ => Err(Error::syntax(pos, format!("unknown ring `{name}`"))),
        }
    }
}

fn is_over_field(ring: &Ring) -> bool {
    match ring {
        Ring::QQ | Ring::GF(_) => true,
        Ring::Poly(p) => is_over_field(&p.base),
        Ring::Quot(_) => true,
        _ => false,
    }
}

/// Parse an element of `ring`.
pub fn parse_elem(text: &str, ring: &Ring) -> Result<Elem> {
    let mut p = Parser::new(text)?;
    if p.toks.is_empty() {
        return Err(Error::syntax(0, "empty expression"));
    }
    let v = p.expr(ring)?;
    p.finish()?;
    Ok(v)
}

/// Parse a polynomial over `ring`. For a polynomial ring or quotient this is
/// its canonical representative; over a base ring the result is a constant.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    match parse_elem(text, ring)? {
        Elem::P(p) => Ok(p),
        e @ Elem::S(_) => Ok(Polynomial::constant(e, ring)),
    }
}

/// Parse a ring descriptor.
pub fn parse_ring(text: &str) -> Result<Ring> {
    let mut p = Parser::new(text)?;
    let r = p.ring()?;
    p.finish()?;
    Ok(r)
}

/// Split `text` on commas that are not nested inside brackets or parentheses.
pub fn split_top_level(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_owned());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_owned());
    }
    out
}

/// Print a polynomial in the syntax accepted by [`parse_poly`].
pub fn print_poly(p: &Polynomial, ring: &Ring) -> String {
    match ring.poly_ring() {
        Some(pr) => p.render(&pr.vars, |c| pr.base.fmt_elem(c)),
        None => p.render(&[], |c| ring.fmt_elem(c)),
    }
}
