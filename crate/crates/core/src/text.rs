//! The line-oriented ring/ideal file format.
//!
//! ```text
//! # comment
//! ring: x y z t
//! ideal I: x*z, x*t^2, y^2*z
//! ideal P: x, y^2
//! decomposition D: P & Q
//! ```
//!
//! A polynomial is a signed sum of terms; a term is an optional integer
//! coefficient followed by `*`-separated factors, each a variable with an
//! optional positive exponent or a parenthesized polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Coefficient, MonomialOrder, PolyIdeal, Polynomial};
use crate::ring::{is_identifier, Ring, RingRef};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct NamedIdeal {
    pub name: String,
    pub generators: Vec<Polynomial>,
}

#[derive(Debug, Clone)]
pub struct NamedDecomposition {
    pub name: String,
    pub components: Vec<String>,
}

/// A parsed ideal file.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: RingRef,
    pub ideals: Vec<NamedIdeal>,
    pub decompositions: Vec<NamedDecomposition>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LookupError {
    UnknownIdeal(String),
    UnknownDecomposition(String),
    NotMonomial { ideal: String, generator: String },
}

impl fmt::Display for LookupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LookupError::UnknownIdeal(n) => write!(f, "no ideal named `{n}`"),
            LookupError::UnknownDecomposition(n) => write!(f, "no decomposition named `{n}`"),
            LookupError::NotMonomial { ideal, generator } => {
                write!(f, "ideal `{ideal}` is not monomial: generator `{generator}` has several terms")
            }
        }
    }
}

impl std::error::Error for LookupError {}

impl IdealFile {
    pub fn ideal(&self, name: &str) -> Option<&NamedIdeal> {
        self.ideals.iter().find(|i| i.name == name)
    }

    pub fn poly_ideal(&self, name: &str) -> Result<PolyIdeal, LookupError> {
        let ideal = self.ideal(name).ok_or_else(|| LookupError::UnknownIdeal(name.into()))?;
        Ok(PolyIdeal::new(self.ring.clone(), ideal.generators.clone()).expect("parsed over the file's ring"))
    }

    /// The ideal as a monomial ideal; coefficients are ignored, each
    /// generator must be a single term.
    pub fn monomial_ideal(&self, name: &str) -> Result<MonomialIdeal, LookupError> {
        let ideal = self.ideal(name).ok_or_else(|| LookupError::UnknownIdeal(name.into()))?;
        to_monomial_ideal(&self.ring, name, &ideal.generators)
    }

    pub fn decomposition(&self, name: &str) -> Result<Vec<MonomialIdeal>, LookupError> {
        let d = self
            .decompositions
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| LookupError::UnknownDecomposition(name.into()))?;
        d.components.iter().map(|c| self.monomial_ideal(c)).collect()
    }

    /// Canonical text; parsing it yields the same file.
    pub fn to_text(&self) -> String {
        let mut out = format!("ring: {}\n", self.ring.variables().join(" "));
        for i in &self.ideals {
            out.push_str(&format!("ideal {}: {}\n", i.name, join_polys(&self.ring, &i.generators)));
        }
        for d in &self.decompositions {
            out.push_str(&format!("decomposition {}: {}\n", d.name, d.components.join(" & ")));
        }
        out
    }
}

fn to_monomial_ideal(ring: &RingRef, name: &str, gens: &[Polynomial]) -> Result<MonomialIdeal, LookupError> {
    let mut monomials = Vec::with_capacity(gens.len());
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if !g.is_monomial() {
            return Err(LookupError::NotMonomial { ideal: name.into(), generator: g.display(ring).to_string() });
        }
        monomials.push(g.leading_monomial().unwrap().clone());
    }
    Ok(MonomialIdeal::new(ring.clone(), monomials).expect("parsed over the file's ring"))
}

pub fn join_polys(ring: &Ring, polys: &[Polynomial]) -> String {
    polys.iter().map(|p| p.display(ring).to_string()).collect::<Vec<_>>().join(", ")
}

/// Text form of a monomial ideal in file syntax, e.g. `ideal I: x*z, x*t^2`.
pub fn monomial_ideal_line(name: &str, ideal: &MonomialIdeal) -> String {
    format!("ideal {name}: {}", ideal.generator_strings().join(", "))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(s.parse().unwrap()), col));
        } else if "+-*^(),&".contains(c) {
            toks.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(ParseError { line, column: col, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(Lexer { toks, pos: 0, line, end_col: col0 + chars.len() })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, c)| c).unwrap_or(self.end_col)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.col(), message: message.into() }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }
}

struct PolyParser<'a> {
    ring: &'a Ring,
    lx: Lexer,
}

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

impl PolyParser<'_> {
    fn n(&self) -> usize {
        self.ring.nvars()
    }

    fn poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = Polynomial::zero(self.n(), ORDER);
        let mut negative = if self.lx.eat('-') {
            true
        } else {
            self.lx.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            if self.lx.eat('+') {
                negative = false;
            } else if self.lx.eat('-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = Polynomial::one(self.n(), ORDER);
        if let Some(Tok::Int(c)) = self.lx.peek().cloned() {
            self.lx.pos += 1;
            acc = acc.scale(&Coefficient::from_integer(c));
            let starred = self.lx.eat('*');
            if !starred && !self.starts_factor() {
                return Ok(acc);
            }
        }
        acc = &acc * &self.factor()?;
        while self.lx.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.lx.peek(), Some(Tok::Ident(_)) | Some(Tok::Sym('(')))
    }

    fn exponent(&mut self) -> Result<Option<u32>, ParseError> {
        if !self.lx.eat('^') {
            return Ok(None);
        }
        match self.lx.peek().cloned() {
            Some(Tok::Int(e)) if !e.is_zero() => {
                let e: u32 = e.try_into().map_err(|_| self.lx.err("exponent too large"))?;
                self.lx.pos += 1;
                Ok(Some(e))
            }
            _ => Err(self.lx.err("malformed exponent: expected a positive integer")),
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.lx.peek().cloned() {
            Some(Tok::Ident(name)) => {
                let Some(idx) = self.ring.index_of(&name) else {
                    return Err(self.lx.err(format!("unknown variable `{name}`")));
                };
                self.lx.pos += 1;
                let e = self.exponent()?.unwrap_or(1);
                Ok(Polynomial::from_monomial(Monomial::variable_power(self.n(), idx, e), ORDER))
            }
            Some(Tok::Sym('(')) => {
                self.lx.pos += 1;
                let inner = self.poly()?;
                if !self.lx.eat(')') {
                    return Err(self.lx.err("expected `)`"));
                }
                Ok(match self.exponent()? {
                    Some(e) => inner.pow(e),
                    None => inner,
                })
            }
            Some(_) => Err(self.lx.err("expected a variable or `(`")),
            None => Err(self.lx.err("unexpected end of polynomial")),
        }
    }
}

/// Parse a single polynomial over `ring`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, ParseError> {
    parse_poly_at(ring, text, 1, 1)
}

fn parse_poly_at(ring: &Ring, text: &str, line: usize, col: usize) -> Result<Polynomial, ParseError> {
    let mut p = PolyParser { ring, lx: lex(text, line, col)? };
    let poly = p.poly()?;
    if !p.lx.at_end() {
        return Err(p.lx.err("unexpected token after polynomial"));
    }
    Ok(poly)
}

/// Parse a comma-separated generator list; an empty list is the zero ideal.
pub fn parse_generators(ring: &Ring, text: &str) -> Result<Vec<Polynomial>, ParseError> {
    parse_generators_at(ring, text, 1, 1)
}

fn parse_generators_at(ring: &Ring, text: &str, line: usize, col: usize) -> Result<Vec<Polynomial>, ParseError> {
    let mut p = PolyParser { ring, lx: lex(text, line, col)? };
    let mut gens = Vec::new();
    if p.lx.at_end() {
        return Ok(gens);
    }
    loop {
        gens.push(p.poly()?);
        if p.lx.at_end() {
            return Ok(gens);
        }
        if !p.lx.eat(',') {
            return Err(p.lx.err("expected `,` between generators"));
        }
    }
}

/// Parse a whole ideal file.
pub fn parse(text: &str) -> Result<IdealFile, ParseError> {
    let mut ring: Option<RingRef> = None;
    let mut ideals: Vec<NamedIdeal> = Vec::new();
    let mut decompositions: Vec<NamedDecomposition> = Vec::new();
    let err = |line, column, message: String| ParseError { line, column, message };

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let Some(colon) = content.find(':') else {
            return Err(err(lineno, lead + 1, "expected `ring:`, `ideal <Name>:` or `decomposition <Name>:`".into()));
        };
        let head = content[..colon].trim();
        let body = &content[colon + 1..];
        let body_col = content[..colon + 1].chars().count() + 1;
        let mut words = head.split_whitespace();
        let keyword = words.next().unwrap_or("");
        let name = words.next();
        if words.next().is_some() {
            return Err(err(lineno, lead + 1, format!("malformed header `{head}`")));
        }
        match (keyword, name) {
            ("ring", None) => {
                if ring.is_some() {
                    return Err(err(lineno, lead + 1, "ring declared twice".into()));
                }
                let names: Vec<&str> = body.split_whitespace().collect();
                for n in &names {
                    if !is_identifier(n) {
                        let col = body_col + body.find(n).unwrap_or(0);
                        return Err(err(lineno, col, format!("invalid variable name `{n}`")));
                    }
                }
                ring = Some(Ring::shared(&names).map_err(|e| err(lineno, body_col, e.to_string()))?);
            }
            ("ideal", Some(name)) | ("decomposition", Some(name)) => {
                let name_col = content.find(name).unwrap_or(0) + 1;
                if !is_identifier(name) {
                    return Err(err(lineno, name_col, format!("invalid name `{name}`")));
                }
                if ideals.iter().any(|i| i.name == name) || decompositions.iter().any(|d| d.name == name) {
                    return Err(err(lineno, name_col, format!("duplicate name `{name}`")));
                }
                let Some(r) = ring.as_ref() else {
                    return Err(err(lineno, lead + 1, "`ring:` must come first".into()));
                };
                if keyword == "ideal" {
                    let generators = parse_generators_at(r, body, lineno, body_col)?;
                    ideals.push(NamedIdeal { name: name.to_string(), generators });
                } else {
                    let mut components = Vec::new();
                    let mut offset = 0;
                    for part in body.split('&') {
                        let c = part.trim();
                        let col = body_col + offset + part.find(c).unwrap_or(0);
                        offset += part.len() + 1;
                        if c.is_empty() {
                            return Err(err(lineno, col, "empty component name".into()));
                        }
                        if !ideals.iter().any(|i| i.name == c) {
                            return Err(err(lineno, col, format!("unknown ideal `{c}`")));
                        }
                        components.push(c.to_string());
                    }
                    decompositions.push(NamedDecomposition { name: name.to_string(), components });
                }
            }
            _ => return Err(err(lineno, lead + 1, format!("malformed header `{head}`"))),
        }
    }
    let ring = ring.ok_or_else(|| err(1, 1, "missing `ring:` declaration".into()))?;
    Ok(IdealFile { ring, ideals, decompositions })
}
