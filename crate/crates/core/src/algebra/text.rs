//! Printing and parsing of polynomials, rational functions and series.
//!
//! Numerators print fully expanded with explicit `*` and `^`, e.g.
//! `(z1^2 - 2*z1*w1 + w1^2) / ((z1-w1)^1 (z1+w1)^2)`. Series print as
//! `series[z,w; D=3]: z^-1 + z^-2*w + z^-3*w^2`.
//!
//! The parser accepts a slightly larger language: sums, products (explicit
//! or by juxtaposition), integer powers and division by anything that
//! factors into the supported pole atoms.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::algebra::poly::{is_identifier, Alphabet, MultiPoly};
use crate::algebra::rat::Rat;
use crate::algebra::rational::{Denominator, PoleFactor, RationalFn};
use crate::algebra::series::LaurentSeries;
use crate::error::{Error, Result};

/// Writes `c * m` where `m` is a product of `name^exp` factors, with the
/// sign handled by the caller.
fn write_term<'a, I>(out: &mut String, c: &Rat, factors: I)
where
    I: IntoIterator<Item = (&'a str, i64)>,
{
    let mut parts: Vec<String> = Vec::new();
    for (name, e) in factors {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        write!(out, "{c}").unwrap();
    } else if c.is_one() {
        out.push_str(&parts.join("*"));
    } else {
        write!(out, "{}*{}", c, parts.join("*")).unwrap();
    }
}

/// Joins signed terms as `a - b + c`.
fn write_sum<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Rat, Vec<(&'a str, i64)>)>,
{
    let mut out = String::new();
    for (c, factors) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        write_term(&mut out, &mag, factors);
    }
    if out.is_empty() {
        out.push('0');
    }
    f.write_str(&out)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.alphabet().names();
        write_sum(
            f,
            self.terms().iter().rev().map(|(e, c)| {
                let factors = e
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| (names[i].as_str(), k as i64))
                    .collect();
                (c, factors)
            }),
        )
    }
}

fn write_atom(out: &mut String, alphabet: &Alphabet, atom: &PoleFactor) {
    match *atom {
        PoleFactor::Var(i) => write!(out, "({})", alphabet.name(i)),
        PoleFactor::Diff(i, j) => write!(out, "({}-{})", alphabet.name(i), alphabet.name(j)),
        PoleFactor::Sum(i, j) => write!(out, "({}+{})", alphabet.name(i), alphabet.name(j)),
    }
    .unwrap();
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator().is_empty() {
            return write!(f, "{}", self.numerator());
        }
        let mut den = String::new();
        for (atom, e) in self.denominator() {
            if !den.is_empty() {
                den.push(' ');
            }
            write_atom(&mut den, self.alphabet(), atom);
            write!(den, "^{e}").unwrap();
        }
        write!(f, "({}) / ({})", self.numerator(), den)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "series[{}; D={}]: ", self.vars().join(","), self.cutoff())?;
        let vars = self.vars();
        write_sum(
            f,
            self.terms().iter().rev().map(|(e, c)| {
                let factors = e
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| (vars[i].as_str(), k as i64))
                    .collect();
                (c, factors)
            }),
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(num_bigint::BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let err = |m: &str| Error::Parse {
        input: input.to_string(),
        message: m.to_string(),
    };
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Num(s.parse().map_err(|_| err("bad integer"))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Sym(c));
            i += 1;
        } else {
            return Err(err(&format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<Token>,
    at: usize,
    alphabet: Alphabet,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFn> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.term()?
        };
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

    fn term(&mut self) -> Result<RationalFn> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let d = self.power()?;
                acc = acc.mul(&self.invert(&d)?);
            } else if matches!(
                self.peek(),
                Some(Token::Sym('(')) | Some(Token::Ident(_)) | Some(Token::Num(_))
            ) {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RationalFn> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let k = match self.peek() {
            Some(Token::Num(n)) => {
                let k: u32 = n
                    .try_into()
                    .map_err(|_| self.error("exponent out of range"))?;
                self.at += 1;
                k
            }
            _ => return Err(self.error("expected an integer exponent")),
        };
        let p = base.pow(k);
        if negative {
            self.invert(&p)
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<RationalFn> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.at += 1;
                Ok(RationalFn::constant(&self.alphabet, Rat::from(n)))
            }
            Some(Token::Ident(name)) => {
                self.at += 1;
                let i = self.alphabet.require(&name)?;
                Ok(RationalFn::var(&self.alphabet, i))
            }
            Some(Token::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(e)
            }
            Some(t) => Err(self.error(format!("unexpected token {t:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    /// `1 / r`, which requires the numerator of `r` to factor into pole
    /// atoms times a constant.
    fn invert(&self, r: &RationalFn) -> Result<RationalFn> {
        let (c, atoms) = factor_into_atoms(r.numerator())
            .ok_or_else(|| self.error(format!("cannot divide by `{}`", r.numerator())))?;
        let num = r.denominator_poly().scale(&c.recip());
        Ok(RationalFn::new(num, atoms))
    }
}

/// Writes `p` as `c * Π atom^e` by trial division, if possible.
pub fn factor_into_atoms(p: &MultiPoly) -> Option<(Rat, Denominator)> {
    if p.is_zero() {
        return None;
    }
    let n = p.alphabet().len();
    let mut rest = p.clone();
    let mut atoms = Denominator::new();
    for i in 0..n {
        while let Some(q) = rest.div_var(i) {
            rest = q;
            *atoms.entry(PoleFactor::Var(i)).or_default() += 1;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for (s, atom) in [(1, PoleFactor::Diff(i, j)), (-1, PoleFactor::Sum(i, j))] {
                while rest.degree_in(i) > 0 {
                    match rest.div_linear(i, s, j) {
                        Some(q) => {
                            rest = q;
                            *atoms.entry(atom).or_default() += 1;
                        }
                        None => break,
                    }
                }
            }
        }
    }
    rest.as_constant().map(|c| (c, atoms))
}

fn parse_with(input: &str, alphabet: &Alphabet) -> Result<RationalFn> {
    let mut p = Parser {
        input,
        tokens: tokenize(input)?,
        at: 0,
        alphabet: alphabet.clone(),
    };
    let r = p.expr()?;
    if p.at != p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(r)
}

/// Variable names in order of first appearance.
fn infer_alphabet(input: &str) -> Result<Alphabet> {
    let mut names: Vec<String> = Vec::new();
    for t in tokenize(input)? {
        if let Token::Ident(s) = t {
            if !names.contains(&s) {
                names.push(s);
            }
        }
    }
    Alphabet::new(&names)
}

impl RationalFn {
    /// Parses `input` over a fixed alphabet.
    pub fn parse(input: &str, alphabet: &Alphabet) -> Result<RationalFn> {
        parse_with(input, alphabet)
    }
}

impl FromStr for RationalFn {
    type Err = Error;

    /// Parses over the alphabet of variables in order of first appearance.
    fn from_str(s: &str) -> Result<Self> {
        parse_with(s, &infer_alphabet(s)?)
    }
}

impl MultiPoly {
    pub fn parse(input: &str, alphabet: &Alphabet) -> Result<MultiPoly> {
        let r = parse_with(input, alphabet)?;
        if !r.is_polynomial() {
            return Err(Error::Parse {
                input: input.to_string(),
                message: "not a polynomial".into(),
            });
        }
        Ok(r.numerator().clone())
    }
}

impl FromStr for LaurentSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |m: &str| Error::Parse {
            input: s.to_string(),
            message: m.to_string(),
        };
        let rest = s
            .trim()
            .strip_prefix("series[")
            .ok_or_else(|| err("expected `series[`"))?;
        let (header, body) = rest.split_once("]:").ok_or_else(|| err("expected `]:`"))?;
        let (vars, cutoff) = header.split_once(';').ok_or_else(|| err("expected `;`"))?;
        let vars: Vec<&str> = vars.split(',').map(str::trim).collect();
        if vars.iter().any(|v| !is_identifier(v)) {
            return Err(err("bad variable list"));
        }
        let cutoff: u32 = cutoff
            .trim()
            .strip_prefix("D=")
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| err("expected `D=<cutoff>`"))?;
        let alphabet = Alphabet::new(&vars)?;
        let r = parse_with(body, &alphabet)?;
        let mut shift = vec![0i32; vars.len()];
        for (atom, &e) in r.denominator() {
            match *atom {
                PoleFactor::Var(i) => shift[i] -= e as i32,
                _ => return Err(err("series terms must be Laurent monomials")),
            }
        }
        let terms: Vec<(Vec<i32>, Rat)> = r
            .numerator()
            .terms()
            .iter()
            .map(|(e, c)| {
                let exps = e.iter().zip(&shift).map(|(&k, &d)| k as i32 + d).collect();
                (exps, c.clone())
            })
            .collect();
        let out = LaurentSeries::from_terms(&vars, cutoff, terms.iter().cloned())?;
        if out.len() != terms.len() {
            return Err(err("term outside the cutoff window"));
        }
        Ok(out)
    }
}
