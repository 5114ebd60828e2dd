//! Text wire format for forms.
//!
//! ```text
//! expr   ::= [sign] term (sign term)*
//! term   ::= coeff | [coeff '*'] factor ('*' factor)*
//! factor ::= var ['^' positive-int]
//! coeff  ::= int ['/' positive-int]
//! ```
//!
//! Variables are `x`, `y` (two variables), `x`, `y`, `z` (three), or
//! `x1..xn` in general. Dual variables `y1..yn` parse to the same
//! coordinates; whether a form lives on the source or dual space is the
//! caller's convention. Whitespace is insignificant.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{format_rational, format_rational_latex, Rational};
use crate::poly::form::Form;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

/// Which variable names the printer uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// `x, y` for two variables, `x, y, z` for three, `x1..xn` otherwise.
    Source,
    /// `y1..yn`.
    Dual,
}

/// Parses a homogeneous form; the degree is inferred from the terms. The
/// literal `0` parses to the zero form of degree 0, use
/// [`parse_form_of_degree`] when the degree is known.
pub fn parse_form(text: &str, num_vars: usize) -> Result<Form> {
    Parser::new(text, num_vars).parse(None)
}

/// Like [`parse_form`] but checks every term against `degree`; the zero
/// form gets that degree.
pub fn parse_form_of_degree(text: &str, num_vars: usize, degree: u32) -> Result<Form> {
    Parser::new(text, num_vars).parse(Some(degree))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    num_vars: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, num_vars: usize) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            num_vars,
        }
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            message: message.into(),
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("digits parse"))
    }

    fn parse(mut self, expected: Option<u32>) -> Result<Form> {
        if self.peek().is_none() {
            return self.syntax("empty input");
        }
        let mut degree = expected;
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                Some(b'+') if !first => self.pos += 1,
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                None if !first => break,
                Some(_) if !first => return self.syntax("expected '+' or '-'"),
                _ => {}
            }
            if !first && self.peek().is_none() {
                return self.syntax("dangling sign");
            }
            first = false;
            let term_pos = self.pos;
            let (coeff, exps) = self.term()?;
            let d: u32 = exps.iter().sum();
            let is_zero_literal = coeff.is_zero() && d == 0;
            if !is_zero_literal {
                match degree {
                    None => degree = Some(d),
                    Some(expected) if expected != d => {
                        return Err(Error::Inhomogeneous {
                            pos: term_pos,
                            expected,
                            found: d,
                        })
                    }
                    _ => {}
                }
            }
            terms.push((exps, if negative { -coeff } else { coeff }));
            if self.peek().is_none() {
                break;
            }
        }
        let degree = degree.unwrap_or(0);
        let mut f = Form::zero(self.num_vars, degree);
        for (e, c) in terms {
            if e.iter().sum::<u32>() == degree {
                f.add_term(e, c);
            }
        }
        Ok(f)
    }

    fn term(&mut self) -> Result<(Rational, Vec<u32>)> {
        let mut exps = vec![0u32; self.num_vars];
        let mut coeff = Rational::one();
        let mut need_factor = false;
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let n = self.digits()?;
                let d = if self.eat(b'/') {
                    let d = self.digits()?;
                    if d.is_zero() {
                        return self.syntax("zero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                coeff = Rational::new(n, d);
                if !self.eat(b'*') {
                    return Ok((coeff, exps));
                }
                need_factor = true;
            }
            Some(b) if b.is_ascii_alphabetic() => {}
            _ => return self.syntax("expected a coefficient or a variable"),
        }
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_alphabetic() => {}
                _ if need_factor => return self.syntax("expected a variable"),
                _ => break,
            }
            let (var, pos) = self.variable()?;
            let mut power = 1u32;
            if self.eat(b'^') {
                let p = self.digits()?;
                power = match u32::try_from(&p) {
                    Ok(p) if p > 0 => p,
                    _ => {
                        self.pos = pos;
                        return self.syntax("exponent must be a positive integer");
                    }
                };
            }
            exps[var] += power;
            if !self.eat(b'*') {
                break;
            }
            need_factor = true;
        }
        Ok((coeff, exps))
    }

    fn variable(&mut self) -> Result<(usize, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let unknown = || Error::UnknownVariable {
            name: name.to_string(),
            pos: start,
        };
        let index = match name {
            "x" => 0,
            "y" if self.num_vars <= 3 => 1,
            "z" if self.num_vars == 3 => 2,
            _ => {
                let (head, tail) = name.split_at(1);
                if (head == "x" || head == "y") && !tail.is_empty() && tail.bytes().all(|b| b.is_ascii_digit()) {
                    let k: usize = tail.parse().map_err(|_| unknown())?;
                    if k == 0 {
                        return Err(unknown());
                    }
                    k - 1
                } else {
                    return Err(unknown());
                }
            }
        };
        if index >= self.num_vars {
            return Err(unknown());
        }
        Ok((index, start))
    }
}

fn var_name(i: usize, n: usize, alphabet: Alphabet, style: Style) -> String {
    match alphabet {
        Alphabet::Source if n <= 3 => ["x", "y", "z"][i].to_string(),
        Alphabet::Source => match style {
            Style::Text => format!("x{}", i + 1),
            Style::Latex => format!("x_{{{}}}", i + 1),
        },
        Alphabet::Dual => match style {
            Style::Text => format!("y{}", i + 1),
            Style::Latex => format!("y_{{{}}}", i + 1),
        },
    }
}

/// Prints a form in source variables, terms in descending graded-lex order.
pub fn format_form(f: &Form, style: Style) -> String {
    format_form_with(f, style, Alphabet::Source)
}

pub fn format_form_with(f: &Form, style: Style, alphabet: Alphabet) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let n = f.num_vars();
    let mut out = String::new();
    for (k, (e, c)) in f.terms().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors = Vec::new();
        for (i, &p) in e.iter().enumerate() {
            if p == 0 {
                continue;
            }
            let v = var_name(i, n, alphabet, style);
            factors.push(match (p, style) {
                (1, _) => v,
                (_, Style::Text) => format!("{v}^{p}"),
                (_, Style::Latex) => format!("{v}^{{{p}}}"),
            });
        }
        let coeff_text = match style {
            Style::Text => format_rational(&abs),
            Style::Latex => format_rational_latex(&abs),
        };
        if factors.is_empty() {
            out.push_str(&coeff_text);
            continue;
        }
        let sep = match style {
            Style::Text => "*",
            Style::Latex => " ",
        };
        if !abs.is_one() {
            out.push_str(&coeff_text);
            out.push_str(sep);
        }
        out.push_str(&factors.join(sep));
    }
    out
}
