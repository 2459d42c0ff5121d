//! Field specs, sets and polynomial expressions.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" UINT)?
//! atom   := COEFF | "x" | "y" | "t" | "(" expr ")"
//! COEFF  := UINT | UINT "/" UINT        (fractions over Q only)
//! ```

use num_bigint::BigInt;
use rsumset::sumset::FSet;
use rsumset::{BPoly, Fe, FieldCtx, UPoly};

use crate::error::CliError;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u64 = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Num,
    X,
    Y,
    T,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    kind: Tok,
    pos: usize,
    text: String,
}

fn tokenize(src: &str) -> Result<Vec<Token>, CliError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = match c {
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token { kind: Tok::Num, pos: start, text: src[start..i].to_string() });
                continue;
            }
            b'x' => Tok::X,
            b'y' => Tok::Y,
            b't' => Tok::T,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = src[start..].chars().next().unwrap();
                return Err(CliError::parse(start, format!("unexpected character '{ch}'")));
            }
        };
        i += 1;
        out.push(Token { kind, pos: start, text: src[start..i].to_string() });
    }
    out.push(Token { kind: Tok::End, pos: src.len(), text: String::new() });
    Ok(out)
}

/// Variables an expression may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vars {
    /// `x` and `y`.
    Bivariate,
    /// `x` only.
    Univariate,
    /// Field elements: no `x`, no `y`.
    Element,
}

struct Parser<'a> {
    toks: Vec<Token>,
    at: usize,
    ctx: &'a FieldCtx,
    vars: Vars,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.kind != Tok::End {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, want: &str) -> CliError {
        let t = self.peek();
        let found = if t.kind == Tok::End { "end of input".to_string() } else { format!("'{}'", t.text) };
        CliError::parse(t.pos, format!("expected {want}, found {found}"))
    }

    fn expr(&mut self) -> Result<BPoly, CliError> {
        let negate = if self.peek().kind == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek().kind {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BPoly, CliError> {
        let mut acc = self.factor()?;
        while self.peek().kind == Tok::Star {
            self.bump();
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BPoly, CliError> {
        let base = self.atom()?;
        if self.peek().kind != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.peek().clone();
        if t.kind != Tok::Num {
            return Err(self.unexpected("exponent"));
        }
        self.bump();
        let e: u64 = t
            .text
            .parse()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| CliError::parse(t.pos, format!("exponent must be at most {MAX_EXPONENT}")))?;
        Ok(base.pow(e as usize))
    }

    fn atom(&mut self) -> Result<BPoly, CliError> {
        let ctx = self.ctx;
        let t = self.peek().clone();
        match t.kind {
            Tok::Num => {
                self.bump();
                let num: BigInt = t.text.parse().expect("digits");
                if self.peek().kind != Tok::Slash {
                    return Ok(BPoly::constant(ctx, ctx.from_bigint(&num)));
                }
                let slash = self.bump();
                let d = self.peek().clone();
                if d.kind != Tok::Num {
                    return Err(self.unexpected("denominator"));
                }
                self.bump();
                if ctx.is_finite() {
                    return Err(CliError::CoeffDomain {
                        pos: slash.pos,
                        msg: format!("fraction {}/{} is only allowed over Q; write the field element directly", t.text, d.text),
                    });
                }
                let den: BigInt = d.text.parse().expect("digits");
                let c = ctx.from_ratio(&num, &den).map_err(|_| CliError::parse(d.pos, "zero denominator"))?;
                Ok(BPoly::constant(ctx, c))
            }
            Tok::X | Tok::Y if self.vars == Vars::Element => {
                Err(CliError::parse(t.pos, format!("'{}' is not allowed in a field element", t.text)))
            }
            Tok::Y if self.vars == Vars::Univariate => {
                Err(CliError::parse(t.pos, "'y' is not allowed in a univariate polynomial"))
            }
            Tok::X => {
                self.bump();
                Ok(BPoly::x(ctx))
            }
            Tok::Y => {
                self.bump();
                Ok(BPoly::y(ctx))
            }
            Tok::T => {
                let g = ctx
                    .generator()
                    .ok_or_else(|| CliError::parse(t.pos, "'t' is only allowed over extension fields"))?;
                self.bump();
                Ok(BPoly::constant(ctx, g))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().kind != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or '('")),
        }
    }
}

fn parse_with(text: &str, ctx: &FieldCtx, vars: Vars) -> Result<BPoly, CliError> {
    let mut p = Parser { toks: tokenize(text)?, at: 0, ctx, vars };
    let out = p.expr()?;
    if p.peek().kind != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(out)
}

/// Polynomial in `x` and `y` over `ctx`.
pub fn parse_poly(text: &str, ctx: &FieldCtx) -> Result<BPoly, CliError> {
    parse_with(text, ctx, Vars::Bivariate)
}

/// Polynomial in `x` alone over `ctx`.
pub fn parse_upoly(text: &str, ctx: &FieldCtx) -> Result<UPoly, CliError> {
    let b = parse_with(text, ctx, Vars::Univariate)?;
    Ok(b.to_upoly_x().expect("no y"))
}

pub fn parse_element(text: &str, ctx: &FieldCtx) -> Result<Fe, CliError> {
    let b = parse_with(text, ctx, Vars::Element)?;
    Ok(b.coeff(0, 0))
}

/// `"7"`, `"2^2"`, `"3^2/x^2+1"` (explicit modulus in `x`) or `"Q"`.
pub fn parse_field(text: &str) -> Result<FieldCtx, CliError> {
    let text = text.trim();
    if text == "Q" {
        return Ok(FieldCtx::rationals());
    }
    let (order, modulus) = match text.split_once('/') {
        Some((o, m)) => (o, Some((m, o.len() + 1))),
        None => (text, None),
    };
    let (p_text, n_text) = match order.split_once('^') {
        Some((p, n)) => (p.trim(), Some(n.trim())),
        None => (order.trim(), None),
    };
    let p: u64 = p_text
        .parse()
        .map_err(|_| CliError::parse(0, format!("expected a prime, \"p^n\" or \"Q\", found \"{text}\"")))?;
    let n: usize = match n_text {
        Some(n) => n.parse().map_err(|_| CliError::parse(p_text.len() + 1, "expected an extension degree"))?,
        None => 1,
    };
    let base = FieldCtx::prime(p)?;
    match (n, modulus) {
        (1, None) => Ok(base),
        (1, Some(_)) => Err(CliError::parse(order.len(), "a modulus needs an extension degree of at least 2")),
        (_, None) => Ok(FieldCtx::extension(p, n, None)?),
        (_, Some((m, offset))) => {
            let f = parse_upoly(m, &base).map_err(|e| e.shifted(offset))?;
            Ok(FieldCtx::extension(p, n, Some(&f))?)
        }
    }
}

/// `{e1, e2, ...}` with elements in the element grammar.
pub fn parse_set(text: &str, ctx: &FieldCtx) -> Result<FSet, CliError> {
    let trimmed = text.trim_end();
    let lead = text.len() - text.trim_start().len();
    let inner = trimmed
        .trim_start()
        .strip_prefix('{')
        .ok_or_else(|| CliError::parse(lead, "expected '{'"))?
        .strip_suffix('}')
        .ok_or_else(|| CliError::parse(trimmed.len(), "expected '}'"))?;
    let mut offset = lead + 1;
    let mut elems = Vec::new();
    if !inner.trim().is_empty() {
        for part in inner.split(',') {
            elems.push(parse_element(part, ctx).map_err(|e| e.shifted(offset))?);
            offset += part.len() + 1;
        }
    }
    Ok(FSet::new(ctx, elems)?)
}

/// `"3"` or an inclusive range `"1..4"`.
pub fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let num = |s: &str, pos: usize| {
        s.trim().parse::<usize>().map_err(|_| CliError::parse(pos, format!("expected a size, found \"{s}\"")))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(num(a, 0)?..=num(b, a.len() + 2)?)
        }
        None => {
            let v = num(text, 0)?;
            Ok(v..=v)
        }
    }
}
