//! Text format for polynomials.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor (['*'] factor)*
//! factor  := primary ('^' uint)*
//! primary := int ['/' uint] | var | '(' expr ')' | 'T(' expr ')'
//! var     := ('x'|'h') uint
//! ```
//!
//! Whitespace is ignored. `*` may be omitted between a factor and a
//! following variable or parenthesis. `T(...)` applies the involution.
//! Products keep their left-to-right order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{NcError, Result};
use crate::freealg::{Letter, LetterKind, NcPoly, Word};
use crate::scalar::Ring;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Accept the direction letters `h1..hg`.
    pub allow_h: bool,
}

/// Parses a polynomial in `x1..xg`.
pub fn parse(text: &str, g: usize) -> Result<NcPoly<BigRational>> {
    parse_with(text, g, ParseOptions::default())
}

pub fn parse_with(text: &str, g: usize, opts: ParseOptions) -> Result<NcPoly<BigRational>> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, g, opts };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(out)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    g: usize,
    opts: ParseOptions,
}

impl Parser {
    fn error_at(&self, pos: usize, message: String) -> NcError {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        NcError::Parse { line, column, message }
    }

    fn error(&self, message: String) -> NcError {
        self.error_at(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected '{c}', found '{d}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number".into()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>().map_err(|e| self.error_at(start, e.to_string()))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let start = self.pos;
        let v = self.uint()?;
        usize::try_from(v).map_err(|_| self.error_at(start, "number too large".into()))
    }

    fn expr(&mut self) -> Result<NcPoly<BigRational>> {
        let mut acc = NcPoly::zero_in(self.g);
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc - t } else { acc + t };
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<NcPoly<BigRational>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some('x' | 'h' | 'T' | '(') => acc = acc * self.factor()?,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NcPoly<BigRational>> {
        let base = self.primary()?;
        let mut acc = base;
        while self.peek() == Some('^') {
            self.pos += 1;
            let k = self.small_uint()?;
            let k = u32::try_from(k).map_err(|_| self.error("exponent too large".into()))?;
            acc = acc.pow(k);
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<NcPoly<BigRational>> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let mut den = BigInt::one();
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let at = self.pos;
                    den = self.uint()?;
                    if den.is_zero() {
                        return Err(self.error_at(at, "zero denominator".into()));
                    }
                }
                Ok(NcPoly::constant(self.g, BigRational::new(num, den)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('T') => {
                self.pos += 1;
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e.involution())
            }
            Some(c @ ('x' | 'h')) => {
                self.pos += 1;
                if c == 'h' && !self.opts.allow_h {
                    return Err(self.error_at(start, "direction letters are not enabled".into()));
                }
                let idx = self.small_uint()?;
                if idx == 0 || idx > self.g {
                    return Err(NcError::IndexOutOfRange { index: idx, g: self.g });
                }
                let kind = if c == 'x' { LetterKind::X } else { LetterKind::H };
                Ok(NcPoly::letter(self.g, Letter::new(kind, idx - 1)))
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }
}

fn word_text(w: &Word) -> String {
    let mut parts = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i + 1;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(letters[i].to_string());
        } else {
            parts.push(format!("{}^{}", letters[i], j - i));
        }
        i = j;
    }
    parts.join("*")
}

/// Canonical text: terms by (degree, lex), repeated letters folded into
/// powers, unit coefficients omitted.
pub fn print<S: Ring>(p: &NcPoly<S>) -> String {
    let mut out = String::new();
    for (w, c) in p.terms() {
        let negative = c.is_negative_hint();
        let mag = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if w.is_empty() {
            out.push_str(&mag.coeff_text());
        } else if mag == S::one() {
            out.push_str(&word_text(w));
        } else {
            out.push_str(&mag.coeff_text());
            out.push('*');
            out.push_str(&word_text(w));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(print(&NcPoly::<BigRational>::zero_in(2)), "0");
    }

    #[test]
    fn word_order_is_preserved() {
        let p = parse("x2*x1", 2).unwrap();
        assert_eq!(print(&p), "x2*x1");
    }

    #[test]
    fn involution_operator_reverses() {
        assert_eq!(parse("T(x1*x2)", 2).unwrap(), parse("x2*x1", 2).unwrap());
    }

    #[test]
    fn shifted_square() {
        let p = parse("3 + x1^2", 1).unwrap();
        assert_eq!(p.constant_term(), rat(3, 1));
        assert_eq!(print(&p), "3 + x1^2");
    }

    #[test]
    fn power_binds_tighter_than_product() {
        let p = parse("x1*x2^3", 2).unwrap();
        assert_eq!(p, parse("x1*x2*x2*x2", 2).unwrap());
    }

    #[test]
    fn rational_coefficients_and_signs() {
        let p = parse("-1/2*x1 + 2/4 x2 - 3", 2).unwrap();
        assert_eq!(print(&p), "-3 - 1/2*x1 + 1/2*x2");
    }

    #[test]
    fn errors_carry_positions() {
        match parse("x1 +\n  * x2", 2) {
            Err(NcError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(parse("x3", 2), Err(NcError::IndexOutOfRange { index: 3, g: 2 }));
        assert!(matches!(parse("1/0", 1), Err(NcError::Parse { .. })));
        assert!(matches!(parse("h1", 1), Err(NcError::Parse { .. })));
        assert!(parse_with("h1*x1", 1, ParseOptions { allow_h: true }).is_ok());
    }
}
