//! Human-readable polynomials: `3/2*x1^2*h - x2`.
//!
//! Variables are `x1..xr` and `h`; for rank one `x` is accepted for `x1`.
//! Terms are products of a rational coefficient and powers of variables,
//! joined by `+` and `-`. Printing is the core `Display`.

use nilhecke_core::{Monomial, Rational, SparsePoly};
use num_traits::One;

use crate::error::{CliError, CliResult};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
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

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn error(&self, message: &str) -> CliError {
        CliError::input("polynomial", format!("{message} at offset {}", self.pos))
    }
}

fn variable(lex: &mut Lexer, nvars: usize) -> CliResult<Option<usize>> {
    match lex.peek() {
        Some(b'h') => {
            lex.pos += 1;
            Ok(Some(nvars - 1))
        }
        Some(b'x') => {
            lex.pos += 1;
            let index = match lex.src.get(lex.pos) {
                Some(c) if c.is_ascii_digit() => lex.digits().unwrap().parse::<usize>().map_err(|_| lex.error("bad index"))?,
                _ if nvars == 2 => 1,
                _ => return Err(lex.error("variable needs an index")),
            };
            if index == 0 || index >= nvars {
                return Err(lex.error(&format!("variable x{index} out of range")));
            }
            Ok(Some(index - 1))
        }
        _ => Ok(None),
    }
}

fn term(lex: &mut Lexer, nvars: usize) -> CliResult<(Monomial, Rational)> {
    let mut coeff = Rational::one();
    let mut mono = Monomial::one(nvars);
    loop {
        if let Some(n) = lex.digits() {
            let mut value = Rational::from_integer(n.parse().unwrap());
            if lex.eat(b'/') {
                let d = lex.digits().ok_or_else(|| lex.error("expected denominator"))?;
                let d: Rational = Rational::from_integer(d.parse().unwrap());
                if num_traits::Zero::is_zero(&d) {
                    return Err(lex.error("zero denominator"));
                }
                value /= d;
            }
            coeff *= value;
        } else if let Some(v) = variable(lex, nvars)? {
            let mut e: u16 = 1;
            if lex.eat(b'^') {
                e = lex.digits().ok_or_else(|| lex.error("expected exponent"))?.parse().map_err(|_| lex.error("exponent too large"))?;
            }
            mono.0[v] += e;
        } else {
            return Err(lex.error("expected a number or a variable"));
        }
        if !lex.eat(b'*') {
            return Ok((mono, coeff));
        }
    }
}

/// Parses a polynomial in `nvars` variables, the last being `h`.
pub fn parse_poly(src: &str, nvars: usize) -> CliResult<SparsePoly> {
    let mut lex = Lexer { src: src.as_bytes(), pos: 0 };
    let mut out = SparsePoly::zero(nvars);
    let mut negative = lex.eat(b'-');
    loop {
        let (m, c) = term(&mut lex, nvars)?;
        out.add_term(m, if negative { -c } else { c });
        if lex.eat(b'+') {
            negative = false;
        } else if lex.eat(b'-') {
            negative = true;
        } else if lex.peek().is_none() {
            return Ok(out);
        } else {
            return Err(lex.error("unexpected character"));
        }
    }
}
