//! Recursive-descent parsers for number literals, expressions, and piecewise
//! function definitions.
//!
//! Number grammar (whitespace insignificant between tokens):
//!
//! ```text
//! number := ["-"] term (("+"|"-") term)*
//! term   := coeff ("G" ("^" power)?)? | "G" ("^" power)?
//! coeff  := decimal | integer "/" positive-integer
//! power  := ["-"] decimal | "{" number "}"
//! ```
//!
//! Expression grammar (the variable is always `x`; `/` is division here, so
//! fraction literals belong to the number grammar only):
//!
//! ```text
//! expr    := product (("+"|"-") product)*
//! product := unary (("*"|"/") unary)*
//! unary   := "-" unary | factor
//! factor  := atom ("^" ["-"] integer)?
//! atom    := "(" expr ")" | "min(" expr "," expr ")" | "max(" expr "," expr ")"
//!          | "x" | decimal ("G" ("^" power)?)? | "G" ("^" power)?
//! ```
//!
//! Piecewise functions: `piece x<B: expr; at B: expr; x>B: expr` with a
//! common breakpoint `B`, or a bare expression meaning all three formulae
//! coincide. In files, `#` starts a comment line.

use gross_core::{GrossNumber, Rational};
use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::error::ExprError;
use crate::expr::Expr;
use crate::func::PiecewiseFunc;

/// Parse a gross-number literal; the whole text must be consumed.
pub fn parse_number(text: &str) -> Result<GrossNumber, ExprError> {
    let mut s = Scanner::new(text);
    let n = s.number()?;
    s.expect_end()?;
    Ok(n)
}

/// Parse an expression in `x`; the whole text must be consumed.
pub fn parse_expr(text: &str) -> Result<Expr, ExprError> {
    let mut s = Scanner::new(text);
    let e = s.expr()?;
    s.expect_end()?;
    Ok(e)
}

/// Parse a piecewise function definition (or bare-expression shorthand).
/// Lines starting with `#` are comments.
pub fn parse_function(text: &str) -> Result<PiecewiseFunc, ExprError> {
    let cleaned: String = text
        .lines()
        .map(|l| if l.trim_start().starts_with('#') { "" } else { l })
        .collect::<Vec<_>>()
        .join("\n");
    let mut s = Scanner::new(&cleaned);
    if s.peek_word("piece") {
        let f = s.piecewise()?;
        s.expect_end()?;
        Ok(f)
    } else {
        let e = s.expr()?;
        s.expect_end()?;
        Ok(PiecewiseFunc::single(e))
    }
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn expect_end(&mut self) -> Result<(), ExprError> {
        self.skip_ws();
        if self.pos == self.chars.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    /// Check (without consuming) that the next word is exactly `word`.
    fn peek_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let mut end = self.pos;
        while matches!(self.chars.get(end), Some(c) if c.is_ascii_alphabetic() || **&c == '_') {
            end += 1;
        }
        self.chars[self.pos..end].iter().collect::<String>() == word
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    // ----- number grammar -----

    fn number(&mut self) -> Result<GrossNumber, ExprError> {
        let mut raw: Vec<(Rational, GrossNumber)> = Vec::new();
        self.skip_ws();
        let mut negated = self.eat('-');
        loop {
            raw.push(self.literal_term(negated)?);
            if self.eat('+') {
                negated = false;
            } else if self.eat('-') {
                negated = true;
            } else {
                break;
            }
        }
        Ok(GrossNumber::normalize(raw)?)
    }

    fn literal_term(&mut self, negated: bool) -> Result<(Rational, GrossNumber), ExprError> {
        self.skip_ws();
        let coeff = if self.peek() == Some('G') {
            Rational::from_integer(BigInt::from(1))
        } else {
            self.coeff()?
        };
        let power = if self.eat('G') {
            if self.eat('^') {
                self.power()?
            } else {
                GrossNumber::one()
            }
        } else {
            GrossNumber::zero()
        };
        Ok((if negated { -coeff } else { coeff }, power))
    }

    fn coeff(&mut self) -> Result<Rational, ExprError> {
        let (value, is_integer) = self.unsigned_decimal()?;
        if self.peek() == Some('/') {
            if !is_integer {
                return Err(self.err("fraction numerator must be an integer"));
            }
            self.pos += 1;
            let denom_pos = self.pos;
            let (denom, denom_is_integer) = self.unsigned_decimal()?;
            if !denom_is_integer || denom.is_zero() {
                return Err(ExprError::Syntax {
                    position: denom_pos,
                    message: "fraction denominator must be a positive integer".to_string(),
                });
            }
            Ok(value / denom)
        } else {
            Ok(value)
        }
    }

    /// An unsigned decimal literal; reports whether it had no fractional part.
    fn unsigned_decimal(&mut self) -> Result<(Rational, bool), ExprError> {
        self.skip_ws();
        let mut int_digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            int_digits.push(self.bump().unwrap());
        }
        if int_digits.is_empty() {
            return Err(self.err("expected a number"));
        }
        if self.peek() == Some('.') {
            self.pos += 1;
            let mut frac_digits = String::new();
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                frac_digits.push(self.bump().unwrap());
            }
            if frac_digits.is_empty() {
                return Err(self.err("expected digits after the decimal point"));
            }
            let numer: BigInt = format!("{int_digits}{frac_digits}").parse().unwrap();
            let denom = BigInt::from(10).pow(frac_digits.len() as u32);
            Ok((Rational::new(numer, denom), false))
        } else {
            let numer: BigInt = int_digits.parse().unwrap();
            Ok((Rational::from_integer(numer), true))
        }
    }

    fn power(&mut self) -> Result<GrossNumber, ExprError> {
        if self.eat('{') {
            let n = self.number()?;
            self.expect('}')?;
            Ok(n)
        } else {
            self.skip_ws();
            let negated = self.eat('-');
            let (value, _) = self.unsigned_decimal()?;
            Ok(GrossNumber::from_rational(if negated {
                -value
            } else {
                value
            }))
        }
    }

    // ----- expression grammar -----

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.product()?;
        loop {
            if self.eat('+') {
                e = e.add(self.product()?);
            } else if self.eat('-') {
                e = e.sub(self.product()?);
            } else {
                return Ok(e);
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.unary()?;
        loop {
            if self.eat('*') {
                e = e.mul(self.unary()?);
            } else if self.eat('/') {
                e = e.div(self.unary()?);
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        // A '^' here can only follow a parenthesized group, `x`, min/max, or
        // a bare decimal: G-atoms consume their own power.
        if self.eat('^') {
            let k = self.integer_exponent()?;
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn integer_exponent(&mut self) -> Result<i32, ExprError> {
        self.skip_ws();
        let negated = self.eat('-');
        self.skip_ws();
        let start = self.pos;
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.err("expected an integer exponent"));
        }
        let magnitude: i32 = digits.parse().map_err(|_| ExprError::Syntax {
            position: start,
            message: "exponent out of range".to_string(),
        })?;
        Ok(if negated { -magnitude } else { magnitude })
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let (coeff, _) = self.unsigned_decimal()?;
                self.gross_literal(coeff)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let pos = self.pos;
                let word = self.word();
                match word.as_str() {
                    "x" => Ok(Expr::var()),
                    "G" => {
                        // The word scan consumed just the `G`.
                        self.unconsumed_g_power()
                    }
                    "min" | "max" => {
                        self.expect('(')?;
                        let a = self.expr()?;
                        self.expect(',')?;
                        let b = self.expr()?;
                        self.expect(')')?;
                        Ok(if word == "min" { a.min(b) } else { a.max(b) })
                    }
                    _ => Err(ExprError::Syntax {
                        position: pos,
                        message: format!("unknown name '{word}'"),
                    }),
                }
            }
            _ => Err(self.err("expected an expression")),
        }
    }

    /// `G` already consumed: read an optional `^power` and build the literal.
    fn unconsumed_g_power(&mut self) -> Result<Expr, ExprError> {
        let power = if self.peek() == Some('^') {
            self.pos += 1;
            self.power()?
        } else {
            GrossNumber::one()
        };
        let one = Rational::from_integer(BigInt::from(1));
        Ok(Expr::constant(GrossNumber::monomial(one, power)?))
    }

    /// A decimal coefficient already read: attach `G^power` if present.
    fn gross_literal(&mut self, coeff: Rational) -> Result<Expr, ExprError> {
        if self.peek() == Some('G') {
            self.pos += 1;
            let power = if self.peek() == Some('^') {
                self.pos += 1;
                self.power()?
            } else {
                GrossNumber::one()
            };
            Ok(Expr::constant(GrossNumber::monomial(coeff, power)?))
        } else {
            Ok(Expr::constant(GrossNumber::from_rational(coeff)))
        }
    }

    // ----- piecewise grammar -----

    fn piecewise(&mut self) -> Result<PiecewiseFunc, ExprError> {
        let keyword = self.word();
        debug_assert_eq!(keyword, "piece");

        let left_guard_pos = self.pos;
        let left_guard = self.guard('<')?;
        let left = self.expr()?;
        self.expect(';')?;

        let at_word_pos = self.pos;
        if self.word() != "at" {
            return Err(ExprError::Syntax {
                position: at_word_pos,
                message: "expected 'at <breakpoint>:' clause".to_string(),
            });
        }
        let breakpoint = self.number()?;
        self.expect(':')?;
        let at = self.expr()?;
        self.expect(';')?;

        let right_guard_pos = self.pos;
        let right_guard = self.guard('>')?;
        let right = self.expr()?;
        // Tolerate a trailing separator.
        self.eat(';');

        if left_guard != breakpoint {
            return Err(ExprError::Syntax {
                position: left_guard_pos,
                message: "left guard must name the breakpoint".to_string(),
            });
        }
        if right_guard != breakpoint {
            return Err(ExprError::Syntax {
                position: right_guard_pos,
                message: "right guard must name the breakpoint".to_string(),
            });
        }
        Ok(PiecewiseFunc::pieces(left, breakpoint, at, right))
    }

    /// `x<B:` or `x>B:`, returning B.
    fn guard(&mut self, relation: char) -> Result<GrossNumber, ExprError> {
        let pos = self.pos;
        if self.word() != "x" {
            return Err(ExprError::Syntax {
                position: pos,
                message: format!("expected guard 'x{relation}<breakpoint>:'"),
            });
        }
        self.expect(relation)?;
        let bound = self.number()?;
        self.expect(':')?;
        Ok(bound)
    }
}
