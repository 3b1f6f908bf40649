//! Symbolic pattern-set expressions over `⊕`, reverse, complement and inverse.
//!
//! ```text
//! expr    := term (SUM term)*          SUM is ⊕, + or (+)
//! term    := atom ('^' ops)*           ops is {irc…} or a bare run of i/r/c
//! atom    := '(' expr ')' | '{' set '}' | digits
//! ```
//!
//! Symmetries in one superscript apply left to right: `X^{irc}` is
//! `((X^i)^r)^c`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::set::PatternSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected {found} at offset {offset}")]
    Unexpected { offset: usize, found: String },
    #[error("bad set literal at offset {offset}: {message}")]
    Set { offset: usize, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
}

impl Symmetry {
    pub fn apply(self, s: &PatternSet) -> PatternSet {
        match self {
            Symmetry::Reverse => s.reverse(),
            Symmetry::Complement => s.complement(),
            Symmetry::Inverse => s.inverse(),
        }
    }

    fn letter(self) -> char {
        match self {
            Symmetry::Reverse => 'r',
            Symmetry::Complement => 'c',
            Symmetry::Inverse => 'i',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Set(PatternSet),
    Sum(Box<Expr>, Box<Expr>),
    Apply(Box<Expr>, Vec<Symmetry>),
}

impl Expr {
    pub fn parse(s: &str) -> Result<Self, ExprError> {
        let mut p = Parser { s, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < s.len() {
            return Err(p.unexpected());
        }
        Ok(e)
    }

    pub fn evaluate(&self) -> PatternSet {
        match self {
            Expr::Set(s) => s.clone(),
            Expr::Sum(a, b) => a.evaluate().direct_sum(&b.evaluate()),
            Expr::Apply(e, ops) => ops.iter().fold(e.evaluate(), |acc, op| op.apply(&acc)),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Set(s) if s.len() == 1 => write!(f, "{}", s.iter().next().unwrap()),
            Expr::Set(s) => write!(f, "{s}"),
            Expr::Sum(a, b) => write!(f, "{a}⊕{b}"),
            Expr::Apply(e, ops) => {
                write!(f, "({e})^{{")?;
                for op in ops {
                    write!(f, "{}", op.letter())?;
                }
                f.write_str("}")
            }
        }
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.s.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn unexpected(&self) -> ExprError {
        let found = match self.rest().chars().next() {
            Some(c) => c.to_string(),
            None => "end of input".to_string(),
        };
        ExprError::Unexpected { offset: self.pos, found }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.term()?;
        while self.eat("⊕") || self.eat("(+)") || self.eat("+") {
            let rhs = self.term()?;
            e = Expr::Sum(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut e = self.atom()?;
        while self.eat("^") {
            let braced = self.eat("{");
            let mut ops = Vec::new();
            while let Some(c) = self.rest().chars().next() {
                let op = match c {
                    'r' => Symmetry::Reverse,
                    'c' => Symmetry::Complement,
                    'i' => Symmetry::Inverse,
                    _ => break,
                };
                ops.push(op);
                self.pos += 1;
            }
            if ops.is_empty() || (braced && !self.eat("}")) {
                return Err(self.unexpected());
            }
            e = Expr::Apply(Box::new(e), ops);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        self.skip_ws();
        let start = self.pos;
        if self.rest().starts_with("(+)") {
            return Err(self.unexpected());
        }
        if self.eat("(") {
            let e = self.expr()?;
            if !self.eat(")") {
                return Err(self.unexpected());
            }
            return Ok(e);
        }
        let literal = if self.rest().starts_with('{') {
            let Some(end) = self.rest().find('}') else {
                return Err(ExprError::Set { offset: start, message: "unclosed brace".to_string() });
            };
            &self.s[start..start + end + 1]
        } else {
            let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
            if len == 0 {
                return Err(self.unexpected());
            }
            &self.s[start..start + len]
        };
        self.pos = start + literal.len();
        let set: PatternSet =
            literal.parse().map_err(|e| ExprError::Set { offset: start, message: alloc::format!("{e}") })?;
        Ok(Expr::Set(set))
    }
}

/// Evaluates `rhs` and compares it with `lhs` as sets.
pub fn symmetry_identity_check(lhs: &PatternSet, rhs: &str) -> Result<bool, ExprError> {
    Ok(Expr::parse(rhs)?.evaluate() == *lhs)
}

/// Both sides are expressions.
pub fn identity_holds(lhs: &str, rhs: &str) -> Result<bool, ExprError> {
    Ok(Expr::parse(lhs)?.evaluate() == Expr::parse(rhs)?.evaluate())
}
