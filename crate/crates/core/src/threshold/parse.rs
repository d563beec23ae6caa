//! Recursive-descent parser for the threshold DSL.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := integer | 'n'
//!           | 'ceil(' rational '*' expr ')' | 'floor(' rational '*' expr ')'
//!           | 'ceil(log2(' expr '))' | 'ceil(sqrt(' expr '))'
//!           | 'ceil(' expr '/' 'log2(' expr '))'
//!           | 'min(' expr ',' expr ')' | 'max(' expr ',' expr ')'
//!           | '(' expr ')'
//! rational := integer '/' integer | integer
//! ```

use super::expr::{Expr, Rounding};
use super::ThresholdError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u128),
    Ident(String),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ThresholdError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let value = src[start..i].parse::<u128>().map_err(|_| ThresholdError::Syntax {
                pos: start,
                msg: "integer literal out of range".into(),
            })?;
            out.push(Token {
                tok: Tok::Int(value),
                pos: start,
            });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(src[start..i].to_string()),
                pos: start,
            });
        } else if b"+-*/(),".contains(&c) {
            out.push(Token {
                tok: Tok::Sym(c as char),
                pos: i,
            });
            i += 1;
        } else {
            let ch = src[i..].chars().next().unwrap_or('?');
            return Err(ThresholdError::Syntax {
                pos: i,
                msg: format!("unexpected character '{ch}'"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: usize,
}

pub fn parse(src: &str) -> Result<Expr, ThresholdError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

fn error_pos(e: &ThresholdError) -> usize {
    match e {
        ThresholdError::Syntax { pos, .. } | ThresholdError::ZeroDenominator { pos } => *pos,
        _ => 0,
    }
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn error(&self, msg: &str) -> ThresholdError {
        let found = match self.toks.get(self.at).map(|t| &t.tok) {
            None => "end of input".to_string(),
            Some(Tok::Int(k)) => format!("'{k}'"),
            Some(Tok::Ident(s)) => format!("'{s}'"),
            Some(Tok::Sym(c)) => format!("'{c}'"),
        };
        ThresholdError::Syntax {
            pos: self.pos(),
            msg: format!("{msg}, found {found}"),
        }
    }

    fn peek_sym(&self, c: char) -> bool {
        matches!(self.toks.get(self.at), Some(Token { tok: Tok::Sym(s), .. }) if *s == c)
    }

    fn peek_ident(&self, offset: usize, name: &str) -> bool {
        matches!(self.toks.get(self.at + offset), Some(Token { tok: Tok::Ident(s), .. }) if s == name)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek_sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ThresholdError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expect_ident(&mut self, name: &str) -> Result<(), ThresholdError> {
        if self.peek_ident(0, name) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{name}'")))
        }
    }

    fn int(&mut self) -> Result<u128, ThresholdError> {
        match self.toks.get(self.at) {
            Some(Token { tok: Tok::Int(k), .. }) => {
                let k = *k;
                self.at += 1;
                Ok(k)
            }
            _ => Err(self.error("expected integer")),
        }
    }

    fn expr(&mut self) -> Result<Expr, ThresholdError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_sym('+') {
                lhs = Expr::add(lhs, self.term()?);
            } else if self.eat_sym('-') {
                lhs = Expr::sub(lhs, self.term()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ThresholdError> {
        let mut lhs = self.factor()?;
        while self.eat_sym('*') {
            lhs = Expr::mul(lhs, self.factor()?);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ThresholdError> {
        let Some(token) = self.toks.get(self.at).cloned() else {
            return Err(self.error("expected expression"));
        };
        match token.tok {
            Tok::Int(k) => {
                self.at += 1;
                Ok(Expr::Const(k))
            }
            Tok::Sym('(') => {
                self.at += 1;
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.at += 1;
                match name.as_str() {
                    "n" => Ok(Expr::Var),
                    "ceil" => self.ceil_body(),
                    "floor" => {
                        self.expect_sym('(')?;
                        self.scale_body(Rounding::Floor)
                    }
                    "min" | "max" => {
                        self.expect_sym('(')?;
                        let a = self.expr()?;
                        self.expect_sym(',')?;
                        let b = self.expr()?;
                        self.expect_sym(')')?;
                        Ok(if name == "min" { Expr::min(a, b) } else { Expr::max(a, b) })
                    }
                    _ => {
                        self.at -= 1;
                        Err(self.error("unknown identifier"))
                    }
                }
            }
            Tok::Sym(_) => Err(self.error("expected expression")),
        }
    }

    // After `ceil`.
    fn ceil_body(&mut self) -> Result<Expr, ThresholdError> {
        self.expect_sym('(')?;
        for (name, build) in [("log2", Expr::log2_ceil as fn(Expr) -> Expr), ("sqrt", Expr::sqrt_ceil)] {
            if self.peek_ident(0, name) {
                self.at += 1;
                self.expect_sym('(')?;
                let inner = self.expr()?;
                self.expect_sym(')')?;
                self.expect_sym(')')?;
                return Ok(build(inner));
            }
        }
        let start = self.at;
        let scale_err = match self.scale_body(Rounding::Ceil) {
            Ok(e) => return Ok(e),
            Err(e @ ThresholdError::ZeroDenominator { .. }) => return Err(e),
            Err(e) => e,
        };
        self.at = start;
        self.log_ratio_body().map_err(|ratio_err| {
            // report whichever reading got further
            if error_pos(&scale_err) > error_pos(&ratio_err) {
                scale_err
            } else {
                ratio_err
            }
        })
    }

    // After `ceil(`: expr '/' 'log2(' expr '))'.
    fn log_ratio_body(&mut self) -> Result<Expr, ThresholdError> {
        let num = self.expr()?;
        self.expect_sym('/')?;
        self.expect_ident("log2")?;
        self.expect_sym('(')?;
        let arg = self.expr()?;
        self.expect_sym(')')?;
        self.expect_sym(')')?;
        Ok(Expr::log_ratio(num, arg))
    }

    // After `ceil(` or `floor(`: rational '*' expr ')'.
    fn scale_body(&mut self, rounding: Rounding) -> Result<Expr, ThresholdError> {
        let num = self.int()?;
        let mut den = 1;
        if self.eat_sym('/') {
            let den_pos = self.pos();
            den = self.int()?;
            if den == 0 {
                return Err(ThresholdError::ZeroDenominator { pos: den_pos });
            }
        }
        self.expect_sym('*')?;
        let inner = self.expr()?;
        self.expect_sym(')')?;
        Ok(Expr::scale(num, den, rounding, inner))
    }
}
