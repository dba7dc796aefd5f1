//! Recursive-descent parser for the textual formula syntax.
//!
//! ```text
//! state := "true" | ident | "!" state | state "&" state | state "|" state
//!        | state "->" state | state "<->" state | "(" state ")"
//!        | ("Po" | "Ne") "[" path "]"
//! path  := "X" state | state "U" state | state "U<=" nat state
//!        | "G" state | "F" state | "G<=" nat state
//! ```
//!
//! Precedence from tightest: `!`, `&`, `|`, `->` (right associative), `<->`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ast::{PathFormula, StateFormula};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    True,
    Ident(String),
    Nat(u32),
    Bang,
    Amp,
    Pipe,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Le,
    Po,
    Ne,
    X,
    U,
    G,
    F,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => alloc::format!("identifier {s:?}"),
            Tok::Nat(n) => alloc::format!("number {n}"),
            other => alloc::format!("{other:?}"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'!' => {
                i += 1;
                Tok::Bang
            }
            b'&' => {
                i += 1;
                Tok::Amp
            }
            b'|' => {
                i += 1;
                Tok::Pipe
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'[' => {
                i += 1;
                Tok::LBracket
            }
            b']' => {
                i += 1;
                Tok::RBracket
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 2;
                Tok::Arrow
            }
            b'<' if text[i..].starts_with("<->") => {
                i += 3;
                Tok::DoubleArrow
            }
            b'<' if bytes.get(i + 1) == Some(&b'=') => {
                i += 2;
                Tok::Le
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse().map_err(|_| ParseError {
                    offset: start,
                    message: "bound does not fit in 32 bits".into(),
                })?;
                Tok::Nat(n)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                match &text[start..i] {
                    "true" => Tok::True,
                    "Po" => Tok::Po,
                    "Ne" => Tok::Ne,
                    "X" => Tok::X,
                    "U" => Tok::U,
                    "G" => Tok::G,
                    "F" => Tok::F,
                    word => Tok::Ident(word.to_string()),
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    offset: start,
                    message: alloc::format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), Tok::describe);
            self.error(alloc::format!("expected {what}, found {found}"))
        }
    }

    fn state(&mut self) -> Result<StateFormula, ParseError> {
        let mut lhs = self.implication()?;
        while self.eat(&Tok::DoubleArrow) {
            let rhs = self.implication()?;
            lhs = lhs.iff(rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<StateFormula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<StateFormula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Pipe) {
            let rhs = self.conjunction()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<StateFormula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<StateFormula, ParseError> {
        let offset = self.offset();
        match self.bump() {
            Some(Tok::Bang) => Ok(self.unary()?.not()),
            Some(Tok::True) => Ok(StateFormula::True),
            Some(Tok::Ident(name)) => Ok(StateFormula::Atom(name)),
            Some(Tok::LParen) => {
                let inner = self.state()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(Tok::Po) => Ok(StateFormula::Po(Box::new(self.bracketed_path()?))),
            Some(Tok::Ne) => Ok(StateFormula::Ne(Box::new(self.bracketed_path()?))),
            Some(Tok::X | Tok::U | Tok::G | Tok::F) => Err(ParseError {
                offset,
                message: "path operator outside Po[...] or Ne[...]".into(),
            }),
            Some(other) => Err(ParseError {
                offset,
                message: alloc::format!("unexpected {}", other.describe()),
            }),
            None => Err(ParseError {
                offset,
                message: "unexpected end of input".into(),
            }),
        }
    }

    fn bracketed_path(&mut self) -> Result<PathFormula, ParseError> {
        self.expect(Tok::LBracket, "'['")?;
        let path = self.path()?;
        self.expect(Tok::RBracket, "']'")?;
        Ok(path)
    }

    fn bound(&mut self) -> Result<Option<u32>, ParseError> {
        if !self.eat(&Tok::Le) {
            return Ok(None);
        }
        match self.bump() {
            Some(Tok::Nat(n)) => Ok(Some(n)),
            _ => {
                self.pos -= 1;
                self.error("expected a natural-number bound after '<='")
            }
        }
    }

    fn path(&mut self) -> Result<PathFormula, ParseError> {
        match self.peek() {
            Some(Tok::X) => {
                self.pos += 1;
                Ok(PathFormula::next(self.state()?))
            }
            Some(Tok::F) => {
                self.pos += 1;
                Ok(PathFormula::eventually(self.state()?))
            }
            Some(Tok::G) => {
                self.pos += 1;
                match self.bound()? {
                    Some(n) => Ok(PathFormula::bounded_always(self.state()?, n)),
                    None => Ok(PathFormula::always(self.state()?)),
                }
            }
            _ => {
                let lhs = self.state()?;
                self.expect(Tok::U, "'U'")?;
                let bound = self.bound()?;
                let rhs = self.state()?;
                Ok(match bound {
                    Some(n) => PathFormula::bounded_until(lhs, rhs, n),
                    None => PathFormula::until(lhs, rhs),
                })
            }
        }
    }
}

pub fn parse_formula(text: &str) -> Result<StateFormula, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let f = p.state()?;
    if p.pos < p.toks.len() {
        let found = p.peek().map(Tok::describe).unwrap_or_default();
        return p.error(alloc::format!("unexpected trailing {found}"));
    }
    Ok(f)
}
