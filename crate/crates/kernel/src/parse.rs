//! Concrete syntax for terms and types.
//!
//! Terms:  term := lam | app ;  lam := ("\" | "λ") var "." term ;
//!         app := atom { atom } ;  atom := var | const | "(" term ")" ;
//!         var := "v" digits.
//! Types:  type := atomT [ "->" type ] ;  atomT := "nat" | "(" type ")".

use std::fmt;

use thiserror::Error;

use crate::syntax::{Alphabet, Term, Var};
use crate::typing::SimpleType;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at {}:{}: found {}, expected {}",
            self.line,
            self.col,
            self.found,
            self.expected.join(" or ")
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Lambda,
    Dot,
    LParen,
    RParen,
    Arrow,
    Word(String),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Lambda => write!(f, "'\\'"),
            Tok::Dot => write!(f, "'.'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::Arrow => write!(f, "'->'"),
            Tok::Word(w) => write!(f, "'{w}'"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '\\' | 'λ' => {
                chars.next();
                col += 1;
                toks.push((Tok::Lambda, tl, tc));
            }
            '.' => {
                chars.next();
                col += 1;
                toks.push((Tok::Dot, tl, tc));
            }
            '(' => {
                chars.next();
                col += 1;
                toks.push((Tok::LParen, tl, tc));
            }
            ')' => {
                chars.next();
                col += 1;
                toks.push((Tok::RParen, tl, tc));
            }
            '-' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'>') {
                    chars.next();
                    col += 1;
                    toks.push((Tok::Arrow, tl, tc));
                } else {
                    return Err(ParseError {
                        line: tl,
                        col: tc,
                        expected: vec!["'->'".into()],
                        found: "'-'".into(),
                    });
                }
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Word(word), tl, tc));
            }
            other => {
                return Err(ParseError {
                    line: tl,
                    col: tc,
                    expected: vec!["a token".into()],
                    found: format!("'{other}'"),
                });
            }
        }
    }
    toks.push((Tok::Eof, line, col));
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> &(Tok, usize, usize) {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> (Tok, usize, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (tok, line, col) = self.peek();
        ParseError {
            line: *line,
            col: *col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.to_string(),
        }
    }

    fn expect(&mut self, want: Tok, label: &str) -> Result<(), ParseError> {
        if self.peek().0 == want {
            self.next();
            Ok(())
        } else {
            Err(self.error(&[label]))
        }
    }
}

fn word_to_var(word: &str) -> Option<Var> {
    let digits = word.strip_prefix('v')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().map(Var)
}

fn parse_lam_or_app<C: Alphabet>(lx: &mut Lexer) -> Result<Term<C>, ParseError> {
    if lx.peek().0 == Tok::Lambda {
        lx.next();
        let var = match &lx.peek().0 {
            Tok::Word(w) => match word_to_var(w) {
                Some(v) => {
                    lx.next();
                    v
                }
                None => return Err(lx.error(&["a variable (v0, v1, ...)"])),
            },
            _ => return Err(lx.error(&["a variable (v0, v1, ...)"])),
        };
        lx.expect(Tok::Dot, "'.'")?;
        let body = parse_lam_or_app(lx)?;
        return Ok(Term::abs(var, body));
    }
    let mut term = parse_atom(lx)?;
    loop {
        match &lx.peek().0 {
            Tok::Word(_) | Tok::LParen => {
                let arg = parse_atom(lx)?;
                term = Term::app(term, arg);
            }
            _ => return Ok(term),
        }
    }
}

fn parse_atom<C: Alphabet>(lx: &mut Lexer) -> Result<Term<C>, ParseError> {
    match &lx.peek().0 {
        Tok::Word(w) => {
            if let Some(v) = word_to_var(w) {
                lx.next();
                Ok(Term::Var(v))
            } else if let Some(c) = C::from_token(w) {
                lx.next();
                Ok(Term::Const(c))
            } else {
                Err(lx.error(&["a variable or constant"]))
            }
        }
        Tok::LParen => {
            lx.next();
            let t = parse_lam_or_app(lx)?;
            lx.expect(Tok::RParen, "')'")?;
            Ok(t)
        }
        _ => Err(lx.error(&["a variable", "a constant", "'('"])),
    }
}

pub fn parse_term<C: Alphabet>(text: &str) -> Result<Term<C>, ParseError> {
    let mut lx = lex(text)?;
    let t = parse_lam_or_app(&mut lx)?;
    lx.expect(Tok::Eof, "end of input")?;
    Ok(t)
}

fn parse_type_inner(lx: &mut Lexer) -> Result<SimpleType, ParseError> {
    let left = parse_type_atom(lx)?;
    if lx.peek().0 == Tok::Arrow {
        lx.next();
        let right = parse_type_inner(lx)?;
        Ok(SimpleType::arrow(left, right))
    } else {
        Ok(left)
    }
}

fn parse_type_atom(lx: &mut Lexer) -> Result<SimpleType, ParseError> {
    match &lx.peek().0 {
        Tok::Word(w) if w == "nat" => {
            lx.next();
            Ok(SimpleType::Base)
        }
        Tok::LParen => {
            lx.next();
            let t = parse_type_inner(lx)?;
            lx.expect(Tok::RParen, "')'")?;
            Ok(t)
        }
        _ => Err(lx.error(&["'nat'", "'('"])),
    }
}

pub fn parse_type(text: &str) -> Result<SimpleType, ParseError> {
    let mut lx = lex(text)?;
    let t = parse_type_inner(&mut lx)?;
    lx.expect(Tok::Eof, "end of input")?;
    Ok(t)
}
