//! Boolean expressions over atoms, denoting sets of worlds.
//!
//! ```text
//! implies := or ( "->" implies )?          right-associative
//! or      := and ( "|" and )*
//! and     := unary ( "&" unary )*
//! unary   := "~" unary | primary
//! primary := IDENT | "true" | "false" | "(" implies ")" | "{" IDENT* "}"
//! ```
//!
//! Identifiers name atoms or, failing that, previously declared
//! propositions. `{ AB Ab }` lists worlds by label.

use std::collections::BTreeMap;
use std::fmt;

use rankrev::{Proposition, Universe};

use crate::error::Diagnostic;

/// Source position, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression {
    Const(bool),
    Ident(String, Pos),
    Worlds(Vec<(String, Pos)>),
    Not(Box<Expression>),
    And(Box<Expression>, Box<Expression>),
    Or(Box<Expression>, Box<Expression>),
    Implies(Box<Expression>, Box<Expression>),
}

/// What identifiers and world labels resolve against.
pub struct Scope<'a> {
    pub universe: &'a Universe,
    pub props: &'a BTreeMap<String, Proposition>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Arrow,
    LParen,
    RParen,
    LBrace,
    RBrace,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Not => f.write_str("`~`"),
            Token::And => f.write_str("`&`"),
            Token::Or => f.write_str("`|`"),
            Token::Arrow => f.write_str("`->`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::LBrace => f.write_str("`{`"),
            Token::RBrace => f.write_str("`}`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn tokenize(text: &str, origin: Pos) -> Result<Vec<(Token, Pos)>, Diagnostic> {
    let chars: Vec<char> = text.chars().collect();
    let at = |i: usize| Pos {
        line: origin.line,
        column: origin.column + i,
    };
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = at(i);
        let token = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' => Token::Not,
            '&' => Token::And,
            '|' => Token::Or,
            '(' => Token::LParen,
            ')' => Token::RParen,
            '{' => Token::LBrace,
            '}' => Token::RBrace,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Token::Arrow
            }
            c if is_ident_char(c) => {
                let start = i;
                while i + 1 < chars.len() && is_ident_char(chars[i + 1]) {
                    i += 1;
                }
                Token::Ident(chars[start..=i].iter().collect())
            }
            other => {
                return Err(Diagnostic::at(
                    pos,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        tokens.push((token, pos));
        i += 1;
    }
    tokens.push((Token::End, at(chars.len())));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, Pos)>,
    next: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.next].0
    }

    fn bump(&mut self) -> (Token, Pos) {
        let t = self.tokens[self.next].clone();
        if self.next + 1 < self.tokens.len() {
            self.next += 1;
        }
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), Diagnostic> {
        let (got, pos) = self.bump();
        if got != want {
            return Err(Diagnostic::at(pos, format!("expected {want}, found {got}")));
        }
        Ok(())
    }

    fn implies(&mut self) -> Result<Expression, Diagnostic> {
        let lhs = self.or()?;
        if *self.peek() == Token::Arrow {
            self.bump();
            let rhs = self.implies()?;
            return Ok(Expression::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Expression, Diagnostic> {
        let mut lhs = self.and()?;
        while *self.peek() == Token::Or {
            self.bump();
            lhs = Expression::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expression, Diagnostic> {
        let mut lhs = self.unary()?;
        while *self.peek() == Token::And {
            self.bump();
            lhs = Expression::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expression, Diagnostic> {
        if *self.peek() == Token::Not {
            self.bump();
            return Ok(Expression::Not(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expression, Diagnostic> {
        let (token, pos) = self.bump();
        match token {
            Token::Ident(name) if name == "true" => Ok(Expression::Const(true)),
            Token::Ident(name) if name == "false" => Ok(Expression::Const(false)),
            Token::Ident(name) => Ok(Expression::Ident(name, pos)),
            Token::LParen => {
                let inner = self.implies()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Token::LBrace => {
                let mut worlds = Vec::new();
                loop {
                    match self.bump() {
                        (Token::Ident(label), pos) => worlds.push((label, pos)),
                        (Token::RBrace, _) => break,
                        (other, pos) => {
                            return Err(Diagnostic::at(
                                pos,
                                format!("expected a world label or `}}`, found {other}"),
                            ))
                        }
                    }
                }
                Ok(Expression::Worlds(worlds))
            }
            other => Err(Diagnostic::at(
                pos,
                format!("expected an expression, found {other}"),
            )),
        }
    }
}

/// Parses `text` whose first character sits at `origin`.
pub fn parse_expression_at(text: &str, origin: Pos) -> Result<Expression, Diagnostic> {
    let mut parser = Parser {
        tokens: tokenize(text, origin)?,
        next: 0,
    };
    let expr = parser.implies()?;
    let (rest, pos) = parser.bump();
    if rest != Token::End {
        return Err(Diagnostic::at(
            pos,
            format!("unexpected {rest} after expression"),
        ));
    }
    Ok(expr)
}

pub fn parse_expression(text: &str) -> Result<Expression, Diagnostic> {
    parse_expression_at(text, Pos { line: 1, column: 1 })
}

impl Expression {
    /// The set of worlds where the expression holds, by set algebra.
    pub fn denote(&self, scope: &Scope<'_>) -> Result<Proposition, Diagnostic> {
        let u = scope.universe;
        Ok(match self {
            Expression::Const(true) => u.full(),
            Expression::Const(false) => u.empty(),
            Expression::Ident(name, pos) => resolve(name, *pos, scope)?,
            Expression::Worlds(labels) => {
                let mut prop = u.empty();
                for (label, pos) in labels {
                    let w = u
                        .index_of(label)
                        .map_err(|_| Diagnostic::at(*pos, format!("unknown world `{label}`")))?;
                    prop = prop | Proposition::singleton(u.len(), w).expect("index in range");
                }
                prop
            }
            Expression::Not(e) => e.denote(scope)?.complement(),
            Expression::And(a, b) => a.denote(scope)? & b.denote(scope)?,
            Expression::Or(a, b) => a.denote(scope)? | b.denote(scope)?,
            Expression::Implies(a, b) => a.denote(scope)?.complement() | b.denote(scope)?,
        })
    }

    /// Truth value at a single world, evaluated connective by connective.
    pub fn holds_at(&self, world: usize, scope: &Scope<'_>) -> Result<bool, Diagnostic> {
        Ok(match self {
            Expression::Const(b) => *b,
            Expression::Ident(name, pos) => {
                let u = scope.universe;
                match (u.atoms().iter().position(|a| a == name), u.valuation(world)) {
                    (Some(a), Some(valuation)) => valuation[a],
                    _ => resolve(name, *pos, scope)?.contains(world),
                }
            }
            Expression::Worlds(labels) => {
                labels.iter().any(|(l, _)| scope.universe.label(world) == l)
            }
            Expression::Not(e) => !e.holds_at(world, scope)?,
            Expression::And(a, b) => a.holds_at(world, scope)? && b.holds_at(world, scope)?,
            Expression::Or(a, b) => a.holds_at(world, scope)? || b.holds_at(world, scope)?,
            Expression::Implies(a, b) => !a.holds_at(world, scope)? || b.holds_at(world, scope)?,
        })
    }
}

fn resolve(name: &str, pos: Pos, scope: &Scope<'_>) -> Result<Proposition, Diagnostic> {
    if let Some(p) = scope.universe.atom_prop(name) {
        return Ok(p);
    }
    if let Some(p) = scope.props.get(name) {
        return Ok(*p);
    }
    Err(Diagnostic::at(
        pos,
        format!("unknown atom or proposition `{name}`"),
    ))
}
