//! Text syntax for diagrams.
//!
//! ```text
//! expr   := term (('+' | '|') term)*
//! term   := factor (('*' | '&') factor)*
//! factor := '~' factor | '(' expr ')' | 'A' digits | '1' | '0'
//! ```
//!
//! `*` is series, `+` is parallel and `~` is complement. Both infix operators
//! are left-associative and whitespace is insignificant. The aliases `&` and
//! `|` are accepted but never produced by [`render`].

use std::fmt;

use thiserror::Error;

use crate::diagram::{ComponentId, Diagram};

/// Parentheses and complements nested deeper than this are rejected.
pub const MAX_NESTING: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    UnexpectedToken,
    UnbalancedParenthesis,
    BadComponentIndex,
    EmptyInput,
    TrailingInput,
    NestingTooDeep,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::UnexpectedToken => "unexpected token",
            ParseErrorKind::UnbalancedParenthesis => "unbalanced parenthesis",
            ParseErrorKind::BadComponentIndex => "bad component index",
            ParseErrorKind::EmptyInput => "empty input",
            ParseErrorKind::TrailingInput => "trailing input",
            ParseErrorKind::NestingTooDeep => "nesting too deep",
        })
    }
}

/// A parse failure at a character offset of the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Component(ComponentId),
    One,
    Zero,
    Series,
    Parallel,
    Complement,
    Open,
    Close,
}

#[derive(Debug, Clone, Copy)]
struct Spanned {
    token: Token,
    position: usize,
}

fn err(position: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { position, kind }
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let position = i;
        let token = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '*' | '&' => Token::Series,
            '+' | '|' => Token::Parallel,
            '~' => Token::Complement,
            '(' => Token::Open,
            ')' => Token::Close,
            'A' => {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                if end == start {
                    return Err(err(position, ParseErrorKind::BadComponentIndex));
                }
                let digits: String = chars[start..end].iter().collect();
                let id = digits
                    .parse::<u32>()
                    .ok()
                    .and_then(|k| ComponentId::new(k).ok())
                    .ok_or(err(position, ParseErrorKind::BadComponentIndex))?;
                i = end;
                tokens.push(Spanned {
                    token: Token::Component(id),
                    position,
                });
                continue;
            }
            '0' | '1' => {
                if chars.get(i + 1).is_some_and(|n| n.is_ascii_digit()) {
                    return Err(err(position, ParseErrorKind::UnexpectedToken));
                }
                if c == '1' {
                    Token::One
                } else {
                    Token::Zero
                }
            }
            _ => return Err(err(position, ParseErrorKind::UnexpectedToken)),
        };
        tokens.push(Spanned { token, position });
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).map(|t| t.token)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.position)
    }

    fn expr(&mut self) -> Result<Diagram, ParseError> {
        let mut lhs = self.term()?;
        while self.peek() == Some(Token::Parallel) {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Diagram::parallel(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Diagram, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(Token::Series) {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Diagram::series(lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Diagram, ParseError> {
        let position = self.here();
        let token = self.peek();
        self.pos += 1;
        match token {
            Some(Token::Component(c)) => Ok(Diagram::Elementary(c)),
            Some(Token::One) => Ok(Diagram::One),
            Some(Token::Zero) => Ok(Diagram::Zero),
            Some(Token::Complement) => {
                self.descend(position)?;
                let inner = self.factor()?;
                self.depth -= 1;
                Ok(Diagram::complement(inner))
            }
            Some(Token::Open) => {
                self.descend(position)?;
                let inner = self.expr()?;
                self.depth -= 1;
                match self.peek() {
                    Some(Token::Close) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    None => Err(err(position, ParseErrorKind::UnbalancedParenthesis)),
                    Some(_) => Err(err(self.here(), ParseErrorKind::UnexpectedToken)),
                }
            }
            Some(Token::Close) if self.is_unmatched_close() => {
                Err(err(position, ParseErrorKind::UnbalancedParenthesis))
            }
            Some(_) => Err(err(position, ParseErrorKind::UnexpectedToken)),
            None => Err(err(position, ParseErrorKind::UnexpectedToken)),
        }
    }

    fn descend(&mut self, position: usize) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(err(position, ParseErrorKind::NestingTooDeep));
        }
        Ok(())
    }

    // the close paren just consumed at `self.pos - 1` has no opener before it
    fn is_unmatched_close(&self) -> bool {
        let mut balance: i64 = 0;
        for t in &self.tokens[..self.pos] {
            match t.token {
                Token::Open => balance += 1,
                Token::Close => balance -= 1,
                _ => {}
            }
        }
        balance < 0
    }
}

/// Parses an expression into a diagram. No simplification is applied.
pub fn parse(text: &str) -> Result<Diagram, ParseError> {
    let tokens = tokenize(text)?;
    let end = text.chars().count();
    if tokens.is_empty() {
        return Err(err(0, ParseErrorKind::EmptyInput));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end,
        depth: 0,
    };
    let d = parser.expr()?;
    match parser.tokens.get(parser.pos) {
        None => Ok(d),
        Some(Spanned {
            token: Token::Close,
            position,
        }) => Err(err(*position, ParseErrorKind::UnbalancedParenthesis)),
        Some(t) => Err(err(t.position, ParseErrorKind::TrailingInput)),
    }
}

/// Parses raw bytes; input that is not UTF-8 fails with an unexpected-token error.
pub fn parse_bytes(bytes: &[u8]) -> Result<Diagram, ParseError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse(text),
        Err(e) => {
            let position = String::from_utf8_lossy(&bytes[..e.valid_up_to()])
                .chars()
                .count();
            Err(err(position, ParseErrorKind::UnexpectedToken))
        }
    }
}

const PREC_PARALLEL: u8 = 1;
const PREC_SERIES: u8 = 2;
const PREC_ATOM: u8 = 3;

fn precedence(d: &Diagram) -> u8 {
    match d {
        Diagram::Parallel(..) => PREC_PARALLEL,
        Diagram::Series(..) => PREC_SERIES,
        _ => PREC_ATOM,
    }
}

/// Renders a diagram with the minimum parentheses needed to parse back to
/// the same term.
pub fn render(d: &Diagram) -> String {
    let mut out = String::new();
    write_diagram(d, &mut out);
    out
}

fn write_operand(d: &Diagram, min_prec: u8, out: &mut String) {
    if precedence(d) < min_prec {
        out.push('(');
        write_diagram(d, out);
        out.push(')');
    } else {
        write_diagram(d, out);
    }
}

fn write_diagram(d: &Diagram, out: &mut String) {
    match d {
        Diagram::Elementary(c) => {
            out.push('A');
            out.push_str(&c.index().to_string());
        }
        Diagram::One => out.push('1'),
        Diagram::Zero => out.push('0'),
        Diagram::Series(a, b) => {
            write_operand(a, PREC_SERIES, out);
            out.push_str(" * ");
            write_operand(b, PREC_SERIES + 1, out);
        }
        Diagram::Parallel(a, b) => {
            write_operand(a, PREC_PARALLEL, out);
            out.push_str(" + ");
            write_operand(b, PREC_PARALLEL + 1, out);
        }
        Diagram::Complement(a) => {
            out.push('~');
            write_operand(a, PREC_ATOM, out);
        }
    }
}
