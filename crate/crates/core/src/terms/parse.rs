use super::{literal, Term};
use crate::error::{Error, Result};

/// Largest decimal literal accepted; literals expand to that many nodes.
const MAX_LITERAL: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
    Neq,
    Amp,
    Arrow,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(k) => format!("number {k}"),
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Slash => "`/`".into(),
            Token::Caret => "`^`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Eq => "`=`".into(),
            Token::Neq => "`!=`".into(),
            Token::Amp => "`&`".into(),
            Token::Arrow => "`->`".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'=' => Token::Eq,
            b'&' => Token::Amp,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Token::Arrow
            }
            b'-' => Token::Minus,
            b'!' if bytes.get(i + 1) == Some(&b'=') => {
                i += 1;
                Token::Neq
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits = &src[start..=i];
                let k: u64 = digits
                    .parse()
                    .map_err(|_| syntax(start, format!("numeral `{digits}` is too large")))?;
                if k > MAX_LITERAL {
                    return Err(syntax(
                        start,
                        format!("numeral `{digits}` exceeds {MAX_LITERAL}"),
                    ));
                }
                Token::Int(k)
            }
            b'a'..=b'z' => {
                while i + 1 < bytes.len()
                    && matches!(bytes[i + 1], b'a'..=b'z' | b'0'..=b'9' | b'_')
                {
                    i += 1;
                }
                Token::Ident(src[start..=i].to_string())
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Token::Eof, src.len()));
    Ok(out)
}

/// Recursive-descent parser over a token stream; shared with the statement
/// grammar in `logic`.
pub(crate) struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
}

impl Parser {
    pub(crate) fn new(src: &str) -> Result<Self> {
        Ok(Parser {
            tokens: tokenize(src)?,
            cursor: 0,
        })
    }

    pub(crate) fn peek(&self) -> &Token {
        &self.tokens[self.cursor].0
    }

    pub(crate) fn pos(&self) -> usize {
        self.tokens[self.cursor].1
    }

    pub(crate) fn bump(&mut self) -> Token {
        let t = self.tokens[self.cursor].0.clone();
        if self.cursor + 1 < self.tokens.len() {
            self.cursor += 1;
        }
        t
    }

    pub(crate) fn error(&self, expected: &str) -> Error {
        syntax(
            self.pos(),
            format!("expected {expected}, found {}", self.peek().describe()),
        )
    }

    pub(crate) fn expect(&mut self, tok: Token, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    pub(crate) fn expect_eof(&self) -> Result<()> {
        match self.peek() {
            Token::Eof => Ok(()),
            _ => Err(self.error("end of input")),
        }
    }

    pub(crate) fn expr(&mut self) -> Result<Term> {
        let mut acc = self.prod()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = Term::add(acc, self.prod()?);
                }
                Token::Minus => {
                    self.bump();
                    acc = Term::sub(acc, self.prod()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn prod(&mut self) -> Result<Term> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Token::Star => {
                    self.bump();
                    acc = Term::mul(acc, self.unary()?);
                }
                Token::Slash => {
                    self.bump();
                    acc = Term::div(acc, self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Term> {
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(Term::neg(self.unary()?));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while *self.peek() == Token::Caret {
            self.bump();
            self.expect(Token::Minus, "`-1` after `^`")?;
            match self.peek() {
                Token::Int(1) => {
                    self.bump();
                }
                _ => return Err(self.error("`1` (only `^-1` is supported)")),
            }
            t = Term::inv(t);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Token::Int(k) => {
                self.bump();
                Ok(literal(k))
            }
            Token::Ident(name) => {
                self.bump();
                if name == "inv" && *self.peek() == Token::LParen {
                    self.bump();
                    let inner = self.expr()?;
                    self.expect(Token::RParen, "`)`")?;
                    Ok(Term::inv(inner))
                } else {
                    Ok(Term::Var(name))
                }
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.error("a term")),
        }
    }
}

/// Parses a term. `a/b` becomes `a * b^-1`, `a - b` becomes `a + (-b)` and
/// decimal literals become sums of ones.
pub fn parse_term(src: &str) -> Result<Term> {
    let mut p = Parser::new(src)?;
    let t = p.expr()?;
    p.expect_eof()?;
    Ok(t)
}
