use std::fmt;
use std::str::FromStr;

use super::{is_identifier, Atom, Term, Var};
use crate::error::{Error, Result};

/// Restricts the node kinds the parser admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Closed short-circuit terms, full connectives included. No conditional.
    Scl,
    /// Closed conditional terms: constants, atoms and `<| |>` only.
    Cp,
    /// Closed terms over the whole signature.
    Enriched,
    /// Like `Enriched`, plus `$`-prefixed variables.
    Open,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Scl => "scl",
            Mode::Cp => "cp",
            Mode::Enriched => "enriched",
            Mode::Open => "open",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "scl" => Ok(Mode::Scl),
            "cp" => Ok(Mode::Cp),
            "enriched" => Ok(Mode::Enriched),
            "open" => Ok(Mode::Open),
            _ => Err(Error::Format(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    True,
    False,
    Ident(String),
    Var(String),
    Bang,
    AndAnd,
    FullAnd,
    OrOr,
    FullOr,
    CondOpen,
    CondClose,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::True => f.write_str("'T'"),
            Tok::False => f.write_str("'F'"),
            Tok::Ident(s) => write!(f, "identifier '{s}'"),
            Tok::Var(s) => write!(f, "variable '${s}'"),
            Tok::Bang => f.write_str("'!'"),
            Tok::AndAnd => f.write_str("'&&'"),
            Tok::FullAnd => f.write_str("'&.&'"),
            Tok::OrOr => f.write_str("'||'"),
            Tok::FullOr => f.write_str("'|.|'"),
            Tok::CondOpen => f.write_str("'<|'"),
            Tok::CondClose => f.write_str("'|>'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    const SYMBOLS: [(&str, Tok); 10] = [
        ("&.&", Tok::FullAnd),
        ("|.|", Tok::FullOr),
        ("&&", Tok::AndAnd),
        ("||", Tok::OrOr),
        ("<|", Tok::CondOpen),
        ("|>", Tok::CondClose),
        ("!", Tok::Bang),
        ("(", Tok::LParen),
        (")", Tok::RParen),
        ("", Tok::End),
    ];
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    'outer: while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'$' {
            let start = i;
            if c == b'$' {
                i += 1;
            }
            let name_start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &text[name_start..i];
            let tok = if c == b'$' {
                if !is_identifier(name) {
                    return Err(syntax(start, "expected a variable name after '$'"));
                }
                Tok::Var(name.to_string())
            } else {
                match name {
                    "T" => Tok::True,
                    "F" => Tok::False,
                    _ => Tok::Ident(name.to_string()),
                }
            };
            out.push((tok, start));
            continue;
        }
        for (sym, tok) in SYMBOLS.iter().take(SYMBOLS.len() - 1) {
            if text[i..].starts_with(sym) {
                out.push((tok.clone(), i));
                i += sym.len();
                continue 'outer;
            }
        }
        let ch = text[i..].chars().next().unwrap_or('?');
        return Err(syntax(i, format!("unexpected character {ch:?}")));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    mode: Mode,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.pos(),
                format!("expected {want}, found {}", self.peek()),
            ))
        }
    }

    fn allow(&self, what: &str, pos: usize) -> Result<()> {
        let banned = match self.mode {
            Mode::Open => false,
            Mode::Enriched => what == "variable",
            Mode::Scl => what == "variable" || what == "conditional",
            Mode::Cp => what != "conditional",
        };
        if banned {
            Err(Error::mode(what, format!("{} mode, byte {pos}", self.mode)))
        } else {
            Ok(())
        }
    }

    fn expr(&mut self) -> Result<Term> {
        let then = self.or()?;
        if *self.peek() != Tok::CondOpen {
            return Ok(then);
        }
        self.allow("conditional", self.pos())?;
        self.bump();
        let guard = self.expr()?;
        self.expect(Tok::CondClose)?;
        let otherwise = self.or()?;
        if *self.peek() == Tok::CondOpen {
            return Err(syntax(
                self.pos(),
                "conditional is non-associative; add parentheses",
            ));
        }
        Ok(Term::cond(then, guard, otherwise))
    }

    fn or(&mut self) -> Result<Term> {
        let mut acc = self.and()?;
        loop {
            let pos = self.pos();
            match self.peek() {
                Tok::OrOr => {
                    self.allow("sequential connective", pos)?;
                    self.bump();
                    acc = Term::or(acc, self.and()?);
                }
                Tok::FullOr => {
                    self.allow("full connective", pos)?;
                    self.bump();
                    acc = Term::full_or(acc, self.and()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn and(&mut self) -> Result<Term> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.pos();
            match self.peek() {
                Tok::AndAnd => {
                    self.allow("sequential connective", pos)?;
                    self.bump();
                    acc = Term::and(acc, self.unary()?);
                }
                Tok::FullAnd => {
                    self.allow("full connective", pos)?;
                    self.bump();
                    acc = Term::full_and(acc, self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Term> {
        if *self.peek() == Tok::Bang {
            self.allow("negation", self.pos())?;
            self.bump();
            return Ok(Term::not(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Term> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::True => Ok(Term::True),
            Tok::False => Ok(Term::False),
            Tok::Ident(name) => Ok(Term::Atom(Atom::new(&name)?)),
            Tok::Var(name) => {
                self.allow("variable", pos)?;
                Ok(Term::Var(Var::new(&name)?))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(syntax(pos, format!("expected a term, found {other}"))),
        }
    }
}

/// Parses `text` under `mode`.
///
/// Grammar, loosest first: `expr := or ['<|' expr '|>' or]`,
/// `or := and (('||' | '|.|') and)*`, `and := unary (('&&' | '&.&') unary)*`,
/// `unary := '!' unary | T | F | ident | $ident | '(' expr ')'`.
pub fn parse(text: &str, mode: Mode) -> Result<Term> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        mode,
    };
    let t = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(
            p.pos(),
            format!("unexpected {} after term", p.peek()),
        ));
    }
    Ok(t)
}
