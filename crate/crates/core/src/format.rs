//! Text formats for programs, frameworks and claim-augmented frameworks.
//!
//! ```text
//! % programs: one rule per statement, ids optional for h-unique programs
//! 1: a :- not b, c.
//! 2: b.
//! % frameworks
//! arg(a). arg(b). att(a,b). att(c,b).
//! % claim-augmented frameworks
//! carg(x1,a). catt(b,x1).
//! ```
//!
//! `%` starts a comment that runs to the end of the line; whitespace is
//! insignificant. Rendering goes through the `Display` impls of the value
//! types, which emit canonical sorted text that parses back to the same
//! value.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::af::ArgFramework;
use crate::caf::ClaimFramework;
use crate::error::Error;
use crate::lp::{Program, Rule, RuleId};
use crate::symbol::{is_valid_name, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Expected { expected: &'static str, found: String },
    #[error("invalid name {0:?}")]
    InvalidName(String),
    #[error("invalid rule id {0:?}")]
    InvalidId(String),
    #[error("constraints (rules without head) are not supported")]
    Constraint,
    #[error("duplicate rule id {0}")]
    DuplicateId(u32),
    #[error("rule ids must be given for every rule or for none")]
    MixedIds,
    #[error("ids may be omitted only when no atom heads two rules (atom {0})")]
    OmittedIdsNotHUnique(String),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("undeclared target {0}")]
    UndeclaredTarget(String),
    #[error("argument {0} carries two different claims")]
    ConflictingClaim(String),
    #[error("expected exactly one rule")]
    NotSingleRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(String),
    Colon,
    If,
    Comma,
    Dot,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Name(s) | Tok::Int(s) => write!(f, "{s:?}"),
            Tok::Colon => f.write_str("':'"),
            Tok::If => f.write_str("':-'"),
            Tok::Comma => f.write_str("','"),
            Tok::Dot => f.write_str("'.'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let tok = match c {
            '%' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    bump(&mut chars);
                }
                continue;
            }
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            ':' => {
                bump(&mut chars);
                if chars.peek() == Some(&'-') {
                    bump(&mut chars);
                    Tok::If
                } else {
                    Tok::Colon
                }
            }
            ',' | '.' | '(' | ')' => {
                bump(&mut chars);
                match c {
                    ',' => Tok::Comma,
                    '.' => Tok::Dot,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                }
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut word = String::new();
                while chars.peek().is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                    word.push(bump(&mut chars).expect("peeked"));
                }
                if word.bytes().all(|b| b.is_ascii_digit()) {
                    Tok::Int(word)
                } else {
                    Tok::Name(word)
                }
            }
            other => {
                return Err(ParseError {
                    line: tl,
                    column: tc,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        out.push(Token {
            tok,
            line: tl,
            column: tc,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        &self.tokens[(self.pos + offset).min(self.tokens.len() - 1)].tok
    }

    fn at_end(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, token: &Token, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: token.line,
            column: token.column,
            kind,
        }
    }

    fn expect(&mut self, want: Tok, expected: &'static str) -> Result<Token, ParseError> {
        let t = self.next();
        if t.tok == want {
            Ok(t)
        } else {
            Err(self.error_at(
                &t,
                ParseErrorKind::Expected {
                    expected,
                    found: t.tok.to_string(),
                },
            ))
        }
    }

    fn symbol(&mut self) -> Result<(Symbol, Token), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Name(n) if is_valid_name(n) => Ok((Symbol::new(n).expect("validated"), t)),
            Tok::Name(n) => Err(self.error_at(&t, ParseErrorKind::InvalidName(n.clone()))),
            other => Err(self.error_at(
                &t,
                ParseErrorKind::Expected {
                    expected: "a name",
                    found: other.to_string(),
                },
            )),
        }
    }

    /// `[<int> ":"] <atom> [":-" lit ("," lit)*] "."`
    fn rule(&mut self) -> Result<(Option<RuleId>, Rule, Token), ParseError> {
        let start = self.peek().clone();
        let id = match &start.tok {
            Tok::Int(digits) => {
                let digits = digits.clone();
                self.next();
                let id = digits
                    .parse::<u32>()
                    .ok()
                    .and_then(|v| RuleId::new(v).ok())
                    .ok_or_else(|| self.error_at(&start, ParseErrorKind::InvalidId(digits)))?;
                self.expect(Tok::Colon, "':'")?;
                Some(id)
            }
            _ => None,
        };
        if self.peek().tok == Tok::If {
            return Err(self.error_at(&self.peek().clone(), ParseErrorKind::Constraint));
        }
        let (head, _) = self.symbol()?;
        let mut pos = BTreeSet::new();
        let mut neg = BTreeSet::new();
        if self.peek().tok == Tok::If {
            self.next();
            loop {
                let negated =
                    matches!(&self.peek().tok, Tok::Name(n) if n == "not") && matches!(self.peek_at(1), Tok::Name(_));
                if negated {
                    self.next();
                    neg.insert(self.symbol()?.0);
                } else {
                    pos.insert(self.symbol()?.0);
                }
                if self.peek().tok == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::Dot, "'.'")?;
        let placeholder = RuleId::new(1).expect("nonzero");
        Ok((id, Rule::new(id.unwrap_or(placeholder), head, pos, neg), start))
    }

    /// `name "(" sym ("," sym)* ")" "."`
    fn fact(&mut self) -> Result<(String, Vec<Symbol>, Token), ParseError> {
        let start = self.next();
        let name = match &start.tok {
            Tok::Name(n) => n.clone(),
            other => {
                return Err(self.error_at(
                    &start,
                    ParseErrorKind::Expected {
                        expected: "a predicate",
                        found: other.to_string(),
                    },
                ))
            }
        };
        self.expect(Tok::LParen, "'('")?;
        let mut args = vec![self.symbol()?.0];
        while self.peek().tok == Tok::Comma {
            self.next();
            args.push(self.symbol()?.0);
        }
        self.expect(Tok::RParen, "')'")?;
        self.expect(Tok::Dot, "'.'")?;
        Ok((name, args, start))
    }
}

/// Parses a program. Ids are either given on every rule or omitted on
/// every rule; in the latter case the program must be h-unique and rules
/// are numbered by the rank of their head.
pub fn parse_lp(text: &str) -> Result<Program, ParseError> {
    let mut parser = Parser::new(text)?;
    let mut rules = Vec::new();
    while !parser.at_end() {
        rules.push(parser.rule()?);
    }
    let with_ids = rules.iter().filter(|(id, _, _)| id.is_some()).count();
    if with_ids == 0 {
        let mut heads: BTreeMap<Symbol, ()> = BTreeMap::new();
        for (_, rule, tok) in &rules {
            if heads.insert(rule.head.clone(), ()).is_some() {
                return Err(parser.error_at(tok, ParseErrorKind::OmittedIdsNotHUnique(rule.head.to_string())));
            }
        }
        return Ok(Program::head_ranked(rules.into_iter().map(|(_, r, _)| r)).expect("h-unique"));
    }
    let mut program = Program::default();
    for (id, rule, tok) in rules {
        if id.is_none() {
            return Err(parser.error_at(&tok, ParseErrorKind::MixedIds));
        }
        if let Err(Error::DuplicateRuleId(id)) = program.insert(rule) {
            return Err(parser.error_at(&tok, ParseErrorKind::DuplicateId(id.get())));
        }
    }
    Ok(program)
}

/// Parses a single rule; a missing id defaults to 1.
pub fn parse_rule(text: &str) -> Result<Rule, ParseError> {
    let mut parser = Parser::new(text)?;
    let (_, rule, tok) = parser.rule()?;
    if !parser.at_end() {
        return Err(parser.error_at(&tok, ParseErrorKind::NotSingleRule));
    }
    Ok(rule)
}

fn arity_error(parser: &Parser, tok: &Token, name: &str) -> ParseError {
    parser.error_at(tok, ParseErrorKind::UnknownPredicate(name.to_string()))
}

/// Parses `arg(a).` and `att(a,b).` statements. Targets must be declared
/// somewhere in the text; undeclared sources give ungrounded attacks.
pub fn parse_af(text: &str) -> Result<ArgFramework, ParseError> {
    let mut parser = Parser::new(text)?;
    let mut args = BTreeSet::new();
    let mut attacks = Vec::new();
    let mut first = None;
    while !parser.at_end() {
        let (name, mut params, tok) = parser.fact()?;
        first.get_or_insert_with(|| tok.clone());
        match (name.as_str(), params.len()) {
            ("arg", 1) => {
                args.insert(params.remove(0));
            }
            ("att", 2) => {
                let target = params.remove(1);
                attacks.push((params.remove(0), target, tok));
            }
            _ => return Err(arity_error(&parser, &tok, &name)),
        }
    }
    for (_, target, tok) in &attacks {
        if !args.contains(target) {
            return Err(parser.error_at(tok, ParseErrorKind::UndeclaredTarget(target.to_string())));
        }
    }
    ArgFramework::new(args, attacks.into_iter().map(|(s, t, _)| (s, t))).map_err(|_| {
        let tok = first.unwrap_or_else(|| parser.peek().clone());
        parser.error_at(
            &tok,
            ParseErrorKind::Expected {
                expected: "at least one arg(..) statement",
                found: "none".to_string(),
            },
        )
    })
}

/// Parses `carg(x,c).` and `catt(c,x).` statements.
pub fn parse_caf(text: &str) -> Result<ClaimFramework, ParseError> {
    let mut parser = Parser::new(text)?;
    let mut gamma: BTreeMap<Symbol, Symbol> = BTreeMap::new();
    let mut claim_attacks = Vec::new();
    while !parser.at_end() {
        let (name, mut params, tok) = parser.fact()?;
        match (name.as_str(), params.len()) {
            ("carg", 2) => {
                let claim = params.remove(1);
                let arg = params.remove(0);
                if gamma.get(&arg).is_some_and(|c| *c != claim) {
                    return Err(parser.error_at(&tok, ParseErrorKind::ConflictingClaim(arg.to_string())));
                }
                gamma.insert(arg, claim);
            }
            ("catt", 2) => {
                let target = params.remove(1);
                claim_attacks.push((params.remove(0), target, tok));
            }
            _ => return Err(arity_error(&parser, &tok, &name)),
        }
    }
    for (_, target, tok) in &claim_attacks {
        if !gamma.contains_key(target) {
            return Err(parser.error_at(tok, ParseErrorKind::UndeclaredTarget(target.to_string())));
        }
    }
    Ok(ClaimFramework::new(gamma, claim_attacks.into_iter().map(|(c, t, _)| (c, t))).expect("checked above"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Lp,
    Af,
    Caf,
}

impl Format {
    /// Guessed from the first statement: `arg`/`att` facts mean a framework,
    /// `carg`/`catt` a claim-augmented one, anything else a program.
    pub fn detect(text: &str) -> Format {
        let Ok(tokens) = tokenize(text) else {
            return Format::Lp;
        };
        match (&tokens[0].tok, tokens.get(1).map(|t| &t.tok)) {
            (Tok::Name(n), Some(Tok::LParen)) if n == "carg" || n == "catt" => Format::Caf,
            (Tok::Name(_), Some(Tok::LParen)) => Format::Af,
            _ => Format::Lp,
        }
    }
}

/// A parsed input of any of the three kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Document {
    Program(Program),
    Framework(ArgFramework),
    Claims(ClaimFramework),
}

impl Document {
    pub fn format(&self) -> Format {
        match self {
            Document::Program(_) => Format::Lp,
            Document::Framework(_) => Format::Af,
            Document::Claims(_) => Format::Caf,
        }
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Document::Program(p) => p.fmt(f),
            Document::Framework(af) => af.fmt(f),
            Document::Claims(cf) => cf.fmt(f),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Document, ParseError> {
    Ok(match format {
        Format::Lp => Document::Program(parse_lp(text)?),
        Format::Af => Document::Framework(parse_af(text)?),
        Format::Caf => Document::Claims(parse_caf(text)?),
    })
}

pub fn parse_any(text: &str) -> Result<Document, ParseError> {
    parse(text, Format::detect(text))
}
