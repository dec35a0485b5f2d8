//! Recursive-descent parser for the concrete grammar.
//!
//! ```text
//! formula    ::= iff
//! iff        ::= implies ("<->" implies)*
//! implies    ::= or ("->" implies)?
//! or         ::= and ("|" and)*
//! and        ::= unary ("&" unary)*
//! unary      ::= "~" unary | head var "." formula | "(" formula ")" | atom
//! head       ::= "forall" | "exists" | "Q[" tvl tvl tvl "]"
//!              | "exactly(" int ")" | "atleast(" int ")" | "atmost(" int ")"
//!              | "table(" entries ";" tvl tvl tvl ")"
//! atom       ::= pred ["(" term ("," term)* ")"] | term "=" term
//! ```
//!
//! Unicode aliases: `¬ ∧ ∨ → ↔ ∀ ∃`. A quantifier body extends as far
//! right as possible.

use std::fmt;

use thiserror::Error;

use super::{is_identifier, Formula, Signature, SymbolKind, Term};
use crate::kernel::{MultisetQuantifier, QuantifierFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    Lex(char),
    #[error("bad quantifier literal `{0}`")]
    BadLiteral(String),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{name}` takes {expected} argument(s), given {found}")]
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("`{name}` is a {kind} and cannot be used here")]
    WrongKind { name: String, kind: SymbolKind },
    #[error("bound variable `{0}` clashes with a signature symbol")]
    NameClash(String),
    #[error("variable `{0}` is not bound by any quantifier")]
    Unbound(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Forall,
    Exists,
    QLit(QuantifierFunction),
    MLit(MultisetQuantifier),
    Dot,
    Comma,
    LParen,
    RParen,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Eq,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Forall => f.write_str("`forall`"),
            Token::Exists => f.write_str("`exists`"),
            Token::QLit(q) => write!(f, "`{q}`"),
            Token::MLit(m) => write!(f, "`{m}`"),
            Token::Dot => f.write_str("`.`"),
            Token::Comma => f.write_str("`,`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Not => f.write_str("`~`"),
            Token::And => f.write_str("`&`"),
            Token::Or => f.write_str("`|`"),
            Token::Implies => f.write_str("`->`"),
            Token::Iff => f.write_str("`<->`"),
            Token::Eq => f.write_str("`=`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |column: usize, kind| ParseError { column, kind };
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '.' => Some(Token::Dot),
            ',' => Some(Token::Comma),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '~' | '¬' => Some(Token::Not),
            '&' | '∧' => Some(Token::And),
            '|' | '∨' => Some(Token::Or),
            '→' => Some(Token::Implies),
            '↔' => Some(Token::Iff),
            '=' => Some(Token::Eq),
            '∀' => Some(Token::Forall),
            '∃' => Some(Token::Exists),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push((tok, col));
            i += 1;
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 3)].iter().collect();
        if rest.starts_with("<->") {
            out.push((Token::Iff, col));
            i += 3;
            continue;
        }
        if rest.starts_with("->") {
            out.push((Token::Implies, col));
            i += 2;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let next = chars.get(i).copied();
            match (word.as_str(), next) {
                ("forall", _) => out.push((Token::Forall, col)),
                ("exists", _) => out.push((Token::Exists, col)),
                ("Q", Some('[')) => {
                    let close = chars[i..]
                        .iter()
                        .position(|&c| c == ']')
                        .map(|p| i + p)
                        .ok_or_else(|| err(col, ParseErrorKind::BadLiteral(chars[start..].iter().collect())))?;
                    let lit: String = chars[start..=close].iter().collect();
                    let q = lit
                        .parse::<QuantifierFunction>()
                        .map_err(|_| err(col, ParseErrorKind::BadLiteral(lit.clone())))?;
                    out.push((Token::QLit(q), col));
                    i = close + 1;
                }
                ("exactly" | "atleast" | "atmost" | "table", Some('(')) => {
                    let close = chars[i..]
                        .iter()
                        .position(|&c| c == ')')
                        .map(|p| i + p)
                        .ok_or_else(|| err(col, ParseErrorKind::BadLiteral(chars[start..].iter().collect())))?;
                    let lit: String = chars[start..=close].iter().collect();
                    let m = lit
                        .parse::<MultisetQuantifier>()
                        .map_err(|_| err(col, ParseErrorKind::BadLiteral(lit.clone())))?;
                    out.push((Token::MLit(m), col));
                    i = close + 1;
                }
                (w, _) if super::RESERVED.contains(&w) => {
                    return Err(err(col, ParseErrorKind::BadLiteral(word)));
                }
                _ => out.push((Token::Ident(word), col)),
            }
            continue;
        }
        return Err(err(col, ParseErrorKind::Lex(c)));
    }
    out.push((Token::End, chars.len() + 1));
    Ok(out)
}

enum Mode<'s> {
    /// Symbols come from a fixed signature; undeclared term names are variables.
    Declared(&'s Signature),
    /// The signature grows as symbols are met; unbound term names are constants.
    Inferring(&'s mut Signature),
}

struct Parser<'s> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    mode: Mode<'s>,
    scope: Vec<String>,
    binders: Vec<(String, usize)>,
    free: Vec<(String, usize)>,
}

type PResult<T> = Result<T, ParseError>;

impl<'s> Parser<'s> {
    fn new(text: &str, mode: Mode<'s>) -> PResult<Self> {
        Ok(Parser {
            tokens: lex(text)?,
            pos: 0,
            mode,
            scope: Vec::new(),
            binders: Vec::new(),
            free: Vec::new(),
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn column(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> (Token, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, kind: ParseErrorKind) -> PResult<T> {
        Err(ParseError {
            column: self.column(),
            kind,
        })
    }

    fn unexpected<T>(&self, expected: &str) -> PResult<T> {
        self.error(ParseErrorKind::Unexpected {
            expected: expected.to_string(),
            found: self.peek().to_string(),
        })
    }

    fn expect(&mut self, tok: Token, expected: &str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(expected)
        }
    }

    fn kind(&self, name: &str) -> Option<SymbolKind> {
        match &self.mode {
            Mode::Declared(sig) => sig.kind(name),
            Mode::Inferring(sig) => sig.kind(name),
        }
    }

    fn finish(&mut self) -> PResult<()> {
        if *self.peek() != Token::End {
            return self.unexpected("end of input");
        }
        if let Mode::Inferring(sig) = &self.mode {
            if let Some((name, col)) = self
                .binders
                .iter()
                .find(|(n, _)| sig.kind(n).is_some())
            {
                return Err(ParseError {
                    column: *col,
                    kind: ParseErrorKind::NameClash(name.clone()),
                });
            }
        }
        Ok(())
    }

    fn formula(&mut self) -> PResult<Formula> {
        let mut lhs = self.implies()?;
        while *self.peek() == Token::Iff {
            self.bump();
            let rhs = self.implies()?;
            lhs = lhs.iff(rhs);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> PResult<Formula> {
        let lhs = self.or()?;
        if *self.peek() == Token::Implies {
            self.bump();
            let rhs = self.implies()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> PResult<Formula> {
        let mut lhs = self.and()?;
        while *self.peek() == Token::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> PResult<Formula> {
        let mut lhs = self.unary()?;
        while *self.peek() == Token::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek().clone() {
            Token::Not => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Token::Forall => {
                self.bump();
                self.quantified(|var, body| Formula::forall(&var, body))
            }
            Token::Exists => {
                self.bump();
                self.quantified(|var, body| Formula::exists(&var, body))
            }
            Token::QLit(q) => {
                self.bump();
                self.quantified(|var, body| Formula::quant(q, &var, body))
            }
            Token::MLit(m) => {
                self.bump();
                self.quantified(|var, body| Formula::count(m, &var, body))
            }
            Token::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(f)
            }
            Token::Ident(_) => self.atom(),
            _ => self.unexpected("a formula"),
        }
    }

    fn quantified(&mut self, build: impl FnOnce(String, Formula) -> Formula) -> PResult<Formula> {
        let col = self.column();
        let var = match self.peek() {
            Token::Ident(v) => v.clone(),
            _ => return self.unexpected("a variable"),
        };
        self.bump();
        if let (Mode::Declared(_), Some(_)) = (&self.mode, self.kind(&var)) {
            return Err(ParseError {
                column: col,
                kind: ParseErrorKind::NameClash(var),
            });
        }
        self.expect(Token::Dot, "`.`")?;
        self.binders.push((var.clone(), col));
        self.scope.push(var.clone());
        let body = self.formula();
        self.scope.pop();
        Ok(build(var, body?))
    }

    fn arguments(&mut self) -> PResult<Vec<Term>> {
        let mut args = Vec::new();
        if *self.peek() != Token::LParen {
            return Ok(args);
        }
        self.bump();
        if *self.peek() == Token::RParen {
            self.bump();
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            match self.peek() {
                Token::Comma => {
                    self.bump();
                }
                Token::RParen => {
                    self.bump();
                    return Ok(args);
                }
                _ => return self.unexpected("`,` or `)`"),
            }
        }
    }

    fn atom(&mut self) -> PResult<Formula> {
        let col = self.column();
        let name = match self.peek() {
            Token::Ident(n) => n.clone(),
            _ => return self.unexpected("an identifier"),
        };
        let is_predicate = match self.kind(&name) {
            Some(SymbolKind::Predicate(_)) => true,
            Some(_) => false,
            // In inference mode an unknown name opens an atom unless an
            // `=` follows its (optional) argument list.
            None => matches!(self.mode, Mode::Inferring(_)) && !self.term_follows_as_equation(),
        };
        if !is_predicate {
            if let (Mode::Declared(_), None) = (&self.mode, self.kind(&name)) {
                let next = &self.tokens[self.pos + 1].0;
                if *next != Token::Eq && *next != Token::LParen && !self.scope.contains(&name) {
                    return Err(ParseError {
                        column: col,
                        kind: ParseErrorKind::UnknownSymbol(name),
                    });
                }
            }
            let lhs = self.term()?;
            self.expect(Token::Eq, "`=`")?;
            let rhs = self.term()?;
            return Ok(Formula::Equals(lhs, rhs));
        }
        self.bump();
        let args_col = self.column();
        let args = self.arguments()?;
        self.resolve(&name, SymbolKind::Predicate(args.len()), col, args_col)?;
        Ok(Formula::Atom(name, args))
    }

    /// Lookahead: skips an identifier and a balanced argument list and
    /// reports whether `=` comes next.
    fn term_follows_as_equation(&self) -> bool {
        let mut i = self.pos + 1;
        if self.tokens[i].0 == Token::LParen {
            let mut depth = 0usize;
            while i < self.tokens.len() {
                match self.tokens[i].0 {
                    Token::LParen => depth += 1,
                    Token::RParen => {
                        depth -= 1;
                        if depth == 0 {
                            i += 1;
                            break;
                        }
                    }
                    Token::End => return false,
                    _ => {}
                }
                i += 1;
            }
        }
        matches!(self.tokens.get(i), Some((Token::Eq, _)))
    }

    /// Checks or records `name` as a symbol of the wanted kind.
    fn resolve(&mut self, name: &str, want: SymbolKind, col: usize, args_col: usize) -> PResult<()> {
        let err = |column, kind| Err(ParseError { column, kind });
        match (self.kind(name), want) {
            (Some(k), _) if k == want => Ok(()),
            (Some(SymbolKind::Predicate(n)), SymbolKind::Predicate(m))
            | (Some(SymbolKind::Function(n)), SymbolKind::Function(m)) => err(
                args_col,
                ParseErrorKind::Arity {
                    name: name.to_string(),
                    expected: n,
                    found: m,
                },
            ),
            (Some(kind), _) => err(
                col,
                ParseErrorKind::WrongKind {
                    name: name.to_string(),
                    kind,
                },
            ),
            (None, _) => match &mut self.mode {
                Mode::Declared(_) => err(col, ParseErrorKind::UnknownSymbol(name.to_string())),
                Mode::Inferring(sig) => {
                    if !is_identifier(name) {
                        return err(col, ParseErrorKind::UnknownSymbol(name.to_string()));
                    }
                    sig.declare(name, want).expect("fresh valid name");
                    Ok(())
                }
            },
        }
    }

    fn term(&mut self) -> PResult<Term> {
        let col = self.column();
        let name = match self.peek() {
            Token::Ident(n) => n.clone(),
            _ => return self.unexpected("a term"),
        };
        self.bump();
        if *self.peek() == Token::LParen {
            let args_col = self.column();
            let args = self.arguments()?;
            if args.is_empty() {
                return Err(ParseError {
                    column: args_col,
                    kind: ParseErrorKind::Unexpected {
                        expected: "at least one argument".into(),
                        found: "`)`".into(),
                    },
                });
            }
            self.resolve(&name, SymbolKind::Function(args.len()), col, args_col)?;
            return Ok(Term::Apply(name, args));
        }
        if self.scope.contains(&name) {
            return Ok(Term::Var(name));
        }
        match (self.kind(&name), &self.mode) {
            (Some(SymbolKind::Constant), _) => Ok(Term::Const(name)),
            (Some(SymbolKind::Function(n)), _) => Err(ParseError {
                column: col,
                kind: ParseErrorKind::Arity {
                    name,
                    expected: n,
                    found: 0,
                },
            }),
            (Some(kind), _) => Err(ParseError {
                column: col,
                kind: ParseErrorKind::WrongKind { name, kind },
            }),
            (None, Mode::Declared(_)) => {
                self.free.push((name.clone(), col));
                Ok(Term::Var(name))
            }
            (None, Mode::Inferring(_)) => {
                self.resolve(&name, SymbolKind::Constant, col, col)?;
                Ok(Term::Const(name))
            }
        }
    }
}

/// Parses a formula against a fixed signature. Names in term position that
/// the signature does not declare are variables, free or bound.
pub fn parse(text: &str, sig: &Signature) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text, Mode::Declared(sig))?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Like [`parse`], but rejects free variables.
pub fn parse_sentence(text: &str, sig: &Signature) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text, Mode::Declared(sig))?;
    let f = p.formula()?;
    p.finish()?;
    if let Some((name, column)) = p.free.into_iter().next() {
        return Err(ParseError {
            column,
            kind: ParseErrorKind::Unbound(name),
        });
    }
    Ok(f)
}

/// Parses a sentence and adds the symbols it uses to `sig`.
///
/// Unbound names in term position become constants, applied names become
/// function symbols and names in formula position become predicates.
pub fn parse_inferring(text: &str, sig: &mut Signature) -> Result<Formula, ParseError> {
    let mut scratch = sig.clone();
    let f = {
        let mut p = Parser::new(text, Mode::Inferring(&mut scratch))?;
        let f = p.formula()?;
        p.finish()?;
        f
    };
    *sig = scratch;
    Ok(f)
}

pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, ParseError> {
    let mut p = Parser::new(text, Mode::Declared(sig))?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::TruthValue::{False as F, True as T};

    fn sig() -> Signature {
        Signature::parse("const c\nconst d\nfun f/1\nfun g/2\npred P/1\npred Q/1\npred R/2\npred A/0\npred B/0")
            .unwrap()
    }

    fn p(text: &str) -> Formula {
        parse(text, &sig()).unwrap_or_else(|e| panic!("{text}: {e}"))
    }

    fn px(v: &str) -> Formula {
        Formula::atom("P", vec![Term::var(v)])
    }

    #[test]
    fn quantifier_examples() {
        assert_eq!(p("forall x. P(x)"), Formula::quant(QuantifierFunction::new(T, F, F), "x", px("x")));
        assert_eq!(p("Q[TTF] v. P(v)"), Formula::quant(QuantifierFunction::new(T, T, F), "v", px("v")));
        assert_eq!(
            p("exactly(1) v. P(v)"),
            Formula::count(MultisetQuantifier::Exactly(1), "v", px("v"))
        );
        assert_eq!(p("∀x. P(x)"), p("forall x. P(x)"));
        assert_eq!(p("∃x. P(x)"), p("Q[TFT] x. P(x)"));
    }

    #[test]
    fn sugar_lowers_to_quantifier_functions() {
        assert_eq!(p("forall v. P(v) & A"), p("Q[TFF] v. P(v) & A"));
        assert_eq!(p("exists v. ~P(v)"), p("Q[TFT] v. ~P(v)"));
    }

    #[test]
    fn precedence_and_associativity() {
        let a = || Formula::letter("A");
        let b = || Formula::letter("B");
        assert_eq!(p("~A & B | A -> B <-> A"), a().not().and(b()).or(a()).implies(b()).iff(a()));
        assert_eq!(p("A -> B -> A"), a().implies(b().implies(a())));
        assert_eq!(p("A | B | A"), a().or(b()).or(a()));
        assert_eq!(p("A ∧ ¬B → A ↔ B"), a().and(b().not()).implies(a()).iff(b()));
        // quantifier bodies extend to the right
        assert_eq!(p("A & forall x. P(x) | B"), a().and(Formula::forall("x", px("x").or(b()))));
        assert_eq!(p("(forall x. P(x)) | B"), Formula::forall("x", px("x")).or(b()));
    }

    #[test]
    fn terms_and_equality() {
        assert_eq!(p("c = d"), Formula::equals(Term::constant("c"), Term::constant("d")));
        assert_eq!(
            p("g(f(x), c) = x"),
            Formula::equals(
                Term::apply("g", vec![Term::apply("f", vec![Term::var("x")]), Term::constant("c")]),
                Term::var("x")
            )
        );
        assert_eq!(p("~x = y"), Formula::equals(Term::var("x"), Term::var("y")).not());
        assert_eq!(p("R(c, f(c))"), Formula::atom("R", vec![Term::constant("c"), Term::apply("f", vec![Term::constant("c")])]));
        assert_eq!(p("A()"), Formula::letter("A"));
        assert_eq!(parse_term("g(x, d)", &sig()).unwrap(), Term::apply("g", vec![Term::var("x"), Term::constant("d")]));
    }

    #[test]
    fn error_positions() {
        let e = parse("P(x) $ A", &sig()).unwrap_err();
        assert_eq!((e.column, e.kind), (6, ParseErrorKind::Lex('$')));
        let e = parse("A & R(c)", &sig()).unwrap_err();
        assert_eq!(e.column, 6);
        assert!(matches!(e.kind, ParseErrorKind::Arity { expected: 2, found: 1, .. }));
        let e = parse("Z(c)", &sig()).unwrap_err();
        assert_eq!((e.column, e.kind), (1, ParseErrorKind::UnknownSymbol("Z".into())));
        let e = parse("forall c. P(c)", &sig()).unwrap_err();
        assert_eq!((e.column, e.kind), (8, ParseErrorKind::NameClash("c".into())));
        let e = parse("P(f)", &sig()).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Arity { expected: 1, found: 0, .. }));
        let e = parse("P(A)", &sig()).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::WrongKind { .. }));
        let e = parse("Q[TXF] x. P(x)", &sig()).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::BadLiteral(_)));
        let e = parse("forall x P(x)", &sig()).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Unexpected { .. }));
        let e = parse("(A & B", &sig()).unwrap_err();
        assert_eq!(e.column, 7);
        let e = parse("A B", &sig()).unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse("exactly x. P(x)", &sig()).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::BadLiteral(_)));
    }

    #[test]
    fn sentences_reject_free_variables() {
        assert!(parse_sentence("forall x. P(x)", &sig()).is_ok());
        let e = parse_sentence("forall x. R(x, y)", &sig()).unwrap_err();
        assert_eq!((e.column, e.kind), (16, ParseErrorKind::Unbound("y".into())));
        let e = parse("x", &sig()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownSymbol("x".into()));
    }

    #[test]
    fn inference_builds_a_signature() {
        let mut s = Signature::new();
        let f = parse_inferring("forall x. R(x, f(c)) & A | x0 = c", &mut s);
        assert!(f.is_ok());
        assert_eq!(s.kind("R"), Some(SymbolKind::Predicate(2)));
        assert_eq!(s.kind("f"), Some(SymbolKind::Function(1)));
        assert_eq!(s.kind("c"), Some(SymbolKind::Constant));
        assert_eq!(s.kind("A"), Some(SymbolKind::Predicate(0)));
        assert_eq!(s.kind("x0"), Some(SymbolKind::Constant));
        assert_eq!(s.kind("x"), None);
        // existing symbols must be used consistently
        let e = parse_inferring("R(c)", &mut s).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Arity { .. }));
        let e = parse_inferring("(forall y. P(y)) & P(y)", &mut Signature::new()).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NameClash("y".into()));
        // a failed parse leaves the signature untouched
        let before = s.clone();
        assert!(parse_inferring("NEW(c) & R(c)", &mut s).is_err());
        assert_eq!(s, before);
    }
}
