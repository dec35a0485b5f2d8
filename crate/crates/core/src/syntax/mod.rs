//! Abstract syntax of the first-order language: signatures, terms and
//! formulas with generalized quantifiers and equality.
//!
//! The universal and existential quantifiers have no constructors of their
//! own. They are [`Formula::Quant`] nodes carrying
//! [`QuantifierFunction::FORALL`] and [`QuantifierFunction::EXISTS`].

mod generate;
mod parser;
mod print;

use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::kernel::{MultisetQuantifier, QuantifierFunction};

pub use generate::FormulaGenerator;
pub use parser::{
    parse, parse_inferring, parse_sentence, parse_term, ParseError, ParseErrorKind,
};
pub use print::Unicode;

/// Words the grammar claims for itself; they cannot name symbols.
pub const RESERVED: &[&str] = &["forall", "exists", "exactly", "atleast", "atmost", "table"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Constant,
    Function(usize),
    Predicate(usize),
}

impl fmt::Display for SymbolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolKind::Constant => f.write_str("constant"),
            SymbolKind::Function(n) => write!(f, "function of arity {n}"),
            SymbolKind::Predicate(n) => write!(f, "predicate of arity {n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("symbol `{0}` declared twice")]
    Duplicate(String),
    #[error("`{0}` is not a valid symbol name")]
    BadName(String),
    #[error("function symbol `{0}` must have arity at least 1")]
    NullaryFunction(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED.contains(&name)
}

/// Constants, function symbols and predicate symbols, in declaration order.
/// Names are unique across the three kinds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    symbols: IndexMap<String, SymbolKind>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(&mut self, name: &str, kind: SymbolKind) -> Result<(), SignatureError> {
        if !is_identifier(name) {
            return Err(SignatureError::BadName(name.to_string()));
        }
        if kind == SymbolKind::Function(0) {
            return Err(SignatureError::NullaryFunction(name.to_string()));
        }
        if self.symbols.contains_key(name) {
            return Err(SignatureError::Duplicate(name.to_string()));
        }
        self.symbols.insert(name.to_string(), kind);
        Ok(())
    }

    pub fn with_constant(mut self, name: &str) -> Result<Self, SignatureError> {
        self.declare(name, SymbolKind::Constant)?;
        Ok(self)
    }

    pub fn with_function(mut self, name: &str, arity: usize) -> Result<Self, SignatureError> {
        self.declare(name, SymbolKind::Function(arity))?;
        Ok(self)
    }

    pub fn with_predicate(mut self, name: &str, arity: usize) -> Result<Self, SignatureError> {
        self.declare(name, SymbolKind::Predicate(arity))?;
        Ok(self)
    }

    pub fn kind(&self, name: &str) -> Option<SymbolKind> {
        self.symbols.get(name).copied()
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&str, SymbolKind)> {
        self.symbols.iter().map(|(n, k)| (n.as_str(), *k))
    }

    pub fn constants(&self) -> impl Iterator<Item = &str> {
        self.symbols()
            .filter(|(_, k)| *k == SymbolKind::Constant)
            .map(|(n, _)| n)
    }

    pub fn functions(&self) -> impl Iterator<Item = (&str, usize)> {
        self.symbols().filter_map(|(n, k)| match k {
            SymbolKind::Function(a) => Some((n, a)),
            _ => None,
        })
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, usize)> {
        self.symbols().filter_map(|(n, k)| match k {
            SymbolKind::Predicate(a) => Some((n, a)),
            _ => None,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Adds every symbol of `other`; shared names must agree on kind.
    pub fn merge(&mut self, other: &Signature) -> Result<(), SignatureError> {
        for (name, kind) in other.symbols() {
            match self.kind(name) {
                None => self.declare(name, kind)?,
                Some(k) if k == kind => {}
                Some(_) => return Err(SignatureError::Duplicate(name.to_string())),
            }
        }
        Ok(())
    }

    /// The single-unary-predicate signature `{S/1}` used for schematic
    /// quantifier definitions.
    pub fn schematic() -> Self {
        Signature::new()
            .with_predicate(SCHEMATIC_PREDICATE, 1)
            .expect("static signature")
    }

    /// Parses the line-oriented format: `const a`, `fun f/2`, `pred P/1`.
    /// `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, SignatureError> {
        let mut sig = Signature::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: &str| SignatureError::Syntax {
                line: line_no,
                message: message.to_string(),
            };
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap_or_default();
            let decl = words.next().ok_or_else(|| syntax("missing symbol"))?;
            if words.next().is_some() {
                return Err(syntax("trailing input"));
            }
            let with_arity = || -> Result<(&str, usize), SignatureError> {
                let (name, arity) = decl
                    .split_once('/')
                    .ok_or_else(|| syntax("expected name/arity"))?;
                let arity = arity.parse().map_err(|_| syntax("arity is not a number"))?;
                Ok((name, arity))
            };
            let (name, kind) = match keyword {
                "const" => (decl, SymbolKind::Constant),
                "fun" => {
                    let (n, a) = with_arity()?;
                    (n, SymbolKind::Function(a))
                }
                "pred" => {
                    let (n, a) = with_arity()?;
                    (n, SymbolKind::Predicate(a))
                }
                other => return Err(syntax(&format!("unknown declaration `{other}`"))),
            };
            sig.declare(name, kind).map_err(|e| SignatureError::Syntax {
                line: line_no,
                message: e.to_string(),
            })?;
        }
        Ok(sig)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, kind) in self.symbols() {
            match kind {
                SymbolKind::Constant => writeln!(f, "const {name}")?,
                SymbolKind::Function(a) => writeln!(f, "fun {name}/{a}")?,
                SymbolKind::Predicate(a) => writeln!(f, "pred {name}/{a}")?,
            }
        }
        Ok(())
    }
}

pub const SCHEMATIC_PREDICATE: &str = "S";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
    Apply(String, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn constant(name: &str) -> Term {
        Term::Const(name.to_string())
    }

    pub fn apply(name: &str, args: Vec<Term>) -> Term {
        Term::Apply(name.to_string(), args)
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Const(_) => {}
            Term::Apply(_, args) => args.iter().for_each(|a| a.collect_free(out)),
        }
    }

    fn collect_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(n) | Term::Const(n) => {
                out.insert(n.clone());
            }
            Term::Apply(f, args) => {
                out.insert(f.clone());
                args.iter().for_each(|a| a.collect_names(out));
            }
        }
    }

    pub fn substitute(&self, var: &str, replacement: &Term) -> Term {
        match self {
            Term::Var(v) if v == var => replacement.clone(),
            Term::Var(_) | Term::Const(_) => self.clone(),
            Term::Apply(f, args) => Term::Apply(
                f.clone(),
                args.iter().map(|a| a.substitute(var, replacement)).collect(),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String, Vec<Term>),
    Equals(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// A logical quantifier, given by its quantifier function.
    Quant {
        q: QuantifierFunction,
        var: String,
        body: Box<Formula>,
    },
    /// A cardinal quantifier, given by its count rule.
    Count {
        m: MultisetQuantifier,
        var: String,
        body: Box<Formula>,
    },
}

impl Formula {
    pub fn atom(pred: &str, args: Vec<Term>) -> Formula {
        Formula::Atom(pred.to_string(), args)
    }

    /// A nullary predicate, i.e. a propositional letter.
    pub fn letter(name: &str) -> Formula {
        Formula::Atom(name.to_string(), Vec::new())
    }

    pub fn equals(lhs: Term, rhs: Term) -> Formula {
        Formula::Equals(lhs, rhs)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, rhs: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(rhs))
    }

    pub fn implies(self, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(rhs))
    }

    pub fn iff(self, rhs: Formula) -> Formula {
        Formula::Iff(Box::new(self), Box::new(rhs))
    }

    pub fn quant(q: QuantifierFunction, var: &str, body: Formula) -> Formula {
        Formula::Quant {
            q,
            var: var.to_string(),
            body: Box::new(body),
        }
    }

    pub fn forall(var: &str, body: Formula) -> Formula {
        Formula::quant(QuantifierFunction::FORALL, var, body)
    }

    pub fn exists(var: &str, body: Formula) -> Formula {
        Formula::quant(QuantifierFunction::EXISTS, var, body)
    }

    pub fn count(m: MultisetQuantifier, var: &str, body: Formula) -> Formula {
        Formula::Count {
            m,
            var: var.to_string(),
            body: Box::new(body),
        }
    }

    pub fn free_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(_, args) => args.iter().for_each(|t| t.collect_free(out)),
            Formula::Equals(l, r) => {
                l.collect_free(out);
                r.collect_free(out);
            }
            Formula::Not(f) => f.collect_free(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.collect_free(out);
                r.collect_free(out);
            }
            Formula::Quant { var, body, .. } | Formula::Count { var, body, .. } => {
                let mut inner = BTreeSet::new();
                body.collect_free(&mut inner);
                inner.remove(var);
                out.extend(inner);
            }
        }
    }

    /// Every name occurring anywhere: variables (free or bound), constants,
    /// function and predicate symbols.
    pub fn names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(p, args) => {
                out.insert(p.clone());
                args.iter().for_each(|t| t.collect_names(out));
            }
            Formula::Equals(l, r) => {
                l.collect_names(out);
                r.collect_names(out);
            }
            Formula::Not(f) => f.collect_names(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.collect_names(out);
                r.collect_names(out);
            }
            Formula::Quant { var, body, .. } | Formula::Count { var, body, .. } => {
                out.insert(var.clone());
                body.collect_names(out);
            }
        }
    }

    /// Replaces the free occurrences of `var` by `replacement`.
    ///
    /// No renaming is done: the caller guarantees that no variable of
    /// `replacement` is bound at an occurrence of `var`.
    pub fn substitute(&self, var: &str, replacement: &Term) -> Formula {
        let bin = |l: &Formula, r: &Formula| {
            (
                Box::new(l.substitute(var, replacement)),
                Box::new(r.substitute(var, replacement)),
            )
        };
        match self {
            Formula::Atom(p, args) => Formula::Atom(
                p.clone(),
                args.iter().map(|t| t.substitute(var, replacement)).collect(),
            ),
            Formula::Equals(l, r) => {
                Formula::Equals(l.substitute(var, replacement), r.substitute(var, replacement))
            }
            Formula::Not(f) => Formula::Not(Box::new(f.substitute(var, replacement))),
            Formula::And(l, r) => {
                let (l, r) = bin(l, r);
                Formula::And(l, r)
            }
            Formula::Or(l, r) => {
                let (l, r) = bin(l, r);
                Formula::Or(l, r)
            }
            Formula::Implies(l, r) => {
                let (l, r) = bin(l, r);
                Formula::Implies(l, r)
            }
            Formula::Iff(l, r) => {
                let (l, r) = bin(l, r);
                Formula::Iff(l, r)
            }
            Formula::Quant { var: v, .. } | Formula::Count { var: v, .. } if v == var => self.clone(),
            Formula::Quant { q, var: v, body } => Formula::Quant {
                q: *q,
                var: v.clone(),
                body: Box::new(body.substitute(var, replacement)),
            },
            Formula::Count { m, var: v, body } => Formula::Count {
                m: m.clone(),
                var: v.clone(),
                body: Box::new(body.substitute(var, replacement)),
            },
        }
    }

    /// Checks every symbol against `sig`: known kind and matching arity.
    pub fn check_signature(&self, sig: &Signature) -> Result<(), SignatureMismatch> {
        fn term(t: &Term, sig: &Signature) -> Result<(), SignatureMismatch> {
            match t {
                Term::Var(_) => Ok(()),
                Term::Const(c) => match sig.kind(c) {
                    Some(SymbolKind::Constant) => Ok(()),
                    found => Err(SignatureMismatch::new(c, SymbolKind::Constant, found)),
                },
                Term::Apply(f, args) => {
                    let want = SymbolKind::Function(args.len());
                    match sig.kind(f) {
                        Some(k) if k == want => args.iter().try_for_each(|a| term(a, sig)),
                        found => Err(SignatureMismatch::new(f, want, found)),
                    }
                }
            }
        }
        match self {
            Formula::Atom(p, args) => {
                let want = SymbolKind::Predicate(args.len());
                match sig.kind(p) {
                    Some(k) if k == want => args.iter().try_for_each(|a| term(a, sig)),
                    found => Err(SignatureMismatch::new(p, want, found)),
                }
            }
            Formula::Equals(l, r) => {
                term(l, sig)?;
                term(r, sig)
            }
            Formula::Not(f) => f.check_signature(sig),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
                l.check_signature(sig)?;
                r.check_signature(sig)
            }
            Formula::Quant { body, .. } | Formula::Count { body, .. } => body.check_signature(sig),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{name}` is used as a {expected} but the signature has {}", found.map(|k| format!("a {k}")).unwrap_or_else(|| "no such symbol".into()))]
pub struct SignatureMismatch {
    pub name: String,
    pub expected: SymbolKind,
    pub found: Option<SymbolKind>,
}

impl SignatureMismatch {
    fn new(name: &str, expected: SymbolKind, found: Option<SymbolKind>) -> Self {
        SignatureMismatch {
            name: name.to_string(),
            expected,
            found,
        }
    }
}

pub fn free_variables(phi: &Formula) -> BTreeSet<String> {
    phi.free_variables()
}

/// First of `v0, v1, ...` not in `avoid`.
pub fn fresh_variable(avoid: &BTreeSet<String>) -> String {
    (0..)
        .map(|i| format!("v{i}"))
        .find(|name| !avoid.contains(name))
        .expect("unbounded supply of names")
}
