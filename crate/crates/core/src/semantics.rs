//! Finite interpretations and the evaluation of terms and formulas.
//!
//! Domain elements are the indices `0..n`. A quantified formula is evaluated
//! by letting the bound variable range over the whole domain and handing
//! the collected truth values to the quantifier: collapsed to a
//! [`TruthSet`] for a logical quantifier, counted as a [`CountPair`] for a
//! cardinal one.

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::kernel::{CountPair, KernelError, TruthSet, TruthValue};
use crate::syntax::{Formula, Signature, SymbolKind, Term};

pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("the domain must be non-empty")]
    EmptyDomain,
    #[error("`{name}`: element {element} is outside the domain 0..{size}")]
    OutOfRange {
        name: String,
        element: Element,
        size: usize,
    },
    #[error("`{name}`: expected {expected} entries, got {got}")]
    TableSize {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("`{name}`: tuple of length {got} for a symbol of arity {expected}")]
    TupleArity {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("`{0}` is interpreted twice")]
    Duplicate(String),
    #[error("`{0}` has no interpretation")]
    Missing(String),
    #[error("`{name}` is interpreted as a {found} but declared as a {declared}")]
    KindMismatch {
        name: String,
        declared: SymbolKind,
        found: SymbolKind,
    },
    #[error("`{0}` is not declared in the signature")]
    Undeclared(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` has no value")]
    Unbound(String),
    #[error("`{0}` is not interpreted as a {1}")]
    Uninterpreted(String, SymbolKind),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct FunctionTable {
    arity: usize,
    values: Vec<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Relation {
    arity: usize,
    members: Vec<bool>,
}

/// A finite non-empty domain with a denotation for every symbol.
///
/// Function graphs and relation extensions are stored row-major: the tuple
/// `(a_1, ..., a_k)` sits at index `a_1 n^(k-1) + ... + a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    size: usize,
    constants: IndexMap<String, Element>,
    functions: IndexMap<String, FunctionTable>,
    predicates: IndexMap<String, Relation>,
}

fn tuple_index(size: usize, tuple: &[Element]) -> usize {
    tuple.iter().fold(0, |acc, &a| acc * size + a)
}

/// `size^arity`, the number of argument tuples.
pub fn tuple_count(size: usize, arity: usize) -> usize {
    size.pow(arity as u32)
}

/// The tuple at a row-major index.
pub fn index_tuple(size: usize, arity: usize, mut index: usize) -> Vec<Element> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = index % size;
        index /= size;
    }
    out
}

impl Interpretation {
    pub fn new(size: usize) -> Result<Self, ModelError> {
        if size == 0 {
            return Err(ModelError::EmptyDomain);
        }
        Ok(Interpretation {
            size,
            constants: IndexMap::new(),
            functions: IndexMap::new(),
            predicates: IndexMap::new(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn domain(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    fn check_element(&self, name: &str, element: Element) -> Result<(), ModelError> {
        if element >= self.size {
            return Err(ModelError::OutOfRange {
                name: name.to_string(),
                element,
                size: self.size,
            });
        }
        Ok(())
    }

    fn check_fresh(&self, name: &str) -> Result<(), ModelError> {
        if self.constants.contains_key(name)
            || self.functions.contains_key(name)
            || self.predicates.contains_key(name)
        {
            return Err(ModelError::Duplicate(name.to_string()));
        }
        Ok(())
    }

    pub fn set_constant(&mut self, name: &str, element: Element) -> Result<(), ModelError> {
        self.check_fresh(name)?;
        self.check_element(name, element)?;
        self.constants.insert(name.to_string(), element);
        Ok(())
    }

    /// `values` is the graph in row-major argument order.
    pub fn set_function(&mut self, name: &str, arity: usize, values: Vec<Element>) -> Result<(), ModelError> {
        self.check_fresh(name)?;
        let expected = tuple_count(self.size, arity);
        if values.len() != expected {
            return Err(ModelError::TableSize {
                name: name.to_string(),
                expected,
                got: values.len(),
            });
        }
        for &v in &values {
            self.check_element(name, v)?;
        }
        self.functions
            .insert(name.to_string(), FunctionTable { arity, values });
        Ok(())
    }

    pub fn set_predicate<I>(&mut self, name: &str, arity: usize, tuples: I) -> Result<(), ModelError>
    where
        I: IntoIterator,
        I::Item: AsRef<[Element]>,
    {
        self.check_fresh(name)?;
        let mut members = vec![false; tuple_count(self.size, arity)];
        for t in tuples {
            let t = t.as_ref();
            if t.len() != arity {
                return Err(ModelError::TupleArity {
                    name: name.to_string(),
                    expected: arity,
                    got: t.len(),
                });
            }
            for &e in t {
                self.check_element(name, e)?;
            }
            members[tuple_index(self.size, t)] = true;
        }
        self.predicates
            .insert(name.to_string(), Relation { arity, members });
        Ok(())
    }

    /// Sets a predicate from its membership bits in row-major tuple order.
    pub fn set_predicate_bits(&mut self, name: &str, arity: usize, members: Vec<bool>) -> Result<(), ModelError> {
        self.check_fresh(name)?;
        let expected = tuple_count(self.size, arity);
        if members.len() != expected {
            return Err(ModelError::TableSize {
                name: name.to_string(),
                expected,
                got: members.len(),
            });
        }
        self.predicates
            .insert(name.to_string(), Relation { arity, members });
        Ok(())
    }

    pub fn constant(&self, name: &str) -> Option<Element> {
        self.constants.get(name).copied()
    }

    pub fn apply(&self, name: &str, args: &[Element]) -> Option<Element> {
        let table = self.functions.get(name)?;
        (table.arity == args.len()).then(|| table.values[tuple_index(self.size, args)])
    }

    pub fn holds(&self, name: &str, args: &[Element]) -> Option<bool> {
        let rel = self.predicates.get(name)?;
        (rel.arity == args.len()).then(|| rel.members[tuple_index(self.size, args)])
    }

    /// The tuples in a predicate's extension, in row-major order.
    pub fn extension(&self, name: &str) -> Option<Vec<Vec<Element>>> {
        let rel = self.predicates.get(name)?;
        Some(
            rel.members
                .iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(i, _)| index_tuple(self.size, rel.arity, i))
                .collect(),
        )
    }

    /// Every symbol of `sig` must be interpreted with the declared kind and arity.
    pub fn check_signature(&self, sig: &Signature) -> Result<(), ModelError> {
        for (name, kind) in sig.symbols() {
            let found = if self.constants.contains_key(name) {
                SymbolKind::Constant
            } else if let Some(t) = self.functions.get(name) {
                SymbolKind::Function(t.arity)
            } else if let Some(r) = self.predicates.get(name) {
                SymbolKind::Predicate(r.arity)
            } else {
                return Err(ModelError::Missing(name.to_string()));
            };
            if found != kind {
                return Err(ModelError::KindMismatch {
                    name: name.to_string(),
                    declared: kind,
                    found,
                });
            }
        }
        Ok(())
    }

    pub fn eval_term(&self, t: &Term, val: &Valuation) -> Result<Element, EvalError> {
        self.term(t, &Env::new(val))
    }

    pub fn eval_formula(&self, phi: &Formula, val: &Valuation) -> Result<TruthValue, EvalError> {
        self.formula(phi, &mut Env::new(val))
    }

    /// The truth values `phi` takes as `var` ranges over the domain.
    pub fn truth_set<'f>(&self, phi: &'f Formula, var: &'f str, val: &Valuation) -> Result<TruthSet, EvalError> {
        self.range_truth_set(phi, var, &mut Env::new(val))
    }

    /// How many domain elements, as values of `var`, make `phi` true and false.
    pub fn truth_count<'f>(&self, phi: &'f Formula, var: &'f str, val: &Valuation) -> Result<CountPair, EvalError> {
        self.range_count(phi, var, &mut Env::new(val))
    }

    fn term(&self, t: &Term, env: &Env<'_, '_>) -> Result<Element, EvalError> {
        match t {
            Term::Var(v) => env.get(v).ok_or_else(|| EvalError::Unbound(v.clone())),
            Term::Const(c) => self
                .constant(c)
                .ok_or_else(|| EvalError::Uninterpreted(c.clone(), SymbolKind::Constant)),
            Term::Apply(f, args) => {
                let args = args
                    .iter()
                    .map(|a| self.term(a, env))
                    .collect::<Result<Vec<_>, _>>()?;
                self.apply(f, &args)
                    .ok_or_else(|| EvalError::Uninterpreted(f.clone(), SymbolKind::Function(args.len())))
            }
        }
    }

    fn formula<'f>(&self, phi: &'f Formula, env: &mut Env<'_, 'f>) -> Result<TruthValue, EvalError> {
        Ok(match phi {
            Formula::Atom(p, args) => {
                let args = args
                    .iter()
                    .map(|a| self.term(a, env))
                    .collect::<Result<Vec<_>, _>>()?;
                self.holds(p, &args)
                    .ok_or_else(|| EvalError::Uninterpreted(p.clone(), SymbolKind::Predicate(args.len())))?
                    .into()
            }
            Formula::Equals(l, r) => (self.term(l, env)? == self.term(r, env)?).into(),
            Formula::Not(f) => !self.formula(f, env)?,
            Formula::And(l, r) => self.formula(l, env)? & self.formula(r, env)?,
            Formula::Or(l, r) => self.formula(l, env)? | self.formula(r, env)?,
            Formula::Implies(l, r) => !self.formula(l, env)? | self.formula(r, env)?,
            Formula::Iff(l, r) => (self.formula(l, env)? == self.formula(r, env)?).into(),
            Formula::Quant { q, var, body } => q.eval(self.range_truth_set(body, var, env)?),
            Formula::Count { m, var, body } => m.eval(self.range_count(body, var, env)?)?,
        })
    }

    fn range_truth_set<'f>(&self, phi: &'f Formula, var: &'f str, env: &mut Env<'_, 'f>) -> Result<TruthSet, EvalError> {
        let mut seen: Option<TruthSet> = None;
        for e in self.domain() {
            env.push(var, e);
            let t = self.formula(phi, env);
            env.pop();
            let t = t?;
            seen = Some(seen.map_or(TruthSet::singleton(t), |s| s.with(t)));
        }
        Ok(seen.expect("domain is non-empty"))
    }

    fn range_count<'f>(&self, phi: &'f Formula, var: &'f str, env: &mut Env<'_, 'f>) -> Result<CountPair, EvalError> {
        let mut count = CountPair::new(0, 0);
        for e in self.domain() {
            env.push(var, e);
            let t = self.formula(phi, env);
            env.pop();
            if t?.is_true() {
                count.true_count += 1;
            } else {
                count.false_count += 1;
            }
        }
        Ok(count)
    }

    /// Reads the model file format against `sig`:
    ///
    /// ```text
    /// domain 3
    /// const c = 0
    /// fun f = [1,2,0]
    /// pred P = {0,2}
    /// pred R = {(0,1),(2,2)}
    /// pred A = {()}
    /// ```
    ///
    /// Lines may also be separated by `;`, and `#` starts a comment.
    pub fn parse_model(text: &str, sig: &Signature) -> Result<Self, ModelError> {
        let mut model: Option<Interpretation> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            for stmt in content.split(';').map(str::trim).filter(|s| !s.is_empty()) {
                let syntax = |message: String| ModelError::Syntax {
                    line: line_no,
                    message,
                };
                let (keyword, rest) = stmt
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| syntax(format!("incomplete statement `{stmt}`")))?;
                let rest = rest.trim();
                if keyword == "domain" {
                    if model.is_some() {
                        return Err(syntax("domain declared twice".into()));
                    }
                    let n = rest
                        .parse::<usize>()
                        .map_err(|_| syntax(format!("bad domain size `{rest}`")))?;
                    model = Some(Interpretation::new(n)?);
                    continue;
                }
                let m = model
                    .as_mut()
                    .ok_or_else(|| syntax("`domain` must come first".into()))?;
                let (name, value) = rest
                    .split_once('=')
                    .map(|(n, v)| (n.trim(), v.trim()))
                    .ok_or_else(|| syntax("expected `name = value`".into()))?;
                let declared = sig
                    .kind(name)
                    .ok_or_else(|| ModelError::Undeclared(name.to_string()))?;
                let found = match keyword {
                    "const" => SymbolKind::Constant,
                    "fun" => SymbolKind::Function(0),
                    "pred" => SymbolKind::Predicate(0),
                    other => return Err(syntax(format!("unknown statement `{other}`"))),
                };
                let element = |s: &str| {
                    s.trim()
                        .parse::<Element>()
                        .map_err(|_| syntax(format!("bad element `{}`", s.trim())))
                };
                match (declared, found) {
                    (SymbolKind::Constant, SymbolKind::Constant) => m.set_constant(name, element(value)?)?,
                    (SymbolKind::Function(arity), SymbolKind::Function(_)) => {
                        let inner = value
                            .strip_prefix('[')
                            .and_then(|v| v.strip_suffix(']'))
                            .ok_or_else(|| syntax("function graph must be `[...]`".into()))?;
                        let values = split_list(inner)
                            .map(element)
                            .collect::<Result<Vec<_>, _>>()?;
                        m.set_function(name, arity, values)?
                    }
                    (SymbolKind::Predicate(arity), SymbolKind::Predicate(_)) => {
                        let inner = value
                            .strip_prefix('{')
                            .and_then(|v| v.strip_suffix('}'))
                            .ok_or_else(|| syntax("predicate extension must be `{...}`".into()))?;
                        let tuples = parse_tuples(inner)
                            .ok_or_else(|| syntax(format!("bad tuple set `{value}`")))?
                            .into_iter()
                            .map(|t| t.into_iter().map(element).collect::<Result<Vec<_>, _>>())
                            .collect::<Result<Vec<_>, _>>()?;
                        m.set_predicate(name, arity, tuples)?
                    }
                    (declared, _) => {
                        return Err(ModelError::KindMismatch {
                            name: name.to_string(),
                            declared,
                            found,
                        })
                    }
                }
            }
        }
        let model = model.ok_or(ModelError::Syntax {
            line: 0,
            message: "missing `domain` line".into(),
        })?;
        model.check_signature(sig)?;
        Ok(model)
    }

    /// One-line form of the model file, statements joined by `; `.
    pub fn to_line(&self) -> String {
        self.to_string().trim_end().replace('\n', "; ")
    }
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty())
}

/// Splits `0,2` or `(0,1),(2,2)` or `()` into tuples of element strings.
fn parse_tuples(s: &str) -> Option<Vec<Vec<&str>>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    if !s.starts_with('(') {
        return Some(split_list(s).map(|e| vec![e]).collect());
    }
    let mut out = Vec::new();
    let mut rest = s;
    loop {
        rest = rest.trim_start().strip_prefix('(')?;
        let close = rest.find(')')?;
        out.push(split_list(&rest[..close]).collect());
        rest = rest[close + 1..].trim_start();
        if rest.is_empty() {
            return Some(out);
        }
        rest = rest.strip_prefix(',')?;
    }
}

impl fmt::Display for Interpretation {
    /// The model file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "domain {}", self.size)?;
        for (name, e) in &self.constants {
            writeln!(f, "const {name} = {e}")?;
        }
        for (name, table) in &self.functions {
            let graph: Vec<String> = table.values.iter().map(|v| v.to_string()).collect();
            writeln!(f, "fun {name} = [{}]", graph.join(","))?;
        }
        for (name, rel) in &self.predicates {
            let tuples: Vec<String> = rel
                .members
                .iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(i, _)| {
                    let t = index_tuple(self.size, rel.arity, i);
                    if rel.arity == 1 {
                        t[0].to_string()
                    } else {
                        let inner: Vec<String> = t.iter().map(|e| e.to_string()).collect();
                        format!("({})", inner.join(","))
                    }
                })
                .collect();
            writeln!(f, "pred {name} = {{{}}}", tuples.join(","))?;
        }
        Ok(())
    }
}

/// An assignment of domain elements to variables.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Valuation(BTreeMap<String, Element>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: &str, e: Element) -> Self {
        self.0.insert(var.to_string(), e);
        self
    }

    pub fn insert(&mut self, var: &str, e: Element) {
        self.0.insert(var.to_string(), e);
    }

    pub fn get(&self, var: &str) -> Option<Element> {
        self.0.get(var).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Element)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Quantifier bindings stacked over a base valuation; inner binders shadow.
struct Env<'a, 'f> {
    base: &'a Valuation,
    bound: Vec<(&'f str, Element)>,
}

impl<'a, 'f> Env<'a, 'f> {
    fn new(base: &'a Valuation) -> Self {
        Env {
            base,
            bound: Vec::new(),
        }
    }

    fn push(&mut self, var: &'f str, e: Element) {
        self.bound.push((var, e));
    }

    fn pop(&mut self) {
        self.bound.pop();
    }

    fn get(&self, var: &str) -> Option<Element> {
        self.bound
            .iter()
            .rev()
            .find(|(v, _)| *v == var)
            .map(|(_, e)| *e)
            .or_else(|| self.base.get(var))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::TruthValue::{False as F, True as T};
    use crate::syntax::parse;

    fn sig() -> Signature {
        Signature::parse("const c\nconst d\nfun f/1\npred P/1\npred R/2\npred A/0").unwrap()
    }

    fn model(p: &[Element]) -> Interpretation {
        let mut m = Interpretation::new(2).unwrap();
        m.set_constant("c", 0).unwrap();
        m.set_constant("d", 0).unwrap();
        m.set_function("f", 1, vec![0, 1]).unwrap();
        m.set_predicate("P", 1, p.iter().map(|&e| [e])).unwrap();
        m.set_predicate("R", 2, [[0, 1]]).unwrap();
        m.set_predicate("A", 0, [[0usize; 0]]).unwrap();
        m
    }

    fn eval(m: &Interpretation, text: &str) -> TruthValue {
        m.eval_formula(&parse(text, &sig()).unwrap(), &Valuation::new()).unwrap()
    }

    #[test]
    fn empty_domain_rejected() {
        assert_eq!(Interpretation::new(0), Err(ModelError::EmptyDomain));
    }

    #[test]
    fn term_examples() {
        let m = model(&[0]);
        let s = sig();
        let val = Valuation::new().with("x", 1);
        let t = |text: &str| m.eval_term(&crate::syntax::parse_term(text, &s).unwrap(), &val);
        assert_eq!(t("c"), Ok(0));
        assert_eq!(t("f(c)"), Ok(0));
        assert_eq!(t("x"), Ok(1));
        assert_eq!(t("f(x)"), Ok(1));
        assert_eq!(t("y"), Err(EvalError::Unbound("y".into())));
    }

    #[test]
    fn truth_set_examples() {
        let s = sig();
        let pv = parse("P(v)", &s).unwrap();
        let none = Valuation::new();
        assert_eq!(model(&[0]).truth_set(&pv, "v", &none), Ok(TruthSet::Mixed));
        assert_eq!(model(&[0, 1]).truth_set(&pv, "v", &none), Ok(TruthSet::OnlyTrue));
        let pc = parse("P(c)", &s).unwrap();
        assert_eq!(model(&[0]).truth_set(&pc, "v", &none), Ok(TruthSet::OnlyTrue));
    }

    #[test]
    fn truth_count_examples() {
        let s = sig();
        let pv = parse("P(v)", &s).unwrap();
        let none = Valuation::new();
        assert_eq!(model(&[0]).truth_count(&pv, "v", &none), Ok(CountPair::new(1, 1)));
        let mut empty3 = Interpretation::new(3).unwrap();
        empty3.set_predicate("P", 1, Vec::<[Element; 1]>::new()).unwrap();
        assert_eq!(empty3.truth_count(&pv, "v", &none), Ok(CountPair::new(0, 3)));
        // v not free: one evaluation per element, all agreeing
        let pc = parse("P(c)", &s).unwrap();
        assert_eq!(model(&[0]).truth_count(&pc, "v", &none), Ok(CountPair::new(2, 0)));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(eval(&model(&[0]), "exactly(1) v. P(v)"), T);
        assert_eq!(eval(&model(&[0, 1]), "exactly(1) v. P(v)"), F);
        assert_eq!(eval(&model(&[0]), "c = d"), T);
        assert_eq!(eval(&model(&[0]), "c = f(d)"), T);
        assert_eq!(eval(&model(&[0]), "exists x. ~x = c"), T);
        assert_eq!(eval(&model(&[0]), "forall x. exists y. R(x, y)"), F);
        assert_eq!(eval(&model(&[0]), "exists x. exists y. R(x, y) & ~R(y, x)"), T);
        assert_eq!(eval(&model(&[0]), "A -> P(c) <-> A"), T);
        assert_eq!(eval(&model(&[]), "Q[FTF] v. P(v)"), T);
        assert_eq!(eval(&model(&[1]), "Q[FFT] v. P(v)"), T);
    }

    #[test]
    fn inner_binders_shadow() {
        let m = model(&[0]);
        let phi = parse("forall x. exists x. P(x)", &sig()).unwrap();
        assert_eq!(m.eval_formula(&phi, &Valuation::new()), Ok(T));
        let phi = parse("P(x) & exists x. ~P(x)", &sig()).unwrap();
        assert_eq!(m.eval_formula(&phi, &Valuation::new().with("x", 0)), Ok(T));
        assert_eq!(
            m.eval_formula(&phi, &Valuation::new()),
            Err(EvalError::Unbound("x".into()))
        );
    }

    #[test]
    fn model_file_round_trip() {
        let s = sig();
        let text = "domain 2\nconst c = 0\nconst d = 0\nfun f = [0,1]\npred P = {0}\npred R = {(0,1)}\npred A = {()}\n";
        let m = Interpretation::parse_model(text, &s).unwrap();
        assert_eq!(m, model(&[0]));
        assert_eq!(m.to_string(), text);
        assert_eq!(Interpretation::parse_model(&m.to_line(), &s).unwrap(), m);
        assert_eq!(m.extension("R"), Some(vec![vec![0, 1]]));
    }

    #[test]
    fn model_file_errors() {
        let s = Signature::parse("const c\npred P/1").unwrap();
        let err = |text: &str| Interpretation::parse_model(text, &s).unwrap_err();
        assert_eq!(err("domain 0"), ModelError::EmptyDomain);
        assert_eq!(err("domain 2\nconst c = 0"), ModelError::Missing("P".into()));
        assert!(matches!(err("domain 2\nconst c = 2\npred P = {}"), ModelError::OutOfRange { element: 2, .. }));
        assert!(matches!(err("const c = 0"), ModelError::Syntax { line: 1, .. }));
        assert_eq!(err("domain 1\nconst e = 0"), ModelError::Undeclared("e".into()));
        assert!(matches!(err("domain 1\npred c = {}"), ModelError::KindMismatch { .. }));
        assert!(matches!(err("domain 1\nconst c = 0\npred P = {(0,0)}"), ModelError::TupleArity { .. }));
        assert!(matches!(err("domain 1\nconst c = 0\nconst c = 0"), ModelError::Duplicate(_)));
        let f = Signature::parse("fun g/2").unwrap();
        assert!(matches!(
            Interpretation::parse_model("domain 2\nfun g = [0,1,1]", &f),
            Err(ModelError::TableSize { expected: 4, got: 3, .. })
        ));
    }
}
