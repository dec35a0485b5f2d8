//! Definitions of every quantifier function from `forall`, `exists` and the
//! connectives, plus the machinery that checks them.
//!
//! A quantifier function is determined by which of the three truth sets it
//! sends to `True`, and each truth set is picked out by one sentence about
//! the schematic predicate `S`:
//!
//! | truth set      | sentence                                  |
//! |----------------|-------------------------------------------|
//! | `{True}`       | `forall v. S(v)`                          |
//! | `{False}`      | `forall v. ~S(v)`                         |
//! | `{True,False}` | `(exists v. S(v)) & (exists v. ~S(v))`    |
//!
//! The definition of a quantifier is the disjunction of the sentences for
//! the sets it accepts. Nothing here is trusted: every definition is checked
//! against the quantifier itself by exhaustive model search.

use std::fmt;

use thiserror::Error;

use crate::entailment::{self, EntailmentError, SearchConfig, Verdict};
use crate::kernel::{BooleanFunction, QuantifierFunction, TruthValue};
use crate::semantics::Interpretation;
use crate::syntax::{fresh_variable, Formula, Signature, Term, SCHEMATIC_PREDICATE};

pub const SCHEMATIC_VARIABLE: &str = "v";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("definitions may only use forall, exists and connectives; found `{0}`")]
    NonStandard(String),
    #[error("connectives of arity 0 have no definition")]
    NullaryConnective,
    #[error(transparent)]
    Search(#[from] EntailmentError),
}

fn s_of(var: &str) -> Formula {
    Formula::atom(SCHEMATIC_PREDICATE, vec![Term::var(var)])
}

/// `Q v. S(v)`: the quantifier applied to the schematic formula.
pub fn schematic_instance(q: QuantifierFunction) -> Formula {
    Formula::quant(q, SCHEMATIC_VARIABLE, s_of(SCHEMATIC_VARIABLE))
}

fn all_true() -> Formula {
    Formula::forall(SCHEMATIC_VARIABLE, s_of(SCHEMATIC_VARIABLE))
}

fn all_false() -> Formula {
    Formula::forall(SCHEMATIC_VARIABLE, s_of(SCHEMATIC_VARIABLE).not())
}

fn some_true() -> Formula {
    Formula::exists(SCHEMATIC_VARIABLE, s_of(SCHEMATIC_VARIABLE))
}

fn some_false() -> Formula {
    Formula::exists(SCHEMATIC_VARIABLE, s_of(SCHEMATIC_VARIABLE).not())
}

fn mixed() -> Formula {
    some_true().and(some_false())
}

/// A sentence over `{S/1}` using only `forall`, `exists` and connectives
/// that is equivalent to `q v. S(v)`.
pub fn canonical_definition(q: QuantifierFunction) -> Formula {
    use TruthValue::{False as F, True as T};
    match (q.on_only_true, q.on_only_false, q.on_mixed) {
        (F, F, F) => all_true().and(some_false()),
        (T, F, T) => some_true(),
        (F, T, T) => some_false(),
        _ => {
            let parts = [
                (q.on_only_true, all_true as fn() -> Formula),
                (q.on_only_false, all_false),
                (q.on_mixed, mixed),
            ];
            parts
                .iter()
                .filter(|(sel, _)| sel.is_true())
                .map(|(_, f)| f())
                .reduce(Formula::or)
                .expect("at least one set selected")
        }
    }
}

fn check_standard(d: &Formula) -> Result<(), AlgebraError> {
    match d {
        Formula::Atom(..) => Ok(()),
        Formula::Equals(l, r) => Err(AlgebraError::NonStandard(format!("{l} = {r}"))),
        Formula::Not(f) => check_standard(f),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) | Formula::Iff(l, r) => {
            check_standard(l)?;
            check_standard(r)
        }
        Formula::Quant { q, body, .. }
            if *q == QuantifierFunction::FORALL || *q == QuantifierFunction::EXISTS =>
        {
            check_standard(body)
        }
        Formula::Quant { q, .. } => Err(AlgebraError::NonStandard(q.to_string())),
        Formula::Count { m, .. } => Err(AlgebraError::NonStandard(m.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefinabilityStatus {
    Verified,
    Failed(Interpretation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinabilityReport {
    pub quantifier: QuantifierFunction,
    pub definition: Formula,
    /// Largest domain size through which the definition agreed everywhere.
    pub verified_up_to: usize,
    pub status: DefinabilityStatus,
}

impl DefinabilityReport {
    pub fn is_verified(&self) -> bool {
        self.status == DefinabilityStatus::Verified
    }
}

impl fmt::Display for DefinabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            DefinabilityStatus::Verified => write!(
                f,
                "{} := {} — verified up to n={}",
                self.quantifier, self.definition, self.verified_up_to
            ),
            DefinabilityStatus::Failed(m) => write!(
                f,
                "{} := {} — FAILED at n={}: {}",
                self.quantifier,
                self.definition,
                m.size(),
                m.to_line()
            ),
        }
    }
}

/// Compares `q v. S(v)` with `definition` on every interpretation of `{S/1}`
/// with domain size `1..=max_size`.
pub fn verify_definition(
    q: QuantifierFunction,
    definition: &Formula,
    max_size: usize,
) -> Result<DefinabilityReport, AlgebraError> {
    check_standard(definition)?;
    let verdict = entailment::check_equivalence(
        &schematic_instance(q),
        definition,
        &Signature::schematic(),
        &SearchConfig::with_max_size(max_size),
    )?;
    let (verified_up_to, status) = match verdict {
        Verdict::HoldsUpTo(n) => (n, DefinabilityStatus::Verified),
        Verdict::Countermodel { interpretation, .. } => {
            (interpretation.size() - 1, DefinabilityStatus::Failed(interpretation))
        }
    };
    Ok(DefinabilityReport {
        quantifier: q,
        definition: definition.clone(),
        verified_up_to,
        status,
    })
}

/// The canonical definition of each of the eight quantifier functions,
/// each verified through `max_size`.
pub fn completeness_table(max_size: usize) -> Result<Vec<DefinabilityReport>, AlgebraError> {
    QuantifierFunction::all()
        .into_iter()
        .map(|q| verify_definition(q, &canonical_definition(q), max_size))
        .collect()
}

/// One claimed equivalence between two schematic sentences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub name: String,
    pub lhs: Formula,
    pub rhs: Formula,
    pub verdict: Verdict,
}

impl LawCheck {
    pub fn run(name: &str, lhs: Formula, rhs: Formula, max_size: usize) -> Result<Self, AlgebraError> {
        let verdict = entailment::check_equivalence(
            &lhs,
            &rhs,
            &Signature::schematic(),
            &SearchConfig::with_max_size(max_size),
        )?;
        Ok(LawCheck {
            name: name.to_string(),
            lhs,
            rhs,
            verdict,
        })
    }
}

/// `forall = ~exists~` and `exists = ~forall~`.
pub fn verify_duality(max_size: usize) -> Result<Vec<LawCheck>, AlgebraError> {
    let v = SCHEMATIC_VARIABLE;
    Ok(vec![
        LawCheck::run(
            "forall-as-not-exists-not",
            all_true(),
            Formula::exists(v, s_of(v).not()).not(),
            max_size,
        )?,
        LawCheck::run(
            "exists-as-not-forall-not",
            some_true(),
            Formula::forall(v, s_of(v).not()).not(),
            max_size,
        )?,
    ])
}

/// A deliberately wrong law, `forall v. S(v)` against `exists v. ~S(v)`,
/// which any sound checker must refute.
pub fn mutated_duality(max_size: usize) -> Result<LawCheck, AlgebraError> {
    LawCheck::run("mutant-forall-as-exists-not", all_true(), some_false(), max_size)
}

/// Unique existence spelled out with equality:
/// `(exists x. phi(x)) & forall y. forall z. (phi(y) & phi(z) -> y = z)`
/// with `x, y, z` fresh for `phi` and `var`.
pub fn expand_unique(phi: &Formula, var: &str) -> Formula {
    let mut avoid = phi.names();
    avoid.insert(var.to_string());
    let mut fresh = || {
        let name = fresh_variable(&avoid);
        avoid.insert(name.clone());
        name
    };
    let (x, y, z) = (fresh(), fresh(), fresh());
    let at = |name: &str| phi.substitute(var, &Term::var(name));
    Formula::exists(&x, at(&x)).and(Formula::forall(
        &y,
        Formula::forall(
            &z,
            at(&y)
                .and(at(&z))
                .implies(Formula::equals(Term::var(&y), Term::var(&z))),
        ),
    ))
}

pub fn connective_letter(i: usize) -> String {
    format!("p{}", i + 1)
}

/// Full disjunctive normal form over the letters `p1..pn`, one minterm per
/// true row in ascending row order. The constant-false function becomes
/// `p1 & ~p1`.
pub fn define_connective(bf: &BooleanFunction) -> Result<Formula, AlgebraError> {
    let n = bf.arity();
    if n == 0 {
        return Err(AlgebraError::NullaryConnective);
    }
    let minterm = |row: usize| {
        BooleanFunction::row_arguments(n, row)
            .into_iter()
            .enumerate()
            .map(|(i, value)| {
                let letter = Formula::letter(&connective_letter(i));
                if value.is_true() {
                    letter
                } else {
                    letter.not()
                }
            })
            .reduce(Formula::and)
            .expect("arity at least 1")
    };
    let out = (0..bf.table().len())
        .filter(|&row| bf.table()[row].is_true())
        .map(minterm)
        .reduce(Formula::or);
    Ok(out.unwrap_or_else(|| {
        let p1 = Formula::letter(&connective_letter(0));
        p1.clone().and(p1.not())
    }))
}

/// The signature of propositional letters `p1..pn`.
pub fn connective_signature(arity: usize) -> Signature {
    let mut sig = Signature::new();
    for i in 0..arity {
        sig = sig
            .with_predicate(&connective_letter(i), 0)
            .expect("distinct letters");
    }
    sig
}
