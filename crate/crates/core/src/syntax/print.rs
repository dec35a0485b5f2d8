//! Canonical text rendering.
//!
//! Binary connectives are always parenthesized, so the printed form never
//! depends on precedence. Quantified formulas are wrapped in parentheses
//! whenever they sit in an operand position, since their bodies extend
//! maximally to the right.

use std::fmt;

use super::{Formula, Term};
use crate::kernel::QuantifierFunction;

#[derive(Clone, Copy)]
enum Style {
    Ascii,
    Unicode,
}

struct Symbols {
    not: &'static str,
    and: &'static str,
    or: &'static str,
    implies: &'static str,
    iff: &'static str,
    forall: &'static str,
    exists: &'static str,
}

const ASCII: Symbols = Symbols {
    not: "~",
    and: " & ",
    or: " | ",
    implies: " -> ",
    iff: " <-> ",
    forall: "forall ",
    exists: "exists ",
};

const UNICODE: Symbols = Symbols {
    not: "¬",
    and: " ∧ ",
    or: " ∨ ",
    implies: " → ",
    iff: " ↔ ",
    forall: "∀",
    exists: "∃",
};

impl Style {
    fn symbols(self) -> &'static Symbols {
        match self {
            Style::Ascii => &ASCII,
            Style::Unicode => &UNICODE,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(n) | Term::Const(n) => f.write_str(n),
            Term::Apply(name, args) => {
                f.write_str(name)?;
                write_args(f, args)
            }
        }
    }
}

fn write_args(f: &mut fmt::Formatter<'_>, args: &[Term]) -> fmt::Result {
    f.write_str("(")?;
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str(")")
}

fn is_binder(phi: &Formula) -> bool {
    matches!(phi, Formula::Quant { .. } | Formula::Count { .. })
}

fn write_operand(f: &mut fmt::Formatter<'_>, phi: &Formula, style: Style) -> fmt::Result {
    if is_binder(phi) || matches!(phi, Formula::Equals(..)) {
        f.write_str("(")?;
        write_formula(f, phi, style)?;
        f.write_str(")")
    } else {
        write_formula(f, phi, style)
    }
}

fn write_formula(f: &mut fmt::Formatter<'_>, phi: &Formula, style: Style) -> fmt::Result {
    let sym = style.symbols();
    let binary = |f: &mut fmt::Formatter<'_>, l: &Formula, op: &str, r: &Formula| {
        f.write_str("(")?;
        write_operand(f, l, style)?;
        f.write_str(op)?;
        if is_binder(r) {
            write_operand(f, r, style)?;
        } else {
            write_formula(f, r, style)?;
        }
        f.write_str(")")
    };
    match phi {
        Formula::Atom(p, args) => {
            f.write_str(p)?;
            if args.is_empty() {
                Ok(())
            } else {
                write_args(f, args)
            }
        }
        Formula::Equals(l, r) => write!(f, "{l} = {r}"),
        Formula::Not(inner) => {
            f.write_str(sym.not)?;
            write_operand(f, inner, style)
        }
        Formula::And(l, r) => binary(f, l, sym.and, r),
        Formula::Or(l, r) => binary(f, l, sym.or, r),
        Formula::Implies(l, r) => binary(f, l, sym.implies, r),
        Formula::Iff(l, r) => binary(f, l, sym.iff, r),
        Formula::Quant { q, var, body } => {
            if *q == QuantifierFunction::FORALL {
                write!(f, "{}{var}. ", sym.forall)?;
            } else if *q == QuantifierFunction::EXISTS {
                write!(f, "{}{var}. ", sym.exists)?;
            } else {
                write!(f, "{q} {var}. ")?;
            }
            write_formula(f, body, style)
        }
        Formula::Count { m, var, body } => {
            write!(f, "{m} {var}. ")?;
            write_formula(f, body, style)
        }
    }
}

/// ASCII rendering; [`Formula::unicode`] gives the symbolic form.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, Style::Ascii)
    }
}

pub struct Unicode<'a>(&'a Formula);

impl fmt::Display for Unicode<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self.0, Style::Unicode)
    }
}

impl Formula {
    pub fn unicode(&self) -> Unicode<'_> {
        Unicode(self)
    }
}
