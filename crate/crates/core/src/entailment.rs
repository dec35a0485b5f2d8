//! Finite-model search: logical truth, consequence and equivalence checked
//! over every interpretation of a signature up to a domain-size bound.
//!
//! A [`Verdict::HoldsUpTo`] only says that no countermodel exists among the
//! domains that were searched. It is not a validity certificate.
//!
//! Interpretations of one size are numbered by a mixed-radix counter. The
//! digits are laid out symbol by symbol in signature order (one per
//! constant, one per function-table row, one bit per predicate tuple) and
//! the first digit varies fastest. Sizes are searched in ascending order
//! and the countermodel reported is the lowest-numbered one of the smallest
//! refuting size, also when the numbers are checked in parallel.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::semantics::{tuple_count, Element, EvalError, Interpretation, Valuation};
use crate::syntax::{Formula, Signature, SignatureMismatch, SymbolKind};

pub const DEFAULT_MAX_SIZE: usize = 3;
pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const DEFAULT_MAX_ARITY: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EntailmentError {
    #[error("domain size must be at least 1")]
    ZeroSize,
    #[error("{needed} interpretations exceed the budget of {budget}")]
    Budget { needed: String, budget: u64 },
    #[error("`{name}` has arity {arity}, above the cap of {cap}")]
    ArityCap {
        name: String,
        arity: usize,
        cap: usize,
    },
    #[error("not a sentence: free variable(s) {}", .0.join(", "))]
    FreeVariables(Vec<String>),
    #[error(transparent)]
    Signature(#[from] SignatureMismatch),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_size: usize,
    /// Upper limit on the total number of interpretations over all sizes.
    pub budget: u64,
    pub max_arity: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_size: DEFAULT_MAX_SIZE,
            budget: DEFAULT_BUDGET,
            max_arity: DEFAULT_MAX_ARITY,
        }
    }
}

impl SearchConfig {
    pub fn with_max_size(max_size: usize) -> Self {
        SearchConfig {
            max_size,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    HoldsUpTo(usize),
    Countermodel {
        interpretation: Interpretation,
        valuation: Valuation,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::HoldsUpTo(_))
    }

    pub fn countermodel(&self) -> Option<&Interpretation> {
        match self {
            Verdict::HoldsUpTo(_) => None,
            Verdict::Countermodel { interpretation, .. } => Some(interpretation),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::HoldsUpTo(n) => write!(f, "HoldsUpTo({n})"),
            Verdict::Countermodel {
                interpretation,
                valuation,
            } => {
                writeln!(f, "Countermodel:")?;
                write!(f, "{interpretation}")?;
                if !valuation.is_empty() {
                    writeln!(f, "valuation {valuation}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Constant,
    Function(usize),
    Predicate(usize),
}

/// Every interpretation of a signature over the domain `0..size`.
#[derive(Debug, Clone)]
pub struct InterpretationSpace {
    size: usize,
    symbols: Vec<(String, Slot)>,
    radices: Vec<u64>,
}

impl InterpretationSpace {
    pub fn new(sig: &Signature, size: usize) -> Result<Self, EntailmentError> {
        if size == 0 {
            return Err(EntailmentError::ZeroSize);
        }
        let mut symbols = Vec::new();
        let mut radices = Vec::new();
        for (name, kind) in sig.symbols() {
            let slot = match kind {
                SymbolKind::Constant => {
                    radices.push(size as u64);
                    Slot::Constant
                }
                SymbolKind::Function(a) => {
                    radices.extend(std::iter::repeat_n(size as u64, tuple_count(size, a)));
                    Slot::Function(a)
                }
                SymbolKind::Predicate(a) => {
                    radices.extend(std::iter::repeat_n(2, tuple_count(size, a)));
                    Slot::Predicate(a)
                }
            };
            symbols.push((name.to_string(), slot));
        }
        Ok(InterpretationSpace {
            size,
            symbols,
            radices,
        })
    }

    /// Number of interpretations, `None` when it does not fit in a `u128`.
    pub fn count(&self) -> Option<u128> {
        self.radices
            .iter()
            .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
    }

    /// The interpretation with the given number.
    pub fn get(&self, mut index: u64) -> Interpretation {
        let mut digits = self.radices.iter().map(|&r| {
            let d = index % r;
            index /= r;
            d
        });
        let mut m = Interpretation::new(self.size).expect("size checked at construction");
        for (name, slot) in &self.symbols {
            match *slot {
                Slot::Constant => {
                    let e = digits.next().expect("digit layout") as Element;
                    m.set_constant(name, e).expect("element in range");
                }
                Slot::Function(a) => {
                    let values = (0..tuple_count(self.size, a))
                        .map(|_| digits.next().expect("digit layout") as Element)
                        .collect();
                    m.set_function(name, a, values).expect("well-formed table");
                }
                Slot::Predicate(a) => {
                    let bits = (0..tuple_count(self.size, a))
                        .map(|_| digits.next().expect("digit layout") == 1)
                        .collect();
                    m.set_predicate_bits(name, a, bits).expect("well-formed table");
                }
            }
        }
        m
    }

    /// All interpretations, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = Interpretation> + '_ {
        let count = self.count().and_then(|c| u64::try_from(c).ok()).expect("enumerable space");
        (0..count).map(move |i| self.get(i))
    }
}

/// Convenience wrapper around [`InterpretationSpace`] that applies the
/// arity cap and the budget.
pub fn enumerate_interpretations(
    sig: &Signature,
    size: usize,
    config: &SearchConfig,
) -> Result<InterpretationSpace, EntailmentError> {
    check_arity(sig, config)?;
    let space = InterpretationSpace::new(sig, size)?;
    match space.count() {
        Some(c) if c <= config.budget as u128 => Ok(space),
        c => Err(EntailmentError::Budget {
            needed: c.map_or_else(|| "more than 2^128".to_string(), |c| c.to_string()),
            budget: config.budget,
        }),
    }
}

fn check_arity(sig: &Signature, config: &SearchConfig) -> Result<(), EntailmentError> {
    for (name, kind) in sig.symbols() {
        if let SymbolKind::Function(a) | SymbolKind::Predicate(a) = kind {
            if a > config.max_arity {
                return Err(EntailmentError::ArityCap {
                    name: name.to_string(),
                    arity: a,
                    cap: config.max_arity,
                });
            }
        }
    }
    Ok(())
}

/// What the search saw: the verdict plus the sizes it went through, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    /// `(size, interpretations examined)` for each size visited.
    pub sizes: Vec<(usize, u64)>,
}

/// Checks sizes `1..=max_size` in turn and stops at the first interpretation
/// for which `refutes` returns true.
pub fn search<F>(sig: &Signature, config: &SearchConfig, refutes: F) -> Result<SearchOutcome, EntailmentError>
where
    F: Fn(&Interpretation) -> Result<bool, EvalError> + Sync,
{
    if config.max_size == 0 {
        return Err(EntailmentError::ZeroSize);
    }
    check_arity(sig, config)?;
    let mut spaces = Vec::with_capacity(config.max_size);
    let mut total: u128 = 0;
    for size in 1..=config.max_size {
        let space = InterpretationSpace::new(sig, size)?;
        total = space
            .count()
            .and_then(|c| total.checked_add(c))
            .unwrap_or(u128::MAX);
        spaces.push(space);
    }
    if total > config.budget as u128 {
        return Err(EntailmentError::Budget {
            needed: if total == u128::MAX {
                "more than 2^128".to_string()
            } else {
                total.to_string()
            },
            budget: config.budget,
        });
    }

    let mut sizes = Vec::new();
    for (i, space) in spaces.iter().enumerate() {
        let size = i + 1;
        let count = space.count().expect("checked against budget") as u64;
        let hit = (0..count)
            .into_par_iter()
            .map(|index| (index, refutes(&space.get(index))))
            .find_first(|(_, r)| !matches!(r, Ok(false)));
        match hit {
            None => sizes.push((size, count)),
            Some((index, Ok(_))) => {
                sizes.push((size, index + 1));
                return Ok(SearchOutcome {
                    verdict: Verdict::Countermodel {
                        interpretation: space.get(index),
                        valuation: Valuation::new(),
                    },
                    sizes,
                });
            }
            Some((_, Err(e))) => return Err(e.into()),
        }
    }
    Ok(SearchOutcome {
        verdict: Verdict::HoldsUpTo(config.max_size),
        sizes,
    })
}

fn require_sentence(phi: &Formula, sig: &Signature) -> Result<(), EntailmentError> {
    phi.check_signature(sig)?;
    let free = phi.free_variables();
    if !free.is_empty() {
        return Err(EntailmentError::FreeVariables(free.into_iter().collect()));
    }
    Ok(())
}

fn truth(m: &Interpretation, phi: &Formula) -> Result<bool, EvalError> {
    Ok(m.eval_formula(phi, &Valuation::new())?.is_true())
}

pub fn is_logical_truth(phi: &Formula, sig: &Signature, config: &SearchConfig) -> Result<Verdict, EntailmentError> {
    Ok(logical_truth_search(phi, sig, config)?.verdict)
}

pub fn logical_truth_search(
    phi: &Formula,
    sig: &Signature,
    config: &SearchConfig,
) -> Result<SearchOutcome, EntailmentError> {
    require_sentence(phi, sig)?;
    search(sig, config, |m| Ok(!truth(m, phi)?))
}

pub fn consequence(
    premises: &[Formula],
    conclusion: &Formula,
    sig: &Signature,
    config: &SearchConfig,
) -> Result<Verdict, EntailmentError> {
    Ok(consequence_search(premises, conclusion, sig, config)?.verdict)
}

pub fn consequence_search(
    premises: &[Formula],
    conclusion: &Formula,
    sig: &Signature,
    config: &SearchConfig,
) -> Result<SearchOutcome, EntailmentError> {
    for p in premises {
        require_sentence(p, sig)?;
    }
    require_sentence(conclusion, sig)?;
    search(sig, config, |m| {
        for p in premises {
            if !truth(m, p)? {
                return Ok(false);
            }
        }
        Ok(!truth(m, conclusion)?)
    })
}

pub fn check_equivalence(
    lhs: &Formula,
    rhs: &Formula,
    sig: &Signature,
    config: &SearchConfig,
) -> Result<Verdict, EntailmentError> {
    require_sentence(lhs, sig)?;
    require_sentence(rhs, sig)?;
    Ok(search(sig, config, |m| Ok(truth(m, lhs)? != truth(m, rhs)?))?.verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sentence;

    fn sig(text: &str) -> Signature {
        Signature::parse(text).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let config = SearchConfig::default();
        let count = |s: &str, n| enumerate_interpretations(&sig(s), n, &config).unwrap().iter().count();
        assert_eq!(count("pred P/1", 2), 4);
        assert_eq!(count("const c", 3), 3);
        assert_eq!(count("fun f/1", 2), 4);
        assert_eq!(count("const c\nfun f/1\npred R/2\npred A/0", 2), 2 * 4 * 16 * 2);
        assert_eq!(count("", 2), 1);
    }

    #[test]
    fn enumeration_is_exhaustive_and_duplicate_free() {
        let s = sig("const c\nfun f/1\npred P/1");
        let space = enumerate_interpretations(&s, 2, &SearchConfig::default()).unwrap();
        let all: Vec<String> = space.iter().map(|m| m.to_string()).collect();
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(all.len(), 2 * 4 * 4);
        assert_eq!(dedup.len(), all.len());
        for m in space.iter() {
            m.check_signature(&s).unwrap();
        }
    }

    #[test]
    fn first_digit_varies_fastest() {
        let s = sig("pred P/1");
        let space = InterpretationSpace::new(&s, 2).unwrap();
        let exts: Vec<_> = space.iter().map(|m| m.extension("P").unwrap()).collect();
        assert_eq!(exts, vec![vec![], vec![vec![0]], vec![vec![1]], vec![vec![0], vec![1]]]);
    }

    #[test]
    fn guards() {
        let small = SearchConfig {
            budget: 10,
            ..SearchConfig::default()
        };
        assert!(matches!(
            enumerate_interpretations(&sig("pred R/2"), 2, &small),
            Err(EntailmentError::Budget { .. })
        ));
        assert!(matches!(
            enumerate_interpretations(&sig("pred T/3"), 1, &SearchConfig::default()),
            Err(EntailmentError::ArityCap { arity: 3, .. })
        ));
        assert_eq!(
            InterpretationSpace::new(&sig("pred P/1"), 0).unwrap_err(),
            EntailmentError::ZeroSize
        );
        // a binary function at size 4 alone has 4^16 tables, past the default budget
        let s = sig("fun g/2");
        assert!(matches!(
            is_logical_truth(&parse_sentence("forall x. g(x, x) = x", &s).unwrap(), &s, &SearchConfig::with_max_size(4)),
            Err(EntailmentError::Budget { .. })
        ));
    }

    #[test]
    fn logical_truth_examples() {
        let config = SearchConfig::default();
        let s = sig("pred A/0");
        let lem = parse_sentence("~A | A", &s).unwrap();
        assert_eq!(is_logical_truth(&lem, &s, &config), Ok(Verdict::HoldsUpTo(3)));

        let empty = Signature::new();
        let refl = parse_sentence("forall x. x = x", &empty).unwrap();
        assert_eq!(is_logical_truth(&refl, &empty, &config), Ok(Verdict::HoldsUpTo(3)));

        let s = sig("pred P/1");
        let ex = parse_sentence("exists v. P(v)", &s).unwrap();
        let v = is_logical_truth(&ex, &s, &config).unwrap();
        let m = v.countermodel().expect("refuted");
        assert_eq!(m.size(), 1);
        assert_eq!(m.extension("P"), Some(vec![]));

        let open = crate::syntax::parse("P(x)", &s).unwrap();
        assert_eq!(
            is_logical_truth(&open, &s, &config),
            Err(EntailmentError::FreeVariables(vec!["x".into()]))
        );
    }

    #[test]
    fn consequence_examples() {
        let config = SearchConfig::default();
        let s = sig("pred A/0\npred B/0");
        let ab = parse_sentence("A & B", &s).unwrap();
        let b = parse_sentence("B", &s).unwrap();
        assert_eq!(consequence(&[ab], &b, &s, &config), Ok(Verdict::HoldsUpTo(3)));
        assert_eq!(consequence(std::slice::from_ref(&b), &b, &s, &config), Ok(Verdict::HoldsUpTo(3)));

        let s = sig("pred P/1\nconst c");
        let pc = parse_sentence("P(c)", &s).unwrap();
        let v = consequence(&[], &pc, &s, &config).unwrap();
        let m = v.countermodel().unwrap();
        assert_eq!(m.to_string(), "domain 1\nconst c = 0\npred P = {}\n");
    }

    #[test]
    fn equivalence_examples() {
        let config = SearchConfig::default();
        let s = sig("pred P/1");
        let p = |t: &str| parse_sentence(t, &s).unwrap();
        assert_eq!(
            check_equivalence(&p("forall v. P(v)"), &p("~(exists v. ~P(v))"), &s, &config),
            Ok(Verdict::HoldsUpTo(3))
        );
        let v = check_equivalence(&p("forall v. P(v)"), &p("exists v. P(v)"), &s, &config).unwrap();
        let m = v.countermodel().unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.extension("P"), Some(vec![vec![0]]));
    }

    #[test]
    fn search_ascends_sizes() {
        let s = sig("pred P/1");
        let phi = parse_sentence("exists x. exists y. ~x = y", &s).unwrap();
        let out = logical_truth_search(&phi, &s, &SearchConfig::default()).unwrap();
        assert_eq!(out.sizes, vec![(1, 1)]);
        let phi = parse_sentence("~(exists x. exists y. exists z. ~x = y & ~y = z & ~x = z)", &s).unwrap();
        let out = logical_truth_search(&phi, &s, &SearchConfig::with_max_size(4)).unwrap();
        assert_eq!(out.sizes.iter().map(|s| s.0).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(out.sizes[..2], [(1, 2), (2, 4)]);
        assert_eq!(out.verdict.countermodel().unwrap().size(), 3);
    }
}
