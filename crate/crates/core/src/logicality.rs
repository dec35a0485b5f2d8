//! Is a quantifier a logical symbol?
//!
//! The internal criterion: a count rule is logical when its value depends
//! only on which truth values occur, not on how often. Such a rule *is* a
//! quantifier function. Two invariance criteria are checked alongside it:
//! invariance under bijections between domains, which every count rule
//! passes, and invariance under surjections, which only the support-based
//! rules pass. Both invariance checks evaluate `m v. P(v)` through the
//! ordinary semantics on concrete interpretations of `{P/1}`.
//!
//! All checks are bounded; the bounds are part of every result.

use std::fmt;

use crate::kernel::{CountPair, KernelError, MultisetQuantifier, QuantifierFunction, TruthValue};
use crate::semantics::{Element, Interpretation, Valuation};
use crate::syntax::{Formula, Term};

pub const DEFAULT_BOUND: usize = 4;

const PREDICATE: &str = "P";
const VARIABLE: &str = "v";

/// Two count pairs with the same support on which the rule disagrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportViolation {
    pub first: CountPair,
    pub second: CountPair,
    pub first_value: TruthValue,
    pub second_value: TruthValue,
}

impl fmt::Display for SupportViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}->{} but {}->{}",
            self.first, self.first_value, self.second, self.second_value
        )
    }
}

/// True iff `m` agrees on all same-support count pairs with total in
/// `1..=max_count`. On failure, the lexicographically first violating pair.
///
/// Panics if `max_count < 2`.
pub fn factors_through_support(m: &MultisetQuantifier, max_count: usize) -> Result<(), SupportViolation> {
    assert!(max_count >= 2, "support factoring needs counts up to at least 2");
    let pairs: Vec<(CountPair, TruthValue)> = CountPair::up_to(max_count as u64)
        .map(|c| (c, m.eval(c).expect("non-empty count")))
        .collect();
    for (i, (c1, v1)) in pairs.iter().enumerate() {
        for (c2, v2) in &pairs[i + 1..] {
            if c1.support() == c2.support() && v1 != v2 {
                return Err(SupportViolation {
                    first: *c1,
                    second: *c2,
                    first_value: *v1,
                    second_value: *v2,
                });
            }
        }
    }
    Ok(())
}

/// The quantifier function `m` agrees with, read off at the representative
/// counts `(1,0)`, `(0,1)` and `(1,1)`, provided `m` factors through support
/// up to [`DEFAULT_BOUND`].
pub fn induced_quantifier_function(m: &MultisetQuantifier) -> Result<QuantifierFunction, SupportViolation> {
    induced_quantifier_function_up_to(m, DEFAULT_BOUND)
}

pub fn induced_quantifier_function_up_to(
    m: &MultisetQuantifier,
    max_count: usize,
) -> Result<QuantifierFunction, SupportViolation> {
    factors_through_support(m, max_count)?;
    let at = |t, f| m.eval(CountPair::new(t, f)).expect("non-empty count");
    Ok(QuantifierFunction::new(at(1, 0), at(0, 1), at(1, 1)))
}

/// A surjection `h: 0..source -> 0..target` and an extension `P'` of the
/// target such that `m` judges `P'` and its pullback `h^-1(P')` differently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectionViolation {
    pub source_size: usize,
    pub target_size: usize,
    pub map: Vec<Element>,
    pub target_extension: Vec<Element>,
    pub source_value: TruthValue,
    pub target_value: TruthValue,
}

impl SurjectionViolation {
    pub fn pullback(&self) -> Vec<Element> {
        pullback(&self.map, &self.target_extension)
    }
}

impl fmt::Display for SurjectionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} n'={} h={} P'={} pullback={} source={} target={}",
            self.source_size,
            self.target_size,
            list(&self.map, '[', ']'),
            list(&self.target_extension, '{', '}'),
            list(&self.pullback(), '{', '}'),
            self.source_value,
            self.target_value
        )
    }
}

/// A permutation of `0..size` and an extension that `m` judges differently
/// from its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionViolation {
    pub size: usize,
    pub permutation: Vec<Element>,
    pub extension: Vec<Element>,
}

impl fmt::Display for BijectionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} pi={} P={}",
            self.size,
            list(&self.permutation, '[', ']'),
            list(&self.extension, '{', '}')
        )
    }
}

fn list(xs: &[Element], open: char, close: char) -> String {
    let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{open}{}{close}", inner.join(","))
}

fn pullback(map: &[Element], target_extension: &[Element]) -> Vec<Element> {
    (0..map.len())
        .filter(|&i| target_extension.contains(&map[i]))
        .collect()
}

/// Subsets of `0..n`, ordered as binary numerals with element 0 as the
/// least significant bit.
fn subsets(n: usize) -> impl Iterator<Item = Vec<Element>> {
    (0u64..1 << n).map(move |bits| (0..n).filter(|&i| bits >> i & 1 == 1).collect())
}

/// All maps `0..n -> 0..m`, lexicographic on the graph `(h(0), ..., h(n-1))`.
fn maps(n: usize, m: usize) -> impl Iterator<Item = Vec<Element>> {
    let total = m.pow(n as u32);
    (0..total).map(move |mut index| {
        let mut graph = vec![0; n];
        for slot in graph.iter_mut().rev() {
            *slot = index % m;
            index /= m;
        }
        graph
    })
}

fn is_surjective(map: &[Element], target: usize) -> bool {
    (0..target).all(|e| map.contains(&e))
}

fn is_bijective(map: &[Element]) -> bool {
    is_surjective(map, map.len())
}

/// Evaluates `m v. P(v)` on the domain `0..size` with `P` interpreted as
/// `extension`.
pub fn judge(m: &MultisetQuantifier, size: usize, extension: &[Element]) -> Result<TruthValue, KernelError> {
    let mut model = Interpretation::new(size).expect("positive size");
    model
        .set_predicate(PREDICATE, 1, extension.iter().map(|&e| [e]))
        .expect("extension within the domain");
    let phi = Formula::count(
        m.clone(),
        VARIABLE,
        Formula::atom(PREDICATE, vec![Term::var(VARIABLE)]),
    );
    match model.eval_formula(&phi, &Valuation::new()) {
        Ok(t) => Ok(t),
        Err(crate::semantics::EvalError::Kernel(e)) => Err(e),
        Err(e) => unreachable!("closed formula over a complete model: {e}"),
    }
}

/// For all `target <= source` in `1..=max_size`, every surjection
/// `h: 0..source -> 0..target` and every `P' ⊆ 0..target`, `m` must agree
/// on `P'` and `h^-1(P')`. The first violation in that order is returned.
///
/// Panics if `max_size < 2`.
pub fn surjection_invariant(m: &MultisetQuantifier, max_size: usize) -> Result<(), SurjectionViolation> {
    assert!(max_size >= 2, "surjection invariance needs domains up to at least 2");
    for source in 1..=max_size {
        for target in 1..=source {
            for map in maps(source, target).filter(|h| is_surjective(h, target)) {
                for ext in subsets(target) {
                    let back = pullback(&map, &ext);
                    let source_value = judge(m, source, &back).expect("non-empty domain");
                    let target_value = judge(m, target, &ext).expect("non-empty domain");
                    if source_value != target_value {
                        return Err(SurjectionViolation {
                            source_size: source,
                            target_size: target,
                            map,
                            target_extension: ext,
                            source_value,
                            target_value,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Every count rule reads only the number of elements in and out of the
/// extension, which a bijection preserves; this confirms it on every
/// permutation of every domain `0..n`, `n <= max_size`.
pub fn bijection_invariant(m: &MultisetQuantifier, max_size: usize) -> Result<(), BijectionViolation> {
    for size in 1..=max_size {
        for perm in maps(size, size).filter(|p| is_bijective(p)) {
            for ext in subsets(size) {
                let mut image: Vec<Element> = ext.iter().map(|&e| perm[e]).collect();
                image.sort_unstable();
                let before = judge(m, size, &ext).expect("non-empty domain");
                let after = judge(m, size, &image).expect("non-empty domain");
                if before != after {
                    return Err(BijectionViolation {
                        size,
                        permutation: perm,
                        extension: ext,
                    });
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest count total for support factoring.
    pub max_count: usize,
    /// Largest domain for the invariance checks.
    pub max_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_count: DEFAULT_BOUND,
            max_size: DEFAULT_BOUND,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogicalityVerdict {
    Logical,
    CardinalNotLogical,
    Other,
}

impl fmt::Display for LogicalityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogicalityVerdict::Logical => "Logical",
            LogicalityVerdict::CardinalNotLogical => "CardinalNotLogical",
            LogicalityVerdict::Other => "Other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub quantifier: String,
    /// The induced quantifier function, or why there is none.
    pub support: Result<QuantifierFunction, SupportViolation>,
    pub surjection: Result<(), SurjectionViolation>,
    pub bijection: Result<(), BijectionViolation>,
    pub bounds: Bounds,
    pub verdict: LogicalityVerdict,
}

impl Classification {
    pub fn factors_through_support(&self) -> bool {
        self.support.is_ok()
    }

    pub fn surjection_invariant(&self) -> bool {
        self.surjection.is_ok()
    }

    pub fn bijection_invariant(&self) -> bool {
        self.bijection.is_ok()
    }
}

pub fn classify(m: &MultisetQuantifier, bounds: Bounds) -> Classification {
    classify_named(&m.to_string(), m, bounds)
}

pub fn classify_named(name: &str, m: &MultisetQuantifier, bounds: Bounds) -> Classification {
    let support = induced_quantifier_function_up_to(m, bounds.max_count);
    let surjection = surjection_invariant(m, bounds.max_size);
    let bijection = bijection_invariant(m, bounds.max_size);
    let verdict = if support.is_ok() {
        LogicalityVerdict::Logical
    } else if bijection.is_ok() && surjection.is_err() {
        LogicalityVerdict::CardinalNotLogical
    } else {
        LogicalityVerdict::Other
    };
    Classification {
        quantifier: name.to_string(),
        support,
        surjection,
        bijection,
        bounds,
        verdict,
    }
}

/// Reads a quantifier literal: `Q[XYZ]` (a quantifier function, recast as a
/// support-based count rule) or any multiset literal.
pub fn parse_quantifier_literal(text: &str) -> Result<MultisetQuantifier, KernelError> {
    let t = text.trim();
    if t.starts_with("Q[") {
        return t.parse::<QuantifierFunction>().map(MultisetQuantifier::via_support);
    }
    t.parse()
}
