//! Truth-value algebra.
//!
//! Truth values, the three truth sets a formula can take as one variable
//! ranges over a non-empty domain, quantifier functions on those sets,
//! count-based (cardinal) quantifiers and Boolean functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("count pair (0,0) has no support: domains must be non-empty")]
    EmptyCount,
    #[error("malformed quantifier literal `{0}`")]
    BadLiteral(String),
    #[error("boolean function of arity {arity} needs {expected} table entries, got {got}")]
    TableSize {
        arity: usize,
        expected: usize,
        got: usize,
    },
    #[error("boolean function arity {0} is too large")]
    ArityTooLarge(usize),
}

/// `True` sorts before `False`; the canonical orderings below rely on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruthValue {
    True,
    False,
}

impl TruthValue {
    pub const BOTH: [TruthValue; 2] = [TruthValue::True, TruthValue::False];

    pub fn is_true(self) -> bool {
        self == TruthValue::True
    }

    /// One-letter spelling used by the `Q[XYZ]` literals.
    pub fn letter(self) -> char {
        match self {
            TruthValue::True => 'T',
            TruthValue::False => 'F',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'T' => Some(TruthValue::True),
            'F' => Some(TruthValue::False),
            _ => None,
        }
    }
}

impl From<bool> for TruthValue {
    fn from(b: bool) -> Self {
        if b {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }
}

impl From<TruthValue> for bool {
    fn from(t: TruthValue) -> bool {
        t.is_true()
    }
}

impl Not for TruthValue {
    type Output = TruthValue;
    fn not(self) -> TruthValue {
        match self {
            TruthValue::True => TruthValue::False,
            TruthValue::False => TruthValue::True,
        }
    }
}

impl BitAnd for TruthValue {
    type Output = TruthValue;
    fn bitand(self, rhs: TruthValue) -> TruthValue {
        (self.is_true() && rhs.is_true()).into()
    }
}

impl BitOr for TruthValue {
    type Output = TruthValue;
    fn bitor(self, rhs: TruthValue) -> TruthValue {
        (self.is_true() || rhs.is_true()).into()
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthValue::True => f.write_str("True"),
            TruthValue::False => f.write_str("False"),
        }
    }
}

/// A non-empty subset of `{True, False}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TruthSet {
    OnlyTrue,
    OnlyFalse,
    Mixed,
}

impl TruthSet {
    pub const ALL: [TruthSet; 3] = [TruthSet::OnlyTrue, TruthSet::OnlyFalse, TruthSet::Mixed];

    pub fn singleton(t: TruthValue) -> Self {
        match t {
            TruthValue::True => TruthSet::OnlyTrue,
            TruthValue::False => TruthSet::OnlyFalse,
        }
    }

    /// Set union.
    pub fn join(self, other: TruthSet) -> TruthSet {
        if self == other {
            self
        } else {
            TruthSet::Mixed
        }
    }

    /// Adds one more observed value to the set.
    pub fn with(self, t: TruthValue) -> TruthSet {
        self.join(TruthSet::singleton(t))
    }

    pub fn contains(self, t: TruthValue) -> bool {
        match self {
            TruthSet::OnlyTrue => t.is_true(),
            TruthSet::OnlyFalse => !t.is_true(),
            TruthSet::Mixed => true,
        }
    }

    /// Collapses a sequence of observed truth values; `None` for an empty sequence.
    pub fn collect<I: IntoIterator<Item = TruthValue>>(values: I) -> Option<TruthSet> {
        values.into_iter().fold(None, |acc, t| match acc {
            None => Some(TruthSet::singleton(t)),
            Some(s) => Some(s.with(t)),
        })
    }
}

impl fmt::Display for TruthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TruthSet::OnlyTrue => f.write_str("{True}"),
            TruthSet::OnlyFalse => f.write_str("{False}"),
            TruthSet::Mixed => f.write_str("{True,False}"),
        }
    }
}

/// A total map from [`TruthSet`] to [`TruthValue`]: the meaning of a logical
/// quantifier. There are exactly eight of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuantifierFunction {
    pub on_only_true: TruthValue,
    pub on_only_false: TruthValue,
    pub on_mixed: TruthValue,
}

impl QuantifierFunction {
    pub const FORALL: QuantifierFunction =
        QuantifierFunction::new(TruthValue::True, TruthValue::False, TruthValue::False);
    pub const EXISTS: QuantifierFunction =
        QuantifierFunction::new(TruthValue::True, TruthValue::False, TruthValue::True);

    pub const fn new(on_only_true: TruthValue, on_only_false: TruthValue, on_mixed: TruthValue) -> Self {
        QuantifierFunction {
            on_only_true,
            on_only_false,
            on_mixed,
        }
    }

    pub fn from_fn(f: impl Fn(TruthSet) -> TruthValue) -> Self {
        QuantifierFunction::new(
            f(TruthSet::OnlyTrue),
            f(TruthSet::OnlyFalse),
            f(TruthSet::Mixed),
        )
    }

    pub fn eval(&self, s: TruthSet) -> TruthValue {
        match s {
            TruthSet::OnlyTrue => self.on_only_true,
            TruthSet::OnlyFalse => self.on_only_false,
            TruthSet::Mixed => self.on_mixed,
        }
    }

    /// All eight quantifier functions, lexicographic on
    /// `(on_only_true, on_only_false, on_mixed)` with `True < False`.
    pub fn all() -> [QuantifierFunction; 8] {
        let mut out = [QuantifierFunction::FORALL; 8];
        let mut i = 0;
        for a in TruthValue::BOTH {
            for b in TruthValue::BOTH {
                for c in TruthValue::BOTH {
                    out[i] = QuantifierFunction::new(a, b, c);
                    i += 1;
                }
            }
        }
        out
    }

    /// The `XYZ` triple, e.g. `TFF` for the universal quantifier.
    pub fn triple(&self) -> String {
        [self.on_only_true, self.on_only_false, self.on_mixed]
            .iter()
            .map(|t| t.letter())
            .collect()
    }

    pub fn from_triple(s: &str) -> Option<Self> {
        let mut it = s.chars().map(TruthValue::from_letter);
        let q = QuantifierFunction::new(it.next()??, it.next()??, it.next()??);
        if it.next().is_some() {
            return None;
        }
        Some(q)
    }
}

impl fmt::Display for QuantifierFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.triple())
    }
}

impl FromStr for QuantifierFunction {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        t.strip_prefix("Q[")
            .and_then(|r| r.strip_suffix(']'))
            .and_then(QuantifierFunction::from_triple)
            .ok_or_else(|| KernelError::BadLiteral(s.to_string()))
    }
}

pub fn enumerate_quantifier_functions() -> Vec<QuantifierFunction> {
    QuantifierFunction::all().to_vec()
}

/// A multiset of truth values: how many domain elements make a formula true
/// and how many make it false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountPair {
    pub true_count: u64,
    pub false_count: u64,
}

impl CountPair {
    pub const fn new(true_count: u64, false_count: u64) -> Self {
        CountPair {
            true_count,
            false_count,
        }
    }

    pub fn total(&self) -> u64 {
        self.true_count + self.false_count
    }

    /// Forgets multiplicities.
    pub fn support(&self) -> Result<TruthSet, KernelError> {
        match (self.true_count, self.false_count) {
            (0, 0) => Err(KernelError::EmptyCount),
            (_, 0) => Ok(TruthSet::OnlyTrue),
            (0, _) => Ok(TruthSet::OnlyFalse),
            _ => Ok(TruthSet::Mixed),
        }
    }

    /// Every non-empty count pair with total at most `max_total`, ordered
    /// lexicographically on `(true_count, false_count)`.
    pub fn up_to(max_total: u64) -> impl Iterator<Item = CountPair> {
        (0..=max_total).flat_map(move |t| {
            (0..=max_total - t)
                .map(move |f| CountPair::new(t, f))
                .filter(|c| c.total() > 0)
        })
    }
}

impl fmt::Display for CountPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.true_count, self.false_count)
    }
}

pub fn support_of(c: CountPair) -> Result<TruthSet, KernelError> {
    c.support()
}

/// A finite table of exceptions plus one fallback value per support class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CustomTable {
    entries: BTreeMap<CountPair, TruthValue>,
    tail: QuantifierFunction,
}

impl CustomTable {
    pub fn new(
        entries: impl IntoIterator<Item = (CountPair, TruthValue)>,
        tail: QuantifierFunction,
    ) -> Result<Self, KernelError> {
        let entries: BTreeMap<_, _> = entries.into_iter().collect();
        if entries.keys().any(|c| c.total() == 0) {
            return Err(KernelError::EmptyCount);
        }
        Ok(CustomTable { entries, tail })
    }

    pub fn entries(&self) -> &BTreeMap<CountPair, TruthValue> {
        &self.entries
    }

    pub fn tail(&self) -> QuantifierFunction {
        self.tail
    }
}

/// A quantifier whose truth condition reads the full [`CountPair`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MultisetQuantifier {
    Exactly(u64),
    AtLeast(u64),
    AtMost(u64),
    Custom(CustomTable),
}

impl MultisetQuantifier {
    /// Recasts a quantifier function as a count rule that only looks at the
    /// support of its argument.
    pub fn via_support(q: QuantifierFunction) -> Self {
        MultisetQuantifier::Custom(CustomTable {
            entries: BTreeMap::new(),
            tail: q,
        })
    }

    pub fn eval(&self, c: CountPair) -> Result<TruthValue, KernelError> {
        let support = c.support()?;
        let t = c.true_count;
        Ok(match self {
            MultisetQuantifier::Exactly(k) => (t == *k).into(),
            MultisetQuantifier::AtLeast(k) => (t >= *k).into(),
            MultisetQuantifier::AtMost(k) => (t <= *k).into(),
            MultisetQuantifier::Custom(table) => match table.entries.get(&c) {
                Some(v) => *v,
                None => table.tail.eval(support),
            },
        })
    }
}

impl fmt::Display for MultisetQuantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultisetQuantifier::Exactly(k) => write!(f, "exactly({k})"),
            MultisetQuantifier::AtLeast(k) => write!(f, "atleast({k})"),
            MultisetQuantifier::AtMost(k) => write!(f, "atmost({k})"),
            MultisetQuantifier::Custom(table) => {
                f.write_str("table(")?;
                for (i, (c, v)) in table.entries.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}:{}={}", c.true_count, c.false_count, v.letter())?;
                }
                write!(f, ";{})", table.tail.triple())
            }
        }
    }
}

impl FromStr for MultisetQuantifier {
    type Err = KernelError;

    /// Parses `exactly(k)`, `atleast(k)`, `atmost(k)` and
    /// `table(t:f=V,...;XYZ)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || KernelError::BadLiteral(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, rest) = t.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let count = || inner.parse::<u64>().map_err(|_| bad());
        match head {
            "exactly" => Ok(MultisetQuantifier::Exactly(count()?)),
            "atleast" => Ok(MultisetQuantifier::AtLeast(count()?)),
            "atmost" => Ok(MultisetQuantifier::AtMost(count()?)),
            "table" => {
                let (entries, tail) = inner.split_once(';').ok_or_else(bad)?;
                let tail = QuantifierFunction::from_triple(tail).ok_or_else(bad)?;
                let mut parsed = Vec::new();
                for entry in entries.split(',').filter(|e| !e.is_empty()) {
                    let (pair, value) = entry.split_once('=').ok_or_else(bad)?;
                    let (tc, fc) = pair.split_once(':').ok_or_else(bad)?;
                    let mut letters = value.chars();
                    let v = letters.next().and_then(TruthValue::from_letter).ok_or_else(bad)?;
                    if letters.next().is_some() {
                        return Err(bad());
                    }
                    let c = CountPair::new(
                        tc.parse().map_err(|_| bad())?,
                        fc.parse().map_err(|_| bad())?,
                    );
                    parsed.push((c, v));
                }
                Ok(MultisetQuantifier::Custom(CustomTable::new(parsed, tail)?))
            }
            _ => Err(bad()),
        }
    }
}

/// Maximum arity accepted by [`BooleanFunction`]; 2^16 rows.
pub const MAX_BOOLEAN_ARITY: usize = 16;

/// A total map `{True, False}^n -> {True, False}`.
///
/// Rows are indexed by reading the arguments as a binary numeral, first
/// argument most significant, `False` as 0 and `True` as 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    arity: usize,
    table: Vec<TruthValue>,
}

impl BooleanFunction {
    pub fn new(arity: usize, table: Vec<TruthValue>) -> Result<Self, KernelError> {
        if arity > MAX_BOOLEAN_ARITY {
            return Err(KernelError::ArityTooLarge(arity));
        }
        let expected = 1usize << arity;
        if table.len() != expected {
            return Err(KernelError::TableSize {
                arity,
                expected,
                got: table.len(),
            });
        }
        Ok(BooleanFunction { arity, table })
    }

    pub fn from_fn(arity: usize, f: impl Fn(&[TruthValue]) -> TruthValue) -> Result<Self, KernelError> {
        if arity > MAX_BOOLEAN_ARITY {
            return Err(KernelError::ArityTooLarge(arity));
        }
        let table = (0..1usize << arity)
            .map(|row| f(&Self::row_arguments(arity, row)))
            .collect();
        BooleanFunction::new(arity, table)
    }

    /// All `2^(2^arity)` functions of the given arity, ordered by table bits.
    pub fn all(arity: usize) -> Vec<BooleanFunction> {
        assert!(arity <= 4, "enumerating all boolean functions of arity {arity} is infeasible");
        let rows = 1usize << arity;
        (0..1u64 << rows)
            .map(|bits| BooleanFunction {
                arity,
                table: (0..rows).map(|r| (bits >> r & 1 == 1).into()).collect(),
            })
            .collect()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[TruthValue] {
        &self.table
    }

    pub fn row_arguments(arity: usize, row: usize) -> Vec<TruthValue> {
        (0..arity)
            .map(|i| (row >> (arity - 1 - i) & 1 == 1).into())
            .collect()
    }

    pub fn row_index(args: &[TruthValue]) -> usize {
        args.iter().fold(0, |acc, a| acc << 1 | a.is_true() as usize)
    }

    pub fn eval(&self, args: &[TruthValue]) -> TruthValue {
        assert_eq!(args.len(), self.arity, "boolean function arity mismatch");
        self.table[Self::row_index(args)]
    }
}
