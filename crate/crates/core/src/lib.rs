//! A first-order language whose logical constants are the connectives and
//! the quantifier functions: maps from the non-empty sets of truth values to
//! truth values. Cardinal quantifiers, which read how many elements satisfy
//! a formula, live alongside them and are classified as non-logical.
//!
//! - [`kernel`]: truth values, truth sets, quantifier functions, count rules
//! - [`syntax`]: signatures, formulas, parser and printer
//! - [`semantics`]: finite interpretations and evaluation
//! - [`quantifier_algebra`]: definitions of all eight quantifier functions
//!   from `forall`/`exists`, duality, unique existence, connectives
//! - [`logicality`]: support factoring and invariance checks
//! - [`entailment`]: bounded finite-model search with countermodels

pub mod entailment;
pub mod kernel;
pub mod logicality;
pub mod quantifier_algebra;
pub mod semantics;
pub mod syntax;

pub use entailment::{SearchConfig, Verdict};
pub use kernel::{
    BooleanFunction, CountPair, CustomTable, MultisetQuantifier, QuantifierFunction, TruthSet, TruthValue,
};
pub use semantics::{Element, Interpretation, Valuation};
pub use syntax::{Formula, Signature, Term};
