//! Seeded random formulas, for round-trip and stress testing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Formula, Signature, SymbolKind, Term};
use crate::kernel::{CountPair, CustomTable, MultisetQuantifier, QuantifierFunction, TruthValue};

const VARIABLES: &[&str] = &["x", "y", "z", "w"];

pub struct FormulaGenerator {
    sig: Signature,
    rng: ChaCha8Rng,
    max_depth: usize,
    variables: Vec<String>,
}

impl FormulaGenerator {
    /// Variables are drawn from `x, y, z, w`, skipping names the signature uses.
    pub fn new(sig: Signature, seed: u64, max_depth: usize) -> Self {
        let variables = VARIABLES
            .iter()
            .filter(|v| sig.kind(v).is_none())
            .map(|v| v.to_string())
            .collect();
        FormulaGenerator {
            sig,
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_depth,
            variables,
        }
    }

    /// The signature used by [`FormulaGenerator::round_trip_default`].
    pub fn default_signature() -> Signature {
        Signature::parse("const a\nconst b\nfun f/1\nfun g/2\npred A/0\npred B/0\npred P/1\npred R/2\n")
            .expect("static signature")
    }

    pub fn round_trip_default(seed: u64) -> Self {
        FormulaGenerator::new(Self::default_signature(), seed, 5)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn formula(&mut self) -> Formula {
        self.formula_at(self.max_depth)
    }

    fn term(&mut self, depth: usize) -> Term {
        let constants: Vec<String> = self.sig.constants().map(str::to_string).collect();
        let functions: Vec<(String, usize)> =
            self.sig.functions().map(|(n, a)| (n.to_string(), a)).collect();
        let choice = self.rng.gen_range(0..3);
        if choice == 2 && depth > 0 && !functions.is_empty() {
            let (name, arity) = functions.choose(&mut self.rng).expect("non-empty").clone();
            let args = (0..arity).map(|_| self.term(depth - 1)).collect();
            return Term::Apply(name, args);
        }
        if choice == 1 && !constants.is_empty() || self.variables.is_empty() {
            if let Some(c) = constants.choose(&mut self.rng) {
                return Term::Const(c.clone());
            }
        }
        Term::Var(self.variables.choose(&mut self.rng).expect("variables").clone())
    }

    fn atomic(&mut self) -> Formula {
        let predicates: Vec<(String, usize)> =
            self.sig.predicates().map(|(n, a)| (n.to_string(), a)).collect();
        if predicates.is_empty() || self.rng.gen_bool(0.2) {
            let l = self.term(2);
            let r = self.term(2);
            return Formula::Equals(l, r);
        }
        let (name, arity) = predicates.choose(&mut self.rng).expect("non-empty").clone();
        let args = (0..arity).map(|_| self.term(2)).collect();
        debug_assert_eq!(self.sig.kind(&name), Some(SymbolKind::Predicate(arity)));
        Formula::Atom(name, args)
    }

    fn multiset_quantifier(&mut self) -> MultisetQuantifier {
        let k = self.rng.gen_range(0..4);
        match self.rng.gen_range(0..4) {
            0 => MultisetQuantifier::Exactly(k),
            1 => MultisetQuantifier::AtLeast(k),
            2 => MultisetQuantifier::AtMost(k),
            _ => {
                let tail = *QuantifierFunction::all().choose(&mut self.rng).expect("eight");
                let entries: Vec<(CountPair, TruthValue)> = (0..self.rng.gen_range(0..3))
                    .map(|_| {
                        let t = self.rng.gen_range(0..3);
                        let f = self.rng.gen_range(if t == 0 { 1 } else { 0 }..3);
                        (CountPair::new(t, f), self.rng.gen_bool(0.5).into())
                    })
                    .collect();
                MultisetQuantifier::Custom(CustomTable::new(entries, tail).expect("non-empty pairs"))
            }
        }
    }

    fn formula_at(&mut self, depth: usize) -> Formula {
        if depth == 0 {
            return self.atomic();
        }
        let sub = |g: &mut Self| Box::new(g.formula_at(depth - 1));
        match self.rng.gen_range(0..9) {
            0 => self.atomic(),
            1 => Formula::Not(sub(self)),
            2 => Formula::And(sub(self), sub(self)),
            3 => Formula::Or(sub(self), sub(self)),
            4 => Formula::Implies(sub(self), sub(self)),
            5 => Formula::Iff(sub(self), sub(self)),
            6 | 7 if !self.variables.is_empty() => {
                let q = *QuantifierFunction::all().choose(&mut self.rng).expect("eight");
                let var = self.variables.choose(&mut self.rng).expect("variables").clone();
                Formula::Quant { q, var, body: sub(self) }
            }
            8 if !self.variables.is_empty() => {
                let m = self.multiset_quantifier();
                let var = self.variables.choose(&mut self.rng).expect("variables").clone();
                Formula::Count { m, var, body: sub(self) }
            }
            _ => self.atomic(),
        }
    }
}
