//! Independent reference evaluator for the test suites.
//!
//! Models are bitmasks: a unary predicate over `0..n` is a `u64` whose bit
//! `i` says whether element `i` is in the extension, a nullary predicate is
//! a single bit. Quantifiers are evaluated by explicit case analysis on the
//! collected booleans, without going through the library's evaluator or
//! truth-set machinery.

#![allow(dead_code)]

use std::collections::HashMap;

use innerlogic::{Formula, MultisetQuantifier, QuantifierFunction, Term, TruthValue};

pub struct BitModel {
    pub size: usize,
    pub preds: HashMap<String, u64>,
    pub consts: HashMap<String, usize>,
}

impl BitModel {
    pub fn unary(name: &str, size: usize, mask: u64) -> Self {
        BitModel {
            size,
            preds: HashMap::from([(name.to_string(), mask)]),
            consts: HashMap::new(),
        }
    }
}

/// All models of one unary predicate with domain sizes `1..=max`, ordered
/// by size and then by mask.
pub fn unary_models(name: &str, max: usize) -> Vec<BitModel> {
    (1..=max)
        .flat_map(|n| (0..1u64 << n).map(move |mask| (n, mask)))
        .map(|(n, mask)| BitModel::unary(name, n, mask))
        .collect()
}

fn term(t: &Term, m: &BitModel, env: &[(String, usize)]) -> usize {
    match t {
        Term::Var(v) => env.iter().rev().find(|(n, _)| n == v).map(|(_, e)| *e).expect("bound"),
        Term::Const(c) => m.consts[c],
        Term::Apply(..) => unimplemented!("oracle has no functions"),
    }
}

fn tv(t: TruthValue) -> bool {
    t == TruthValue::True
}

fn quantifier_function(q: &QuantifierFunction, any_true: bool, any_false: bool) -> bool {
    match (any_true, any_false) {
        (true, false) => tv(q.on_only_true),
        (false, true) => tv(q.on_only_false),
        (true, true) => tv(q.on_mixed),
        (false, false) => unreachable!("non-empty domain"),
    }
}

fn count_rule(m: &MultisetQuantifier, trues: u64, falses: u64) -> bool {
    match m {
        MultisetQuantifier::Exactly(k) => trues == *k,
        MultisetQuantifier::AtLeast(k) => trues >= *k,
        MultisetQuantifier::AtMost(k) => trues <= *k,
        MultisetQuantifier::Custom(table) => {
            let hit = table
                .entries()
                .iter()
                .find(|(c, _)| c.true_count == trues && c.false_count == falses);
            match hit {
                Some((_, v)) => tv(*v),
                None => quantifier_function(&table.tail(), trues > 0, falses > 0),
            }
        }
    }
}

pub fn eval(phi: &Formula, m: &BitModel) -> bool {
    eval_in(phi, m, &mut Vec::new())
}

pub fn eval_in(phi: &Formula, m: &BitModel, env: &mut Vec<(String, usize)>) -> bool {
    match phi {
        Formula::Atom(p, args) => {
            let mask = m.preds[p];
            match args.as_slice() {
                [] => mask & 1 == 1,
                [t] => mask >> term(t, m, env) & 1 == 1,
                _ => unimplemented!("oracle has no binary predicates"),
            }
        }
        Formula::Equals(l, r) => term(l, m, env) == term(r, m, env),
        Formula::Not(f) => !eval_in(f, m, env),
        Formula::And(l, r) => eval_in(l, m, env) && eval_in(r, m, env),
        Formula::Or(l, r) => eval_in(l, m, env) || eval_in(r, m, env),
        Formula::Implies(l, r) => !eval_in(l, m, env) || eval_in(r, m, env),
        Formula::Iff(l, r) => eval_in(l, m, env) == eval_in(r, m, env),
        Formula::Quant { q, var, body } => {
            let values = instances(var, body, m, env);
            quantifier_function(q, values.iter().any(|&b| b), values.iter().any(|&b| !b))
        }
        Formula::Count { m: rule, var, body } => {
            let values = instances(var, body, m, env);
            let trues = values.iter().filter(|&&b| b).count() as u64;
            count_rule(rule, trues, values.len() as u64 - trues)
        }
    }
}

fn instances(var: &str, body: &Formula, m: &BitModel, env: &mut Vec<(String, usize)>) -> Vec<bool> {
    (0..m.size)
        .map(|e| {
            env.push((var.to_string(), e));
            let b = eval_in(body, m, env);
            env.pop();
            b
        })
        .collect()
}
