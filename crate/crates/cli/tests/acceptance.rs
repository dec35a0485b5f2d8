//! Acceptance checks, one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always print.

use std::collections::BTreeMap;
use std::fs;
use std::panic;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use innerlogic::entailment::{check_equivalence, enumerate_interpretations};
use innerlogic::logicality::{self, judge, parse_quantifier_literal, Bounds};
use innerlogic::quantifier_algebra::{connective_letter, connective_signature, define_connective, expand_unique};
use innerlogic::syntax::{parse, FormulaGenerator};
use innerlogic::{
    BooleanFunction, Formula, Interpretation, MultisetQuantifier, QuantifierFunction, SearchConfig, Signature,
    Term, TruthValue, Valuation, Verdict,
};

const TABLE_TIME_LIMIT: Duration = Duration::from_secs(1);
const MAX_SIZE: usize = 3;
const LOGICALITY_BOUND: usize = 4;
const ROUND_TRIP_COUNT: usize = 1000;
const ROUND_TRIP_SEED: u64 = 20240601;
const REPEATS: usize = 3;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_innerlogic"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn scratch(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, contents).expect("scratch file");
    path.to_string_lossy().into_owned()
}

/// Splits a machine line into its fields.
fn fields(line: &str) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    let mut chars = line.chars().peekable();
    loop {
        while chars.peek() == Some(&' ') {
            chars.next();
        }
        let key: String = chars.by_ref().take_while(|&c| c != '=').collect();
        if key.is_empty() {
            return out;
        }
        let mut value = String::new();
        if chars.peek() == Some(&'"') {
            chars.next();
            while let Some(c) = chars.next() {
                match c {
                    '\\' => match chars.next() {
                        Some('n') => value.push('\n'),
                        Some(e) => value.push(e),
                        None => {}
                    },
                    '"' => break,
                    c => value.push(c),
                }
            }
        } else {
            while let Some(&c) = chars.peek() {
                if c == ' ' {
                    break;
                }
                value.push(c);
                chars.next();
            }
        }
        out.insert(key, value);
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let o = run(&["table", "--machine"]);
    let elapsed = start.elapsed();
    let text = stdout(&o);
    let rows: Vec<_> = text.lines().map(fields).collect();
    ensure(rows.len() == 8, format!("{} rows", rows.len()))?;
    let expected: Vec<String> = QuantifierFunction::all().iter().map(|q| q.to_string()).collect();
    let got: Vec<String> = rows.iter().map(|r| r["quantifier"].clone()).collect();
    ensure(got == expected, format!("quantifiers {got:?}"))?;
    for r in &rows {
        ensure(r["status"] == "verified" && r["up_to"] == "3", format!("row {r:?}"))?;
        let d = parse(&r["definition"], &Signature::schematic()).map_err(|e| e.to_string())?;
        ensure(only_standard(&d), format!("non-standard definition {d}"))?;
    }
    let cfg = SearchConfig::with_max_size(MAX_SIZE);
    let models: usize = (1..=MAX_SIZE)
        .map(|n| enumerate_interpretations(&Signature::schematic(), n, &cfg).unwrap().iter().count())
        .sum();
    ensure(models == 14, format!("{models} interpretations"))?;
    ensure(o.status.code() == Some(0), "exit code")?;
    ensure(elapsed < TABLE_TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("8 rows Verified over {models} interpretations in {} ms", elapsed.as_millis()))
}

fn only_standard(f: &Formula) -> bool {
    match f {
        Formula::Atom(..) => true,
        Formula::Equals(..) | Formula::Count { .. } => false,
        Formula::Not(a) => only_standard(a),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            only_standard(a) && only_standard(b)
        }
        Formula::Quant { q, body, .. } => {
            (*q == QuantifierFunction::FORALL || *q == QuantifierFunction::EXISTS) && only_standard(body)
        }
    }
}

fn criterion_2() -> Outcome {
    let o = run(&["duality", "--machine"]);
    let rows: Vec<_> = stdout(&o).lines().map(fields).collect();
    ensure(rows.len() == 3, format!("{} lines", rows.len()))?;
    for r in &rows[..2] {
        ensure(r["status"] == "holds" && r["max_size"] == "3", format!("law {r:?}"))?;
    }
    let mutant = &rows[2];
    ensure(mutant["status"] == "countermodel", "mutant not refuted")?;
    // the countermodel must really separate the two sides
    let sig = Signature::schematic();
    let m = Interpretation::parse_model(&mutant["model"], &sig).map_err(|e| e.to_string())?;
    let lhs = parse(&mutant["lhs"], &sig).map_err(|e| e.to_string())?;
    let rhs = parse(&mutant["rhs"], &sig).map_err(|e| e.to_string())?;
    let none = Valuation::new();
    ensure(m.eval_formula(&lhs, &none) != m.eval_formula(&rhs, &none), "countermodel does not separate")?;
    ensure(o.status.code() == Some(0), "exit code")?;
    Ok(format!("2 laws HoldsUpTo(3), mutant refuted by `{}`", mutant["model"]))
}

fn criterion_3() -> Outcome {
    let sig = Signature::schematic();
    let sv = Formula::atom("S", vec![Term::var("v")]);
    let counted = Formula::count(MultisetQuantifier::Exactly(1), "v", sv.clone());
    let expanded = expand_unique(&sv, "v");
    let v = check_equivalence(&counted, &expanded, &sig, &SearchConfig::with_max_size(MAX_SIZE))
        .map_err(|e| e.to_string())?;
    ensure(v == Verdict::HoldsUpTo(MAX_SIZE), format!("{v}"))?;
    Ok(format!("exactly(1) v. S(v) == {expanded}: {v}"))
}

fn criterion_4() -> Outcome {
    let logical: Vec<String> = QuantifierFunction::all().iter().map(|q| q.to_string()).collect();
    // atleast(1) coincides with the existential and so is not count-sensitive
    let cardinal: Vec<String> = (1..=3)
        .map(|k| format!("exactly({k})"))
        .chain((2..=3).map(|k| format!("atleast({k})")))
        .collect();
    let extra: Vec<String> = ["atleast(0)", "atleast(1)", "atmost(0)", "atmost(1)", "atmost(2)", "exactly(0)", "exactly(4)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let bound = LOGICALITY_BOUND.to_string();
    let mut args: Vec<&str> = vec!["classify", "--machine", "--bound", &bound];
    let all: Vec<String> = logical.iter().chain(&cardinal).chain(&extra).cloned().collect();
    args.extend(all.iter().map(String::as_str));
    let first = stdout(&run(&args));
    ensure(stdout(&run(&args)) == first, "classification output not reproducible")?;
    let rows: BTreeMap<String, BTreeMap<String, String>> = first
        .lines()
        .map(fields)
        .map(|r| (r["quantifier"].clone(), r))
        .collect();
    ensure(rows.len() == all.len(), "missing rows")?;
    for name in &logical {
        ensure(rows[name]["verdict"] == "Logical", format!("{name}: {:?}", rows[name]))?;
    }
    for name in &cardinal {
        let r = &rows[name];
        ensure(r["verdict"] == "CardinalNotLogical", format!("{name}: {r:?}"))?;
        ensure(r["bijection_invariant"] == "yes", format!("{name} not bijection-invariant"))?;
        // replay the surjection witness from the library
        let m = parse_quantifier_literal(name).map_err(|e| e.to_string())?;
        let c = logicality::classify(&m, Bounds { max_count: LOGICALITY_BOUND, max_size: LOGICALITY_BOUND });
        let w = c.surjection.map(|_| ()).err().ok_or(format!("{name}: no witness"))?;
        ensure(w.to_string() == r["surjection_witness"], format!("{name}: witness differs"))?;
        ensure(
            judge(&m, w.source_size, &w.pullback()) == Ok(w.source_value)
                && judge(&m, w.target_size, &w.target_extension) == Ok(w.target_value)
                && w.source_value != w.target_value,
            format!("{name}: witness does not replay"),
        )?;
    }
    for (name, r) in &rows {
        ensure(
            r["support_factoring"] == r["surjection_invariant"],
            format!("{name}: factoring and surjection disagree"),
        )?;
    }
    Ok(format!(
        "8 Logical, {} CardinalNotLogical with replayed witnesses, factoring = surjection on all {} at bound {LOGICALITY_BOUND}",
        cardinal.len(),
        rows.len()
    ))
}

fn criterion_5() -> Outcome {
    let check = |args: &[&str], status: &str, code: i32| -> Result<BTreeMap<String, String>, String> {
        let mut full = args.to_vec();
        full.push("--machine");
        let o = run(&full);
        let line = stdout(&o);
        let r = fields(line.trim_end());
        ensure(
            r.get("status").map(String::as_str) == Some(status) && o.status.code() == Some(code),
            format!("{args:?}: {line}"),
        )?;
        Ok(r)
    };
    for phi in ["~A | A", "forall x. x = x"] {
        let r = check(&["truth", phi], "holds", 0)?;
        ensure(r["max_size"] == "3", format!("{phi}: {r:?}"))?;
    }
    let premises = scratch("premises-ab.txt", "A & B\n");
    let r = check(&["consequence", &premises, "B"], "holds", 0)?;
    ensure(r["max_size"] == "3", "A & B |= B")?;
    let empty = scratch("premises-empty.txt", "");
    let r = check(&["consequence", &empty, "exists v. P(v)"], "countermodel", 1)?;
    ensure(r["size"] == "1", format!("countermodel size {}", r["size"]))?;
    Ok(format!("3 HoldsUpTo(3), countermodel `{}`", r["model"]))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for arity in [1usize, 2] {
        let sig = connective_signature(arity);
        for bf in BooleanFunction::all(arity) {
            let phi = define_connective(&bf).map_err(|e| e.to_string())?;
            for row in 0..1usize << arity {
                let args: Vec<TruthValue> = (0..arity).map(|i| (row >> (arity - 1 - i) & 1 == 1).into()).collect();
                let mut m = Interpretation::new(1).unwrap();
                for (i, a) in args.iter().enumerate() {
                    m.set_predicate_bits(&connective_letter(i), 0, vec![a.is_true()]).unwrap();
                }
                m.check_signature(&sig).map_err(|e| e.to_string())?;
                let got = m.eval_formula(&phi, &Valuation::new()).map_err(|e| e.to_string())?;
                ensure(got == bf.eval(&args), format!("{phi} at row {row}"))?;
            }
            checked += 1;
        }
    }
    ensure(checked == 20, format!("{checked} functions"))?;
    Ok("4 unary and 16 binary truth tables reproduced".into())
}

fn criterion_7() -> Outcome {
    let mut g = FormulaGenerator::round_trip_default(ROUND_TRIP_SEED);
    let sig = g.signature().clone();
    let mut failures = 0;
    for _ in 0..ROUND_TRIP_COUNT {
        let phi = g.formula();
        if parse(&phi.to_string(), &sig).ok() != Some(phi.clone())
            || parse(&phi.unicode().to_string(), &sig).ok() != Some(phi)
        {
            failures += 1;
        }
    }
    ensure(failures == 0, format!("{failures} library failures"))?;
    let count = ROUND_TRIP_COUNT.to_string();
    let seed = ROUND_TRIP_SEED.to_string();
    let r = fields(stdout(&run(&["roundtrip", "--machine", "--count", &count, "--seed", &seed])).trim_end());
    ensure(r["failures"] == "0" && r["count"] == count, format!("cli: {r:?}"))?;
    Ok(format!("{ROUND_TRIP_COUNT} formulas (seed {ROUND_TRIP_SEED}), ASCII and Unicode, 0 failures"))
}

fn criterion_8() -> Outcome {
    let model = scratch("model-p0.txt", "domain 2\npred P = {0}\n");
    let premises = scratch("premises-det.txt", "# premises\nforall x. P(x) -> Q(x)\nexists x. P(x)\n");
    let commands: Vec<Vec<&str>> = vec![
        vec!["eval", "--model", &model, "exactly(1) v. P(v)"],
        vec!["table"],
        vec!["define", "Q[FFT]"],
        vec!["classify", "exactly(1)", "atleast(2)", "Q[TFT]", "atmost(1)"],
        vec!["equiv", "forall x. exists y. R(x, y)", "exists y. forall x. R(x, y)"],
        vec!["truth", "exists x. forall y. R(x, y) | P(y)"],
        vec!["truth", "forall x. x = x"],
        vec!["consequence", &premises, "exists x. Q(x)"],
        vec!["consequence", &premises, "forall x. Q(x)"],
        vec!["duality"],
        vec!["roundtrip", "--count", "200"],
    ];
    // the three runs use different worker counts
    let threads = [None, Some("1"), Some("8")];
    for args in &commands {
        let mut outputs = Vec::new();
        for t in threads.iter().take(REPEATS) {
            let mut c = bin();
            c.args(args).arg("--machine");
            if let Some(n) = t {
                c.env("RAYON_NUM_THREADS", n);
            }
            let o = c.output().expect("binary runs");
            outputs.push((o.stdout, o.status.code()));
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), format!("{args:?} differs between runs"))?;
        ensure(!outputs[0].0.is_empty(), format!("{args:?} printed nothing"))?;
    }
    Ok(format!("{} commands byte-identical over {REPEATS} runs (1, 8 and default threads)", commands.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 quantifier count and completeness", criterion_1),
        ("2 duality", criterion_2),
        ("3 unique existence bridge", criterion_3),
        ("4 classification matrix", criterion_4),
        ("5 logical truths and consequences", criterion_5),
        ("6 connective completeness", criterion_6),
        ("7 parser round trip", criterion_7),
        ("8 determinism", criterion_8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
