use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use innerlogic::entailment::{self, DEFAULT_BUDGET, DEFAULT_MAX_SIZE};
use innerlogic::logicality::{self, Bounds, DEFAULT_BOUND};
use innerlogic::quantifier_algebra;
use innerlogic::syntax::{parse, parse_inferring, FormulaGenerator};
use innerlogic::{Formula, Interpretation, QuantifierFunction, SearchConfig, Signature, Valuation, Verdict};

mod render;

use render::Line;

const DEFAULT_SEED: u64 = 20240601;

#[derive(Parser)]
#[command(name = "innerlogic", version, about = "Finite-model checks for first-order logic and its quantifiers")]
struct Cli {
    /// Signature file (`const c`, `fun f/2`, `pred P/1`, one per line).
    /// Without it, symbols are inferred from the formulas.
    #[arg(long, global = true)]
    sig: Option<PathBuf>,

    /// Model file, for `eval`.
    #[arg(long, global = true)]
    model: Option<PathBuf>,

    /// Largest domain size searched.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SIZE, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    max_size: usize,

    /// Refuse searches over more interpretations than this.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// One key=value line per result.
    #[arg(long, global = true)]
    machine: bool,

    /// Seed for generated formulas.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a sentence in the model given by --model.
    Eval { formula: String },
    /// Verify the canonical definition of all eight quantifier functions.
    Table,
    /// Verify the canonical definition of one quantifier function, e.g. `Q[FFT]`.
    Define { quantifier: String },
    /// Classify quantifiers by support factoring and invariance.
    Classify {
        #[arg(required = true)]
        quantifiers: Vec<String>,
        /// Largest count total and domain size examined.
        #[arg(long, default_value_t = DEFAULT_BOUND, value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(2..))]
        bound: usize,
    },
    /// Check that two sentences agree in every model.
    Equiv { lhs: String, rhs: String },
    /// Check that a sentence holds in every model.
    Truth { formula: String },
    /// Check that a sentence follows from the premises in a file.
    Consequence { premises: PathBuf, conclusion: String },
    /// Verify the two duality laws and refute a mutated one.
    Duality,
    /// Print and re-parse seeded random formulas.
    Roundtrip {
        #[arg(long, default_value_t = 1000)]
        count: usize,
    },
}

/// What a command produced: lines to print and whether the claim held.
struct Output {
    text: String,
    lines: Vec<Line>,
    ok: bool,
}

impl Output {
    fn new(ok: bool) -> Self {
        Output {
            text: String::new(),
            lines: Vec::new(),
            ok,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.machine {
                for l in &out.lines {
                    println!("{}", l.render());
                }
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.machine {
                println!("{}", Line::new().kv("status", "error").kv("message", format!("{e:#}")).render());
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(2)
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_signature(cli: &Cli) -> Result<Option<Signature>> {
    match &cli.sig {
        None => Ok(None),
        Some(p) => Ok(Some(
            Signature::parse(&read(p)?).with_context(|| format!("in signature {}", p.display()))?,
        )),
    }
}

/// Parses every text against the --sig signature, or infers one signature
/// covering all of them.
fn parse_all(cli: &Cli, texts: &[&str]) -> Result<(Signature, Vec<Formula>)> {
    let declared = load_signature(cli)?;
    let mut sig = declared.clone().unwrap_or_default();
    let mut out = Vec::with_capacity(texts.len());
    for text in texts {
        let phi = match &declared {
            Some(s) => parse(text, s),
            None => parse_inferring(text, &mut sig),
        }
        .with_context(|| format!("cannot parse `{text}`"))?;
        out.push(phi);
    }
    Ok((sig, out))
}

fn config(cli: &Cli) -> SearchConfig {
    SearchConfig {
        max_size: cli.max_size,
        budget: cli.budget,
        ..SearchConfig::default()
    }
}

fn verdict_output(v: Verdict) -> Output {
    let mut out = Output::new(v.holds());
    out.text = render::verdict_text(&v);
    out.lines.push(render::verdict_line(&v));
    out
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Eval { formula } => {
            let path = cli.model.as_ref().context("`eval` needs --model")?;
            let (sig, phis) = parse_all(cli, &[formula])?;
            let model = Interpretation::parse_model(&read(path)?, &sig)
                .with_context(|| format!("in model {}", path.display()))?;
            let phi = &phis[0];
            let free = phi.free_variables();
            if !free.is_empty() {
                bail!("not a sentence: free variable(s) {}", free.into_iter().collect::<Vec<_>>().join(", "));
            }
            let value = model.eval_formula(phi, &Valuation::new())?;
            let mut out = Output::new(true);
            out.text = format!("{value}\n");
            out.lines.push(Line::new().kv("status", "ok").kv("value", value));
            Ok(out)
        }
        Command::Table => {
            let rows = quantifier_algebra::completeness_table(cli.max_size)?;
            let mut out = Output::new(rows.iter().all(|r| r.is_verified()));
            for r in &rows {
                out.text.push_str(&format!("{r}\n"));
                out.lines.push(render::report_line(r));
            }
            Ok(out)
        }
        Command::Define { quantifier } => {
            let q: QuantifierFunction = quantifier
                .parse()
                .with_context(|| format!("`{quantifier}` is not a quantifier function literal like Q[TFT]"))?;
            let r = quantifier_algebra::verify_definition(q, &quantifier_algebra::canonical_definition(q), cli.max_size)?;
            let mut out = Output::new(r.is_verified());
            out.text = format!("{r}\n");
            out.lines.push(render::report_line(&r));
            Ok(out)
        }
        Command::Classify { quantifiers, bound } => {
            let bounds = Bounds {
                max_count: *bound,
                max_size: *bound,
            };
            let rows = quantifiers
                .iter()
                .map(|text| {
                    let m = logicality::parse_quantifier_literal(text)
                        .with_context(|| format!("unknown quantifier `{text}`"))?;
                    Ok(logicality::classify_named(text.trim(), &m, bounds))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut out = Output::new(rows.iter().all(render::is_logical));
            out.text = render::classification_matrix(&rows);
            out.lines = rows.iter().map(render::classification_line).collect();
            Ok(out)
        }
        Command::Equiv { lhs, rhs } => {
            let (sig, phis) = parse_all(cli, &[lhs, rhs])?;
            let v = entailment::check_equivalence(&phis[0], &phis[1], &sig, &config(cli))?;
            Ok(verdict_output(v))
        }
        Command::Truth { formula } => {
            let (sig, phis) = parse_all(cli, &[formula])?;
            let v = entailment::is_logical_truth(&phis[0], &sig, &config(cli))?;
            Ok(verdict_output(v))
        }
        Command::Consequence { premises, conclusion } => {
            let text = read(premises)?;
            let mut texts: Vec<&str> = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .collect();
            texts.push(conclusion);
            let (sig, mut phis) = parse_all(cli, &texts)?;
            let goal = phis.pop().expect("conclusion parsed");
            let v = entailment::consequence(&phis, &goal, &sig, &config(cli))?;
            Ok(verdict_output(v))
        }
        Command::Duality => {
            let laws = quantifier_algebra::verify_duality(cli.max_size)?;
            let mutant = quantifier_algebra::mutated_duality(cli.max_size)?;
            let ok = laws.iter().all(|l| l.verdict.holds()) && !mutant.verdict.holds();
            let mut out = Output::new(ok);
            for law in laws.iter().chain([&mutant]) {
                out.text.push_str(&render::law_text(law));
                out.lines.push(render::law_line(law));
            }
            Ok(out)
        }
        Command::Roundtrip { count } => {
            let sig = match load_signature(cli)? {
                Some(s) => s,
                None => FormulaGenerator::default_signature(),
            };
            let mut g = FormulaGenerator::new(sig.clone(), cli.seed, 5);
            let mut failures = 0usize;
            let mut first = None;
            for _ in 0..*count {
                let phi = g.formula();
                for text in [phi.to_string(), phi.unicode().to_string()] {
                    if parse(&text, &sig).ok().as_ref() != Some(&phi) {
                        failures += 1;
                        first.get_or_insert(text);
                    }
                }
            }
            let mut out = Output::new(failures == 0);
            out.text = format!("{count} formulas, seed {}, {failures} failures\n", cli.seed);
            if let Some(f) = &first {
                out.text.push_str(&format!("first failure: {f}\n"));
            }
            let mut line = Line::new()
                .kv("status", if failures == 0 { "ok" } else { "failed" })
                .kv("count", count)
                .kv("seed", cli.seed)
                .kv("failures", failures);
            if let Some(f) = first {
                line = line.kv("first_failure", f);
            }
            out.lines.push(line);
            Ok(out)
        }
    }
}
