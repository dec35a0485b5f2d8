//! Text and machine renderings of results.
//!
//! Machine mode prints one `key=value` line per result. Values that contain
//! whitespace, quotes or `=` are double-quoted with `\"` and `\\` escapes.

use std::fmt::Write;

use innerlogic::logicality::{Classification, LogicalityVerdict};
use innerlogic::quantifier_algebra::{DefinabilityReport, DefinabilityStatus, LawCheck};
use innerlogic::{Interpretation, Verdict};

pub struct Line(Vec<(&'static str, String)>);

impl Line {
    pub fn new() -> Self {
        Line(Vec::new())
    }

    pub fn kv(mut self, key: &'static str, value: impl ToString) -> Self {
        self.0.push((key, value.to_string()));
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{k}={}", quote(v));
        }
        out
    }
}

fn quote(v: &str) -> String {
    let plain = !v.is_empty() && !v.chars().any(|c| c.is_whitespace() || c == '"' || c == '=' || c == '\\');
    if plain {
        return v.to_string();
    }
    let mut out = String::from("\"");
    for c in v.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verdict_line(v: &Verdict) -> Line {
    match v {
        Verdict::HoldsUpTo(n) => Line::new().kv("status", "holds").kv("max_size", n),
        Verdict::Countermodel { interpretation, .. } => countermodel_line(interpretation),
    }
}

fn countermodel_line(m: &Interpretation) -> Line {
    Line::new()
        .kv("status", "countermodel")
        .kv("size", m.size())
        .kv("model", m.to_line())
}

pub fn verdict_text(v: &Verdict) -> String {
    let s = v.to_string();
    if s.ends_with('\n') {
        s
    } else {
        s + "\n"
    }
}

pub fn report_line(r: &DefinabilityReport) -> Line {
    let line = Line::new()
        .kv("quantifier", r.quantifier)
        .kv("definition", &r.definition);
    match &r.status {
        DefinabilityStatus::Verified => line.kv("status", "verified").kv("up_to", r.verified_up_to),
        DefinabilityStatus::Failed(m) => line
            .kv("status", "failed")
            .kv("size", m.size())
            .kv("model", m.to_line()),
    }
}

pub fn law_line(law: &LawCheck) -> Line {
    let line = Line::new()
        .kv("law", &law.name)
        .kv("lhs", &law.lhs)
        .kv("rhs", &law.rhs);
    match &law.verdict {
        Verdict::HoldsUpTo(n) => line.kv("status", "holds").kv("max_size", n),
        Verdict::Countermodel { interpretation, .. } => line
            .kv("status", "countermodel")
            .kv("size", interpretation.size())
            .kv("model", interpretation.to_line()),
    }
}

pub fn law_text(law: &LawCheck) -> String {
    let head = format!("{}: {}  ==  {}", law.name, law.lhs.unicode(), law.rhs.unicode());
    match &law.verdict {
        Verdict::HoldsUpTo(n) => format!("{head}\n  HoldsUpTo({n})\n"),
        Verdict::Countermodel { interpretation, .. } => {
            format!("{head}\n  refuted by: {}\n", interpretation.to_line())
        }
    }
}

pub fn classification_line(c: &Classification) -> Line {
    let mut line = Line::new()
        .kv("quantifier", &c.quantifier)
        .kv("support_factoring", yes_no(c.factors_through_support()))
        .kv("surjection_invariant", yes_no(c.surjection_invariant()))
        .kv("bijection_invariant", yes_no(c.bijection_invariant()))
        .kv("verdict", c.verdict)
        .kv("bound", c.bounds.max_size);
    if let Ok(q) = &c.support {
        line = line.kv("function", q);
    }
    if let Err(v) = &c.support {
        line = line.kv("support_witness", v);
    }
    if let Err(v) = &c.surjection {
        line = line.kv("surjection_witness", v);
    }
    if let Err(v) = &c.bijection {
        line = line.kv("bijection_witness", v);
    }
    line
}

pub fn classification_matrix(rows: &[Classification]) -> String {
    let header = ["quantifier", "support-factoring", "surjection-invariant", "bijection-invariant", "verdict"];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|c| {
            [
                c.quantifier.clone(),
                yes_no(c.factors_through_support()).to_string(),
                yes_no(c.surjection_invariant()).to_string(),
                yes_no(c.bijection_invariant()).to_string(),
                c.verdict.to_string(),
            ]
        })
        .collect();
    let width = |i: usize| {
        cells
            .iter()
            .map(|r| r[i].chars().count())
            .chain([header[i].len()])
            .max()
            .unwrap_or(0)
    };
    let widths: Vec<usize> = (0..5).map(width).collect();
    let mut out = String::new();
    let row = |out: &mut String, cols: &[&str]| {
        let padded: Vec<String> = cols
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    row(&mut out, &header);
    for r in &cells {
        row(&mut out, &r.iter().map(String::as_str).collect::<Vec<_>>());
    }
    for c in rows {
        if let Ok(q) = &c.support {
            let _ = writeln!(out, "{}: factors through support as {q}", c.quantifier);
        }
        if let Err(v) = &c.support {
            let _ = writeln!(out, "{}: support counterexample {v}", c.quantifier);
        }
        if let Err(v) = &c.surjection {
            let _ = writeln!(out, "{}: surjection counterexample {v}", c.quantifier);
        }
        if let Err(v) = &c.bijection {
            let _ = writeln!(out, "{}: bijection counterexample {v}", c.quantifier);
        }
    }
    out
}

pub fn is_logical(c: &Classification) -> bool {
    c.verdict == LogicalityVerdict::Logical
}
