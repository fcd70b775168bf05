//! Command implementations. Each returns its full output and an exit status;
//! `main` only prints and exits.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use matfield::algebra::{
    self, classify, find_zero_divisor_seeded, is_commutative, structure_constants_for, AlgebraError, Basis, Bracket, Caps,
    Classification, Division, StructureConstants, ZeroDivisors,
};
use matfield::claims::{run_all, Report, Verdict};
use matfield::{FieldMode, GaussianRational, Matrix};
use serde_json::{json, Map, Value};
use similar::TextDiff;

use crate::specfile::{SpecError, SpecFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Mismatch = 1,
    Input = 2,
    Cap = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

impl Output {
    fn new(text: String, status: Status) -> Self {
        Output { text, status }
    }
}

impl From<SpecError> for Output {
    fn from(e: SpecError) -> Self {
        Output::new(format!("error: {e}\n"), Status::Input)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    ZeroDivisor,
    Noncommuting,
}

fn load(path: &Path) -> Result<SpecFile, Output> {
    SpecFile::load(path).map_err(Output::from)
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn opt_str(s: Option<impl ToString>) -> Value {
    s.map_or(Value::Null, |x| Value::String(x.to_string()))
}

fn classification_json(c: &Classification) -> Value {
    let zero_divisors = match &c.zero_divisors {
        ZeroDivisors::Yes(w) => json!({"status": "YES", "witness": w.to_string()}),
        ZeroDivisors::No(cert) => json!({"status": "NO", "certificate": cert.to_string()}),
        ZeroDivisors::Unknown(r) => json!({"status": "UNKNOWN", "reason": r}),
    };
    let division = match &c.division {
        Division::Yes(cert) => json!({"status": "YES", "certificate": cert.to_string(), "kind": cert.kind()}),
        Division::No(w) => json!({"status": "NO", "witness": w.to_string()}),
        Division::Unknown(r) => json!({"status": "UNKNOWN", "reason": r}),
    };
    json!({
        "name": c.name,
        "field_mode": c.mode.as_str(),
        "closed": c.closed,
        "closure_failure": opt_str(c.closure_failure.as_ref()),
        "dim": c.dim(),
        "basis": c.basis.elements().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "unit": opt_str(c.unit.as_ref()),
        "commutative": c.commutative,
        "noncommuting_witness": opt_str(c.noncommuting.as_ref()),
        "radical_dim": c.radical_dim,
        "zero_divisors": zero_divisors,
        "division": division,
        "field": c.field,
        "label": c.label(),
    })
}

fn summary_line(c: &Classification) -> String {
    let label = c.label();
    match (&c.division, c.zero_divisor_witness()) {
        (Division::Yes(cert), _) => match cert {
            algebra::Certificate::PrimitiveElement { element, min_poly } => {
                format!("{label} (primitive element {element}, min poly {min_poly})")
            }
            other => format!("{label} ({other})"),
        },
        (_, Some(algebra::Witness::ZeroDivisor { x, y })) => format!("{label}, witness {x}·{y}=0"),
        (Division::Unknown(reason), _) => format!("{label}, division undecided: {reason}"),
        _ => label.to_string(),
    }
}

fn classification_text(c: &Classification) -> String {
    let mut s = String::new();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    writeln!(s, "algebra: {}", c.name).unwrap();
    writeln!(s, "field: {}", c.mode).unwrap();
    match &c.closure_failure {
        Some(f) => writeln!(s, "closure: NOT CLOSED ({f})").unwrap(),
        None => writeln!(s, "closure: dim {}", c.dim()).unwrap(),
    }
    writeln!(s, "basis:").unwrap();
    for (i, m) in c.basis.elements().iter().enumerate() {
        writeln!(s, "  b{} = {m}", i + 1).unwrap();
    }
    if c.closed {
        writeln!(s, "unit: {}", c.unit.as_ref().map_or("none".to_string(), |u| u.to_string())).unwrap();
        match &c.noncommuting {
            Some(w) => writeln!(s, "commutative: no ({w})").unwrap(),
            None => writeln!(s, "commutative: yes").unwrap(),
        }
        writeln!(s, "radical dim: {}", c.radical_dim).unwrap();
        match &c.zero_divisors {
            ZeroDivisors::Yes(w) => writeln!(s, "zero divisors: YES ({w})").unwrap(),
            ZeroDivisors::No(cert) => writeln!(s, "zero divisors: NO ({cert})").unwrap(),
            ZeroDivisors::Unknown(r) => writeln!(s, "zero divisors: UNKNOWN ({r})").unwrap(),
        }
        match &c.division {
            Division::Yes(cert) => writeln!(s, "division: YES ({cert})").unwrap(),
            Division::No(w) => writeln!(s, "division: NO ({w})").unwrap(),
            Division::Unknown(r) => writeln!(s, "division: UNKNOWN ({r})").unwrap(),
        }
        writeln!(s, "field: {}", yes_no(c.field)).unwrap();
    }
    writeln!(s, "verdict: {}", summary_line(c)).unwrap();
    s
}

pub fn cmd_classify(path: &Path, field: Option<FieldMode>, format: Format, caps: &Caps) -> Output {
    let spec = match load(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let algebra = spec.to_algebra(field, Some(Bracket::Mul));
    if spec.bracket != Bracket::Mul {
        return Output::new(format!("error: classify needs bracket \"mul\", spec has {:?}\n", spec.bracket.as_str()), Status::Input);
    }
    let c = match classify(&algebra, caps) {
        Ok(c) => c,
        Err(e) => return Output::new(format!("error: {e}\n"), Status::Input),
    };
    let text = match format {
        Format::Json => json_text(&classification_json(&c)),
        _ => classification_text(&c),
    };
    Output::new(text, if c.closed { Status::Ok } else { Status::Cap })
}

fn combination(coeffs: &[GaussianRational], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let term = if c.is_one() {
            l.clone()
        } else if *c == -GaussianRational::one() {
            format!("-{l}")
        } else if c.is_real() {
            format!("{c}*{l}")
        } else {
            format!("({c})*{l}")
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn table_text(sc: &StructureConstants, labels: &[String]) -> String {
    let cells: Vec<Vec<String>> = sc.table.iter().map(|row| row.iter().map(|c| combination(c, labels)).collect()).collect();
    let head_w = labels.iter().map(String::len).chain([sc.bracket.as_str().len()]).max().unwrap_or(1);
    let col_w: Vec<usize> =
        (0..labels.len()).map(|j| cells.iter().map(|r| r[j].len()).chain([labels[j].len()]).max().unwrap_or(1)).collect();
    let mut s = String::new();
    write!(s, "{:head_w$} |", sc.bracket.as_str()).unwrap();
    for (j, l) in labels.iter().enumerate() {
        write!(s, " {:w$}", l, w = col_w[j]).unwrap();
    }
    s.truncate(s.trim_end().len());
    s.push('\n');
    writeln!(s, "{}-+{}", "-".repeat(head_w), "-".repeat(col_w.iter().map(|w| w + 1).sum())).unwrap();
    for (i, row) in cells.iter().enumerate() {
        write!(s, "{:head_w$} |", labels[i]).unwrap();
        for (j, cell) in row.iter().enumerate() {
            write!(s, " {:w$}", cell, w = col_w[j]).unwrap();
        }
        s.truncate(s.trim_end().len());
        s.push('\n');
    }
    s
}

fn table_csv(sc: &StructureConstants, labels: &[String]) -> String {
    let mut s = String::new();
    writeln!(s, "{},{}", sc.bracket.as_str(), labels.join(",")).unwrap();
    for (i, row) in sc.table.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| combination(c, labels)).collect();
        writeln!(s, "{},{}", labels[i], cells.join(",")).unwrap();
    }
    s
}

fn basis_listing(labels: &[String], elements: &[Matrix]) -> String {
    labels.iter().zip(elements).map(|(l, m)| format!("  {l} = {m}\n")).collect()
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn cmd_closure(path: &Path, bracket: Option<Bracket>, max_dim: usize, max_rounds: usize) -> Output {
    let spec = match load(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let algebra = spec.to_algebra(None, bracket);
    let mut s = String::new();
    writeln!(s, "algebra: {}", algebra.name).unwrap();
    writeln!(s, "field: {}", algebra.mode).unwrap();
    writeln!(s, "bracket: {}", algebra.bracket).unwrap();
    match algebra::close_under(&algebra, max_dim, max_rounds) {
        Ok(basis) => {
            let l = labels("b", basis.dim());
            writeln!(s, "closure: dim {}", basis.dim()).unwrap();
            writeln!(s, "basis:").unwrap();
            s.push_str(&basis_listing(&l, basis.elements()));
            let sc = algebra::structure_constants(&basis, algebra.bracket).expect("closure is closed");
            writeln!(s, "structure constants:").unwrap();
            s.push_str(&table_text(&sc, &l));
            Output::new(s, Status::Ok)
        }
        Err(e) => {
            writeln!(s, "closure: NOT_CLOSED_AT_CAP ({})", e.reason).unwrap();
            writeln!(s, "partial basis (dim {}):", e.basis.dim()).unwrap();
            s.push_str(&basis_listing(&labels("b", e.basis.dim()), e.basis.elements()));
            Output::new(s, Status::Cap)
        }
    }
}

pub fn cmd_witness(path: &Path, kind: WitnessKind, budget: usize, caps: &Caps) -> Output {
    let spec = match load(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let algebra = spec.to_algebra(None, Some(Bracket::Mul));
    let gens = &algebra.generators;
    let basis = match algebra::close_under(&algebra, caps.max_dim, caps.max_rounds) {
        Ok(b) => b,
        Err(e) => return Output::new(format!("closure: NOT_CLOSED_AT_CAP ({})\n", e.reason), Status::Cap),
    };
    let found = match kind {
        WitnessKind::ZeroDivisor => find_zero_divisor_seeded(&basis, algebra.mode, budget, gens, caps.degree_cap),
        WitnessKind::Noncommuting => first_noncommuting(gens).or_else(|| is_commutative(&basis).err()),
    };
    let text = match found {
        Some(w) => {
            assert!(w.verify(&basis, Bracket::Mul), "witness failed re-verification");
            format!("{w}\n")
        }
        None => match kind {
            WitnessKind::ZeroDivisor => format!("none found within budget {budget}\n"),
            WitnessKind::Noncommuting => "none: all basis elements commute\n".to_string(),
        },
    };
    Output::new(text, Status::Ok)
}

fn first_noncommuting(gens: &[Matrix]) -> Option<algebra::Witness> {
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            if x * y != y * x {
                return Some(algebra::Witness::Noncommuting { x: x.clone(), y: y.clone() });
            }
        }
    }
    None
}

/// Table over the generators when they are independent, else over the echelon basis of their span.
pub fn cmd_table(path: &Path, format: Format) -> Output {
    let spec = match load(path) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let algebra = spec.to_algebra(None, None);
    let span: Basis = algebra::span_basis(&algebra.generators, algebra.mode).expect("common rank");
    let (l, elements): (Vec<String>, Vec<Matrix>) = if span.dim() == algebra.generators.len() {
        (labels("g", span.dim()), algebra.generators.clone())
    } else {
        (labels("b", span.dim()), span.elements().to_vec())
    };
    match structure_constants_for(&elements, algebra.mode, algebra.bracket) {
        Ok(sc) => {
            let body = match format {
                Format::Csv => table_csv(&sc, &l),
                _ => format!("{}{}", basis_listing(&l, &elements), table_text(&sc, &l)),
            };
            Output::new(body, Status::Ok)
        }
        Err(AlgebraError::NotClosed { witness, .. }) => Output::new(format!("not closed: {witness}\n"), Status::Mismatch),
        Err(e) => Output::new(format!("error: {e}\n"), Status::Input),
    }
}

pub struct CheckPaperArgs<'a> {
    pub claims: Option<BTreeSet<String>>,
    pub modes: Option<BTreeSet<FieldMode>>,
    pub format: Format,
    pub golden: Option<&'a Path>,
    pub timings: bool,
}

pub fn report_text(r: &Report, timings: bool) -> String {
    let mut s = String::new();
    writeln!(s, "matfield claim suite {}", r.version).unwrap();
    writeln!(
        s,
        "caps: max_dim={} max_rounds={} budget={} degree_cap={}",
        r.caps.max_dim, r.caps.max_rounds, r.caps.budget, r.caps.degree_cap
    )
    .unwrap();
    s.push('\n');
    let w_ref = r.verdicts.iter().map(|v| v.citation.len()).max().unwrap_or(3).max(3);
    let w_mode = r.verdicts.iter().map(|v| v.mode_str().len()).max().unwrap_or(4).max(4);
    let w_out = 17;
    let row = |id: &str, rf: &str, mode: &str, out: &str, exp: &str, ms: &str, label: &str| {
        let timing = if timings { format!("{ms:>8}  ") } else { String::new() };
        format!("{id:<5}  {rf:<w_ref$}  {mode:<w_mode$}  {out:<w_out$}  {exp:<w_out$}  {timing}{label}").trim_end().to_string() + "\n"
    };
    s.push_str(&row("ID", "REF", "MODE", "OUTCOME", "EXPECTED", "MS", "CHECK"));
    for v in &r.verdicts {
        let ms = format!("{:.1}", v.elapsed.as_secs_f64() * 1000.0);
        s.push_str(&row(&v.claim_id, &v.citation, v.mode_str(), v.outcome.as_str(), v.expected.as_str(), &ms, &v.label));
        for (tag, val) in [("certificate", &v.certificate), ("witness", &v.witness), ("note", &v.detail)] {
            if let Some(val) = val {
                writeln!(s, "       {tag}: {val}").unwrap();
            }
        }
    }
    s.push('\n');
    let m = &r.summary;
    writeln!(
        s,
        "summary: {} checks; HOLDS {}, REFUTED {}, UNKNOWN {}, NOT_INTERPRETABLE {}; mismatches {}",
        m.checks, m.holds, m.refuted, m.unknown, m.not_interpretable, m.mismatches
    )
    .unwrap();
    s
}

fn verdict_json(v: &Verdict, timings: bool) -> Value {
    let mut o = Map::new();
    o.insert("claim_id".into(), json!(v.claim_id));
    o.insert("paper_ref".into(), json!(v.paper_ref));
    o.insert("check".into(), json!(v.label));
    o.insert("mode".into(), json!(v.mode_str()));
    o.insert("expected".into(), json!(v.expected.as_str()));
    o.insert("outcome".into(), json!(v.outcome.as_str()));
    o.insert("witness".into(), opt_str(v.witness.as_ref()));
    o.insert("certificate".into(), opt_str(v.certificate.as_ref()));
    o.insert("note".into(), opt_str(v.detail.as_ref()));
    if timings {
        o.insert("elapsed_ms".into(), json!(v.elapsed.as_millis() as u64));
    }
    Value::Object(o)
}

pub fn report_json(r: &Report, timings: bool) -> String {
    let m = &r.summary;
    json_text(&json!({
        "suite_version": r.version,
        "caps": {
            "max_dim": r.caps.max_dim,
            "max_rounds": r.caps.max_rounds,
            "budget": r.caps.budget,
            "degree_cap": r.caps.degree_cap,
        },
        "verdicts": r.verdicts.iter().map(|v| verdict_json(v, timings)).collect::<Vec<_>>(),
        "summary": {
            "checks": m.checks,
            "holds": m.holds,
            "refuted": m.refuted,
            "unknown": m.unknown,
            "not_interpretable": m.not_interpretable,
            "mismatches": m.mismatches,
        },
    }))
}

pub fn cmd_check_paper(args: &CheckPaperArgs<'_>, caps: &Caps) -> Output {
    let report = match run_all(args.claims.as_ref(), args.modes.as_ref(), caps) {
        Ok(r) => r,
        Err(e) => return Output::new(format!("error: {e}\n"), Status::Input),
    };
    let text = match args.format {
        Format::Json => report_json(&report, args.timings),
        _ => report_text(&report, args.timings),
    };
    let Some(golden) = args.golden else {
        let status = if report.all_match() { Status::Ok } else { Status::Mismatch };
        return Output::new(text, status);
    };
    let expected = match std::fs::read_to_string(golden) {
        Ok(g) => g,
        Err(e) => return Output::new(format!("error: {}: {e}\n", golden.display()), Status::Input),
    };
    if expected == text {
        return Output::new(text, Status::Ok);
    }
    let diff = TextDiff::from_lines(&expected, &text).unified_diff().header(&golden.display().to_string(), "actual").to_string();
    Output::new(format!("{text}\ngolden mismatch:\n{diff}"), Status::Mismatch)
}
