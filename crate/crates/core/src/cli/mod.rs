//! Command-line front end: argument handling, report assembly and rendering.

pub mod expr;
mod reference;

use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::borel::{
    borel_type_failure, chi_table, is_borel_type, reg_truncation, reg_upper_bound, sbt_violation,
    sequential_chain,
};
use crate::dfixed::{
    block_structure, d_fixed_violation, gamma_families_with, reg_dfixed_powers, DSequence, GammaRule,
    RecursionVariant, VariablePowerSpec,
};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::oracle::{
    borel_witness_check, exhaustive_dfixed_check, exhaustive_sbt_check, exhaustive_stable_check,
    reg_socle_chain, socle_oracle,
};

use expr::{parse, parse_power_list, IdealExpr};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_BOUND: i32 = 4;
pub const EXIT_DISAGREEMENT: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "monoreg", version, about = "Regularity of Borel-type and d-fixed monomial ideals")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Number of variables (default: the largest index in the expression).
    #[arg(long, global = true)]
    pub vars: Option<usize>,
    /// Exit with status 5 when methods disagree.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Chain,
    Truncation,
    Socle,
    SbtFormula,
    ChiFormula,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators.
    Gens { expr: String },
    /// Regularity by one or all methods.
    Reg {
        expr: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Sequential chain table.
    Chain { expr: String },
    /// Socle of an artinian quotient.
    Socle { expr: String },
    /// Classification with witnesses.
    Check {
        expr: String,
        #[arg(long)]
        borel_type: bool,
        #[arg(long)]
        sbt: bool,
        #[arg(long)]
        stable: bool,
        #[arg(long, value_name = "D")]
        dfixed: Option<String>,
    },
    /// d-decomposition of an integer.
    Decomp { a: u64, d: String },
    /// Tuple families for one pair of variable-power data.
    Gamma {
        spec: String,
        d: String,
        #[arg(long)]
        q: usize,
        /// Also require digit sums of every prefix to stay within the
        /// digits of alpha_q.
        #[arg(long)]
        carry_free: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodResult {
    pub method: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Agreement {
    pub a: String,
    pub b: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub ambient: Option<usize>,
    pub results: Vec<MethodResult>,
    pub agreements: Vec<Agreement>,
    pub discrepancy_notes: Vec<String>,
}

impl Report {
    fn new(command: &str, input: &str, ambient: Option<usize>) -> Self {
        Report {
            command: command.into(),
            input: input.into(),
            ambient,
            results: Vec::new(),
            agreements: Vec::new(),
            discrepancy_notes: Vec::new(),
        }
    }

    fn push(&mut self, method: &str, value: Value, witnesses: Option<Value>) {
        self.results.push(MethodResult {
            method: method.into(),
            value,
            witnesses,
        });
    }

    fn agree(&mut self, a: &str, b: &str, equal: bool) {
        self.agreements.push(Agreement {
            a: a.into(),
            b: b.into(),
            equal,
        });
    }

    /// Pairwise agreement of every result value, with one note per method
    /// that differs from an earlier one.
    fn compare_all(&mut self) {
        let rs = self.results.clone();
        let mut noted = vec![false; rs.len()];
        for (i, x) in rs.iter().enumerate() {
            for (k, y) in rs.iter().enumerate().skip(i + 1) {
                let equal = x.value == y.value;
                self.agree(&x.method, &y.method, equal);
                if !equal && !noted[k] {
                    noted[k] = true;
                    self.discrepancy_notes.push(format!(
                        "{} gives {} but {} gives {}",
                        y.method, y.value, x.method, x.value
                    ));
                }
            }
        }
    }

    pub fn has_disagreement(&self) -> bool {
        self.agreements.iter().any(|a| !a.equal)
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(err: &Error) -> i32 {
    match err.kind() {
        "parse" => EXIT_PARSE,
        "bound-exceeded" => EXIT_BOUND,
        _ => EXIT_DOMAIN,
    }
}

/// Runs the command line `args` (including the program name), reading an
/// expression from `stdin` when it is given as `-`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CliOutput {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                CliOutput {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let (name, input) = describe(&cli.command);
    let input = match resolve_input(&input, stdin) {
        Ok(s) => s,
        Err(msg) => {
            return CliOutput {
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
                code: EXIT_USAGE,
            }
        }
    };
    match execute(&cli, &input) {
        Ok(report) => {
            let code = if cli.strict && report.has_disagreement() {
                EXIT_DISAGREEMENT
            } else {
                EXIT_OK
            };
            CliOutput {
                stdout: render(&report, cli.format),
                stderr: String::new(),
                code,
            }
        }
        Err(err) => {
            let code = exit_code(&err);
            match cli.format {
                Format::Json => CliOutput {
                    stdout: render_error_json(name, &input, &err),
                    stderr: String::new(),
                    code,
                },
                Format::Text => CliOutput {
                    stdout: String::new(),
                    stderr: format!("error ({}): {err}\n", err.kind()),
                    code,
                },
            }
        }
    }
}

fn describe(cmd: &Command) -> (&'static str, String) {
    match cmd {
        Command::Gens { expr } => ("gens", expr.clone()),
        Command::Reg { expr, .. } => ("reg", expr.clone()),
        Command::Chain { expr } => ("chain", expr.clone()),
        Command::Socle { expr } => ("socle", expr.clone()),
        Command::Check { expr, .. } => ("check", expr.clone()),
        Command::Decomp { a, d } => ("decomp", format!("{a}; {d}")),
        Command::Gamma { spec, d, .. } => ("gamma", format!("{spec}; {d}")),
    }
}

fn resolve_input(input: &str, stdin: &mut dyn Read) -> std::result::Result<String, String> {
    if input != "-" {
        return Ok(input.to_string());
    }
    let mut buf = String::new();
    stdin
        .read_to_string(&mut buf)
        .map_err(|e| format!("reading standard input: {e}"))?;
    Ok(buf.trim().to_string())
}

/// Parses `1|2|4|12`, reporting bad integers as parse errors at their byte
/// offset and invalid chains as domain errors.
pub fn parse_dsequence(text: &str) -> Result<DSequence> {
    let mut terms = Vec::new();
    let mut offset = 0;
    for piece in text.split('|') {
        let lead = piece.len() - piece.trim_start().len();
        let value = piece
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::parse(offset + lead, format!("expected an integer, found {:?}", piece.trim())))?;
        terms.push(value);
        offset += piece.len() + 1;
    }
    DSequence::new(terms)
}

struct Context {
    expr: IdealExpr,
    ambient: usize,
    ideal: MonomialIdeal,
}

fn context(text: &str, vars: Option<usize>) -> Result<Context> {
    let expr = parse(text)?;
    let ambient = expr.ambient(vars)?;
    let ideal = expr.eval(ambient)?;
    Ok(Context { expr, ambient, ideal })
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn var_name(i: usize) -> String {
    format!("x{}", i + 1)
}

fn execute(cli: &Cli, input: &str) -> Result<Report> {
    match &cli.command {
        Command::Gens { .. } => {
            let ctx = context(input, cli.vars)?;
            let mut r = Report::new("gens", input, Some(ctx.ambient));
            r.push(
                "minimal-generators",
                strings(ctx.ideal.generators()),
                Some(json!({ "expression": ctx.expr.to_string(), "count": ctx.ideal.generators().len() })),
            );
            r.discrepancy_notes = reference::notes_for(&ctx.ideal);
            Ok(r)
        }
        Command::Reg { method, .. } => {
            let ctx = context(input, cli.vars)?;
            reg_report(&ctx, input, *method)
        }
        Command::Chain { .. } => {
            let ctx = context(input, cli.vars)?;
            let chain = sequential_chain(&ctx.ideal)?;
            let mut r = Report::new("chain", input, Some(ctx.ambient));
            for (l, step) in chain.steps.iter().enumerate() {
                r.push(
                    &format!("step-{l}"),
                    json!(step.top_degree()),
                    Some(json!({
                        "variable": var_name(step.variable),
                        "section": strings(step.section.generators()),
                        "saturation": strings(step.section_saturation.generators()),
                        "top_element": step.top_element.as_ref().map(Monomial::to_string),
                    })),
                );
            }
            r.push("chain", json!(chain.regularity()?), None);
            Ok(r)
        }
        Command::Socle { .. } => {
            let ctx = context(input, cli.vars)?;
            let report = socle_oracle(&ctx.ideal)?;
            let mut r = Report::new("socle", input, Some(ctx.ambient));
            r.push("socle", json!(report.max_degree), Some(strings(&report.socle)));
            r.push("reg", json!(report.reg), None);
            r.discrepancy_notes = reference::notes_for(&ctx.ideal);
            Ok(r)
        }
        Command::Check {
            borel_type,
            sbt,
            stable,
            dfixed,
            ..
        } => {
            let ctx = context(input, cli.vars)?;
            let d = dfixed.as_deref().map(parse_dsequence).transpose()?;
            let all = !borel_type && !sbt && !stable && d.is_none();
            check_report(&ctx, input, all || *borel_type, all || *sbt, all || *stable, d.as_ref())
        }
        Command::Decomp { a, d } => {
            let seq = parse_dsequence(d)?;
            let dec = seq.decompose(*a);
            let mut r = Report::new("decomp", input, None);
            r.push(
                "d-decomposition",
                json!(dec.coeffs),
                Some(json!({ "d": seq.to_string(), "top": dec.top() })),
            );
            Ok(r)
        }
        Command::Gamma { spec, d, q, carry_free } => {
            let seq = parse_dsequence(d)?;
            let pairs = parse_power_list(spec)?;
            let needed = pairs.iter().map(|p| p.0 + 1).max().unwrap_or(1);
            let ambient = match cli.vars {
                Some(n) => n,
                None => needed,
            };
            let spec = VariablePowerSpec::new(ambient, &pairs, &seq)?;
            let rule = if *carry_free { GammaRule::CarryFree } else { GammaRule::AsPrinted };
            let family = gamma_families_with(&spec, *q, rule)?;
            let mut r = Report::new("gamma", input, Some(ambient));
            let normalized: Vec<String> = spec.pairs.iter().map(|p| format!("{}^{}", var_name(p.var), p.alpha)).collect();
            r.push(
                "gamma-families",
                json!(family.tuples),
                Some(json!({
                    "q": family.q,
                    "rule": family.rule,
                    "count": family.tuples.len(),
                    "pairs": normalized,
                })),
            );
            Ok(r)
        }
    }
}

fn reg_report(ctx: &Context, input: &str, method: Method) -> Result<Report> {
    if ctx.ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut r = Report::new("reg", input, Some(ctx.ambient));
    let wanted = |m: Method| method == Method::Auto || method == m;
    let auto = method == Method::Auto;
    let borel = is_borel_type(&ctx.ideal)?;

    // In auto mode a method that does not apply is skipped; asked for
    // explicitly, its precondition error is the answer.
    let attempt = |r: &mut Report, res: Result<Option<MethodResult>>| -> Result<()> {
        match res {
            Ok(Some(m)) => {
                r.results.push(m);
                Ok(())
            }
            Ok(None) => Ok(()),
            Err(e) if auto && e.kind() == "domain" => Ok(()),
            Err(e) => Err(e),
        }
    };

    if wanted(Method::Chain) {
        attempt(&mut r, chain_method(ctx, borel))?;
    }
    if wanted(Method::Truncation) {
        attempt(&mut r, truncation_method(ctx))?;
    }
    if wanted(Method::Socle) {
        attempt(&mut r, socle_method(ctx, borel))?;
    }
    if wanted(Method::ChiFormula) {
        attempt(&mut r, formula_method(ctx, "chi-formula", true))?;
    }
    if method == Method::SbtFormula {
        attempt(&mut r, formula_method(ctx, "sbt-formula", false))?;
    }
    if r.results.is_empty() {
        return Err(if borel { Error::NotArtinian } else { Error::NotBorelType });
    }
    r.compare_all();
    r.discrepancy_notes.extend(reference::notes_for(&ctx.ideal));
    Ok(r)
}

fn chain_method(ctx: &Context, borel: bool) -> Result<Option<MethodResult>> {
    if !borel {
        return Err(Error::NotBorelType);
    }
    let chain = sequential_chain(&ctx.ideal)?;
    let s: Vec<Option<u64>> = chain.steps.iter().map(|st| st.top_degree()).collect();
    let vars: Vec<String> = chain.steps.iter().map(|st| var_name(st.variable)).collect();
    Ok(Some(MethodResult {
        method: "chain".into(),
        value: json!(chain.regularity()?),
        witnesses: Some(json!({ "s": s, "variables": vars })),
    }))
}

fn truncation_method(ctx: &Context) -> Result<Option<MethodResult>> {
    let e = reg_truncation(&ctx.ideal)?;
    Ok(Some(MethodResult {
        method: "truncation".into(),
        value: json!(e),
        witnesses: Some(json!({ "scan_bound": reg_upper_bound(&ctx.ideal) })),
    }))
}

fn socle_method(ctx: &Context, borel: bool) -> Result<Option<MethodResult>> {
    if ctx.ideal.is_artinian() {
        let report = socle_oracle(&ctx.ideal)?;
        let top: Vec<&Monomial> = report
            .socle
            .iter()
            .filter(|m| Some(m.degree()) == report.max_degree)
            .collect();
        return Ok(Some(MethodResult {
            method: "socle".into(),
            value: json!(report.reg),
            witnesses: Some(json!({ "top_socle": strings(&top) })),
        }));
    }
    if !borel {
        return Err(Error::NotBorelType);
    }
    let chain = sequential_chain(&ctx.ideal)?;
    Ok(Some(MethodResult {
        method: "socle".into(),
        value: json!(reg_socle_chain(&chain)?),
        witnesses: Some(json!({ "relative": true })),
    }))
}

/// `sbt(...)` inputs get the closed-form SBT table; `dfix`/`dfixp` inputs
/// get the block chi sum when `allow_dfixed`.
fn formula_method(ctx: &Context, name: &str, allow_dfixed: bool) -> Result<Option<MethodResult>> {
    if let IdealExpr::Sbt(m) = &ctx.expr {
        let table = chi_table(&m.to_monomial(ctx.ambient)?)?;
        let rows: Vec<Value> = table
            .rows
            .iter()
            .map(|row| json!({ "q": row.q, "f": row.f, "entries": row.entries, "sum": row.sum }))
            .collect();
        return Ok(Some(MethodResult {
            method: name.into(),
            value: json!(table.regularity),
            witnesses: Some(json!({ "label": "formula (as printed)", "chi": table.chi, "rows": rows })),
        }));
    }
    if allow_dfixed {
        if let Some(spec) = ctx.expr.power_spec(ctx.ambient)? {
            let reg = reg_dfixed_powers(&spec)?;
            let blocks = block_structure(&spec, RecursionVariant::Proof);
            return Ok(Some(MethodResult {
                method: name.into(),
                value: json!(reg),
                witnesses: Some(json!({ "k": blocks.k(), "chi": blocks.chi() })),
            }));
        }
    }
    Err(Error::InvalidPowers(format!(
        "{name} needs an sbt(...){} expression",
        if allow_dfixed { ", dfixp(...) or dfix(...)" } else { "" }
    )))
}

const EXHAUSTIVE_EXTRA_DEGREE: u64 = 2;

fn check_report(
    ctx: &Context,
    input: &str,
    borel: bool,
    sbt: bool,
    stable: bool,
    d: Option<&DSequence>,
) -> Result<Report> {
    let ideal = &ctx.ideal;
    let mut r = Report::new("check", input, Some(ctx.ambient));
    let exhaustive_note = json!({ "extra_degree": EXHAUSTIVE_EXTRA_DEGREE });
    if borel {
        let failure = borel_type_failure(ideal)?;
        r.push(
            "borel-type",
            json!(failure.is_none()),
            failure.map(|j| json!({ "variable": var_name(j) })),
        );
        let ex = borel_witness_check(ideal, EXHAUSTIVE_EXTRA_DEGREE);
        r.push("borel-type-exhaustive", json!(ex.holds), Some(exhaustive_note.clone()));
        r.agree("borel-type", "borel-type-exhaustive", failure.is_none() == ex.holds);
    }
    if sbt {
        let v = sbt_violation(ideal);
        r.push(
            "sbt",
            json!(v.is_none()),
            v.as_ref().map(|v| {
                json!({ "monomial": v.monomial.to_string(), "source": var_name(v.source), "target": var_name(v.target) })
            }),
        );
        let ex = exhaustive_sbt_check(ideal, EXHAUSTIVE_EXTRA_DEGREE);
        r.push("sbt-exhaustive", json!(ex.holds), Some(exhaustive_note.clone()));
        r.agree("sbt", "sbt-exhaustive", v.is_none() == ex.holds);
    }
    if stable {
        let v = ideal.stability_violation();
        r.push(
            "stable",
            json!(v.is_none()),
            v.as_ref()
                .map(|(m, j)| json!({ "monomial": m.to_string(), "target": var_name(*j) })),
        );
        let ex = exhaustive_stable_check(ideal, EXHAUSTIVE_EXTRA_DEGREE);
        r.push("stable-exhaustive", json!(ex.holds), Some(exhaustive_note.clone()));
        r.agree("stable", "stable-exhaustive", v.is_none() == ex.holds);
    }
    if let Some(d) = d {
        let v = d_fixed_violation(ideal, d);
        r.push(
            "d-fixed",
            json!(v.is_none()),
            Some(json!({
                "d": d.to_string(),
                "violation": v.as_ref().map(|v| json!({
                    "monomial": v.monomial.to_string(),
                    "source": var_name(v.source),
                    "target": var_name(v.target),
                    "shift": v.shift,
                })),
            })),
        );
        let ex = exhaustive_dfixed_check(ideal, d, EXHAUSTIVE_EXTRA_DEGREE);
        r.push("d-fixed-exhaustive", json!(ex.holds), Some(exhaustive_note));
        r.agree("d-fixed", "d-fixed-exhaustive", v.is_none() == ex.holds);
    }
    for a in &r.agreements {
        if !a.equal {
            r.discrepancy_notes
                .push(format!("generator-level {} disagrees with the bounded exhaustive check", a.a));
        }
    }
    Ok(r)
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Text => render_text(report),
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("command  {}\n", report.command));
    out.push_str(&format!("input    {}\n", report.input));
    if let Some(n) = report.ambient {
        out.push_str(&format!("ambient  {n}\n"));
    }
    let width = report.results.iter().map(|r| r.method.len()).max().unwrap_or(0).max(6);
    out.push('\n');
    for r in &report.results {
        out.push_str(&format!("{:width$}  {}", r.method, show(&r.value)));
        if let Some(w) = &r.witnesses {
            out.push_str(&format!("  {w}"));
        }
        out.push('\n');
    }
    if !report.agreements.is_empty() {
        out.push_str("\nagreements\n");
        for a in &report.agreements {
            out.push_str(&format!("  {} = {}: {}\n", a.a, a.b, if a.equal { "yes" } else { "NO" }));
        }
    }
    if !report.discrepancy_notes.is_empty() {
        out.push_str("\nnotes\n");
        for n in &report.discrepancy_notes {
            out.push_str(&format!("  - {n}\n"));
        }
    }
    out
}

fn render_error_json(command: &str, input: &str, err: &Error) -> String {
    let mut error = json!({ "kind": err.kind(), "message": err.to_string() });
    if let Error::Parse { position, .. } = err {
        error["position"] = json!(position);
    }
    let v = json!({ "command": command, "input": input, "error": error });
    serde_json::to_string_pretty(&v).expect("errors serialize") + "\n"
}
