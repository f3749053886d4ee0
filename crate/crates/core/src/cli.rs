//! Command front end: matrix/vector file parsing, report printing, and the
//! `run` dispatcher the binary calls.
//!
//! Matrix file format: first significant line holds the dimension `n`, the
//! next `n` significant lines hold `n` whitespace-separated numbers each.
//! Blank lines and lines starting with `#` are ignored. Vector files hold the
//! length followed by that many numbers spread over the following lines.
//!
//! Exit codes: 0 success, 1 usage/parse errors, 2 class-precondition
//! failures, 3 a falsified bound (sampled max above an analytic bound, or a
//! failed error-bound trial) — the most important signal the tool can emit.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use serde_json::{json, Value};

use crate::bounds::{bound_new, bound_report, example1_closed_forms, example1_matrix, bound_gp,
    bound_li2016, bound_wcdd};
use crate::decomp::bplus_decompose;
use crate::error::{Error, Result};
use crate::lcp::{solve_bruteforce, verify_chen_xiang, LcpProblem};
use crate::matcore::{classify, Matrix, Vector};
use crate::verify::{estimate_max, gen_b_matrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CLASS: i32 = 2;
pub const EXIT_FALSIFIED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliCommand {
    Check,
    Decompose,
    Bounds,
    Verify,
    Lcp,
    Reproduce,
    Gen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CliCommand,
    /// `None` or `-` reads standard input.
    pub matrix_path: Option<PathBuf>,
    pub q_path: Option<PathBuf>,
    pub samples: usize,
    pub seed: u64,
    pub k_range: (u32, u32),
    /// Dimension for `gen`.
    pub n: Option<usize>,
    pub output_format: OutputFormat,
}

impl RunConfig {
    pub fn new(command: CliCommand) -> Self {
        RunConfig {
            command,
            matrix_path: None,
            q_path: None,
            samples: 4096,
            seed: 42,
            k_range: (1, 10),
            n: None,
            output_format: OutputFormat::Table,
        }
    }
}

// ── file formats ────────────────────────────────────────────────────

/// Significant lines with their 1-based line numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_number(tok: &str, line: usize) -> Result<f64> {
    let v: f64 = tok
        .parse()
        .map_err(|_| Error::ParseError {
            line,
            msg: format!("invalid number `{tok}`"),
        })?;
    if !v.is_finite() {
        return Err(Error::ParseError {
            line,
            msg: format!("non-finite value `{tok}`"),
        });
    }
    Ok(v)
}

pub fn parse_matrix_str(text: &str) -> Result<Matrix> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::ParseError {
        line: 1,
        msg: "empty input: expected dimension".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::ParseError {
        line: header_line,
        msg: format!("expected dimension, found `{header}`"),
    })?;
    if n == 0 {
        return Err(Error::ParseError {
            line: header_line,
            msg: "dimension must be at least 1".into(),
        });
    }

    let mut data = Vec::with_capacity(n * n);
    let mut last_line = header_line;
    for row in 0..n {
        let (line_no, line) = lines.next().ok_or(Error::DimensionError {
            line: last_line,
            msg: format!("expected {n} rows, found {row}"),
        })?;
        last_line = line_no;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != n {
            return Err(Error::DimensionError {
                line: line_no,
                msg: format!("expected {n} entries, found {}", toks.len()),
            });
        }
        for tok in toks {
            data.push(parse_number(tok, line_no)?);
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::ParseError {
            line: line_no,
            msg: "unexpected content after matrix rows".into(),
        });
    }
    Matrix::new(n, data)
}

pub fn parse_vector_str(text: &str) -> Result<Vector> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::ParseError {
        line: 1,
        msg: "empty input: expected length".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::ParseError {
        line: header_line,
        msg: format!("expected length, found `{header}`"),
    })?;

    let mut vals = Vec::with_capacity(n);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        for tok in line.split_whitespace() {
            if vals.len() == n {
                return Err(Error::ParseError {
                    line: line_no,
                    msg: format!("more than {n} entries"),
                });
            }
            vals.push(parse_number(tok, line_no)?);
        }
    }
    if vals.len() != n {
        return Err(Error::DimensionError {
            line: last_line,
            msg: format!("expected {n} entries, found {}", vals.len()),
        });
    }
    Ok(vals)
}

pub fn parse_matrix_file(path: &PathBuf) -> Result<Matrix> {
    parse_matrix_str(&fs::read_to_string(path)?)
}

pub fn parse_vector_file(path: &PathBuf) -> Result<Vector> {
    parse_vector_str(&fs::read_to_string(path)?)
}

fn read_source(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)?),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

/// Write a matrix in the file format `parse_matrix_str` reads, with full
/// round-trip precision.
pub fn write_matrix(out: &mut dyn Write, m: &Matrix) -> std::io::Result<()> {
    writeln!(out, "{}", m.n())?;
    for i in 0..m.n() {
        let row: Vec<String> = m.row(i).iter().map(|v| format!("{v}")).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}

// ── number formatting ───────────────────────────────────────────────

/// Format with `sig` significant digits, plain decimal where reasonable,
/// trailing zeros trimmed. Table mode uses 6, JSON 12.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mant, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if exp < -4 || exp >= sig as i32 {
        format!("{}e{exp}", trim_zeros(mant))
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// JSON number rounded to 12 significant digits, so the printed form parses
/// back to exactly the emitted value.
fn json_num(x: f64) -> Value {
    let rounded: f64 = fmt_sig(x, 12).parse().unwrap();
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

fn json_vec(v: &[f64]) -> Value {
    Value::Array(v.iter().map(|&x| json_num(x)).collect())
}

fn json_matrix(m: &Matrix) -> Value {
    Value::Array((0..m.n()).map(|i| json_vec(m.row(i))).collect())
}

fn fmt_vec(v: &[f64]) -> String {
    v.iter()
        .map(|&x| fmt_sig(x, 6))
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_matrix(out: &mut dyn Write, m: &Matrix) -> std::io::Result<()> {
    for i in 0..m.n() {
        writeln!(out, "  {}", fmt_vec(m.row(i)))?;
    }
    Ok(())
}

// ── commands ────────────────────────────────────────────────────────

/// Execute one command and return the process exit code. Reports go to
/// `out`; errors are printed to standard error.
pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> i32 {
    match run_inner(cfg, out) {
        Ok(code) => code,
        // downstream consumer closed the pipe; not our error to report
        Err(Error::BrokenPipe) => EXIT_OK,
        Err(e) => {
            eprintln!("lcpbound: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NotBMatrix | Error::NotSddM | Error::NotApplicable => EXIT_CLASS,
        _ => EXIT_USAGE,
    }
}

fn run_inner(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match cfg.command {
        CliCommand::Check => cmd_check(cfg, out),
        CliCommand::Decompose => cmd_decompose(cfg, out),
        CliCommand::Bounds => cmd_bounds(cfg, out),
        CliCommand::Verify => cmd_verify(cfg, out),
        CliCommand::Lcp => cmd_lcp(cfg, out),
        CliCommand::Reproduce => cmd_reproduce(cfg, out),
        CliCommand::Gen => cmd_gen(cfg, out),
    }
}

fn cmd_check(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let m = parse_matrix_str(&read_source(&cfg.matrix_path)?)?;
    let rep = classify(&m);
    match cfg.output_format {
        OutputFormat::Json => {
            let obj = json!({
                "n": m.n(),
                "is_z": rep.is_z,
                "is_sdd": rep.is_sdd,
                "is_m": rep.is_m,
                "is_p": rep.is_p,
                "is_b": rep.is_b,
            });
            writeln!(out, "{obj}")?;
        }
        OutputFormat::Table => {
            writeln!(out, "n       {}", m.n())?;
            writeln!(out, "is_z    {}", rep.is_z)?;
            writeln!(out, "is_sdd  {}", rep.is_sdd)?;
            writeln!(out, "is_m    {}", rep.is_m)?;
            let p = rep.is_p.map_or("n/a".into(), |b| b.to_string());
            writeln!(out, "is_p    {p}")?;
            writeln!(out, "is_b    {}", rep.is_b)?;
        }
    }
    Ok(if rep.is_b { EXIT_OK } else { EXIT_CLASS })
}

fn cmd_decompose(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let m = parse_matrix_str(&read_source(&cfg.matrix_path)?)?;
    let d = bplus_decompose(&m);
    match cfg.output_format {
        OutputFormat::Json => {
            let obj = json!({
                "n": m.n(),
                "r_plus": json_vec(&d.r_plus),
                "b_plus": json_matrix(&d.b_plus),
                "c": json_matrix(&d.c),
            });
            writeln!(out, "{obj}")?;
        }
        OutputFormat::Table => {
            writeln!(out, "n  {}", m.n())?;
            writeln!(out, "b_plus:")?;
            print_matrix(out, &d.b_plus)?;
            writeln!(out, "c:")?;
            print_matrix(out, &d.c)?;
            writeln!(out, "r_plus:  {}", fmt_vec(&d.r_plus))?;
        }
    }
    Ok(EXIT_OK)
}

fn print_bound_block(out: &mut dyn Write, r: &crate::bounds::BoundReport) -> std::io::Result<()> {
    writeln!(out, "n           {}", r.n)?;
    writeln!(out, "is_b        true")?;
    writeln!(out, "gp          {}", fmt_sig(r.gp, 6))?;
    writeln!(out, "li2016      {}", fmt_sig(r.li2016, 6))?;
    writeln!(out, "wcdd        {}", fmt_sig(r.wcdd, 6))?;
    writeln!(out, "new         {}", fmt_sig(r.new_bound, 6))?;
    writeln!(out, "beta        {}", fmt_sig(r.profile.beta, 6))?;
    writeln!(out, "beta_i      {}", fmt_vec(&r.profile.beta_i))?;
    writeln!(out, "beta_tilde  {}", fmt_vec(&r.profile.beta_tilde))?;
    writeln!(out, "l           {}", fmt_vec(&r.profile.l))?;
    writeln!(out, "beta_bar    {}", fmt_vec(&r.profile.beta_bar))
}

fn cmd_bounds(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let m = parse_matrix_str(&read_source(&cfg.matrix_path)?)?;
    let r = bound_report(&m)?;
    match cfg.output_format {
        OutputFormat::Json => {
            let obj = json!({
                "n": r.n,
                "is_b": true,
                "gp": json_num(r.gp),
                "li2016": json_num(r.li2016),
                "wcdd": json_num(r.wcdd),
                "new": json_num(r.new_bound),
                "beta": json_num(r.profile.beta),
                "beta_i": json_vec(&r.profile.beta_i),
                "beta_tilde": json_vec(&r.profile.beta_tilde),
                "l": json_vec(&r.profile.l),
                "beta_bar": json_vec(&r.profile.beta_bar),
            });
            writeln!(out, "{obj}")?;
        }
        OutputFormat::Table => print_bound_block(out, &r)?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let m = parse_matrix_str(&read_source(&cfg.matrix_path)?)?;
    let r = bound_report(&m)?;
    let est = estimate_max(&m, cfg.samples, cfg.seed);
    let sampled = est.best.norm_value;
    let exceeded: Vec<&str> = [
        ("gp", r.gp),
        ("li2016", r.li2016),
        ("wcdd", r.wcdd),
        ("new", r.new_bound),
    ]
    .iter()
    .filter(|&&(_, b)| sampled > b)
    .map(|&(name, _)| name)
    .collect();

    match cfg.output_format {
        OutputFormat::Json => {
            let obj = json!({
                "n": r.n,
                "is_b": true,
                "gp": json_num(r.gp),
                "li2016": json_num(r.li2016),
                "wcdd": json_num(r.wcdd),
                "new": json_num(r.new_bound),
                "sampled_max": json_num(sampled),
                "seed": est.seed,
                "samples": cfg.samples,
                "singular_encounters": est.singular_encounters,
            });
            writeln!(out, "{obj}")?;
        }
        OutputFormat::Table => {
            print_bound_block(out, &r)?;
            writeln!(out, "sampled_max          {}", fmt_sig(sampled, 6))?;
            writeln!(out, "argmax_d             {}", fmt_vec(&est.best.d))?;
            writeln!(out, "argmax_kind          {}", est.best.kind)?;
            writeln!(out, "samples_evaluated    {}", est.samples_evaluated)?;
            writeln!(out, "singular_encounters  {}", est.singular_encounters)?;
            writeln!(out, "seed                 {}", est.seed)?;
            if exceeded.is_empty() {
                writeln!(out, "dominance            ok (sampled max within all bounds)")?;
            } else {
                writeln!(
                    out,
                    "dominance            VIOLATED: sampled max exceeds {}",
                    exceeded.join(", ")
                )?;
            }
        }
    }
    Ok(if exceeded.is_empty() {
        EXIT_OK
    } else {
        EXIT_FALSIFIED
    })
}

fn cmd_lcp(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let q_path = cfg.q_path.clone().ok_or(Error::DomainError(
        "lcp requires --q PATH".into(),
    ))?;
    let m = parse_matrix_str(&read_source(&cfg.matrix_path)?)?;
    let q = parse_vector_file(&q_path)?;
    let bound = bound_new(&m)?;
    let p = LcpProblem::new(m, q)?;
    let solve = solve_bruteforce(&p)?;
    let cx = verify_chen_xiang(&p, bound, cfg.samples, cfg.seed)?;

    match cfg.output_format {
        OutputFormat::Json => {
            let obj = json!({
                "n": p.n(),
                "x_star": json_vec(&solve.solution.x_star),
                "w_star": json_vec(&solve.solution.w_star),
                "active_set": solve.solution.active_set,
                "accepted_bases": solve.accepted_bases,
                "bound": json_num(bound),
                "trials": cx.trials,
                "passes": cx.passes,
                "failures": cx.failures,
                "near_zero_residuals": cx.near_zero_residuals,
                "worst_ratio": cx.worst_ratio.map_or(Value::Null, json_num),
                "seed": cx.seed,
            });
            writeln!(out, "{obj}")?;
        }
        OutputFormat::Table => {
            writeln!(out, "n                    {}", p.n())?;
            writeln!(out, "x_star               {}", fmt_vec(&solve.solution.x_star))?;
            writeln!(out, "w_star               {}", fmt_vec(&solve.solution.w_star))?;
            let active: Vec<String> = solve.solution.active_set.iter().map(|i| i.to_string()).collect();
            writeln!(out, "active_set           {}", active.join(" "))?;
            writeln!(out, "accepted_bases       {}", solve.accepted_bases)?;
            writeln!(out, "bound (new)          {}", fmt_sig(bound, 6))?;
            writeln!(out, "trials               {}", cx.trials)?;
            writeln!(out, "passes               {}", cx.passes)?;
            writeln!(out, "failures             {}", cx.failures)?;
            writeln!(out, "near_zero_residuals  {}", cx.near_zero_residuals)?;
            let worst = cx.worst_ratio.map_or("n/a".into(), |w| fmt_sig(w, 6));
            writeln!(out, "worst_ratio          {worst}")?;
            writeln!(out, "seed                 {}", cx.seed)?;
        }
    }
    Ok(if cx.failures == 0 { EXIT_OK } else { EXIT_FALSIFIED })
}

fn cmd_reproduce(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let (lo, hi) = cfg.k_range;
    if lo < 1 || lo > hi {
        return Err(Error::DomainError(format!(
            "invalid k range {lo}..{hi}: need 1 <= A <= B"
        )));
    }
    let mut rows = Vec::new();
    for k in lo..=hi {
        let m = example1_matrix(k);
        let closed = example1_closed_forms(k);
        rows.push((
            k,
            bound_gp(&m)?,
            bound_wcdd(&m)?,
            bound_li2016(&m)?,
            bound_new(&m)?,
            closed.li2016_paper,
            closed.new_paper,
        ));
    }
    match cfg.output_format {
        OutputFormat::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|&(k, gp, wcdd, li_d, new_d, li_p, new_p)| {
                    json!({
                        "k": k,
                        "gp": json_num(gp),
                        "wcdd": json_num(wcdd),
                        "li2016_direct": json_num(li_d),
                        "new_direct": json_num(new_d),
                        "li2016_paper_closed_form": json_num(li_p),
                        "new_paper_closed_form": json_num(new_p),
                    })
                })
                .collect();
            let obj = json!({ "k_start": lo, "k_end": hi, "rows": rows });
            writeln!(out, "{obj}")?;
        }
        OutputFormat::Table => {
            writeln!(
                out,
                "{:>4} {:>10} {:>10} {:>14} {:>12} {:>25} {:>22}",
                "k", "gp", "wcdd", "li2016_direct", "new_direct",
                "li2016_paper_closed_form", "new_paper_closed_form"
            )?;
            for (k, gp, wcdd, li_d, new_d, li_p, new_p) in rows {
                writeln!(
                    out,
                    "{:>4} {:>10} {:>10} {:>14} {:>12} {:>25} {:>22}",
                    k,
                    fmt_sig(gp, 6),
                    fmt_sig(wcdd, 6),
                    fmt_sig(li_d, 6),
                    fmt_sig(new_d, 6),
                    fmt_sig(li_p, 6),
                    fmt_sig(new_p, 6)
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_gen(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let n = cfg.n.ok_or(Error::DomainError("gen requires --n N".into()))?;
    if n == 0 {
        return Err(Error::DomainError("gen requires n >= 1".into()));
    }
    let m = gen_b_matrix(n, cfg.seed);
    write_matrix(out, &m)?;
    Ok(EXIT_OK)
}
