mod expr;

use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lunar_core::magic::{construct, ConstructParams, LINE_NAMES};
use lunar_core::numtheory::{enumerate_primes, enumerate_squares, find_triples};
use lunar_core::search::{
    stream_magic_cubes, stream_smallest_total, stream_squares_with_total, stream_sum_pairs,
    EntryConstraint, Pruning, SearchSpec, StopReason,
};
use lunar_core::{Cube3, Document, Grid3, LineSet, LunarError, LunarNat};
use serde_json::{json, Value};

use expr::ExprError;

#[derive(Parser)]
#[command(
    name = "lunar",
    version,
    about = "Lunar arithmetic and lunar magic squares"
)]
struct Cli {
    /// Emit one JSON record per line instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression with lunar + * and ^
    Eval(EvalArgs),
    /// Check grid or cube documents (or a stream of records) for magic
    Verify(VerifyArgs),
    /// Build a magic square from parameters or a family of powers from roots
    Construct(ConstructArgs),
    /// List squares, primes or Pythagorean triples
    Enumerate(EnumerateArgs),
    /// Search for magic squares
    Search(SearchArgs),
    /// Search for magic cubes
    Cube(CubeArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Expression, e.g. "15+83" or "(12+3)^2"
    expr: String,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
    base: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON file to read, or - for stdin
    file: String,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
    base: u32,
    #[arg(long, required_unless_present = "roots")]
    a: Option<String>,
    #[arg(long, required_unless_present = "roots")]
    b: Option<String>,
    #[arg(long, required_unless_present = "roots")]
    c: Option<String>,
    #[arg(long, required_unless_present = "roots")]
    d: Option<String>,
    #[arg(long, required_unless_present = "roots")]
    alpha: Option<String>,
    #[arg(long, required_unless_present = "roots")]
    beta: Option<String>,
    #[arg(long, required_unless_present = "roots")]
    gamma: Option<String>,
    #[arg(long, required_unless_present = "roots")]
    delta: Option<String>,
    /// Grid of roots, as "r,r,r;r,r,r;r,r,r" or a grid document file
    #[arg(long, conflicts_with_all = ["a", "b", "c", "d", "alpha", "beta", "gamma", "delta"])]
    roots: Option<String>,
    /// Raise every cell to this power (default 2 with --roots)
    #[arg(long)]
    power: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKind {
    Squares,
    Primes,
    Triples,
}

#[derive(Args)]
struct EnumerateArgs {
    kind: EnumerateKind,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
    base: u32,
    /// Longest value listed (squares, primes)
    #[arg(long)]
    max_digits: Option<usize>,
    /// Longest leg (triples)
    #[arg(long)]
    max_leg_digits: Option<usize>,
    /// Print only how many there are
    #[arg(long)]
    count: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum PruningArg {
    Full,
    CompletedLines,
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(2..=36))]
    base: u32,
    /// Fixed total; without it the least total is searched for
    #[arg(long)]
    total: Option<String>,
    /// Scan totals in length-lex order and stop at the first with results
    #[arg(long, conflicts_with = "total")]
    smallest_total: bool,
    /// Entry constraint: any, squares or power:N
    #[arg(long, default_value = "any", value_parser = parse_entries)]
    entries: EntryConstraint,
    /// Require all entries to differ
    #[arg(long)]
    distinct: bool,
    /// Longest total scanned [default: 3, or the length of --total]
    #[arg(long)]
    max_total_digits: Option<usize>,
    /// Search nodes allowed before giving up
    #[arg(long, default_value_t = 1_000_000_000)]
    budget: u64,
    /// Most results reported
    #[arg(long, default_value_t = 100)]
    limit: usize,
    #[arg(long, value_enum, default_value_t = PruningArg::Full)]
    pruning: PruningArg,
    /// Worker threads
    #[arg(long, env = "LUNAR_THREADS", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
    threads: u64,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// One grid per symmetry class
    #[arg(long)]
    canonical: bool,
    /// Search for pairs of grids whose cellwise sum is a grid too
    #[arg(long)]
    sum_pairs: bool,
}

#[derive(Args)]
struct CubeArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// axes (axis lines and space diagonals) or faces (also face diagonals)
    #[arg(long, default_value = "axes", value_parser = parse_line_set)]
    line_set: LineSet,
}

fn parse_entries(s: &str) -> Result<EntryConstraint, String> {
    s.parse::<EntryConstraint>().map_err(|e| e.to_string())
}

fn parse_line_set(s: &str) -> Result<LineSet, String> {
    LineSet::from_name(s).ok_or_else(|| format!("unknown line set {s:?}"))
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lunar(#[from] LunarError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

type CliResult = Result<ExitCode, CliError>;

fn found(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Line-oriented stdout. After the first write error (a closed pipe, say)
/// further output is dropped and the error is reported at the end.
struct Out {
    json: bool,
    stdout: io::Stdout,
    error: Option<io::Error>,
}

impl Out {
    fn line(&mut self, text: &str) {
        if self.error.is_none() {
            if let Err(e) = writeln!(self.stdout.lock(), "{text}") {
                self.error = Some(e);
            }
        }
    }

    fn record(&mut self, value: Value) {
        self.line(&value.to_string());
    }

    /// Text block, e.g. a grid followed by a blank line.
    fn block(&mut self, text: &str) {
        self.line(text.trim_end_matches('\n'));
        self.line("");
    }

    fn finish(self, code: ExitCode) -> CliResult {
        match self.error {
            Some(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(code),
            Some(e) => Err(e.into()),
            None => Ok(code),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out {
        json: cli.json,
        stdout: io::stdout(),
        error: None,
    };
    let result = match cli.command {
        Command::Eval(args) => cmd_eval(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Construct(args) => cmd_construct(args, out),
        Command::Enumerate(args) => cmd_enumerate(args, out),
        Command::Search(args) => cmd_search(args, out),
        Command::Cube(args) => cmd_cube(args, out),
    };
    result.unwrap_or_else(|e| {
        eprintln!("lunar: error: {e}");
        ExitCode::from(2)
    })
}

fn cmd_eval(args: EvalArgs, mut out: Out) -> CliResult {
    let value = expr::eval(&args.expr, args.base)?;
    if out.json {
        out.record(json!({"type": "value", "base": args.base, "value": value}));
    } else {
        out.line(&value.to_string());
    }
    out.finish(ExitCode::SUCCESS)
}

// ---- verify ----

struct Verdict {
    ok: bool,
    text: Vec<String>,
    record: Value,
}

fn verify_grid(g: &Grid3, claimed: Option<&str>) -> Verdict {
    let distinct = g.has_distinct_entries();
    let Some(total) = g.magic_total() else {
        let (line, sum, want) = g.first_mismatch().expect("non-magic grid has a mismatch");
        return Verdict {
            ok: false,
            text: vec![format!(
                "not magic: {} sums to {sum}, row 1 sums to {want}",
                LINE_NAMES[line]
            )],
            record: json!({
                "kind": "grid",
                "magic": false,
                "distinct": distinct,
                "first_failing_line": {"line": LINE_NAMES[line], "sum": sum, "expected": want},
            }),
        };
    };
    let mut text = vec![format!(
        "magic, total {total}, {}",
        if distinct { "distinct" } else { "NOT distinct" }
    )];
    let dominating: Vec<[usize; 2]> = g
        .dominating_cells()
        .iter()
        .map(|&i| [i / 3 + 1, i % 3 + 1])
        .collect();
    text.push(if dominating.is_empty() {
        "no cell dominates the others".to_string()
    } else {
        let cells: Vec<String> = dominating
            .iter()
            .map(|[r, c]| format!("({r},{c})"))
            .collect();
        format!("dominating cells: {}", cells.join(" "))
    });
    let planes = total.len().max(1);
    let planes_magic = (0..planes).all(|i| {
        g.digit_plane(i).magic_total()
            == Some(LunarNat::from_digits(g.base(), vec![total.digit(i)]).unwrap())
    });
    text.push(format!(
        "digit planes: {} of {planes} magic",
        if planes_magic { "all" } else { "not all" }
    ));
    let mut ok = planes_magic;
    if let Some(claim) = claimed {
        if claim != total.to_string() {
            ok = false;
            text.push(format!("record claims total {claim}"));
        }
    }
    Verdict {
        ok,
        text,
        record: json!({
            "kind": "grid",
            "magic": true,
            "total": total,
            "distinct": distinct,
            "dominating_cells": dominating,
            "planes_magic": planes_magic,
            "matches_claim": claimed.is_none_or(|c| c == total.to_string()),
        }),
    }
}

fn verify_cube(c: &Cube3, claimed: Option<&str>) -> Verdict {
    let distinct = c.has_distinct_entries();
    let line_set = c.line_set().name();
    match c.magic_total() {
        None => Verdict {
            ok: false,
            text: vec![format!("not magic under {line_set}")],
            record: json!({"kind": "cube", "line_set": line_set, "magic": false, "distinct": distinct}),
        },
        Some(total) => {
            let matches = claimed.is_none_or(|cl| cl == total.to_string());
            let mut text = vec![format!(
                "magic cube ({line_set}), total {total}, {}",
                if distinct { "distinct" } else { "NOT distinct" }
            )];
            if let (false, Some(cl)) = (matches, claimed) {
                text.push(format!("record claims total {cl}"));
            }
            Verdict {
                ok: matches,
                text,
                record: json!({
                    "kind": "cube",
                    "line_set": line_set,
                    "magic": true,
                    "total": total,
                    "distinct": distinct,
                    "matches_claim": matches,
                }),
            }
        }
    }
}

fn document(value: &Value) -> Result<Document, CliError> {
    Ok(serde_json::from_value(value.clone())
        .map_err(|e| LunarError::InvalidDocument(e.to_string()))?)
}

fn grid_of(value: &Value) -> Result<Grid3, CliError> {
    match document(value)? {
        Document::Grid(d) => Ok(d.to_grid()?),
        Document::Cube(_) => {
            Err(LunarError::InvalidDocument("expected a grid, found a cube".into()).into())
        }
    }
}

/// Verdicts for one input value: a bare document, or a record as printed
/// by `search`, `cube` or `construct`. Manifests yield nothing.
fn verify_value(value: &Value) -> Result<Vec<Verdict>, CliError> {
    let claimed = value.get("total").and_then(Value::as_str);
    match value.get("type").and_then(Value::as_str) {
        None => Ok(vec![match document(value)? {
            Document::Grid(d) => verify_grid(&d.to_grid()?, None),
            Document::Cube(d) => verify_cube(&d.to_cube()?, None),
        }]),
        Some("manifest") => Ok(Vec::new()),
        Some("grid") => {
            let g = grid_of(value.get("grid").unwrap_or(&Value::Null))?;
            Ok(vec![verify_grid(&g, claimed)])
        }
        Some("cube") => match document(value.get("cube").unwrap_or(&Value::Null))? {
            Document::Cube(d) => Ok(vec![verify_cube(&d.to_cube()?, claimed)]),
            Document::Grid(_) => Err(LunarError::InvalidDocument("expected a cube".into()).into()),
        },
        Some("sum_pair") => {
            let part = |k: &str| grid_of(value.get(k).unwrap_or(&Value::Null));
            let (first, second, sum) = (part("first")?, part("second")?, part("sum")?);
            let mut verdicts: Vec<Verdict> = [&first, &second, &sum]
                .into_iter()
                .map(|g| verify_grid(g, None))
                .collect();
            let adds_up = first.elementwise_add(&second)? == sum;
            verdicts.push(Verdict {
                ok: adds_up,
                text: vec![if adds_up {
                    "first + second = sum"
                } else {
                    "first + second != sum"
                }
                .to_string()],
                record: json!({"kind": "sum", "adds_up": adds_up}),
            });
            Ok(verdicts)
        }
        Some(other) => {
            Err(LunarError::InvalidDocument(format!("unknown record type {other:?}")).into())
        }
    }
}

fn cmd_verify(args: VerifyArgs, mut out: Out) -> CliResult {
    let text = if args.file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(&args.file)?
    };
    let mut verdicts = Vec::new();
    for value in serde_json::Deserializer::from_str(&text).into_iter::<Value>() {
        let value = value.map_err(|e| LunarError::InvalidDocument(e.to_string()))?;
        verdicts.extend(verify_value(&value)?);
    }
    if verdicts.is_empty() {
        return Err(LunarError::InvalidDocument("nothing to verify".into()).into());
    }
    let numbered = verdicts.len() > 1;
    for (i, v) in verdicts.iter().enumerate() {
        if out.json {
            let mut record = v.record.clone();
            record["type"] = json!("verify");
            record["index"] = json!(i);
            record["ok"] = json!(v.ok);
            out.record(record);
        } else {
            if numbered {
                out.line(&format!("# {}", i + 1));
            }
            for line in &v.text {
                out.line(line);
            }
        }
    }
    let all = verdicts.iter().all(|v| v.ok);
    out.finish(found(all))
}

// ---- construct ----

fn parse_roots(text: &str, base: u32) -> Result<Grid3, CliError> {
    if std::path::Path::new(text).is_file() {
        return grid_of(
            &serde_json::from_str(&std::fs::read_to_string(text)?)
                .map_err(|e| LunarError::InvalidDocument(e.to_string()))?,
        );
    }
    let rows: Vec<Vec<&str>> = text
        .split(';')
        .map(|r| r.split([',', ' ']).filter(|s| !s.is_empty()).collect())
        .collect();
    if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
        return Err(CliError::Usage(
            "--roots takes 3 rows of 3 values, like \"1,2,3;4,5,6;7,8,9\"".into(),
        ));
    }
    Ok(Grid3::parse(
        base,
        std::array::from_fn(|r| std::array::from_fn(|c| rows[r][c])),
    )?)
}

fn cmd_construct(args: ConstructArgs, mut out: Out) -> CliResult {
    let grid = match &args.roots {
        Some(roots) => parse_roots(roots, args.base)?.power_family(args.power.unwrap_or(2)),
        None => {
            let get = |o: &Option<String>| o.clone().unwrap_or_default();
            let texts = [
                &args.a,
                &args.b,
                &args.c,
                &args.d,
                &args.alpha,
                &args.beta,
                &args.gamma,
                &args.delta,
            ]
            .map(get);
            let params = ConstructParams::parse(args.base, texts.each_ref().map(String::as_str))?;
            let g = construct(&params);
            match args.power {
                Some(n) => g.power_family(n),
                None => g,
            }
        }
    };
    let total = grid.magic_total();
    if out.json {
        let mut record =
            json!({"type": "grid", "distinct": grid.has_distinct_entries(), "grid": grid});
        if let Some(t) = &total {
            record["total"] = json!(t);
        }
        out.record(record);
    } else {
        out.block(&grid.to_string());
        for line in verify_grid(&grid, None).text {
            out.line(&line);
        }
    }
    out.finish(found(total.is_some()))
}

// ---- enumerate ----

fn cmd_enumerate(args: EnumerateArgs, mut out: Out) -> CliResult {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("{flag} is required")))
    };
    let items: Vec<Value> = match args.kind {
        EnumerateKind::Squares | EnumerateKind::Primes => {
            let digits = need(args.max_digits, "--max-digits")?;
            let values = match args.kind {
                EnumerateKind::Squares => enumerate_squares(args.base, digits)?,
                _ => enumerate_primes(args.base, digits)?,
            };
            values.iter().map(|v| json!(v)).collect()
        }
        EnumerateKind::Triples => {
            find_triples(args.base, need(args.max_leg_digits, "--max-leg-digits")?)?
                .iter()
                .map(|t| json!([t.a(), t.b(), t.c()]))
                .collect()
        }
    };
    if args.count {
        if out.json {
            out.record(json!({"type": "count", "count": items.len()}));
        } else {
            out.line(&items.len().to_string());
        }
    } else {
        for item in &items {
            match (out.json, item) {
                (true, Value::Array(t)) => {
                    out.record(json!({"type": "triple", "a": t[0], "b": t[1], "c": t[2]}))
                }
                (true, v) => out.record(json!({"type": "value", "value": v})),
                (false, Value::Array(t)) => {
                    let t: Vec<&str> = t.iter().filter_map(Value::as_str).collect();
                    out.line(&t.join(" "));
                }
                (false, v) => out.line(v.as_str().unwrap_or_default()),
            }
        }
    }
    out.finish(found(!items.is_empty()))
}

// ---- search and cube ----

const DEFAULT_MAX_TOTAL_DIGITS: usize = 3;

impl SpecArgs {
    fn spec(&self) -> Result<SearchSpec, CliError> {
        let pruning = match self.pruning {
            PruningArg::Full => Pruning::Full,
            PruningArg::CompletedLines => Pruning::CompletedLinesOnly,
        };
        let mut spec = SearchSpec::new(self.base)
            .entries(self.entries)
            .distinct(self.distinct)
            .budget(self.budget)
            .emit_limit(self.limit)
            .pruning(pruning);
        let mut digits = self.max_total_digits.unwrap_or(DEFAULT_MAX_TOTAL_DIGITS);
        if let Some(text) = &self.total {
            let total = LunarNat::parse(text, self.base)?;
            match self.max_total_digits {
                Some(d) if d < total.len() => {
                    return Err(CliError::Usage(format!(
                        "--total {total} has {} digits but --max-total-digits is {d}",
                        total.len()
                    )))
                }
                Some(_) => {}
                None => digits = digits.max(total.len()),
            }
            spec = spec.total(total);
        }
        spec = spec.max_total_digits(digits);
        spec.validate()?;
        Ok(spec)
    }
}

struct Summary<'a> {
    subcommand: &'static str,
    mode: &'static str,
    spec: &'a SearchSpec,
    extra: Value,
    threads: u64,
    total: Option<&'a LunarNat>,
    results: usize,
    nodes: u64,
    exhausted: bool,
    stop: StopReason,
    refuted: u64,
    started: Instant,
}

fn summarize(out: &mut Out, s: Summary) {
    let elapsed = s.started.elapsed();
    if out.json {
        let mut record = json!({
            "type": "manifest",
            "subcommand": s.subcommand,
            "mode": s.mode,
            "version": env!("CARGO_PKG_VERSION"),
            "argv": std::env::args().collect::<Vec<_>>(),
            "params": s.spec,
            "threads": s.threads,
            "total": s.total,
            "results": s.results,
            "nodes_explored": s.nodes,
            "exhausted": s.exhausted,
            "stop": s.stop,
            "totals_refuted": s.refuted,
            "wall_time_ms": elapsed.as_secs_f64() * 1e3,
        });
        if let (Value::Object(r), Value::Object(extra)) = (&mut record, s.extra) {
            r.extend(extra);
        }
        out.record(record);
        return;
    }
    let mut parts = Vec::new();
    if s.results == 0 {
        parts.push("no results".to_string());
    } else {
        let total = s.total.map(|t| format!("total {t}: ")).unwrap_or_default();
        parts.push(format!(
            "{total}{} result{}",
            s.results,
            if s.results == 1 { "" } else { "s" }
        ));
    }
    parts.push(
        match s.stop {
            StopReason::Exhausted => "exhausted",
            StopReason::EmitLimit => "stopped at --limit",
            StopReason::Budget => "budget spent, not exhausted",
        }
        .to_string(),
    );
    if s.refuted > 0 {
        parts.push(format!("{} smaller totals refuted", s.refuted));
    }
    parts.push(format!("{} nodes", s.nodes));
    parts.push(format!("{:.3}s", elapsed.as_secs_f64()));
    out.line(&parts.join(", "));
}

fn cmd_search(args: SearchArgs, mut out: Out) -> CliResult {
    let spec = args.spec.spec()?.canonical(args.canonical);
    let threads = args.spec.threads as usize;
    let started = Instant::now();
    let mut count = 0usize;

    if args.sum_pairs {
        let report = stream_sum_pairs(&spec, threads, &mut |p| {
            if out.json {
                out.record(json!({
                    "type": "sum_pair",
                    "index": count,
                    "first": p.first,
                    "second": p.second,
                    "sum": p.sum,
                }));
            } else {
                out.line(&format!("# {}", count + 1));
                out.line(p.first.to_string().trim_end());
                out.line("+");
                out.line(p.second.to_string().trim_end());
                out.line("=");
                out.block(&p.sum.to_string());
            }
            count += 1;
        })?;
        summarize(
            &mut out,
            Summary {
                subcommand: "search",
                mode: "sum_pairs",
                spec: &spec,
                extra: json!({}),
                threads: args.spec.threads,
                total: report.sum_total.as_ref(),
                results: count,
                nodes: report.nodes_explored,
                exhausted: report.exhausted,
                stop: report.stop,
                refuted: report.sum_totals_refuted,
                started,
            },
        );
        return out.finish(found(count > 0));
    }

    let mut total_seen: Option<LunarNat> = None;
    let mut sink = |g: Grid3| {
        if out.json {
            let total = g.magic_total();
            out.record(json!({"type": "grid", "index": count, "total": total, "grid": g}));
        } else {
            out.block(&g.to_string());
        }
        if total_seen.is_none() {
            total_seen = g.magic_total();
        }
        count += 1;
    };
    let (report, mode) = if spec.total.is_some() {
        (
            stream_squares_with_total(&spec, threads, &mut sink)?,
            "total",
        )
    } else {
        (
            stream_smallest_total(&spec, threads, &mut sink)?,
            "smallest_total",
        )
    };
    summarize(
        &mut out,
        Summary {
            subcommand: "search",
            mode,
            spec: &spec,
            extra: json!({}),
            threads: args.spec.threads,
            total: report.total.as_ref().or(total_seen.as_ref()),
            results: count,
            nodes: report.nodes_explored,
            exhausted: report.exhausted,
            stop: report.stop,
            refuted: report.totals_refuted,
            started,
        },
    );
    out.finish(found(count > 0))
}

fn cube_text(c: &Cube3) -> String {
    let strs: Vec<String> = c.cells().iter().map(LunarNat::to_string).collect();
    let w = strs.iter().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for layer in 0..3 {
        if layer > 0 {
            s.push_str("--\n");
        }
        for row in 0..3 {
            let i = 9 * layer + 3 * row;
            s.push_str(&format!(
                "{:>w$} | {:>w$} | {:>w$}\n",
                strs[i],
                strs[i + 1],
                strs[i + 2]
            ));
        }
    }
    s
}

fn cmd_cube(args: CubeArgs, mut out: Out) -> CliResult {
    let spec = args.spec.spec()?;
    let threads = args.spec.threads as usize;
    let started = Instant::now();
    let mut count = 0usize;
    let report = stream_magic_cubes(&spec, args.line_set, threads, &mut |c| {
        if out.json {
            let total = c.magic_total();
            out.record(json!({"type": "cube", "index": count, "total": total, "cube": c}));
        } else {
            out.block(&cube_text(&c));
        }
        count += 1;
    })?;
    summarize(
        &mut out,
        Summary {
            subcommand: "cube",
            mode: if spec.total.is_some() {
                "total"
            } else {
                "smallest_total"
            },
            spec: &spec,
            extra: json!({"line_set": args.line_set}),
            threads: args.spec.threads,
            total: report
                .total
                .as_ref()
                .filter(|_| count > 0 || spec.total.is_some()),
            results: count,
            nodes: report.nodes_explored,
            exhausted: report.exhausted,
            stop: report.stop,
            refuted: report.totals_refuted,
            started,
        },
    );
    out.finish(found(count > 0))
}
