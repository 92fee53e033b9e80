//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a checked property fails (or `eq` finds
//! the families unequal), 2 on usage and input errors.

use std::io::Write;
use std::path::PathBuf;

use bousfield_core::catalog::ENTRIES;
use bousfield_core::family::threads;
use bousfield_core::{
    beta, canonical, catalog, delta, gamma, normal_form, tau, thread_set_family, CatalogEntry,
    Poset, SubsetTuple,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::format::{self, FormatError};
use crate::verify::{default_corpus, run_corpus, Bounds, Suite};

#[derive(Parser, Debug)]
#[command(name = "bousfield", version, about = "Thread sets and normal forms of iterated localizations over finite posets")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
pub struct PosetArgs {
    /// Poset file, JSON or text.
    #[arg(long, value_name = "FILE", conflicts_with = "catalog")]
    pub poset: Option<PathBuf>,
    /// Catalog poset instead of a file, as `name` or `name:p1,p2`.
    #[arg(long, value_name = "NAME[:PARAMS]")]
    pub catalog: Option<String>,
}

#[derive(Args, Debug)]
pub struct TupleArgs {
    #[command(flatten)]
    pub poset: PosetArgs,
    /// Tuple file, inline JSON such as `[["a"],["b"]]`, or `@name` for a
    /// tuple attached to the catalog poset.
    #[arg(long, value_name = "FILE")]
    pub tuple: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print tau, beta, delta, gamma and the canonical form of a tuple.
    Reduce(TupleArgs),
    /// List the threads of a tuple.
    Threads(TupleArgs),
    /// Print the minimal generators of the thread-set family.
    Tset(TupleArgs),
    /// Compare the thread-set families of two tuples.
    Eq(TupleArgs),
    /// Print the normal form of a tuple.
    Classify(TupleArgs),
    /// Run verification suites on one poset or on the default corpus.
    Verify(VerifyArgs),
    /// List or emit catalog posets.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Render a poset's cover relation in DOT.
    Dot(PosetArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    OperatorLaws,
    Monoid,
    Conjecture,
    Classifier,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum, default_value = "all")]
    pub suite: SuiteArg,
    #[command(flatten)]
    pub poset: PosetArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fail instead of sampling when a space exceeds the budget.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 2)]
    pub max_k: usize,
    /// Largest number of cases enumerated exhaustively.
    #[arg(long, default_value_t = 1 << 20)]
    pub budget: u64,
    /// Samples per tuple length when sampling.
    #[arg(long, default_value_t = 4096)]
    pub samples: u64,
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Emit {
        name: String,
        params: Vec<usize>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(FormatError),
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Input(e)
    }
}

impl From<bousfield_core::Error> for CliError {
    fn from(e: bousfield_core::Error) -> Self {
        CliError::Input(e.into())
    }
}

impl CliError {
    fn to_json(&self) -> Value {
        match self {
            CliError::Usage(m) => json!({"error": {"code": "Usage", "message": m}}),
            CliError::Input(e) => e.to_json(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Input(e) => write!(f, "{} ({})", e, e.code()),
        }
    }
}

type Out = Result<(String, i32), CliError>;

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = write!(stderr, "{text}");
            }
            return code;
        }
    };
    let fmt = cli.format;
    match execute(cli) {
        Ok((text, code)) => {
            let _ = write!(stdout, "{text}");
            code
        }
        Err(e) => {
            if fmt == OutputFormat::Json {
                let _ = writeln!(stderr, "{}", e.to_json());
            } else {
                let _ = writeln!(stderr, "error: {e}");
            }
            2
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_catalog_spec(spec: &str) -> Result<CatalogEntry, CliError> {
    let (name, params) = match spec.split_once(':') {
        Some((n, p)) => (n, p),
        None => (spec, ""),
    };
    let params = params
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad catalog parameter `{s}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(catalog(name, &params)?)
}

fn load_poset(args: &PosetArgs) -> Result<(Poset, Option<CatalogEntry>), CliError> {
    match (&args.poset, &args.catalog) {
        (Some(path), _) => Ok((format::parse_poset(&read_file(path)?)?, None)),
        (None, Some(spec)) => {
            let e = parse_catalog_spec(spec)?;
            Ok((e.poset.clone(), Some(e)))
        }
        (None, None) => Err(CliError::Usage("a poset is required: --poset FILE or --catalog NAME[:PARAMS]".into())),
    }
}

fn load_tuple(p: &Poset, entry: Option<&CatalogEntry>, spec: &str) -> Result<SubsetTuple, CliError> {
    if let Some(name) = spec.strip_prefix('@') {
        let e = entry.ok_or_else(|| CliError::Usage(format!("`{spec}` needs --catalog")))?;
        return e
            .tuple(name)
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("catalog poset has no tuple `{name}`")));
    }
    let text = if spec.trim_start().starts_with('[') {
        spec.to_string()
    } else {
        read_file(&PathBuf::from(spec))?
    };
    Ok(format::parse_tuple(p, &text)?)
}

fn load_tuples(args: &TupleArgs, count: usize) -> Result<(Poset, Vec<SubsetTuple>), CliError> {
    if args.tuple.len() != count {
        return Err(CliError::Usage(format!(
            "expected {count} --tuple argument(s), got {}",
            args.tuple.len()
        )));
    }
    let (p, entry) = load_poset(&args.poset)?;
    let ts = args
        .tuple
        .iter()
        .map(|s| load_tuple(&p, entry.as_ref(), s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((p, ts))
}

fn json_out(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).unwrap();
    s.push('\n');
    s
}

fn execute(cli: Cli) -> Out {
    let fmt = cli.format;
    let json = fmt == OutputFormat::Json;
    match cli.command {
        Command::Reduce(args) => {
            let (p, ts) = load_tuples(&args, 1)?;
            let t = &ts[0];
            let steps = [
                ("tau", tau(&p, t)),
                ("beta", beta(&p, t)),
                ("delta", delta(&p, t)),
                ("gamma", gamma(t)),
                ("canonical", canonical(&p, t)),
            ];
            if json {
                let map: serde_json::Map<String, Value> = steps
                    .iter()
                    .map(|(k, v)| (k.to_string(), format::tuple_to_json(&p, v)))
                    .collect();
                Ok((json_out(Value::Object(map)), 0))
            } else {
                let text = steps
                    .iter()
                    .map(|(k, v)| format!("{k:<10}{}\n", format::tuple_to_text(&p, v)))
                    .collect();
                Ok((text, 0))
            }
        }
        Command::Threads(args) => {
            let (p, ts) = load_tuples(&args, 1)?;
            let all: Vec<Vec<&str>> = threads(&p, &ts[0])
                .map(|th| th.sequence().iter().map(|&i| p.name(i)).collect())
                .collect();
            if json {
                Ok((json_out(json!(all)), 0))
            } else {
                Ok((all.iter().map(|s| format!("({})\n", s.join(", "))).collect(), 0))
            }
        }
        Command::Tset(args) => {
            let (p, ts) = load_tuples(&args, 1)?;
            let f = thread_set_family(&p, &ts[0]);
            if json {
                Ok((json_out(format::family_to_json(&p, &f)), 0))
            } else {
                Ok((format!("{}\n", format::family_to_text(&p, &f)), 0))
            }
        }
        Command::Eq(args) => {
            let (p, ts) = load_tuples(&args, 2)?;
            let f = thread_set_family(&p, &ts[0]);
            let g = thread_set_family(&p, &ts[1]);
            let witness = f.distinguishing(&g);
            let code = if witness.is_none() { 0 } else { 1 };
            if json {
                let v = match witness {
                    None => json!({"equal": true}),
                    Some((c, first)) => json!({
                        "equal": false,
                        "generator": p.subset_names(c.members()),
                        "only_in": if first { "first" } else { "second" },
                    }),
                };
                Ok((json_out(v), code))
            } else {
                let text = match witness {
                    None => "equal\n".to_string(),
                    Some((c, first)) => format!(
                        "unequal\n{} is a generator of the {} family only\n",
                        format::chain_to_text(&p, c),
                        if first { "first" } else { "second" }
                    ),
                };
                Ok((text, code))
            }
        }
        Command::Classify(args) => {
            let (p, ts) = load_tuples(&args, 1)?;
            let form = normal_form(&p, &ts[0])?;
            if json {
                Ok((json_out(format::form_to_json(&p, &form)), 0))
            } else {
                Ok((format!("{}\n", format::form_to_text(&p, &form)), 0))
            }
        }
        Command::Verify(args) => verify(args, json),
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                if json {
                    let v: Vec<Value> = ENTRIES
                        .iter()
                        .map(|(n, p, d)| json!({"name": n, "params": p, "description": d}))
                        .collect();
                    Ok((json_out(json!(v)), 0))
                } else {
                    let text = ENTRIES
                        .iter()
                        .map(|(n, p, d)| format!("{:<26}{d}\n", format!("{n} {p}").trim_end()))
                        .collect();
                    Ok((text, 0))
                }
            }
            CatalogAction::Emit { name, params } => {
                let e = catalog(&name, &params)?;
                Ok((emit_entry(&e, fmt), 0))
            }
        },
        Command::Dot(args) => {
            let (p, _) = load_poset(&args)?;
            Ok((format::poset_to_dot(&p), 0))
        }
    }
}

fn emit_entry(e: &CatalogEntry, fmt: OutputFormat) -> String {
    let p = &e.poset;
    match fmt {
        OutputFormat::Dot => format::poset_to_dot(p),
        OutputFormat::Json => {
            let tuples: serde_json::Map<String, Value> = e
                .tuples
                .iter()
                .map(|(n, t)| (n.clone(), format::tuple_to_json(p, t)))
                .collect();
            json_out(json!({
                "name": e.name,
                "params": e.params,
                "notes": e.notes,
                "poset": format::poset_to_json(p),
                "tuples": tuples,
            }))
        }
        OutputFormat::Text => {
            let mut out = format!("# {}\n", e.notes);
            out.push_str(&format::poset_to_text(p));
            for (n, t) in &e.tuples {
                out.push_str(&format!("# {n} = {}\n", format::tuple_to_text(p, t)));
            }
            out
        }
    }
}

fn verify(args: VerifyArgs, json: bool) -> Out {
    let bounds = Bounds {
        max_k: args.max_k,
        budget: args.budget,
        exhaustive: args.exhaustive,
        seed: args.seed,
        samples: args.samples,
    };
    if bounds.max_k == 0 {
        return Err(CliError::Usage("--max-k must be at least 1".into()));
    }
    let corpus = if args.poset.poset.is_some() || args.poset.catalog.is_some() {
        let (p, _) = load_poset(&args.poset)?;
        let label = args
            .poset
            .catalog
            .clone()
            .or_else(|| args.poset.poset.as_ref().map(|x| x.display().to_string()))
            .unwrap();
        vec![(label, p)]
    } else {
        default_corpus()
    };
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::OperatorLaws => vec![Suite::OperatorLaws],
        SuiteArg::Monoid => vec![Suite::Monoid],
        SuiteArg::Conjecture => vec![Suite::Conjecture],
        SuiteArg::Classifier => vec![Suite::Classifier],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut all_passed = true;
    let mut text = String::new();
    let mut docs = Vec::new();
    for suite in suites {
        let reports = run_corpus(suite, &corpus, &bounds)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let cases: u64 = reports.iter().map(|r| r.cases).sum();
        let failures: u64 = reports.iter().map(|r| r.failure_count).sum();
        let passed = failures == 0;
        all_passed &= passed;
        text.push_str(&format!(
            "{} {}: {} poset(s), {cases} cases, {failures} failure(s)\n",
            if passed { "PASS" } else { "FAIL" },
            suite.name(),
            reports.len(),
        ));
        for r in reports.iter().filter(|r| !r.passed()) {
            for f in &r.failures {
                text.push_str(&format!(
                    "  {}: {} inputs={} expected={} actual={}\n",
                    r.poset,
                    f.property,
                    Value::from(f.inputs.clone()),
                    f.expected,
                    f.actual
                ));
            }
        }
        docs.push(json!({"suite": suite.name(), "passed": passed, "cases": cases, "failures": failures, "reports": reports}));
    }
    let code = if all_passed { 0 } else { 1 };
    if json {
        Ok((json_out(json!({"passed": all_passed, "suites": docs})), code))
    } else {
        Ok((text, code))
    }
}
