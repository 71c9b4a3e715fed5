use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use alexander_core::alexander::characterize_b1_one;
use alexander_core::verify::{self, Theorem, VerifyOptions};
use alexander_core::{corpus, full_report, parse_poly, parse_presentation, Error, LaurentPoly};
use clap::{ArgAction, Parser, Subcommand};
use serde_json::{json, Value};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "alexander",
    version,
    about = "Alexander invariants of finitely presented groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Corpus entry name ("all" where a suite accepts it)
    #[arg(long, global = true)]
    corpus: Option<String>,

    /// Comma-separated primes for cover suites
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Option<Vec<u64>>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Random cases per suite
    #[arg(long, global = true, default_value_t = 50)]
    cases: usize,

    /// Largest cover (number of cosets) to build
    #[arg(long, global = true, default_value_t = 256)]
    max_index: u64,

    /// Largest degree span of random polynomials
    #[arg(long, global = true, default_value_t = 12)]
    max_degree: u32,

    /// Emit JSON (pass `--json false` for plain text)
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a presentation file or corpus entry
    Compute { path: Option<PathBuf> },
    /// Symmetry class, trace and b1 = 1 realizability of a polynomial
    Classify { poly: String },
    /// Run a theorem suite
    Verify { theorem: String },
    /// Built-in presentations
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
    Show { name: String },
}

struct Failure {
    code: u8,
    message: String,
    payload: Option<Value>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
            payload: None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::Invalid(_)
            | Error::NotPrime(_)
            | Error::ArityMismatch { .. } => EXIT_USAGE,
            Error::IndexLimit { .. } => EXIT_RESOURCE,
            _ => EXIT_FAILURE,
        };
        Self {
            code,
            message: e.to_string(),
            payload: None,
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(p) = f.payload {
                emit(&render(&p, cli.json));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Prints to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Compute { path } => compute(cli, path.as_ref()),
        Command::Classify { poly } => classify(cli, poly),
        Command::Verify { theorem } => verify(cli, theorem),
        Command::Corpus { action } => match action {
            CorpusAction::List => corpus_list(cli),
            CorpusAction::Show { name } => corpus_show(name),
        },
    }
}

fn render(v: &Value, as_json: bool) -> String {
    if as_json {
        return serde_json::to_string_pretty(v).expect("JSON values serialize");
    }
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}

fn compute(cli: &Cli, path: Option<&PathBuf>) -> Outcome {
    let p = match (path, cli.corpus.as_deref()) {
        (Some(_), Some(_)) => return Err(Failure::usage("give a path or --corpus, not both")),
        (None, None) => return Err(Failure::usage("give a path or --corpus")),
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            parse_presentation(&text)?
        }
        (None, Some(name)) => {
            corpus::by_name(name)
                .ok_or_else(|| Failure::usage(format!("unknown corpus entry '{name}'")))?
                .presentation
        }
    };
    let report = full_report(&p)?;
    let v = serde_json::to_value(&report).expect("report serializes");
    if !report.all_checks_pass() {
        return Err(Failure {
            code: EXIT_FAILURE,
            message: "a consistency check failed".into(),
            payload: Some(v),
        });
    }
    Ok(render(&v, cli.json))
}

/// Arity 1 for `t`, otherwise the largest index among `t1`, `t2`, ….
fn infer_arity(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut arity = 1;
    for (i, &b) in bytes.iter().enumerate() {
        if b == b't' {
            let digits: String = text[i + 1..]
                .chars()
                .take_while(char::is_ascii_digit)
                .collect();
            if let Ok(k) = digits.parse::<usize>() {
                arity = arity.max(k);
            }
        }
    }
    arity
}

fn classify(cli: &Cli, text: &str) -> Outcome {
    let f: LaurentPoly = parse_poly(text, infer_arity(text)).map_err(Error::from)?;
    let class = f.classify_symmetry()?;
    let realizable = if f.arity() == 1 {
        Some(characterize_b1_one(&f)?.realizable)
    } else {
        None
    };
    let witness = class.witness.as_ref().map(|u| u.to_poly().to_string());
    let v = json!({
        "polynomial": f.to_string(),
        "normalized": f.normalize().to_string(),
        "symmetry": class.kind.to_string(),
        "witness": witness,
        "trace": i64::try_from(f.trace()).map_or_else(|_| json!(f.trace().to_string()), Value::from),
        "realizable": realizable,
    });
    Ok(render(&v, cli.json))
}

fn verify(cli: &Cli, name: &str) -> Outcome {
    let theorem: Theorem = name.parse()?;
    let opts = VerifyOptions {
        seed: cli.seed,
        cases: cli.cases,
        corpus: cli.corpus.clone(),
        primes: cli.primes.clone(),
        max_index: cli.max_index,
        max_degree: cli.max_degree,
    };
    let report = verify::run(theorem, &opts)?;
    let v = serde_json::to_value(&report).expect("report serializes");
    if !report.passed() {
        return Err(Failure {
            code: EXIT_FAILURE,
            message: format!("{theorem}: counterexample found"),
            payload: Some(v),
        });
    }
    Ok(render(&v, cli.json))
}

fn corpus_list(cli: &Cli) -> Outcome {
    let entries = corpus::list();
    if cli.json {
        let v: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "description": e.description,
                    "presentation": e.presentation.to_string(),
                })
            })
            .collect();
        return Ok(serde_json::to_string_pretty(&v).expect("JSON values serialize"));
    }
    Ok(entries
        .iter()
        .map(|e| format!("{}\t{}", e.name, e.presentation))
        .collect::<Vec<_>>()
        .join("\n"))
}

fn corpus_show(name: &str) -> Outcome {
    let e = corpus::by_name(name)
        .ok_or_else(|| Failure::usage(format!("unknown corpus entry '{name}'")))?;
    Ok(format!(
        "# {}: {}\n{}",
        e.name, e.description, e.presentation
    ))
}
