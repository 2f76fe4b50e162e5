use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use welded::gen::{scramble_unknot, seeded};
use welded::invariants::{fingerprint, FingerprintConfig};
use welded::model::{decode_code, decode_wgd, GaussCode, WeldedGaussDiagram};
use welded::moves::{apply, enumerate_sites, KindSet, MoveKind, MoveSite};
use welded::search::{are_equivalent, build_atlas, simplify, Equivalence, SearchBudget};
use welded::symmetry::Reversible;
use welded::{gauss_code_to_gauss_diagram, gauss_to_wgd, wgd_to_gauss, wgd_to_gauss_diagram};

/// Welded Gauss diagrams and Gauss codes: conversion, rewriting, invariants and search.
///
/// Inputs are files (`-` for standard input) holding either a Gauss code such as
/// `O1+ U2+ O3+ U1+ O2+ U3+`, a welded Gauss diagram object `{"order": [...], "map": {...}}`,
/// or `{"code": "..."}`.
#[derive(Parser)]
#[command(name = "welded", version)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between representations.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Canonical welded Gauss diagram.
    Canon { input: PathBuf },
    /// List move sites of the input's code.
    Moves {
        input: PathBuf,
        /// Comma-separated kinds, e.g. R1_delete,R3. Defaults to all.
        #[arg(long, value_delimiter = ',')]
        kinds: Vec<String>,
        /// Leave out insertions.
        #[arg(long)]
        no_growth: bool,
    },
    /// Apply one site, given as the JSON printed by `moves`.
    Apply {
        input: PathBuf,
        #[arg(long)]
        site: String,
    },
    /// Search for a move path between two inputs.
    Equiv {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Look for a smaller equivalent diagram.
    Simplify {
        input: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Coloring and homomorphism counts.
    Invariants {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
        primes: Vec<u64>,
        /// Built-in groups: S3, D4, D6, D8, D10, D12.
        #[arg(long, value_delimiter = ',')]
        groups: Vec<String>,
    },
    /// Orientation, sign or global reversal.
    Symmetry {
        input: PathBuf,
        #[command(flatten)]
        op: SymmetryOp,
    },
    /// Every diagram up to `n-max` crossings, clustered into classes and reversal orbits.
    Atlas {
        #[arg(long)]
        n_max: usize,
        /// Output file; standard output if absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "3,5,7")]
        primes: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "S3")]
        groups: Vec<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// A seeded random unknot diagram built from insertions.
    Scramble {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        moves: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Wgd,
    Gauss,
    Gd,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SymmetryOp {
    #[arg(long)]
    reverse: bool,
    #[arg(long)]
    bar: bool,
    #[arg(long)]
    global: bool,
}

#[derive(Args)]
struct BudgetArgs {
    /// Crossing cap for intermediate diagrams [default: largest input + 2].
    #[arg(long)]
    max_crossings: Option<usize>,
    /// Distinct diagrams to visit [default: 20000, atlas 400 per diagram].
    #[arg(long)]
    max_states: Option<usize>,
    /// Path length cap [default: 16, atlas 8].
    #[arg(long)]
    max_depth: Option<usize>,
}

impl BudgetArgs {
    fn resolve(&self, crossings: usize, states: usize, depth: usize) -> SearchBudget {
        SearchBudget {
            max_crossings: self.max_crossings.unwrap_or(crossings + 2),
            max_states: self.max_states.unwrap_or(states),
            max_depth: self.max_depth.unwrap_or(depth),
        }
    }
}

enum CliError {
    /// Bad invocation or unreadable input files.
    Usage(String),
    /// The inputs were read but are invalid, or an operation on them failed.
    Domain(String),
}

impl CliError {
    fn domain(e: impl std::fmt::Display) -> Self {
        CliError::Domain(e.to_string())
    }
}

enum Input {
    Code(GaussCode),
    Wgd(WeldedGaussDiagram),
}

impl Input {
    fn code(&self) -> GaussCode {
        match self {
            Input::Code(c) => c.clone(),
            Input::Wgd(w) => wgd_to_gauss(w),
        }
    }

    fn wgd(&self) -> Result<WeldedGaussDiagram, CliError> {
        match self {
            Input::Code(c) => gauss_to_wgd(c).map_err(CliError::domain),
            Input::Wgd(w) => Ok(w.clone()),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CodeObject {
    code: String,
}

fn read_text(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

fn parse_input(text: &str) -> Result<Input, CliError> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        if let Ok(obj) = serde_json::from_str::<CodeObject>(trimmed) {
            return decode_code(&obj.code).map(Input::Code).map_err(CliError::domain);
        }
        return decode_wgd(trimmed).map(Input::Wgd).map_err(CliError::domain);
    }
    decode_code(trimmed).map(Input::Code).map_err(CliError::domain)
}

fn load(path: &Path) -> Result<Input, CliError> {
    parse_input(&read_text(path)?)
}

fn parse_kinds(names: &[String]) -> Result<KindSet, CliError> {
    if names.is_empty() {
        return Ok(KindSet::ALL);
    }
    names
        .iter()
        .map(|n| {
            MoveKind::ALL
                .into_iter()
                .find(|k| k.name() == n)
                .ok_or_else(|| CliError::Usage(format!("unknown move kind {n:?}")))
        })
        .collect()
}

fn config(primes: &[u64], groups: &[String]) -> Result<FingerprintConfig, CliError> {
    FingerprintConfig::new(primes.to_vec(), groups).map_err(|e| CliError::Usage(e.to_string()))
}

fn code_json(code: &GaussCode) -> serde_json::Value {
    json!({ "code": code.to_string() })
}

fn emit(text: String) -> Result<String, CliError> {
    Ok(text + "\n")
}

/// Runs one command and returns what goes to standard output.
fn run(cli: Cli) -> Result<String, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Convert { input, to } => {
            let input = load(&input)?;
            match to {
                Target::Wgd => emit(input.wgd()?.to_string()),
                Target::Gauss => {
                    let code = input.code();
                    emit(if json { code_json(&code).to_string() } else { code.to_string() })
                }
                Target::Gd => {
                    let d = match &input {
                        Input::Code(c) => gauss_code_to_gauss_diagram(c).map_err(CliError::domain)?,
                        Input::Wgd(w) => wgd_to_gauss_diagram(w),
                    };
                    if json {
                        emit(serde_json::to_string(&d).expect("diagrams serialize"))
                    } else {
                        let points: Vec<String> = d.points.iter().map(u32::to_string).collect();
                        let arrows: Vec<String> =
                            d.arrows.iter().map(|a| format!("{}->{}{}", a.tail, a.head, a.sign)).collect();
                        emit(format!("points: {}\narrows: {}", points.join(" "), arrows.join(" ")))
                    }
                }
            }
        }
        Command::Canon { input } => emit(load(&input)?.wgd()?.canonical().to_string()),
        Command::Moves { input, kinds, no_growth } => {
            let code = load(&input)?.code();
            let sites = enumerate_sites(&code, parse_kinds(&kinds)?, !no_growth);
            if json {
                emit(serde_json::to_string(&sites).expect("sites serialize"))
            } else {
                Ok(sites.iter().map(|s| s.to_string() + "\n").collect())
            }
        }
        Command::Apply { input, site } => {
            let code = load(&input)?.code();
            let site: MoveSite =
                serde_json::from_str(&site).map_err(|e| CliError::Usage(format!("site: {e}")))?;
            let (next, record) = apply(&code, &site).map_err(CliError::domain)?;
            if json {
                emit(json!({ "code": next.to_string(), "record": record }).to_string())
            } else {
                emit(next.to_string())
            }
        }
        Command::Equiv { a, b, budget } => {
            let (a, b) = (load(&a)?.wgd()?, load(&b)?.wgd()?);
            let budget = budget.resolve(a.crossing_count().max(b.crossing_count()), 20_000, 16);
            let result = are_equivalent(&a, &b, &budget).map_err(CliError::domain)?;
            let distinguished = match &result {
                Equivalence::Equivalent { .. } => false,
                Equivalence::Unknown { .. } => {
                    let config = FingerprintConfig::default();
                    let fa = fingerprint(&wgd_to_gauss(&a), &config).map_err(CliError::domain)?;
                    let fb = fingerprint(&wgd_to_gauss(&b), &config).map_err(CliError::domain)?;
                    fa != fb
                }
            };
            if json {
                let mut v = serde_json::to_value(&result).expect("results serialize");
                v["distinguished_by_invariant"] = json!(distinguished);
                return emit(v.to_string());
            }
            match result {
                Equivalence::Equivalent { path } => emit(format!("equivalent, path length {}", path.len())),
                Equivalence::Unknown { reason, states } => {
                    let reason = serde_json::to_value(reason).expect("reasons serialize");
                    let mut line = format!("unknown ({} after {states} states)", reason.as_str().unwrap_or_default());
                    if distinguished {
                        line.push_str(", distinguished by invariant");
                    }
                    emit(line)
                }
            }
        }
        Command::Simplify { input, budget } => {
            let w = load(&input)?.wgd()?;
            let budget = budget.resolve(w.crossing_count(), 20_000, 16);
            let s = simplify(&w, &budget).map_err(CliError::domain)?;
            if json {
                emit(serde_json::to_string(&s).expect("results serialize"))
            } else {
                emit(s.diagram.to_string())
            }
        }
        Command::Invariants { input, primes, groups } => {
            let code = load(&input)?.code();
            let f = fingerprint(&code, &config(&primes, &groups)?).map_err(CliError::domain)?;
            emit(if json { serde_json::to_string(&f).expect("fingerprints serialize") } else { f.to_string() })
        }
        Command::Symmetry { input, op } => match load(&input)? {
            Input::Code(c) => {
                let c = if op.reverse { c.reverse() } else if op.bar { c.bar() } else { c.global_reversal() };
                emit(if json { code_json(&c).to_string() } else { c.to_string() })
            }
            Input::Wgd(w) => {
                emit((if op.reverse { w.reverse() } else if op.bar { w.bar() } else { w.global_reversal() }).to_string())
            }
        },
        Command::Atlas { n_max, output, primes, groups, budget } => {
            let budget = budget.resolve(n_max, 400, 8);
            let atlas = build_atlas(n_max, &budget, &config(&primes, &groups)?).map_err(CliError::domain)?;
            eprintln!(
                "{} diagrams, {} classes, {} orbits; {} explorations hit the budget",
                atlas.records.len(),
                atlas.class_count(),
                atlas.orbit_count(),
                atlas.capped_count()
            );
            match output {
                Some(path) => fs::write(&path, atlas.to_jsonl())
                    .map(|_| String::new())
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
                None => Ok(atlas.to_jsonl()),
            }
        }
        Command::Scramble { seed, moves } => {
            let (code, _) = scramble_unknot(&mut seeded(seed), moves);
            emit(if json { code_json(&code).to_string() } else { code.to_string() })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            if let Err(e) = io::stdout().write_all(text.as_bytes()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
