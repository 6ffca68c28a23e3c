//! Command line front end.
//!
//! Results go to `out`, diagnostics to `err`. Exit codes: 0 success,
//! 1 usage error, 2 invalid input, 3 verification failure, 4 resource limit.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{classify_pair, predict_swap_count, predict_terminal, PairOutcome};
use crate::engine::{run_to_terminal, Arrangement, Strategy};
use crate::error::Error;
use crate::oracle::{check_confluence, DEFAULT_NODE_LIMIT};
use crate::poset::Poset;
use crate::workbench::{export_dot, parse_poset, write_poset, write_trace, GeneratorSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

/// Largest poset `verify` explores unless `--max-n` says otherwise.
pub const DEFAULT_VERIFY_MAX_N: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "leapfrog",
    version,
    about = "Adjacent-swap rewriting on finite posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Swap until terminal; print the terminal arrangement and swap count.
    Run(RunArgs),
    /// Print the terminal arrangement and swap count without simulating.
    Predict(Instance),
    /// Explore every reachable arrangement and check the prediction.
    Verify(VerifyArgs),
    /// Classify every ordered pair of the arrangement.
    Fences(Instance),
    /// Emit a generated poset document.
    Gen(GenArgs),
    /// Emit the Hasse diagram in DOT.
    Hasse {
        #[arg(long)]
        poset: PathBuf,
    },
}

#[derive(Debug, Args)]
struct Instance {
    /// Poset document (JSON).
    #[arg(long)]
    poset: PathBuf,
    /// Comma-separated arrangement of every element.
    #[arg(long, allow_hyphen_values = true)]
    perm: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyKind {
    Leftmost,
    Rightmost,
    Random,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, value_enum, default_value = "leftmost")]
    strategy: StrategyKind,
    /// Seed for `--strategy random`.
    #[arg(long)]
    seed: Option<u64>,
    /// Print the swap trace as line-delimited JSON before the result.
    #[arg(long)]
    trace: bool,
    /// Include the full arrangement after each swap in the trace.
    #[arg(long, requires = "trace")]
    verbose: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: Instance,
    /// Refuse posets with more elements than this.
    #[arg(long, default_value_t = DEFAULT_VERIFY_MAX_N)]
    max_n: usize,
    /// Cap on explored arrangements.
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    node_limit: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    Chain,
    Antichain,
    Boolean,
    Grid,
    Random,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    /// Element count (chain, antichain, random).
    #[arg(long)]
    n: Option<usize>,
    /// Rank of the boolean lattice.
    #[arg(long)]
    k: Option<usize>,
    /// Grid rows.
    #[arg(long)]
    a: Option<usize>,
    /// Grid columns.
    #[arg(long)]
    b: Option<usize>,
    /// Edge probability for random posets.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
}

enum Failure {
    Usage(String),
    Input(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Input(err)
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn cli_main<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verification) => {
            let _ = writeln!(err, "error: verification failed");
            EXIT_VERIFICATION
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e.root() {
                Error::LimitExceeded(_) => EXIT_LIMIT,
                _ => EXIT_INVALID_INPUT,
            }
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Run(args) => run(args, out),
        Command::Predict(inst) => {
            let (poset, arr) = load_instance(&inst)?;
            let terminal = predict_terminal(&poset, &arr)?;
            let count = predict_swap_count(&poset, &arr)?;
            emit(out, format!("{}\n{count}\n", terminal.render(&poset)))
        }
        Command::Verify(args) => verify(args, out),
        Command::Fences(inst) => fences(inst, out),
        Command::Gen(args) => {
            let spec = gen_spec(&args)?;
            let poset = spec.generate()?;
            emit(out, write_poset(&poset))
        }
        Command::Hasse { poset } => emit(out, export_dot(&load_poset(&poset)?)),
    }
}

fn emit(out: &mut dyn Write, text: String) -> CmdResult {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn run(args: RunArgs, out: &mut dyn Write) -> CmdResult {
    let strategy = match (args.strategy, args.seed) {
        (StrategyKind::Random, Some(seed)) => Strategy::Random(seed),
        (StrategyKind::Random, None) => {
            return Err(Failure::Usage("--strategy random requires --seed".into()))
        }
        (_, Some(_)) => {
            return Err(Failure::Usage(
                "--seed only applies to --strategy random".into(),
            ))
        }
        (StrategyKind::Leftmost, None) => Strategy::Leftmost,
        (StrategyKind::Rightmost, None) => Strategy::Rightmost,
    };
    let (poset, arr) = load_instance(&args.instance)?;
    let trace = run_to_terminal(&poset, &arr, strategy)?;
    let mut text = String::new();
    if args.trace {
        text.push_str(&write_trace(&poset, &trace, args.verbose));
    }
    text.push_str(&format!(
        "{}\n{}\n",
        trace.terminal.render(&poset),
        trace.len()
    ));
    emit(out, text)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let (poset, arr) = load_instance(&args.instance)?;
    if poset.len() > args.max_n {
        return Err(Failure::Input(Error::LimitExceeded(args.max_n)));
    }
    let report = check_confluence(&poset, &arr, args.node_limit)?;
    let terminals: Vec<String> = report.terminals.iter().map(|t| t.render(&poset)).collect();
    let counts: Vec<String> = report
        .swap_count_set
        .iter()
        .map(|c| c.to_string())
        .collect();
    emit(
        out,
        format!(
            "confluent: {}\nagrees: {}\nreachable: {}\nterminals: {}\nswap counts: {}\npredicted: {} ({} swaps)\n",
            report.confluent,
            report.agrees,
            report.reachable_count,
            terminals.join(" | "),
            counts.join(" "),
            report.predicted_terminal.render(&poset),
            report.predicted_count,
        ),
    )?;
    if report.confluent && report.agrees {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn fences(inst: Instance, out: &mut dyn Write) -> CmdResult {
    let (poset, arr) = load_instance(&inst)?;
    let order = arr.order();
    let mut text = String::new();
    for (i, &x) in order.iter().enumerate() {
        for &y in &order[i + 1..] {
            let verdict = match classify_pair(&poset, &arr, x, y)? {
                PairOutcome::PreservedByOrder => "preserved-by-order".to_string(),
                PairOutcome::PreservedByFence(cert) => {
                    format!("preserved-by-fence\t{}", cert.labels(&poset).join(","))
                }
                PairOutcome::Reversed => "reversed".to_string(),
            };
            text.push_str(&format!(
                "{}\t{}\t{verdict}\n",
                poset.label(x),
                poset.label(y)
            ));
        }
    }
    emit(out, text)
}

fn gen_spec(args: &GenArgs) -> Result<GeneratorSpec, Failure> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("--kind {:?} needs {flag}", args.kind)))
    };
    if args.seed.is_some() && !matches!(args.kind, GenKind::Random) {
        return Err(Failure::Usage(
            "--seed only applies to --kind random".into(),
        ));
    }
    Ok(match args.kind {
        GenKind::Chain => GeneratorSpec::Chain(need(args.n, "--n")?),
        GenKind::Antichain => GeneratorSpec::Antichain(need(args.n, "--n")?),
        GenKind::Boolean => GeneratorSpec::Boolean(need(args.k, "--k")?),
        GenKind::Grid => GeneratorSpec::Grid(need(args.a, "--a")?, need(args.b, "--b")?),
        GenKind::Random => GeneratorSpec::Random {
            n: need(args.n, "--n")?,
            edge_prob: args
                .p
                .ok_or_else(|| Failure::Usage("--kind random needs --p".into()))?,
            seed: args
                .seed
                .ok_or_else(|| Failure::Usage("--kind random needs --seed".into()))?,
        },
    })
}

fn load_poset(path: &Path) -> Result<Poset, Failure> {
    let text = fs::read_to_string(path).map_err(|e| {
        Failure::Input(Error::Schema {
            location: path.display().to_string(),
            message: e.to_string(),
        })
    })?;
    let poset = parse_poset(&text)?;
    if let Some(bad) = poset.elements().iter().find(|e| e.as_str().contains(',')) {
        return Err(Failure::Input(Error::Schema {
            location: path.display().to_string(),
            message: format!("element {bad:?} contains a comma, which the CLI cannot address"),
        }));
    }
    Ok(poset)
}

/// Splits `a, c,b` into labels; an empty or blank list is the empty arrangement.
pub fn parse_arrangement(poset: &Poset, list: &str) -> crate::Result<Arrangement> {
    let labels: Vec<&str> = if list.trim().is_empty() {
        Vec::new()
    } else {
        list.split(',').map(str::trim).collect()
    };
    Arrangement::from_labels(poset, &labels)
}

fn load_instance(inst: &Instance) -> Result<(Poset, Arrangement), Failure> {
    let poset = load_poset(&inst.poset)?;
    let arr = parse_arrangement(&poset, &inst.perm)?;
    Ok((poset, arr))
}
