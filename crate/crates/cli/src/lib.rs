//! The `medint` command line: `solve`, `check`, `generate` and
//! `verify-paper`.
//!
//! Exit status: 0 on success, 1 when `verify-paper` finds a failing claim,
//! 2 on bad input (unreadable or malformed files, invalid flags, budget
//! overruns, instances too large to enumerate), 3 when a requested
//! specialized algorithm does not apply to the instance.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use medint_core::interdiction::{interdiction_matrix, solve, strategy_value};
use medint_core::io::{
    evaluate_claim, generate_text, parse, parse_edge_list, serialize_evaluation, serialize_result,
    ClaimKind, GeneratorKind, GeneratorSpec, FIXTURES,
};
use medint_core::reduction::{KnapsackInstance, KnapsackItem};
use medint_core::{Algorithm, Error, Instance, InterdictionStrategy, Selector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

pub const SUBOPTIMALITY_BANNER: &str =
    "SUBOPTIMALITY-POSSIBLE: greedy-heuristic is not exact; compare with --algorithm oracle";

#[derive(Debug, Parser)]
#[command(
    name = "medint",
    version,
    about = "Exact p-median location interdiction on paths and trees"
)]
pub struct Cli {
    /// Print only the machine-readable result.
    #[arg(long, global = true)]
    pub machine: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find an optimal interdiction strategy.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        /// auto, oracle, path-unit, path-matrix, tree-leaf or greedy-heuristic.
        #[arg(long, default_value = "auto")]
        algorithm: String,
    },
    /// Evaluate a given interdiction strategy.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated edge ids, e.g. `3,4` or `e3,e4`. Empty for none.
        #[arg(long, allow_hyphen_values = true)]
        strategy: String,
    },
    /// Write a generated instance to stdout.
    Generate(GenerateArgs),
    /// Re-check every claim recorded for the bundled fixtures.
    VerifyPaper,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Instance file; stdin when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Override the facility count from the file.
    #[arg(long)]
    pub p: Option<usize>,
    /// Override the budget from the file.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// path-unit, path-random-lengths, tree-unit-random, gadget-from-knapsack
    /// or gadget-from-partition.
    #[arg(long)]
    pub kind: String,
    /// Vertices for paths and trees, items or weights for random gadgets.
    #[arg(long, default_value_t = 7)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub min_length: u64,
    #[arg(long, default_value_t = 10)]
    pub max_length: u64,
    /// Permit zero edge lengths in random paths.
    #[arg(long)]
    pub allow_zero_lengths: bool,
    /// Partition weights, comma-separated.
    #[arg(long)]
    pub weights: Option<String>,
    /// Largest random partition weight.
    #[arg(long, default_value_t = 6)]
    pub max_weight: u64,
    /// Knapsack items as `weight:profit`, comma-separated.
    #[arg(long, requires_all = ["capacity", "target"])]
    pub items: Option<String>,
    #[arg(long)]
    pub capacity: Option<u64>,
    #[arg(long)]
    pub target: Option<u64>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code(&e)
        }
    }
}

/// 3 for precondition and shape failures, 2 for everything else.
pub fn exit_code(e: &anyhow::Error) -> i32 {
    match e.downcast_ref::<Error>() {
        Some(Error::Precondition(_) | Error::Shape(_)) => EXIT_PRECONDITION,
        _ => EXIT_INPUT,
    }
}

fn execute(
    cli: &Cli,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> anyhow::Result<i32> {
    match &cli.command {
        Command::Solve { input, algorithm } => {
            let selector: Selector = algorithm.parse()?;
            let instance = load(input, stdin)?;
            let result = solve(&instance, selector)?;
            let greedy = result.algorithm == Algorithm::GreedyHeuristic;
            if cli.machine {
                if greedy {
                    writeln!(err, "{SUBOPTIMALITY_BANNER}")?;
                }
                write!(out, "{}", serialize_result(&result))?;
            } else {
                if greedy {
                    writeln!(out, "{SUBOPTIMALITY_BANNER}")?;
                }
                describe_instance(out, &instance)?;
                writeln!(out, "algorithm: {}", result.algorithm)?;
                writeln!(
                    out,
                    "strategy: {} (cost {})",
                    result.strategy,
                    result.strategy.total_cost()
                )?;
                writeln!(out, "facilities: {}", result.locator_response)?;
                writeln!(out, "value: {}", result.value)?;
            }
            Ok(EXIT_OK)
        }
        Command::Check { input, strategy } => {
            let instance = load(input, stdin)?;
            let strategy = InterdictionStrategy::new(&instance.graph, parse_edge_list(strategy)?)?;
            let (facilities, value) =
                strategy_value(&instance.graph, &strategy, instance.p, instance.budget)?;
            if cli.machine {
                write!(
                    out,
                    "{}",
                    serialize_evaluation(&strategy, &facilities, value)
                )?;
            } else {
                describe_instance(out, &instance)?;
                writeln!(out, "strategy: {strategy} (cost {})", strategy.total_cost())?;
                writeln!(out, "facilities: {facilities}")?;
                writeln!(out, "value: {value}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Generate(args) => {
            write!(out, "{}", generate_text(&generator_spec(args)?)?)?;
            Ok(EXIT_OK)
        }
        Command::VerifyPaper => verify_paper(cli.machine, out),
    }
}

fn load(args: &InputArgs, stdin: &mut dyn Read) -> anyhow::Result<Instance> {
    let text = match &args.input {
        Some(path) => {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).context("reading stdin")?;
            text
        }
    };
    let instance = parse(&text)?;
    if args.p.is_none() && args.budget.is_none() {
        return Ok(instance);
    }
    let p = args.p.unwrap_or(instance.p);
    let budget = args.budget.unwrap_or(instance.budget);
    Ok(Instance::new(instance.graph, p, budget)?)
}

fn describe_instance(out: &mut dyn Write, instance: &Instance) -> std::io::Result<()> {
    let g = &instance.graph;
    writeln!(
        out,
        "instance: {} vertices, {} edges, {}, p = {}, B = {}",
        g.vertex_count(),
        g.edge_count(),
        g.classify(),
        instance.p,
        instance.budget
    )
}

fn generator_spec(args: &GenerateArgs) -> anyhow::Result<GeneratorSpec> {
    let kind: GeneratorKind = args.kind.parse()?;
    let mut spec = GeneratorSpec::new(kind, args.n, args.seed);
    spec.p = args.p;
    spec.budget = args.budget;
    spec.lengths = (args.min_length, args.max_length);
    spec.allow_zero_lengths = args.allow_zero_lengths;
    spec.max_weight = args.max_weight;
    if let Some(w) = &args.weights {
        spec.weights = Some(parse_numbers(w)?);
    }
    if let Some(items) = &args.items {
        let items = items
            .split(',')
            .map(|pair| {
                let (w, p) = pair
                    .trim()
                    .split_once(':')
                    .ok_or_else(|| Error::Input(format!("item `{pair}` is not weight:profit")))?;
                Ok(KnapsackItem {
                    weight: w
                        .parse()
                        .map_err(|_| Error::Input(format!("bad weight `{w}`")))?,
                    profit: p
                        .parse()
                        .map_err(|_| Error::Input(format!("bad profit `{p}`")))?,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let (Some(capacity), Some(target)) = (args.capacity, args.target) else {
            bail!(Error::Input("--items needs --capacity and --target".into()));
        };
        spec.knapsack = Some(KnapsackInstance::new(items, capacity, target)?);
    }
    Ok(spec)
}

fn parse_numbers(text: &str) -> Result<Vec<u64>, Error> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad number `{t}`")))
        })
        .collect()
}

/// The interdiction matrix for a unit path on seven vertices.
const MATRIX_7: [[u64; 6]; 6] = [
    [0, 1, 2, 3, 2, 1],
    [1, 0, 1, 2, 2, 1],
    [1, 1, 0, 1, 2, 1],
    [1, 2, 1, 0, 1, 1],
    [1, 2, 2, 1, 0, 1],
    [1, 2, 3, 2, 1, 0],
];

fn verify_paper(machine: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    let mut failures = 0;
    let mut report =
        |out: &mut dyn Write, pass: bool, name: &str, detail: String| -> std::io::Result<()> {
            if !pass {
                failures += 1;
            }
            let status = if pass { "PASS" } else { "FAIL" };
            if machine {
                writeln!(out, "{status} {name}")
            } else {
                writeln!(out, "{status} {name}: {detail}")
            }
        };

    let rows = interdiction_matrix(7).rows;
    let pass = rows
        .iter()
        .map(Vec::as_slice)
        .eq(MATRIX_7.iter().map(|r| &r[..]));
    report(
        out,
        pass,
        "matrix interdiction-matrix-7",
        "6x6 crossing-count matrix".into(),
    )?;

    for fixture in FIXTURES {
        let instance = fixture.instance()?;
        for claim in fixture.claims()? {
            let name = format!("{} {}", fixture.name, claim.label);
            let how = match claim.kind {
                ClaimKind::Check => "check".to_string(),
                ClaimKind::Solve(Selector::Auto) => "auto".to_string(),
                ClaimKind::Solve(Selector::Use(a)) => a.to_string(),
            };
            match evaluate_claim(&instance, &claim) {
                Ok(got) => {
                    let detail = format!(
                        "{how} expects value {}, got {} with strategy {:?}",
                        claim.value, got.value, got.strategy
                    );
                    report(out, got.pass, &name, detail)?;
                }
                Err(e) => report(out, false, &name, format!("{how} failed: {e}"))?,
            }
        }
    }
    Ok(if failures == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}
