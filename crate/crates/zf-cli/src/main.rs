//! `zf`: exact zero forcing computations on small graphs.
//!
//! Subcommands: `param` (Z, Z_t^k, pt, fpt with witnesses), `trace` (replay
//! the forcing process from an initial set), `ops` (delta tables under edge
//! deletion, contraction, and vertex deletion), `verify` (the named-claim
//! suite), `family` (emit a generated graph as an edge list), `tree` (path
//! cover facts for trees).
//!
//! Exit codes: 0 success, 1 at least one verify claim failed, 2 bad input,
//! 3 graph exceeds a size ceiling. Machine output (`--format json`) is one
//! JSON record per line and is byte-stable for fixed input, config, and
//! seed; `--timing` opts into a nondeterministic elapsed_ms field.

use std::io::Read as _;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use zf_core::io::{
    format_edge_list, parse_edge_list, trace_dot_frames, DeltaRecord, ParamRecord, TraceRecord,
};
use zf_core::search::{DEFAULT_SIZE_LIMIT, DEFAULT_WITNESS_CAP};
use zf_core::tree::{ft_path_cover_value, ft_set_from_cover, leaf_bound_check, path_cover_number};
use zf_core::verify::DEFAULT_SEED;
use zf_core::{
    closure, delta_table, fixture, fpt_number, generate, pt_number, run_suite, zf_number,
    zt_number, ClaimStatus, DeltaOp, Error, FamilySpec, ForcingTrace, Graph, ParamResult,
    SearchConfig, SuiteConfig, VertexSet, FIXTURE_NAMES,
};

/// Environment override for the subset-search ceiling; `--size-limit` wins.
const SIZE_LIMIT_VAR: &str = "ZF_SIZE_LIMIT";

#[derive(Parser)]
#[command(
    name = "zf",
    version,
    about = "Exact zero forcing and fault-tolerant zero forcing computations",
    after_help = "Exit codes: 0 ok, 1 verify claim failed, 2 bad input, 3 size ceiling exceeded."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Z, Z_t^k, pt, or fpt of one graph, with witnesses
    Param(ParamArgs),
    /// Replay the forcing process from an initial blue set
    Trace(TraceArgs),
    /// Tabulate how deleting or contracting each edge, or deleting each
    /// vertex, moves the fault-tolerant forcing number
    Ops(OpsArgs),
    /// Run named claims (family formulas, example tables, invariants)
    Verify(VerifyArgs),
    /// Print a generated family graph as an edge list
    Family(FamilyArgs),
    /// Path cover facts for a tree: cover number, fault-tolerant cover
    /// value, and the blue set the optimal cover induces
    Tree(TreeArgs),
}

/// Exactly one graph source per invocation.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list file, `-` for stdin (line 1: vertex count; then `u v` lines,
    /// 0-based; blank lines and `#` comments skipped)
    #[arg(long, value_name = "FILE")]
    input: Option<String>,
    /// Family spec: path:N, cycle:N, complete:N, star:N, wheel:N, spider:LxW
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
    /// Built-in example graph; see `zf family --help` for names
    #[arg(long, value_name = "NAME")]
    fixture: Option<String>,
}

#[derive(Args)]
struct ComputeOpts {
    /// Subset-search ceiling (default 16, or ZF_SIZE_LIMIT)
    #[arg(long, value_name = "N")]
    size_limit: Option<usize>,
    /// Keep at most this many witnesses per result (default 64)
    #[arg(long, value_name = "N")]
    witness_cap: Option<usize>,
    /// Worker threads; 1 forces a fully sequential search
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Readable tables
    Human,
    /// One JSON record per line
    Json,
}

#[derive(Args)]
struct ParamArgs {
    #[command(flatten)]
    source: Source,
    /// Z: minimum size of a zero forcing set
    #[arg(long)]
    zf: bool,
    /// Z_t^k: minimum size of a k-fault-tolerant set (may not exist)
    #[arg(long, value_name = "K")]
    zt: Option<usize>,
    /// pt: forcing rounds, minimized over minimum zero forcing sets
    #[arg(long)]
    pt: bool,
    /// fpt: worst single-fault forcing rounds, minimized over minimum
    /// 1-fault-tolerant sets (may not exist)
    #[arg(long)]
    fpt: bool,
    /// Compute zf, zt (k=1), pt, and fpt (default when nothing is selected)
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Add wall-clock elapsed_ms to each record (breaks byte stability)
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    compute: ComputeOpts,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    source: Source,
    /// Initial blue set as comma-separated ids, e.g. 0,1,4 (empty for none)
    #[arg(long, value_name = "IDS", default_value = "")]
    set: String,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Write one DOT file per round (frame-00.dot, ...) into this directory
    #[arg(long, value_name = "DIR")]
    dot: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    DeleteEdge,
    ContractEdge,
    DeleteVertex,
}

impl OpArg {
    fn to_op(self) -> DeltaOp {
        match self {
            OpArg::DeleteEdge => DeltaOp::DeleteEdge,
            OpArg::ContractEdge => DeltaOp::ContractEdge,
            OpArg::DeleteVertex => DeltaOp::DeleteVertex,
        }
    }
}

#[derive(Args)]
struct OpsArgs {
    #[command(flatten)]
    source: Source,
    /// Operation(s) to tabulate; repeatable. Default: all three.
    #[arg(long, value_enum, value_name = "OP")]
    op: Vec<OpArg>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[command(flatten)]
    compute: ComputeOpts,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim-id filter; `*` matches any run of characters (e.g. ex.delta.*)
    #[arg(long, value_name = "PATTERN")]
    scope: Option<String>,
    /// Seed for the sampled instance pools
    #[arg(long, value_name = "N", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Cap on sampled-pool graph order (explicit family ranges unaffected)
    #[arg(long, value_name = "N", default_value_t = 10)]
    max_order: usize,
    /// Worker threads; 1 runs claims sequentially
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// List claim ids and exit
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family spec: path:N, cycle:N, complete:N, star:N, wheel:N, spider:LxW
    #[arg(long, value_name = "SPEC")]
    spec: String,
}

#[derive(Args)]
struct TreeArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

/// Failure carrying the process exit code; size ceilings map to 3,
/// everything else to 2.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::SizeLimit { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    // Default SIGPIPE disposition so `zf ... | head` ends quietly instead of
    // panicking on a closed pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Param(args) => cmd_param(args),
        Command::Trace(args) => cmd_trace(args),
        Command::Ops(args) => cmd_ops(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Family(args) => cmd_family(args),
        Command::Tree(args) => cmd_tree(args),
    }
}

fn load_graph(source: &Source) -> CliResult<Graph> {
    if let Some(path) = &source.input {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| bad_input(format!("cannot read {path}: {e}")))?
        };
        return Ok(parse_edge_list(&text)?);
    }
    if let Some(spec) = &source.family {
        let spec = FamilySpec::from_str(spec)?;
        return Ok(generate(spec)?);
    }
    let name = source.fixture.as_deref().expect("clap enforces the group");
    fixture(name).map_err(|_| {
        bad_input(format!(
            "unknown fixture `{name}` (available: {})",
            FIXTURE_NAMES.join(", ")
        ))
    })
}

fn search_config(opts: &ComputeOpts) -> CliResult<SearchConfig> {
    let size_limit = match opts.size_limit {
        Some(n) => n,
        None => match std::env::var(SIZE_LIMIT_VAR) {
            Ok(raw) => raw.trim().parse::<usize>().map_err(|_| {
                bad_input(format!("{SIZE_LIMIT_VAR} must be an integer, got `{raw}`"))
            })?,
            Err(_) => DEFAULT_SIZE_LIMIT,
        },
    };
    if let Some(jobs) = opts.jobs {
        if jobs == 0 {
            return Err(bad_input("--jobs must be at least 1"));
        }
        // A second global-pool initialization fails; only the first wins,
        // which is fine for a single-command process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    Ok(SearchConfig {
        size_limit,
        witness_cap: opts.witness_cap.unwrap_or(DEFAULT_WITNESS_CAP),
        parallel: opts.jobs != Some(1),
    })
}

fn parse_set(raw: &str, g: &Graph) -> CliResult<VertexSet> {
    let mut set = VertexSet::EMPTY;
    for token in raw.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = token
            .parse()
            .map_err(|_| bad_input(format!("set ids must be integers, got `{token}`")))?;
        if v >= g.order() {
            return Err(bad_input(format!(
                "set id {v} out of range for graph of order {}",
                g.order()
            )));
        }
        set = set.with(v);
    }
    Ok(set)
}

fn print_param_human(r: &ParamResult, elapsed: Option<u64>) {
    let name = match r.k {
        Some(k) => format!("{}[{k}]", r.parameter.as_str()),
        None => r.parameter.as_str().to_string(),
    };
    let timing = elapsed.map(|ms| format!("  ({ms} ms)")).unwrap_or_default();
    println!("{name} = {}{timing}", r.value);
    if !r.witnesses.is_empty() {
        let sets: Vec<String> = r.witnesses.iter().map(|w| w.to_string()).collect();
        let marker = if r.truncated { " (truncated)" } else { "" };
        println!("  witnesses{marker}: {}", sets.join(" "));
    }
}

fn cmd_param(args: ParamArgs) -> CliResult<u8> {
    let g = load_graph(&args.source)?;
    let cfg = search_config(&args.compute)?;
    let all = args.all || (!args.zf && args.zt.is_none() && !args.pt && !args.fpt);

    type ParamFn = Box<dyn Fn(&Graph, &SearchConfig) -> zf_core::Result<ParamResult>>;
    let mut runs: Vec<ParamFn> = Vec::new();
    if args.zf || all {
        runs.push(Box::new(zf_number));
    }
    if args.zt.is_some() || all {
        let k = args.zt.unwrap_or(1);
        runs.push(Box::new(move |g, c| zt_number(g, k, c)));
    }
    if args.pt || all {
        runs.push(Box::new(pt_number));
    }
    if args.fpt || all {
        runs.push(Box::new(fpt_number));
    }

    for run in runs {
        let started = Instant::now();
        let result = run(&g, &cfg)?;
        let elapsed = args
            .timing
            .then(|| started.elapsed().as_millis().min(u64::MAX as u128) as u64);
        match args.format {
            Format::Human => print_param_human(&result, elapsed),
            Format::Json => println!(
                "{}",
                serde_json::to_string(&ParamRecord::new(&result, elapsed))
                    .expect("records serialize")
            ),
        }
    }
    Ok(0)
}

fn print_trace_human(g: &Graph, trace: &ForcingTrace) {
    println!("initial: {}", trace.initial);
    let mut blue = trace.initial;
    for (i, layer) in trace.layers.iter().enumerate() {
        let forces: Vec<String> = trace
            .forces
            .iter()
            .filter(|(_, target)| layer.contains(*target))
            .map(|(source, target)| format!("{source}->{target}"))
            .collect();
        blue = blue.union(*layer);
        println!(
            "round {}: +{} -> {}  [{}]",
            i + 1,
            layer,
            blue,
            forces.join(" ")
        );
    }
    let verdict = if trace.is_forcing(g) {
        "forcing"
    } else {
        "not forcing"
    };
    println!("final: {} ({verdict})", trace.final_set);
}

fn cmd_trace(args: TraceArgs) -> CliResult<u8> {
    let g = load_graph(&args.source)?;
    let set = parse_set(&args.set, &g)?;
    let trace = closure(&g, set);
    match args.format {
        Format::Human => print_trace_human(&g, &trace),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&TraceRecord::new(&g, &trace)).expect("records serialize")
        ),
    }
    if let Some(dir) = &args.dot {
        std::fs::create_dir_all(dir)?;
        for (i, frame) in trace_dot_frames(&g, &trace).iter().enumerate() {
            let path = format!("{dir}/frame-{i:02}.dot");
            std::fs::write(&path, frame)?;
        }
    }
    Ok(0)
}

fn cmd_ops(args: OpsArgs) -> CliResult<u8> {
    let g = load_graph(&args.source)?;
    let cfg = search_config(&args.compute)?;
    let ops: Vec<DeltaOp> = if args.op.is_empty() {
        vec![
            DeltaOp::DeleteEdge,
            DeltaOp::ContractEdge,
            DeltaOp::DeleteVertex,
        ]
    } else {
        args.op.iter().map(|o| o.to_op()).collect()
    };
    let report = delta_table(&g, &ops, &cfg)?;
    match args.format {
        Format::Human => {
            println!("base zt = {}", report.base);
            println!(
                "{:<15} {:<9} {:>10} {:>6}",
                "op", "operand", "value", "delta"
            );
            for row in &report.rows {
                let delta = row
                    .delta
                    .map(|d| format!("{d:+}"))
                    .unwrap_or_else(|| "-".to_string());
                println!(
                    "{:<15} {:<9} {:>10} {:>6}",
                    row.op.as_str(),
                    row.operand.to_string(),
                    row.value.to_string(),
                    delta
                );
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string(&DeltaRecord::new(&report)).expect("records serialize")
        ),
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> CliResult<u8> {
    if args.list {
        for id in zf_core::claim_ids() {
            println!("{id}");
        }
        return Ok(0);
    }
    let reports = run_suite(&SuiteConfig {
        scope: args.scope.clone(),
        seed: args.seed,
        max_order: args.max_order,
        parallel: args.jobs != Some(1),
    });
    if reports.is_empty() {
        return Err(bad_input(format!(
            "scope `{}` matches no claims (try --list)",
            args.scope.as_deref().unwrap_or("*")
        )));
    }
    let mut failed = 0usize;
    let mut skipped = 0usize;
    for r in &reports {
        match r.status {
            ClaimStatus::Fail => failed += 1,
            ClaimStatus::Skipped => skipped += 1,
            ClaimStatus::Pass => {}
        }
        match args.format {
            Format::Human => {
                let tag = match r.status {
                    ClaimStatus::Pass => "PASS",
                    ClaimStatus::Fail => "FAIL",
                    ClaimStatus::Skipped => "SKIP",
                };
                println!(
                    "{tag} {:<34} [{} instances] {}",
                    r.id, r.instances, r.statement
                );
                if let Some(note) = &r.note {
                    println!("     note: {note}");
                }
                if let Some(cx) = &r.counterexample {
                    println!("     counterexample: {cx}");
                }
            }
            Format::Json => {
                println!("{}", serde_json::to_string(r).expect("records serialize"));
            }
        }
    }
    if args.format == Format::Human {
        println!(
            "summary: {} passed, {failed} failed, {skipped} skipped ({} claims)",
            reports.len() - failed - skipped,
            reports.len()
        );
    }
    Ok(if failed > 0 { 1 } else { 0 })
}

fn cmd_family(args: FamilyArgs) -> CliResult<u8> {
    let spec = FamilySpec::from_str(&args.spec)?;
    print!("{}", format_edge_list(&generate(spec)?));
    Ok(0)
}

#[derive(Serialize)]
struct TreeRecord {
    order: usize,
    path_cover_number: usize,
    cover: Vec<Vec<usize>>,
    ft_cover_value: zf_core::ParamValue,
    ft_cover: Option<Vec<Vec<usize>>>,
    ft_set: Option<Vec<usize>>,
    leaves: usize,
    leaf_set_fault_tolerant: bool,
}

fn cmd_tree(args: TreeArgs) -> CliResult<u8> {
    let g = load_graph(&args.source)?;
    let (cover_number, cover) = path_cover_number(&g)?;
    let (ft_value, ft_cover) = ft_path_cover_value(&g)?;
    let ft_set = match &ft_cover {
        Some(c) => Some(ft_set_from_cover(&g, c)?),
        None => None,
    };
    let (leaves, leaves_ft) = leaf_bound_check(&g)?;

    let paths_of = |c: &zf_core::tree::PathCover| c.paths.clone();
    match args.format {
        Format::Human => {
            let fmt_cover = |paths: &[Vec<usize>]| {
                paths
                    .iter()
                    .map(|p| p.iter().map(usize::to_string).collect::<Vec<_>>().join("-"))
                    .collect::<Vec<_>>()
                    .join(" | ")
            };
            println!("order: {}", g.order());
            println!("path cover number: {cover_number}");
            println!("cover: {}", fmt_cover(&cover.paths));
            println!("ft cover value: {ft_value}");
            if let Some(c) = &ft_cover {
                println!("ft cover: {}", fmt_cover(&c.paths));
            }
            if let Some(b) = ft_set {
                println!("ft set from cover: {b}");
            }
            println!(
                "leaves: {leaves} (fault tolerant: {})",
                if leaves_ft { "yes" } else { "no" }
            );
        }
        Format::Json => {
            let record = TreeRecord {
                order: g.order(),
                path_cover_number: cover_number,
                cover: paths_of(&cover),
                ft_cover_value: ft_value,
                ft_cover: ft_cover.as_ref().map(&paths_of),
                ft_set: ft_set.map(|b| b.to_vec()),
                leaves,
                leaf_set_fault_tolerant: leaves_ft,
            };
            println!(
                "{}",
                serde_json::to_string(&record).expect("records serialize")
            );
        }
    }
    Ok(0)
}
