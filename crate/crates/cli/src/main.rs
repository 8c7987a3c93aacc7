//! `jlrp` - minimum dimensions for distance-preserving random projections,
//! the projections themselves, and Monte Carlo checks of the guarantees.
//!
//! Subcommands: `bound`, `table`, `project`, `verify`. Exit codes are
//! part of the contract: 0 success, 1 I/O failure, 2 usage or domain
//! error, 3 verification failure.

mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use jlrp::bounds::{
    bound_for_method, matousek_bound_with_constant, BoundQuery, BoundResult, Method,
};
use jlrp::projection::{MatrixDistribution, NormPairing, ProjectionSpec};
use jlrp::verify::{run_pair_trials, PointSource, VerifySpec};

use table::TableRequest;

#[derive(Parser)]
#[command(name = "jlrp", version, about = "Johnson-Lindenstrauss projection bounds and verification")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Md)]
    format: OutputFormat,

    /// Base seed for every randomized operation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for table and verification fan-out (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Dg,
    Theorem1,
    Exact,
    Matousek,
    Theorem3,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Dg => Method::Dg,
            MethodArg::Theorem1 => Method::Theorem1,
            MethodArg::Exact => Method::Exact,
            MethodArg::Matousek => Method::Matousek,
            MethodArg::Theorem3 => Method::Theorem3,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairingArg {
    L2l2,
    L2l1,
}

impl From<PairingArg> for NormPairing {
    fn from(p: PairingArg) -> NormPairing {
        match p {
            PairingArg::L2l2 => NormPairing::L2L2,
            PairingArg::L2l1 => NormPairing::L2L1,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistributionArg {
    Gaussian,
    Achlioptas,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PointSourceArg {
    GaussianCloud,
    Hypercube,
    File,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimum dimension k under one bound method.
    Bound(BoundArgs),
    /// Reproduce the published comparison tables or sweep a custom grid.
    Table(TableArgs),
    /// Project a CSV point matrix to k dimensions.
    Project(ProjectArgs),
    /// Monte Carlo check that a bound's k delivers its distortion guarantee.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    epsilon: f64,
    #[arg(long)]
    beta: f64,
    /// Leading constant for the matousek method (default 1).
    #[arg(long)]
    matousek_c: Option<f64>,
}

#[derive(Args)]
struct TableArgs {
    /// Published-table preset; fixes the grid to n in {50,100,500,1000},
    /// epsilon in {0.1,0.3}, beta in {1,2}.
    #[arg(long, value_enum, conflicts_with = "custom")]
    preset: Option<TablePresetArg>,
    /// Sweep a custom grid given by --n/--epsilon/--beta lists.
    #[arg(long, requires = "n", requires = "epsilon", requires = "beta")]
    custom: bool,
    #[arg(long, value_delimiter = ',')]
    n: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    epsilon: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    beta: Vec<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TablePresetArg {
    Table1,
    Table2,
}

#[derive(Args)]
struct ProjectArgs {
    /// Input CSV (one point per row).
    #[arg(long)]
    input: PathBuf,
    /// Output CSV path.
    #[arg(long)]
    output: PathBuf,
    #[arg(long, value_enum, default_value_t = DistributionArg::Gaussian)]
    distribution: DistributionArg,
    /// Sparsity parameter for the achlioptas distribution.
    #[arg(long, default_value_t = 3.0)]
    q: f64,
    #[arg(long, value_enum, default_value_t = PairingArg::L2l2)]
    pairing: PairingArg,
    /// Explicit target dimension; alternative to --method.
    #[arg(long, conflicts_with_all = ["method", "epsilon", "beta"])]
    k: Option<usize>,
    /// Bound method used to derive k (needs --epsilon and --beta).
    #[arg(long, value_enum, requires = "epsilon", requires = "beta")]
    method: Option<MethodArg>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Expect a header line on input and write one on output.
    #[arg(long)]
    header: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    epsilon: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long, value_enum, default_value_t = PairingArg::L2l2)]
    pairing: PairingArg,
    /// Ambient dimension of the generated point cloud.
    #[arg(long, default_value_t = 200)]
    ambient_dim: usize,
    /// Points in the cloud (default: n).
    #[arg(long)]
    n_points: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    replicates: u32,
    #[arg(long, value_enum, default_value_t = PointSourceArg::GaussianCloud)]
    point_source: PointSourceArg,
    /// Point CSV for --point-source file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Where to write the JSON report (stdout always gets a summary).
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Failure carrying the exit code contract.
enum Failure {
    Io(String),
    Usage(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Usage(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<jlrp::Error> for Failure {
    fn from(e: jlrp::Error) -> Failure {
        match e {
            jlrp::Error::Io(inner) => Failure::Io(inner.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        // Ignore failure: the global pool may already exist in tests.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let outcome = match &cli.command {
        Command::Bound(args) => run_bound(&cli, args),
        Command::Table(args) => run_table(&cli, args),
        Command::Project(args) => run_project(&cli, args),
        Command::Verify(args) => run_verify(&cli, args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run_bound(cli: &Cli, args: &BoundArgs) -> Result<(), Failure> {
    let query = BoundQuery::new(args.n, args.epsilon, args.beta)?;
    let method: Method = args.method.into();
    let result = match (method, args.matousek_c) {
        (Method::Matousek, Some(c)) => {
            if c.is_nan() || c <= 0.0 {
                return Err(Failure::Usage(format!(
                    "matousek constant must be positive, got {c}"
                )));
            }
            matousek_bound_with_constant(&query, c)
        }
        (_, Some(_)) => {
            return Err(Failure::Usage(
                "--matousek-c only applies to --method matousek".into(),
            ))
        }
        (m, None) => bound_for_method(m, &query)?,
    };
    warn_if_epsilon_out_of_stated_range(method, args.epsilon);
    print_bound(cli.format, &query, &result);
    Ok(())
}

fn warn_if_epsilon_out_of_stated_range(method: Method, epsilon: f64) {
    if method == Method::Matousek && epsilon >= 0.5 {
        eprintln!(
            "note: the matousek bound is stated for epsilon < 1/2; \
             epsilon = {epsilon} is outside that range and the result is extrapolated"
        );
    }
}

fn print_bound(format: OutputFormat, query: &BoundQuery, result: &BoundResult) {
    match format {
        OutputFormat::Md => {
            println!("method: {}", result.method);
            println!(
                "n: {}  epsilon: {}  beta: {}",
                query.n, query.epsilon, query.beta
            );
            println!("k: {}", result.k);
            for (key, value) in &result.intermediates {
                println!("  {key}: {value}");
            }
        }
        OutputFormat::Csv => {
            let mut header = vec![
                "method".to_string(),
                "n".to_string(),
                "epsilon".to_string(),
                "beta".to_string(),
                "k".to_string(),
            ];
            let mut row = vec![
                result.method.to_string(),
                query.n.to_string(),
                query.epsilon.to_string(),
                query.beta.to_string(),
                result.k.to_string(),
            ];
            for (key, value) in &result.intermediates {
                header.push(key.clone());
                row.push(value.to_string());
            }
            println!("{}", header.join(","));
            println!("{}", row.join(","));
        }
        OutputFormat::Json => {
            let payload = serde_json::json!({
                "schema_version": 1,
                "method": result.method,
                "n": query.n,
                "epsilon": query.epsilon,
                "beta": query.beta,
                "k": result.k,
                "intermediates": result.intermediates,
            });
            println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        }
    }
}

fn run_table(cli: &Cli, args: &TableArgs) -> Result<(), Failure> {
    let request = match (args.preset, args.custom) {
        (Some(TablePresetArg::Table1), false) => TableRequest::table1(),
        (Some(TablePresetArg::Table2), false) => TableRequest::table2(),
        (None, true) => TableRequest::custom(
            args.n.clone(),
            args.epsilon.clone(),
            args.beta.clone(),
        ),
        (None, false) => {
            return Err(Failure::Usage(
                "choose --preset table1|table2 or --custom with --n/--epsilon/--beta".into(),
            ))
        }
        (Some(_), true) => unreachable!("clap conflicts_with"),
    };
    let rendered = table::render(&request, cli.format.into())?;
    print!("{}", rendered.body);
    for note in rendered.notes {
        eprintln!("note: {note}");
    }
    Ok(())
}

impl From<OutputFormat> for table::Format {
    fn from(f: OutputFormat) -> table::Format {
        match f {
            OutputFormat::Md => table::Format::Markdown,
            OutputFormat::Csv => table::Format::Csv,
            OutputFormat::Json => table::Format::Json,
        }
    }
}

fn run_project(cli: &Cli, args: &ProjectArgs) -> Result<(), Failure> {
    let points = jlrp::io::read_matrix_csv_path(&args.input, args.header)?;
    let distribution = match args.distribution {
        DistributionArg::Gaussian => MatrixDistribution::Gaussian,
        DistributionArg::Achlioptas => MatrixDistribution::Achlioptas { q: args.q },
    };
    let pairing: NormPairing = args.pairing.into();
    let k = match (args.k, args.method) {
        (Some(k), None) => k,
        (None, Some(method)) => {
            let epsilon = args.epsilon.expect("clap requires");
            let beta = args.beta.expect("clap requires");
            let query = BoundQuery::new(points.rows() as u64, epsilon, beta)?;
            bound_for_method(method.into(), &query)?.k as usize
        }
        (None, None) => {
            return Err(Failure::Usage(
                "choose a dimension with --k or derive one with --method/--epsilon/--beta".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let spec = ProjectionSpec::new(distribution, pairing, k, points.cols(), cli.seed)?;
    let projected = jlrp::projection::project(&points, &spec)?;
    jlrp::io::write_matrix_csv_path(&args.output, &projected, args.header)?;
    eprintln!(
        "projected {} points: distribution={:?} pairing={:?} k={} p={} seed={}",
        points.rows(),
        spec.distribution,
        spec.norm_pairing,
        spec.k,
        spec.p,
        spec.seed
    );
    Ok(())
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> Result<(), Failure> {
    let query = BoundQuery::new(args.n, args.epsilon, args.beta)?;
    let point_source = match args.point_source {
        PointSourceArg::GaussianCloud => PointSource::GaussianCloud,
        PointSourceArg::Hypercube => PointSource::Hypercube,
        PointSourceArg::File => {
            let path = args.input.clone().ok_or_else(|| {
                Failure::Usage("--point-source file needs --input <csv>".into())
            })?;
            PointSource::FileInput(path)
        }
    };
    let mut spec = VerifySpec::new(
        query,
        args.method.into(),
        args.pairing.into(),
        args.replicates,
        cli.seed,
    );
    spec.p = args.ambient_dim;
    if let Some(n_points) = args.n_points {
        spec.n_points = n_points;
    }
    spec.point_source = point_source;
    spec.validate()?;

    let report = run_pair_trials(&spec)?;
    let json = serde_json::to_string_pretty(&report).expect("serializable");
    if let Some(path) = &args.report {
        std::fs::write(path, format!("{json}\n")).map_err(|e| Failure::Io(e.to_string()))?;
    }
    match cli.format {
        OutputFormat::Json => println!("{json}"),
        _ => {
            println!("method: {}  k: {}", report.method, report.k_used);
            println!(
                "per-pair success: {:.6} (guaranteed >= {:.6}, se {:.2e})",
                report.per_pair_success_rate,
                report.guaranteed_per_pair,
                report.std_error_per_pair
            );
            println!(
                "all-pairs success: {:.6} (guaranteed >= {:.6})",
                report.all_pairs_success_rate, report.guaranteed_all_pairs
            );
        }
    }
    if report.satisfies_guarantees() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "empirical success rate {:.6} fell more than 3 standard errors below the guarantee {:.6}",
            report.per_pair_success_rate, report.guaranteed_per_pair
        )))
    }
}
