//! The `influence-games` command line: `compute` and `reproduce`.
//!
//! Exit codes: 0 success, 1 usage, 2 data error, 3 capacity exceeded.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::format::read_network;
use super::reproduce::{reproduce, TableId};
use super::table::{CentralityTable, OutputFormat};
use crate::classical::{betweenness_centrality, closeness_centrality, degree_centrality, Direction};
use crate::datasets::{builtin_graph, CaseStudy, DatasetError, ThresholdCase};
use crate::exact::{enumerate_with, EffortScale, EnumerationOptions, GameReport};
use crate::game::InfluenceGame;
use crate::sampling::{estimate_banzhaf_raw, estimate_satisfaction, estimate_shapley, SamplingOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "influence-games", version, about = "Centrality measures from influence games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute selected measures for one network.
    Compute(ComputeArgs),
    /// Rebuild a bundled case-study table and diff it against the published one.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Din,
    Dout,
    Closeness,
    Betweenness,
    Bz,
    Ss,
    Effort,
    Satisfaction,
    Width,
}

impl Measure {
    fn name(self) -> &'static str {
        match self {
            Measure::Din => "din",
            Measure::Dout => "dout",
            Measure::Closeness => "closeness",
            Measure::Betweenness => "betweenness",
            Measure::Bz => "bz",
            Measure::Ss => "ss",
            Measure::Effort => "effort",
            Measure::Satisfaction => "satisfaction",
            Measure::Width => "width",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScaleArg {
    /// Sum of finite thresholds.
    Mass,
    /// Number of convincible players.
    Players,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Network file in the line-oriented text format.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    pub network: Option<PathBuf>,
    /// Bundled network: monkeys, dining or studentgov.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Threshold case C1..C4 for bundled networks.
    #[arg(long)]
    pub case: Option<String>,
    /// Quota; overrides the one in the file.
    #[arg(long)]
    pub quota: Option<usize>,
    /// Comma-separated list of measures.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub measures: Vec<String>,
    /// Exact enumeration of all coalitions (the default).
    #[arg(long, conflicts_with = "sample")]
    pub exact: bool,
    /// Monte Carlo estimate from this many samples.
    #[arg(long)]
    pub sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "csv")]
    pub format: OutputFormat,
    #[arg(long, default_value_t = 4)]
    pub precision: usize,
    /// Denominator of the effort centrality.
    #[arg(long, value_enum, default_value = "mass")]
    pub effort_scale: ScaleArg,
    /// Split the enumeration into this many ranges.
    #[arg(long)]
    pub partitions: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Table number: 1, 2 or 3.
    #[arg(long)]
    pub table: TableId,
    #[arg(long, default_value = "csv")]
    pub format: OutputFormat,
    /// Render every column at this many decimals instead of the printed ones.
    #[arg(long)]
    pub precision: Option<usize>,
    /// Split each enumeration into this many ranges.
    #[arg(long)]
    pub partitions: Option<usize>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Capacity(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Capacity(_) => EXIT_CAPACITY,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Capacity(m) => m,
        }
    }
}

fn data<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Data(e.to_string())
}

fn parse_measures(raw: &[String]) -> Result<Vec<Measure>, CliError> {
    let mut out = Vec::new();
    for m in raw.iter().map(|m| m.trim()).filter(|m| !m.is_empty()) {
        let parsed = Measure::from_str(m, true)
            .map_err(|_| CliError::Usage(format!("unknown measure `{m}`")))?;
        if !out.contains(&parsed) {
            out.push(parsed);
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("--measures needs at least one measure".into()));
    }
    Ok(out)
}

fn load_game(args: &ComputeArgs) -> Result<InfluenceGame, CliError> {
    if let Some(path) = &args.network {
        if args.case.is_some() {
            return Err(CliError::Usage("--case applies to --builtin networks only".into()));
        }
        let file = read_network(path).map_err(data)?;
        return match file.game(args.quota) {
            Some(game) => game.map_err(data),
            None => Err(CliError::Usage(format!(
                "{} states no quota; pass --quota",
                path.display()
            ))),
        };
    }
    let name = args.builtin.as_deref().unwrap_or_default();
    let study: CaseStudy = name.parse().map_err(|e: DatasetError| CliError::Usage(e.to_string()))?;
    let case = args
        .case
        .as_deref()
        .map(str::parse::<ThresholdCase>)
        .transpose()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let graph = builtin_graph(study, case).map_err(|e| CliError::Usage(e.to_string()))?;
    InfluenceGame::new(graph, args.quota.unwrap_or(study.quota())).map_err(data)
}

fn capacity_or_data(e: crate::exact::CapacityError) -> CliError {
    CliError::Capacity(e.to_string())
}

pub fn compute(args: &ComputeArgs) -> Result<CentralityTable, CliError> {
    let measures = parse_measures(&args.measures)?;
    if args.sample == Some(0) {
        return Err(CliError::Usage("--sample needs at least one sample".into()));
    }
    let game = load_game(args)?;
    let graph = game.graph();
    let n = graph.node_count();
    let mut table = CentralityTable::new("node", graph.nodes().map(|i| graph.display_label(i)).collect());
    let p = args.precision;

    let needs_game = measures.iter().any(|m| {
        matches!(m, Measure::Bz | Measure::Ss | Measure::Effort | Measure::Satisfaction | Measure::Width)
    });
    let mut report: Option<GameReport> = None;
    if needs_game && args.sample.is_none() {
        let mut opts = EnumerationOptions::default();
        if let Some(k) = args.partitions {
            opts = opts.with_partitions(k);
        }
        report = Some(enumerate_with(&game, &opts).map_err(capacity_or_data)?);
    }
    let sampling = args.sample.map(|s| SamplingOptions::new(s, args.seed));
    let scale = match args.effort_scale {
        ScaleArg::Mass => EffortScale::ThresholdMass,
        ScaleArg::Players => EffortScale::ConvincibleCount,
    };

    for m in measures {
        let name = m.name();
        match m {
            Measure::Din | Measure::Dout | Measure::Closeness | Measure::Betweenness => {
                let values = match m {
                    Measure::Din => degree_centrality(graph, Direction::In),
                    Measure::Dout => degree_centrality(graph, Direction::Out),
                    Measure::Closeness => closeness_centrality(graph),
                    _ => betweenness_centrality(graph),
                }
                .map_err(data)?;
                table.push(name, values, p);
            }
            _ => match (&report, &sampling) {
                (Some(r), _) => {
                    let values = match m {
                        Measure::Bz => r.banzhaf(),
                        Measure::Ss => r.shapley_shubik(),
                        Measure::Effort => r.effort_centrality_with(scale),
                        Measure::Satisfaction => r.satisfaction(),
                        _ => r.width_centrality(),
                    };
                    table.push(name, values, p);
                }
                (None, Some(opts)) => {
                    let est = match m {
                        Measure::Bz => estimate_banzhaf_raw(&game, opts),
                        Measure::Ss => estimate_shapley(&game, opts),
                        Measure::Satisfaction => estimate_satisfaction(&game, opts),
                        _ => {
                            return Err(CliError::Usage(format!(
                                "{name} has no sampling estimator; use --exact"
                            )))
                        }
                    };
                    if m == Measure::Bz {
                        let total: u64 = est.hits.iter().sum();
                        let normalized = est
                            .hits
                            .iter()
                            .map(|&h| if total == 0 { 0.0 } else { h as f64 / total as f64 })
                            .collect();
                        table.push("bz", normalized, p);
                        table.push("bz_raw", est.estimates.clone(), p);
                        table.push("bz_raw_se", est.std_errors, p);
                    } else {
                        table.push(name, est.estimates.clone(), p);
                        table.push(format!("{name}_se"), est.std_errors, p);
                    }
                }
                (None, None) => unreachable!("game measures always get a report or a sampler"),
            },
        }
    }
    debug_assert!(table.columns.iter().all(|c| c.values.len() == n));
    Ok(table)
}

pub fn run_reproduce(args: &ReproduceArgs) -> Result<String, CliError> {
    let mut opts = EnumerationOptions::default();
    if let Some(k) = args.partitions {
        opts = opts.with_partitions(k);
    }
    let mut repro = reproduce(args.table, &opts).map_err(|e| match e {
        super::reproduce::ReproduceError::Capacity(c) => capacity_or_data(c),
        other => data(other),
    })?;
    if let Some(p) = args.precision {
        repro.table = repro.table.with_precision(p);
    }
    Ok(repro.render(args.format))
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => compute(a).map(|t| t.render(a.format)),
        Command::Reproduce(a) => run_reproduce(a),
    };
    match result {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_DATA;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}
