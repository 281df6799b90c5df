//! Subcommands of the `biotimeline` binary.

use std::net::{IpAddr, SocketAddr};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use biotimeline_core::{build_benchmark, Hyperparams, ModelError, Source};

use crate::api::{self, ServeConfig, DEFAULT_CACHE_SIZE, DEFAULT_PORT};
use crate::benchmark::{parse_jsonl, resolve, to_jsonl, BenchmarkError};
use crate::document::{now_timestamp, parse_timestamp, TimestampError, UrlTemplate, DEFAULT_URL_TEMPLATE};
use crate::dump::{load_kg, read_corpus, LoadError};
use crate::engine::{Engine, EngineError};
use crate::store::{to_pretty_json, write_json, write_text, StoreError, SCHEMA_FILE};

#[derive(Debug, Parser)]
#[command(name = "biotimeline", version, about = "Biography timelines from a temporal knowledge graph")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a knowledge-graph dump and report its size.
    Validate(ValidateArgs),
    /// Label every temporal relation against the biography corpus.
    Benchmark(BenchmarkArgs),
    /// Train the relevance model of one corpus flavor.
    Train(TrainArgs),
    /// Write the export document of one person's timeline.
    Timeline(TimelineArgs),
    /// Run the HTTP service.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Directory with entities.tsv, events.tsv and facts.tsv.
    #[arg(long, env = "BIOTIMELINE_DATA")]
    pub data: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchmarkArgs {
    #[arg(long, env = "BIOTIMELINE_DATA")]
    pub data: PathBuf,
    /// Directory with one sub-directory per source.
    #[arg(long)]
    pub corpus: PathBuf,
    /// Output JSON-lines file.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Benchmark JSON-lines file.
    #[arg(long)]
    pub benchmark: PathBuf,
    /// Graph the benchmark was built from.
    #[arg(long, env = "BIOTIMELINE_DATA")]
    pub data: PathBuf,
    #[arg(long)]
    pub source: Source,
    /// Model file; schema.json is written beside it.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = Hyperparams::default().lambda)]
    pub lambda: f64,
    #[arg(long, default_value_t = Hyperparams::default().epochs)]
    pub epochs: u32,
    #[arg(long, default_value_t = Hyperparams::default().seed)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct TimelineArgs {
    #[arg(long, env = "BIOTIMELINE_DATA")]
    pub data: PathBuf,
    #[arg(long, env = "BIOTIMELINE_MODELS")]
    pub models: PathBuf,
    #[arg(long)]
    pub person: String,
    #[arg(long, default_value = "wikipedia")]
    pub model: Source,
    #[arg(long)]
    pub out: PathBuf,
    /// Pins `generated_at` (RFC 3339).
    #[arg(long)]
    pub timestamp: Option<String>,
    #[arg(long, env = "BIOTIMELINE_URL_TEMPLATE", default_value = DEFAULT_URL_TEMPLATE)]
    pub url_template: String,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, env = "BIOTIMELINE_DATA")]
    pub data: PathBuf,
    #[arg(long, env = "BIOTIMELINE_MODELS")]
    pub models: PathBuf,
    #[arg(long, env = "BIOTIMELINE_HOST", default_value = "127.0.0.1")]
    pub host: IpAddr,
    #[arg(long, env = "BIOTIMELINE_PORT", default_value_t = DEFAULT_PORT)]
    pub port: u16,
    #[arg(long, env = "BIOTIMELINE_CACHE_SIZE", default_value_t = NonZeroUsize::new(DEFAULT_CACHE_SIZE).unwrap())]
    pub cache_size: NonZeroUsize,
    /// Directory of the web UI bundle.
    #[arg(long = "static", env = "BIOTIMELINE_STATIC")]
    pub static_dir: Option<PathBuf>,
    #[arg(long, env = "BIOTIMELINE_URL_TEMPLATE", default_value = DEFAULT_URL_TEMPLATE)]
    pub url_template: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error(transparent)]
    Benchmark(#[from] BenchmarkError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Timestamp(#[from] TimestampError),
    #[error(transparent)]
    Supervision(#[from] biotimeline_core::SupervisionError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// What a command prints: a report for stdout and warnings for stderr.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub warnings: Vec<String>,
}

impl From<String> for Outcome {
    fn from(report: String) -> Self {
        Self { report, warnings: Vec::new() }
    }
}

pub fn cmd_validate(data: &Path) -> Result<Outcome, CliError> {
    let kg = load_kg(data)?;
    Ok(format!(
        "ok: {} persons, {} entities, {} events, {} facts",
        kg.person_count(),
        kg.entity_count(),
        kg.event_count(),
        kg.fact_count()
    )
    .into())
}

pub fn cmd_benchmark(data: &Path, corpus: &Path, out: &Path) -> Result<Outcome, CliError> {
    let kg = load_kg(data)?;
    let docs = read_corpus(corpus)?;
    let bench = build_benchmark(&kg, &docs.docs)?;
    write_text(out, &to_jsonl(&bench.records))?;

    let mut report = format!("wrote {} records to {}", bench.records.len(), out.display());
    for source in Source::ALL {
        let s = bench.summary(source);
        report.push_str(&format!(
            "\n{source}: {} persons, {} relations, {} relevant ({:.3})",
            s.persons,
            s.relations,
            s.positives,
            s.positive_fraction()
        ));
    }
    let mut warnings = docs.warnings;
    warnings.extend(bench.warnings);
    Ok(Outcome { report, warnings })
}

pub fn cmd_train(args: &TrainArgs) -> Result<Outcome, CliError> {
    let kg = load_kg(&args.data)?;
    let text = std::fs::read_to_string(&args.benchmark)
        .map_err(|source| StoreError::Io { path: args.benchmark.clone(), source })?;
    let records = resolve(&kg, &parse_jsonl(&text)?)?;
    let hp = Hyperparams { lambda: args.lambda, epochs: args.epochs, seed: args.seed };
    let (schema, model, report) = crate::store::train_source(&kg, &records, args.source, hp)?;

    let schema_path = args.out.parent().unwrap_or(Path::new("")).join(SCHEMA_FILE);
    write_json(&schema_path, &schema)?;
    write_json(&args.out, &model)?;
    let examples = records.iter().filter(|r| r.source == args.source).count();
    Ok(format!(
        "trained {} model on {examples} examples (dimension {}, kept epoch {} with objective {:.6})\nwrote {} and {}",
        args.source,
        schema.dimension,
        report.selected_epoch,
        report.retained_objective.last().copied().unwrap_or(f64::NAN),
        args.out.display(),
        schema_path.display()
    )
    .into())
}

pub fn cmd_timeline(args: &TimelineArgs) -> Result<Outcome, CliError> {
    let generated_at = match &args.timestamp {
        Some(t) => parse_timestamp(t)?,
        None => now_timestamp(),
    };
    let engine = Engine::load(&args.data, &args.models, UrlTemplate::new(args.url_template.clone()))?;
    let doc = engine.export(&args.person, args.model, generated_at)?;
    write_text(&args.out, &to_pretty_json(&doc))?;
    Ok(format!(
        "{}: {} entries, {} rejected, {} events -> {}",
        args.person,
        doc.entries.len(),
        doc.rejected.len(),
        doc.events.len(),
        args.out.display()
    )
    .into())
}

pub fn cmd_serve(args: &ServeArgs) -> Result<Outcome, CliError> {
    let engine = Engine::load(&args.data, &args.models, UrlTemplate::new(args.url_template.clone()))?;
    let config = ServeConfig {
        addr: SocketAddr::new(args.host, args.port),
        cache_size: args.cache_size,
        static_dir: args.static_dir.clone(),
    };
    let runtime = tokio::runtime::Builder::new_multi_thread().enable_all().build()?;
    runtime.block_on(api::serve(engine, config))?;
    Ok(Outcome::default())
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Validate(a) => cmd_validate(&a.data),
        Command::Benchmark(a) => cmd_benchmark(&a.data, &a.corpus, &a.out),
        Command::Train(a) => cmd_train(a),
        Command::Timeline(a) => cmd_timeline(a),
        Command::Serve(a) => cmd_serve(a),
    }
}
