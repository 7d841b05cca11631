//! Command-line front end: reads a JSON job document, dispatches to the
//! library, and emits one structured report (or one per line in batch
//! mode).
//!
//! Exit codes: 0 success, 1 invalid input (the message names the violated
//! invariant), 2 internal consistency failure (an oracle disagreed with a
//! fast path — a bug, never silent).

mod job;
mod output;
mod table;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use bott_limit::classify::{d_values, g_values, h_table, is_log_fano};
use bott_limit::curves::{
    curve_in_basis, mori_index_set, primitive_relation, relation_class, schubert_line,
    wall_relation,
};
use bott_limit::{classify, oracle, ray_vector, selftest, RayId, EXHAUSTIVE_CAP};

use job::{parse_boundary, parse_divisor, parse_job, parse_wall, validate_job, JobSpec};
use output::{
    class_to_map, render_json, render_json_line, trace_json, ClassifyReport, ConvertReport,
    DivisorVerdictReport, FanReport, IntersectReport, LogFanoJson, MatrixReport, MoriClassEntry,
    MoriReport, RayEntry, Report, SelfTestJson, WallJson,
};

/// Classified CLI failure: invalid input exits 1, internal inconsistency
/// exits 2.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input(message.into())
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Internal(m) => m,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<bott_limit::Error> for CliError {
    fn from(e: bott_limit::Error) -> Self {
        match e {
            bott_limit::Error::Inconsistency(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CommandKind {
    Fan,
    Matrix,
    Classify,
    Ample,
    Nef,
    Mori,
    Intersect,
    Logfano,
    Convert,
    Batch,
}

impl CommandKind {
    fn name(self) -> &'static str {
        match self {
            CommandKind::Fan => "fan",
            CommandKind::Matrix => "matrix",
            CommandKind::Classify => "classify",
            CommandKind::Ample => "ample",
            CommandKind::Nef => "nef",
            CommandKind::Mori => "mori",
            CommandKind::Intersect => "intersect",
            CommandKind::Logfano => "logfano",
            CommandKind::Convert => "convert",
            CommandKind::Batch => "batch",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        match name {
            "fan" => Some(CommandKind::Fan),
            "matrix" => Some(CommandKind::Matrix),
            "classify" => Some(CommandKind::Classify),
            "ample" => Some(CommandKind::Ample),
            "nef" => Some(CommandKind::Nef),
            "mori" => Some(CommandKind::Mori),
            "intersect" => Some(CommandKind::Intersect),
            "logfano" => Some(CommandKind::Logfano),
            "convert" => Some(CommandKind::Convert),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(
    name = "bott-limit",
    version,
    about = "Fans, Mori cones and Fano classification of Bott towers built from words in Kac-Moody root systems, in exact arithmetic"
)]
struct Cli {
    /// Computation to run on the job document.
    #[arg(long, value_enum)]
    command: Option<CommandKind>,
    /// Path of the job document, or "-" for stdin. Batch mode reads one job
    /// per line.
    #[arg(long)]
    input: Option<String>,
    /// Output format; tables are human-oriented and never mixed with JSON.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Serialize JSON with alphabetically sorted keys (byte-stable).
    #[arg(long)]
    sorted_keys: bool,
    /// Cross-check every fast path against the brute-force oracles before
    /// emitting output; capped at word length 16.
    #[arg(long)]
    oracle: bool,
    /// Seed for --self-test (default 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Run the seeded randomized self-test suite and exit.
    #[arg(long)]
    self_test: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    if cli.self_test {
        return run_self_test(cli);
    }
    let command = cli
        .command
        .ok_or_else(|| CliError::input("--command is required (or pass --self-test)"))?;
    let input = cli
        .input
        .as_deref()
        .ok_or_else(|| CliError::input("--input <file|-> is required"))?;
    let text = read_input(input)?;

    if command == CommandKind::Batch {
        return run_batch(cli, &text);
    }

    let spec = parse_job(&text)?;
    if let Some(named) = &spec.command {
        if named != command.name() {
            return Err(CliError::input(format!(
                "job document names command {named:?} but --command is {}",
                command.name()
            )));
        }
    }
    let report = execute(command, &spec, cli.oracle)?;
    emit(cli, &report)?;
    Ok(0)
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {path}: {e}")))
    }
}

fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let rendered = match cli.format {
        OutputFormat::Json => render_json(report, cli.sorted_keys)
            .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?,
        OutputFormat::Table => table::render(report),
    };
    println!("{rendered}");
    Ok(())
}

fn run_self_test(cli: &Cli) -> Result<u8, CliError> {
    let seed = cli.seed.unwrap_or(0);
    let config = selftest::SelfTestConfig {
        seed,
        ..selftest::SelfTestConfig::default()
    };
    let report = selftest::run(&config);
    let passed = report.passed();
    let doc = Report::SelfTest(SelfTestJson::from_report(seed, &report));
    emit(cli, &doc)?;
    Ok(if passed { 0 } else { 2 })
}

fn run_batch(cli: &Cli, text: &str) -> Result<u8, CliError> {
    if cli.format == OutputFormat::Table {
        return Err(CliError::input(
            "batch emits one JSON report per line; --format table is not available",
        ));
    }
    let mut lines = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let context = |e: CliError| match e {
            CliError::Input(m) => CliError::Input(format!("job {}: {m}", idx + 1)),
            CliError::Internal(m) => CliError::Internal(format!("job {}: {m}", idx + 1)),
        };
        let spec = parse_job(line).map_err(context)?;
        let named = spec
            .command
            .as_deref()
            .ok_or_else(|| CliError::input(format!("job {}: missing \"command\"", idx + 1)))?;
        let kind = CommandKind::from_name(named).ok_or_else(|| {
            CliError::input(format!("job {}: unknown command {named:?}", idx + 1))
        })?;
        let report = execute(kind, &spec, cli.oracle).map_err(context)?;
        let rendered = render_json_line(&report, cli.sorted_keys)
            .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
        lines.push(rendered);
    }
    for line in lines {
        println!("{line}");
    }
    Ok(0)
}

fn execute(kind: CommandKind, spec: &JobSpec, oracle_mode: bool) -> Result<Report, CliError> {
    let validated = validate_job(spec)?;
    let m = &validated.matrix;
    let r = m.word_len();

    if oracle_mode {
        if r > EXHAUSTIVE_CAP {
            return Err(CliError::input(format!(
                "--oracle is exhaustive and requires word length <= {EXHAUSTIVE_CAP}, got {r}"
            )));
        }
        oracle::verify_matrix(m).map_err(CliError::from)?;
    }

    match kind {
        CommandKind::Fan => {
            let mut rays = Vec::with_capacity(2 * r);
            for i in 1..=r {
                for ray in [RayId::plus(i), RayId::minus(i)] {
                    rays.push(RayEntry {
                        ray: ray.to_string(),
                        vector: ray_vector(m, ray).coords().to_vec(),
                    });
                }
            }
            let (smooth, method) = if r <= EXHAUSTIVE_CAP {
                (
                    oracle::smoothness_exhaustive(m).map_err(CliError::from)?,
                    "determinant-enumeration",
                )
            } else {
                // All 2^r cone matrices are triangular with ±1 diagonal.
                (true, "triangular-structure")
            };
            Ok(Report::Fan(FanReport {
                command: "fan".to_string(),
                word_length: r,
                rays,
                maximal_cones: 1u64 << r,
                smooth,
                smoothness_method: method.to_string(),
            }))
        }
        CommandKind::Matrix => Ok(Report::Matrix(MatrixReport {
            command: "matrix".to_string(),
            word_length: r,
            entries: m.rows(),
        })),
        CommandKind::Classify => {
            let report = classify::consistency_report(&validated.gcm, &validated.word)
                .map_err(CliError::from)?;
            Ok(Report::Classify(ClassifyReport::from_report(r, &report)))
        }
        CommandKind::Ample | CommandKind::Nef => {
            let map = spec.divisor.as_ref().ok_or_else(|| {
                CliError::input(format!("{} requires a \"divisor\" map", kind.name()))
            })?;
            let divisor = parse_divisor(map, r)?;
            let d = d_values(m, &divisor).map_err(CliError::from)?;
            let verdict = match kind {
                CommandKind::Ample => d.iter().all(|&v| v > 0),
                _ => d.iter().all(|&v| v >= 0),
            };
            Ok(Report::DivisorVerdict(DivisorVerdictReport {
                command: kind.name().to_string(),
                word_length: r,
                d_values: d,
                verdict,
            }))
        }
        CommandKind::Mori => {
            let mut classes = Vec::with_capacity(r);
            for i in 1..=r {
                let set = mori_index_set(m, i).map_err(CliError::from)?;
                let relation = primitive_relation(m, i).map_err(CliError::from)?;
                let class = relation_class(m, &relation).map_err(CliError::from)?;
                classes.push(MoriClassEntry {
                    position: i,
                    index_set: set.indices.clone(),
                    a_trace: trace_json(&set),
                    intersections: class_to_map(&class),
                    mori_ray: classify::is_mori_ray(m, i).map_err(CliError::from)?,
                });
            }
            Ok(Report::Mori(MoriReport {
                command: "mori".to_string(),
                word_length: r,
                classes,
            }))
        }
        CommandKind::Intersect => {
            let mut k_dot_lines = Vec::with_capacity(r);
            for j in 1..=r {
                let (_, class) = schubert_line(m, j).map_err(CliError::from)?;
                let degree = class.anticanonical_degree().map_err(CliError::from)?;
                k_dot_lines.push(-degree);
            }
            let mut walls = Vec::new();
            for wall_spec in spec.walls.as_deref().unwrap_or(&[]) {
                let wall = parse_wall(wall_spec, r)?;
                if oracle_mode {
                    oracle::verify_wall(m, &wall).map_err(CliError::from)?;
                }
                let class = wall_relation(m, &wall).map_err(CliError::from)?;
                walls.push(WallJson {
                    signs: wall.signs().to_string(),
                    flip: wall.flip_position(),
                    intersections: class_to_map(&class),
                    in_basis: curve_in_basis(m, &wall).map_err(CliError::from)?,
                });
            }
            Ok(Report::Intersect(IntersectReport {
                command: "intersect".to_string(),
                word_length: r,
                k_dot_lines,
                walls,
            }))
        }
        CommandKind::Logfano => {
            let boundary = parse_boundary(&spec.boundary, r)?;
            let report =
                is_log_fano(&validated.gcm, &validated.word, &boundary).map_err(CliError::from)?;
            Ok(Report::LogFano(LogFanoJson {
                command: "logfano".to_string(),
                word_length: r,
                b: report.b.clone(),
                f: report.f.iter().map(|v| v.to_string()).collect(),
                log_fano: report.log_fano,
                witness: report.witness,
            }))
        }
        CommandKind::Convert => {
            let map = spec
                .divisor
                .as_ref()
                .ok_or_else(|| CliError::input("convert requires a \"divisor\" map".to_string()))?;
            let divisor = parse_divisor(map, r)?;
            Ok(Report::Convert(ConvertReport {
                command: "convert".to_string(),
                word_length: r,
                h_table: h_table(m).map_err(CliError::from)?,
                g_values: g_values(m, &divisor).map_err(CliError::from)?,
            }))
        }
        CommandKind::Batch => Err(CliError::input("batch cannot be nested")),
    }
}
