//! `qbank generate | validate | assess | families`.
//!
//! Exit status: 0 on success, 1 on runtime or data failures, 2 on usage
//! errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use qbank_core::assess::{floor_violations, refit_excluding, RegressionFit};
use qbank_core::emit::parse_txt;
use qbank_core::exactmath::Rational;
use qbank_core::templates::{assemble_pool_with, Answer, LinearEquation, Question, FAMILIES};

use crate::config::{parse_bound, ConfigFile, Overrides, RunConfig, SEED_ENV};
use crate::grades::load_grades;
use crate::output::{write_pool, OutputFormat};
use crate::CliError;

/// `Mon 13 Jan 2014 15:30:04`.
pub const CLOCK_FORMAT: &str = "%a %d %b %Y %H:%M:%S";

#[derive(Debug, Parser)]
#[command(name = "qbank", version, about = "Generate, check and assess homework question pools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a question pool and print the file manifest.
    Generate(GenerateArgs),
    /// Check an FMB text pool: structure, unique titles, and re-solved
    /// linear equations.
    Validate {
        path: PathBuf,
    },
    /// Fit course grade against homework grade from a CSV file.
    Assess(AssessArgs),
    /// List the question families.
    Families,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub family: Option<String>,
    /// Number of questions (at least 1).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub count: Option<u32>,
    /// Master seed; falls back to the config file, then QBANK_SEED, then 0.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Index of the first question (at least 1).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=9999))]
    pub start_index: Option<u32>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Timestamp for the HTML title instead of the current time.
    #[arg(long)]
    pub clock: Option<String>,
    /// Flat `key = value` config file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Generator bound override, e.g. `--bound lin-coef=30`.
    #[arg(long = "bound", value_name = "KEY=VALUE", value_parser = parse_bound)]
    pub bounds: Vec<(String, i64)>,
}

#[derive(Debug, Args)]
pub struct AssessArgs {
    pub csv: PathBuf,
    /// Slope of the floor line `course = slope * hw + intercept`.
    #[arg(long, allow_hyphen_values = true)]
    pub line_slope: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub line_intercept: Option<f64>,
    /// Student ids to leave out of the second fit; repeatable or
    /// comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub exclude: Vec<String>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return e.exit_code();
        }
    };
    let env_seed = std::env::var(SEED_ENV).ok();
    let result = match cli.command {
        Command::Generate(a) => cmd_generate(&a, env_seed.as_deref(), out),
        Command::Validate { path } => cmd_validate(&path, out, err),
        Command::Assess(a) => cmd_assess(&a, out),
        Command::Families => list_families(out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}

pub fn resolve_config(args: &GenerateArgs, env_seed: Option<&str>) -> Result<RunConfig, CliError> {
    let file = match &args.config {
        Some(p) => Some(ConfigFile::parse(&read(p)?)?),
        None => None,
    };
    let flags = Overrides {
        family: args.family.clone(),
        count: args.count,
        seed: args.seed,
        start_index: args.start_index,
        out: args.out.clone(),
        format: args.format,
        clock: args.clock.clone(),
        bounds: args.bounds.clone(),
    };
    RunConfig::resolve(&flags, file.as_ref(), env_seed)
}

pub fn cmd_generate(
    args: &GenerateArgs,
    env_seed: Option<&str>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let config = resolve_config(args, env_seed)?;
    let mut pool = assemble_pool_with(
        &config.family,
        config.count,
        config.master_seed,
        config.start_index,
        &config.bounds,
    )?;
    pool.clock = config
        .clock
        .clone()
        .unwrap_or_else(|| chrono::Local::now().format(CLOCK_FORMAT).to_string());
    let manifest = write_pool(&pool, &config.out_dir, config.format)?;
    emit(out, &manifest.to_string())?;
    Ok(0)
}

/// Problems with one question beyond what the parser enforces.
fn question_diagnostics(q: &Question) -> Vec<String> {
    let mut found = Vec::new();
    if let Err(e) = q.check() {
        found.push(e.to_string());
    }
    let (Some(display), Answer::FillIn { label, accepted }) = (&q.display, &q.answer) else {
        return found;
    };
    let mut chars = label.chars();
    let (Some(var), None) = (chars.next(), chars.next()) else {
        return found;
    };
    let Ok(eq) = LinearEquation::parse(display, var) else {
        return found;
    };
    match eq.solve() {
        Ok(solution) => {
            for a in accepted {
                match a.parse::<Rational>() {
                    Ok(v) if v == solution => {}
                    _ => found.push(format!(
                        "question `{}`: accepted answer `{a}` does not solve {display} (solution {solution})",
                        q.title
                    )),
                }
            }
        }
        Err(e) => found.push(format!("question `{}`: {e}", q.title)),
    }
    found
}

pub fn cmd_validate(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let text = read(path)?;
    let pool = match parse_txt(&text) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", path.display());
            return Ok(1);
        }
    };
    let mut diagnostics = Vec::new();
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, q) in pool.questions.iter().enumerate() {
        if let Some(first) = seen.insert(q.title.as_str(), i + 1) {
            diagnostics.push(format!(
                "duplicate title `{}` (questions {first} and {})",
                q.title,
                i + 1
            ));
            seen.insert(q.title.as_str(), first);
        }
        diagnostics.extend(question_diagnostics(q));
    }
    if diagnostics.is_empty() {
        emit(out, &format!("{}: ok, {} questions\n", path.display(), pool.questions.len()))?;
        Ok(0)
    } else {
        for d in &diagnostics {
            let _ = writeln!(err, "{}: {d}", path.display());
        }
        Ok(1)
    }
}

fn fit_line(label: &str, f: &RegressionFit) -> String {
    format!(
        "{label}: slope = {:.4}, intercept = {:.4}, R² = {:.4}, n = {}\n",
        f.slope, f.intercept, f.r_squared, f.n
    )
}

pub fn cmd_assess(args: &AssessArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let records = load_grades(&read(&args.csv)?)?;
    let excluded: Vec<&str> = args.exclude.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect();
    let (full, excl) = refit_excluding(&records, &excluded)?;
    let mut report = fit_line("full fit", &full);
    if !excluded.is_empty() {
        report.push_str(&format!("excluded: {}\n", excluded.join(", ")));
        report.push_str(&fit_line("exclusion fit", &excl));
    }
    if args.line_slope.is_some() || args.line_intercept.is_some() {
        let slope = args.line_slope.unwrap_or(0.0);
        let intercept = args.line_intercept.unwrap_or(0.0);
        let below = floor_violations(&records, slope, intercept);
        report.push_str(&format!(
            "floor line: course = {slope:.4} * hw + {intercept:.4}\nbelow line: {}\n",
            below.len()
        ));
        for r in &below {
            report.push_str(&format!(
                "  {}\thw = {:.2}\tcourse = {:.2}\n",
                r.student_id, r.hw_pct, r.course_pct
            ));
        }
    }
    emit(out, &report)?;
    Ok(0)
}

fn list_families(out: &mut dyn Write) -> Result<i32, CliError> {
    let mut text = String::new();
    for f in &FAMILIES {
        let kind = match f.kind {
            qbank_core::templates::QuestionKind::MultipleChoice => "MC",
            qbank_core::templates::QuestionKind::FillInBlank => "FITB",
        };
        text.push_str(&format!("{}\t{kind}\t{}\n", f.name, f.description));
    }
    emit(out, &text)?;
    Ok(0)
}
