//! Command-line front end. [`run`] is the whole program minus process IO.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use dgalg_core::character::{check_additivity, is_trivial_on_loops};
use dgalg_core::demo::{demo_by_name, DEMO_NAMES};
use dgalg_core::derivation::check_graded_leibniz;
use dgalg_core::dg::{central_dg_criterion, check_dg, check_iso};
use dgalg_core::groupoid::{check_components, check_free_transitive, check_groupoid_axioms};
use dgalg_core::{Character, CheckReport, Derivation, Error, Morphism, SignedElement};
use serde_json::json;

use crate::config::{ModeName, OutputFormat, RunConfig};
use crate::error::CliError;
use crate::report::{Entry, Envelope, Table};
use crate::session::Session;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dgalg", version, about = "Exact checks of graded derivations and DG structures on group algebras")]
pub struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Overrides the window word length of the config.
    #[arg(long, global = true)]
    pub window_length: Option<u32>,
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeName>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Seed for sampling checks whose instance count exceeds the cap.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Leibniz,
    Additivity,
    Dg,
    Loops,
    GroupoidAxioms,
    /// The product criterion for central derivations, next to the DG check.
    Criterion,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Audit the grading, the central derivations and the maps of a config.
    Validate,
    /// Run one check on the configured derivations.
    Check {
        #[arg(long, value_enum)]
        check: CheckName,
        /// Only this derivation (default: all of them).
        #[arg(long)]
        derivation: Option<String>,
    },
    /// Character table of the bracket of two derivations.
    Bracket {
        #[arg(long)]
        d1: String,
        #[arg(long)]
        d2: String,
    },
    /// Character table of a derivation over the window.
    CharTable {
        #[arg(long)]
        derivation: String,
    },
    /// Check that a map intertwines two derivations.
    CheckIso {
        #[arg(long)]
        d1: String,
        #[arg(long)]
        d2: String,
        #[arg(long)]
        map: String,
    },
    /// Run a built-in example.
    Demo { name: String },
}

/// Runs the program on `args` (including the program name) and returns the
/// output and exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
            return (e.render().to_string(), code);
        }
    };
    let start = Instant::now();
    let mut format = cli.format.unwrap_or_default();
    let result = execute(&cli, &mut format);
    let timing_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok((envelope, group)) => {
            let code = if envelope.passed() { EXIT_PASS } else { EXIT_FAIL };
            let out = match format {
                OutputFormat::Json => {
                    let mut v = envelope.to_json(&group, 0);
                    v["timing_ms"] = json!(timing_ms);
                    pretty(&v)
                }
                OutputFormat::Text => envelope.to_text(&group),
            };
            (out, code)
        }
        Err(e) => {
            let out = match format {
                OutputFormat::Json => pretty(&json!({
                    "schema": 1,
                    "status": "error",
                    "error": e.to_string(),
                    "timing_ms": timing_ms,
                })),
                OutputFormat::Text => format!("error: {e}\n"),
            };
            (out, EXIT_ERROR)
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn load_session(cli: &Cli, format: &mut OutputFormat) -> Result<Session, CliError> {
    let Some(path) = &cli.config else {
        return Err(CliError::Usage("this command needs --config".into()));
    };
    let src = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let mut config = RunConfig::from_json(&src)?;
    if let Some(l) = cli.window_length {
        config.window.length = l;
    }
    if let Some(m) = cli.mode {
        config.mode = m;
    }
    if let Some(s) = cli.seed {
        config.seed = s;
    }
    match cli.format {
        Some(f) => config.output = f,
        None => *format = config.output,
    }
    Session::new(config)
}

fn envelope(session: &Session, command: String) -> Envelope {
    Envelope {
        command,
        group: session.group.describe(),
        generators: session.group.generator_names().to_vec(),
        grading: session.graded.grading().degrees().to_vec(),
        mode: session.mode.as_str(),
        seed: session.budget.seed,
        window_size: session.window.len(),
        window_length: Some(session.config.window.length),
        entries: Vec::new(),
        tables: Vec::new(),
    }
}

fn execute(cli: &Cli, format: &mut OutputFormat) -> Result<(Envelope, dgalg_core::Group), CliError> {
    if let Command::Demo { name } = &cli.command {
        return demo(name, cli);
    }
    let session = load_session(cli, format)?;
    let env = match &cli.command {
        Command::Validate => validate(&session),
        Command::Check { check, derivation } => run_check(&session, *check, derivation.as_deref()),
        Command::Bracket { d1, d2 } => bracket(&session, d1, d2),
        Command::CharTable { derivation } => char_table(&session, derivation),
        Command::CheckIso { d1, d2, map } => iso(&session, d1, d2, map),
        Command::Demo { .. } => unreachable!(),
    }?;
    Ok((env, session.group))
}

fn demo(name: &str, cli: &Cli) -> Result<(Envelope, dgalg_core::Group), CliError> {
    let Some(demo) = demo_by_name(name) else {
        return Err(CliError::Usage(format!("unknown demo {name:?}; available: {}", DEMO_NAMES.join(", "))));
    };
    let demo = demo?;
    let group = demo.graded.group().clone();
    let env = Envelope {
        command: format!("demo {name}"),
        group: group.describe(),
        generators: group.generator_names().to_vec(),
        grading: demo.graded.grading().degrees().to_vec(),
        mode: dgalg_core::Mode::Cochain.as_str(),
        seed: cli.seed.unwrap_or(0),
        window_size: demo.window.len(),
        window_length: None,
        entries: demo.reports.into_iter().map(|r| Entry::new(None, r)).collect(),
        tables: Vec::new(),
    };
    Ok((env, group))
}

fn validate(session: &Session) -> Result<Envelope, CliError> {
    let mut env = envelope(session, "validate".into());
    env.entries.push(Entry::new(None, session.grading_report.clone()));
    for (name, d) in &session.derivations {
        for r in session.central_audits(d) {
            env.entries.push(Entry::new(Some(name), r));
        }
    }
    for (name, f) in &session.maps {
        let r = f.validate(&session.graded, &session.window, &session.search, &session.budget);
        env.entries.push(Entry::new(Some(name), r));
    }
    Ok(env)
}

fn selected<'a>(session: &'a Session, name: Option<&str>) -> Result<Vec<(&'a str, &'a Derivation)>, CliError> {
    match name {
        Some(n) => {
            let d = session.derivation(n)?;
            let key = session.derivations.get_key_value(n).map(|(k, _)| k.as_str()).expect("found above");
            Ok(vec![(key, d)])
        }
        None if session.derivations.is_empty() => Err(CliError::Usage("the config defines no derivations".into())),
        None => Ok(session.derivations.iter().map(|(k, d)| (k.as_str(), d)).collect()),
    }
}

fn run_check(session: &Session, check: CheckName, name: Option<&str>) -> Result<Envelope, CliError> {
    let label = check.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut env = envelope(session, format!("check {label}"));
    let (gg, w, budget) = (&session.graded, &session.window, &session.budget);
    if check == CheckName::GroupoidAxioms {
        session.require_ready(&[])?;
        env.entries.push(Entry::new(None, check_groupoid_axioms(gg, w, budget)));
        env.entries.push(Entry::new(None, check_free_transitive(gg, w)));
        env.entries.push(Entry::new(None, check_components(gg, w)));
        return Ok(env);
    }
    for (subject, d) in selected(session, name)? {
        session.require_ready(&[d])?;
        let chi = Character::of_derivation(d.clone());
        let reports: Vec<CheckReport> = match check {
            CheckName::Leibniz => vec![check_graded_leibniz(d, gg, w, budget)?],
            CheckName::Additivity => vec![check_additivity(&chi, gg, w, budget)?],
            CheckName::Loops => vec![is_trivial_on_loops(&chi, gg, w)?],
            CheckName::Dg => {
                let r = check_dg(d, gg, session.mode, w)?;
                vec![r.square_zero, r.degree_shift]
            }
            CheckName::Criterion => {
                let Derivation::Central { z, tau } = d else {
                    if name.is_some() {
                        return Err(Error::Precondition(format!("{subject} is not a central derivation")).into());
                    }
                    continue;
                };
                let r = central_dg_criterion(z, tau, gg, session.mode, w, budget)?;
                let mut criterion = r.criterion;
                criterion.note(if r.agrees { "agrees with the DG check" } else { "disagrees with the DG check" });
                vec![criterion, r.dg.square_zero, r.dg.degree_shift]
            }
            CheckName::GroupoidAxioms => unreachable!(),
        };
        env.entries.extend(reports.into_iter().map(|r| Entry::new(Some(subject), r)));
    }
    Ok(env)
}

fn table(session: &Session, title: String, chi: &Character) -> Result<Table, CliError> {
    let gg = &session.graded;
    let words: Vec<String> = session.window.iter().map(|g| session.group.format_element(g)).collect();
    let mut entries = vec![Vec::with_capacity(words.len()); words.len()];
    let mut outside = 0;
    for h in &session.window {
        let column = chi.column(gg, h)?;
        outside += column.support().filter(|x| !session.window.contains(x)).count();
        for (i, x) in session.window.iter().enumerate() {
            let value = chi.evaluate(gg, &Morphism::new(SignedElement::pos(x.clone()), h.clone()))?;
            entries[i].push(value.to_string());
        }
    }
    Ok(Table { title, rows: words.clone(), columns: words, entries, outside })
}

fn bracket(session: &Session, d1: &str, d2: &str) -> Result<Envelope, CliError> {
    let (a, b) = (session.derivation(d1)?, session.derivation(d2)?);
    session.require_ready(&[a, b])?;
    let chi = Character::bracket(Character::of_derivation(a.clone()), Character::of_derivation(b.clone()));
    let mut env = envelope(session, format!("bracket {d1} {d2}"));
    env.tables.push(table(session, format!("{{{d1}, {d2}}}"), &chi)?);
    Ok(env)
}

fn char_table(session: &Session, name: &str) -> Result<Envelope, CliError> {
    let d = session.derivation(name)?;
    session.require_ready(&[d])?;
    let mut env = envelope(session, format!("char-table {name}"));
    env.tables.push(table(session, name.to_string(), &Character::of_derivation(d.clone()))?);
    Ok(env)
}

fn iso(session: &Session, d1: &str, d2: &str, map: &str) -> Result<Envelope, CliError> {
    let (a, b, f) = (session.derivation(d1)?, session.derivation(d2)?, session.map(map)?);
    session.require_ready(&[a, b])?;
    let r = check_iso(a, b, f, &session.graded, &session.window, &session.search, &session.budget)?;
    let mut env = envelope(session, format!("check-iso {d1} {d2} {map}"));
    let subject = format!("{map}: {d1} -> {d2}");
    let mut conjugation = r.conjugation;
    if !r.agrees {
        conjugation.note("coefficient and operator forms disagree");
    }
    env.entries.push(Entry::new(Some(&subject), conjugation));
    env.entries.push(Entry::new(Some(&subject), r.operator));
    Ok(env)
}
