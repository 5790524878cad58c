mod commands;
mod error;
mod golden;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::error::{CliError, Result};
use crate::input::{parse_json, Inputs};
use crate::report::Report;

/// Exact coadjoint-orbit computations for nilpotent Lie algebras.
///
/// Algebras are catalog names (gl_upper:N, sp:N, heis:M) or JSON objects.
/// Functionals are JSON maps from labels to rationals, or the shorthands
/// psi_ab(a,b) on gl_upper:4 and f(a) on any catalog family.
#[derive(Parser)]
#[command(name = "kirillov", version)]
struct Cli {
    /// Compact JSON output (the default)
    #[arg(long, global = true)]
    json: bool,
    /// Indented JSON output
    #[arg(long, global = true)]
    pretty: bool,
    /// JSON object supplying inputs not given on the command line
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// Catalog name or algebra JSON
    algebra: Option<String>,
    /// Functional JSON or shorthand
    psi: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit dimension, stabilizer in the algebra, canonical form and depth
    Orbit(Target),
    /// Depth class, Heisenberg quotient data and metaplectic degree bound
    Classify(Target),
    /// Vergne polarizations on the default flags or a given one
    Polarize {
        #[command(flatten)]
        target: Target,
        /// Flag as a JSON list of coordinate index sets
        #[arg(long)]
        flag: Option<String>,
    },
    /// Levi stabilizer of the orbit and the P-orbit dimension
    Stabilizer {
        #[command(flatten)]
        target: Target,
        /// Diagonal pattern to compare against, such as x,y,y,x
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Degeneration certificate or cocharacter search
    Degenerate {
        /// Catalog name or algebra JSON
        algebra: Option<String>,
        /// psi=..., psi0=..., lambda=0,0,1,0, search or search=B
        params: Vec<String>,
    },
    /// Coset representatives for the mirabolic filtration of GL_n
    Cosets { n: Option<String> },
    /// Run an embedded expectation battery
    Golden {
        /// gl4, gln, sp, heisenberg, degeneration or cosets
        set: String,
    },
}

/// Command-line text; JSON-looking text is parsed so the report echoes structured inputs.
fn text_value(key: &str, text: &str) -> Result<Value> {
    if text.trim_start().starts_with(['{', '[']) {
        parse_json(key, text)
    } else {
        Ok(Value::String(text.to_string()))
    }
}

fn put(inputs: &mut Inputs, key: &str, value: &Option<String>) -> Result<()> {
    if let Some(v) = value {
        inputs.insert(key.to_string(), text_value(key, v)?);
    }
    Ok(())
}

fn gather(command: &Command) -> Result<(&'static str, Inputs)> {
    let mut inputs = Inputs::new();
    let name = match command {
        Command::Orbit(t) | Command::Classify(t) => {
            put(&mut inputs, "algebra", &t.algebra)?;
            put(&mut inputs, "psi", &t.psi)?;
            if matches!(command, Command::Orbit(_)) { "orbit" } else { "classify" }
        }
        Command::Polarize { target, flag } => {
            put(&mut inputs, "algebra", &target.algebra)?;
            put(&mut inputs, "psi", &target.psi)?;
            put(&mut inputs, "flag", flag)?;
            "polarize"
        }
        Command::Stabilizer { target, pattern } => {
            put(&mut inputs, "algebra", &target.algebra)?;
            put(&mut inputs, "psi", &target.psi)?;
            put(&mut inputs, "pattern", pattern)?;
            "stabilizer"
        }
        Command::Degenerate { algebra, params } => {
            put(&mut inputs, "algebra", algebra)?;
            for p in params {
                match p.split_once('=') {
                    Some((k, v)) => inputs.insert(k.trim().to_string(), text_value(k.trim(), v)?),
                    None if p == "search" => inputs.insert("search".into(), Value::Bool(true)),
                    None => return Err(CliError::invalid(p, "expected key=value")),
                };
            }
            "degenerate"
        }
        Command::Cosets { n } => {
            put(&mut inputs, "n", n)?;
            "cosets"
        }
        Command::Golden { .. } => unreachable!("golden has no inputs"),
    };
    Ok((name, inputs))
}

fn merge_file(inputs: &mut Inputs, path: &PathBuf) -> Result<()> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: shown.clone(), message: e.to_string() })?;
    match parse_json(&shown, &text)? {
        Value::Object(map) => {
            for (k, v) in map {
                inputs.entry(k).or_insert(v);
            }
            Ok(())
        }
        _ => Err(CliError::invalid(&shown, "expected a JSON object of inputs")),
    }
}

fn render(cli: &Cli, value: &impl serde::Serialize) -> String {
    if cli.pretty {
        serde_json::to_string_pretty(value).expect("plain data")
    } else {
        serde_json::to_string(value).expect("plain data")
    }
}

fn run(cli: &Cli) -> Result<bool> {
    if let Command::Golden { set } = &cli.command {
        let reports = golden::run_set(set)?;
        for r in &reports {
            for m in r.mismatches() {
                let found = m.found.map_or("nothing".to_string(), |v| v.to_string());
                eprintln!("mismatch in {}: {} expected {} ({}), found {found}", r.case_name, m.key, m.expected, m.source);
            }
        }
        println!("{}", render(cli, &reports));
        return Ok(reports.iter().all(|r| r.matches));
    }
    let (name, mut inputs) = gather(&cli.command)?;
    if let Some(path) = &cli.file {
        merge_file(&mut inputs, path)?;
    }
    let results = commands::execute(name, &inputs)?;
    let report = Report::new(name, Value::Object(inputs), results, None);
    println!("{}", render(cli, &report));
    Ok(report.matches)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
