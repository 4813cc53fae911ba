use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use abmc::{run, CliError, Command, Options};

/// Cotorsion pairs and abelian model structures over small module categories.
#[derive(Parser, Debug)]
#[command(name = "abmc", version, about)]
struct Args {
    /// Computation to run.
    #[arg(value_enum)]
    command: Command,
    /// Problem spec (JSON); `-` reads standard input. Optional with --preset.
    spec: Option<PathBuf>,
    /// Named problem bundle: qf-f2c2, gorenstein-zc2, gillespie-proj-f2c2, purity-z.
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Catalog bound for finite-universe sweeps.
    #[arg(long)]
    bounds: Option<usize>,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Aligned text (the default).
    #[arg(long)]
    text: bool,
    /// Print the materialized spec instead of running it.
    #[arg(long)]
    show_spec: bool,
}

fn read_spec(path: &PathBuf) -> Result<Value, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("reading {}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::spec("/", format!("invalid JSON at line {}, column {}: {e}", e.line(), e.column())))
}

/// Write to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let spec = match args.spec.as_ref().map(read_spec).transpose() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("abmc: {e}");
            return ExitCode::from(2);
        }
    };
    if spec.is_none() && args.preset.is_none() {
        eprintln!("abmc: usage error: give a spec file or --preset");
        return ExitCode::from(2);
    }
    let opts = Options { command: Some(args.command), spec, preset: args.preset, seed: args.seed, bounds: args.bounds };
    if args.show_spec {
        return match abmc::materialize(&opts) {
            Ok((_, v)) => {
                emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("spec serializes")));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("abmc: {e}");
                ExitCode::from(2)
            }
        };
    }
    match run(&opts) {
        Ok(report) => {
            if args.json {
                emit(&format!("{}\n", report.to_json()));
            } else {
                emit(&report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("abmc: {e}");
            ExitCode::from(2)
        }
    }
}
