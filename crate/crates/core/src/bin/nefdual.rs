use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nefdual::cli::{self, Input, Outcome, EXIT_INPUT};

/// Exact lattice-polytope duality and nef-partition tool.
///
/// Exit status: 0 on success, 1 for a negative verdict, 2 for input errors.
/// `NEFDUAL_THREADS` sets the worker count for enumeration.
#[derive(Parser)]
#[command(name = "nefdual", version)]
struct Args {
    /// Write standard output to this file instead.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the polar dual.
    Polar { file: PathBuf },
    /// Decide reflexivity.
    CheckReflexive { file: PathBuf },
    /// Validate a nef-partition given as "0,1;2,3".
    NefValidate {
        file: PathBuf,
        #[arg(long)]
        parts: String,
        #[arg(long)]
        json: bool,
    },
    /// Build the dual nef-partition and run every duality check.
    NefDual {
        file: PathBuf,
        #[arg(long)]
        parts: String,
        #[arg(long)]
        json: bool,
    },
    /// List all nef-partitions of length r.
    NefEnumerate {
        file: PathBuf,
        #[arg(short)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Minkowski sum of two polytopes.
    Minkowski { a: PathBuf, b: PathBuf },
}

fn read(path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome {
        code: EXIT_INPUT,
        stdout: String::new(),
        stderr: format!("error: {}: {e}\n", path.display()),
    })
}

fn run(cmd: &Cmd) -> Result<Outcome, Outcome> {
    let name = |p: &PathBuf| p.display().to_string();
    Ok(match cmd {
        Cmd::Polar { file } => cli::polar(Input {
            name: &name(file),
            text: &read(file)?,
        }),
        Cmd::CheckReflexive { file } => cli::check_reflexive(Input {
            name: &name(file),
            text: &read(file)?,
        }),
        Cmd::NefValidate { file, parts, json } => cli::nef_validate(
            Input {
                name: &name(file),
                text: &read(file)?,
            },
            parts,
            *json,
        ),
        Cmd::NefDual { file, parts, json } => cli::nef_dual(
            Input {
                name: &name(file),
                text: &read(file)?,
            },
            parts,
            *json,
        ),
        Cmd::NefEnumerate { file, r, json } => cli::nef_enumerate(
            Input {
                name: &name(file),
                text: &read(file)?,
            },
            *r,
            *json,
        ),
        Cmd::Minkowski { a, b } => cli::minkowski(
            Input {
                name: &name(a),
                text: &read(a)?,
            },
            Input {
                name: &name(b),
                text: &read(b)?,
            },
        ),
    })
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    if let Some(n) = std::env::var("NEFDUAL_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let out = run(&args.cmd).unwrap_or_else(|e| e);
    eprint!("{}", out.stderr);
    match &args.output {
        Some(path) if !out.stdout.is_empty() => {
            if let Err(e) = std::fs::write(path, &out.stdout) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        _ => print!("{}", out.stdout),
    }
    ExitCode::from(out.code as u8)
}
