use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::Value;

use syk::api::{self, PbwCheck};
use syk::gauss::Composition;
use syk::morphisms::MapKind;
use syk::pbw::Family;
use syk::verify::Suite;
use syk::Error;

/// Exact computations in the super Yangian Y(gl(M|N)).
#[derive(Parser)]
#[command(name = "syk", version)]
struct Cli {
    /// Worker threads; SYK_WORKERS takes precedence
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Write the JSON result here instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normal form of an element given as JSON (file, `-` or --expr)
    Nf {
        #[arg(long, value_parser = api::parse_signature)]
        mn: syk::algebra::Signature,
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "input")]
        expr: Option<String>,
    },
    /// Gauss blocks D, D', E, F of T(u)
    Gauss {
        #[arg(long)]
        mu: Composition,
        #[arg(short = 'K', long = "order")]
        k: usize,
    },
    /// Apply rho, omega, phi, psi or zeta to an element or series
    Map {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long, value_parser = api::parse_signature)]
        mn: syk::algebra::Signature,
        #[arg(short = 'K', long = "order")]
        k: usize,
        /// `t12`, `t12^(2)`, or element/series JSON
        #[arg(long)]
        expr: String,
    },
    /// Run a relation suite; exit 1 on any failure
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        mu: Composition,
        #[arg(short = 'K', long = "order", default_value_t = 3)]
        k: usize,
        /// Write the report here
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include wall-clock time in the report (output is then not reproducible)
        #[arg(long)]
        timing: bool,
    },
    /// PBW window: monomial count, rank, spanning
    Pbw {
        #[arg(long)]
        mu: Composition,
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        len: usize,
        #[arg(short = 'K', long = "order")]
        k: usize,
        #[arg(long, default_value = "full")]
        family: Family,
        #[arg(long, default_value = "both")]
        check: PbwCheck,
    },
    /// Regenerate the golden JSON corpus
    Fixtures {
        #[arg(long, default_value = "tests/golden")]
        out: PathBuf,
    },
}

enum Failure {
    Lib(Error),
    Io(String, io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn write_to(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(path.display().to_string(), e))
}

fn emit(out: Option<&Path>, v: &Value) -> Result<(), Failure> {
    let text = pretty(v);
    match out {
        Some(p) => write_to(p, &text),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Io("stdout".into(), e)),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    let mut s = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            return fs::read_to_string(p).map_err(|e| Failure::Io(p.display().to_string(), e));
        }
        _ => io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io("stdin".into(), e))?,
    };
    Ok(s)
}

/// Exit status on success: 0, or 1 when a check failed.
fn run(cli: Cli) -> Result<u8, Failure> {
    let out = cli.output.as_deref();
    match cli.cmd {
        Cmd::Nf { mn, input, expr } => {
            let text = match expr {
                Some(e) => e,
                None => read_input(input.as_deref())?,
            };
            emit(out, &api::normal_form(mn, &text)?)?;
        }
        Cmd::Gauss { mu, k } => emit(out, &api::gauss(&mu, k)?)?,
        Cmd::Map { name, shift, mn, k, expr } => {
            let kind = MapKind::parse(&name, shift)?;
            emit(out, &api::map(kind, mn, k, &expr)?)?;
        }
        Cmd::Verify { suite, mu, k, json, timing } => {
            let start = Instant::now();
            let (mut v, ok) = api::verify(suite, &mu, k)?;
            let secs = start.elapsed().as_secs_f64();
            if timing {
                v["elapsed_ms"] = Value::from(start.elapsed().as_millis() as u64);
            }
            eprintln!(
                "{suite} on {mu} at K={k}: {} checks, {} failed, {secs:.2}s",
                v["total"], v["failed"]
            );
            emit(json.as_deref().or(out), &v)?;
            return Ok(if ok { 0 } else { 1 });
        }
        Cmd::Pbw { mu, deg, len, k, family, check } => {
            let s = api::pbw(&mu, deg, len, k, family, check)?;
            emit(out, &serde_json::to_value(&s).expect("json"))?;
            return Ok(if s.ok() { 0 } else { 1 });
        }
        Cmd::Fixtures { out: dir } => {
            fs::create_dir_all(&dir).map_err(|e| Failure::Io(dir.display().to_string(), e))?;
            for (name, v) in api::fixtures()? {
                write_to(&dir.join(format!("{name}.json")), &pretty(&v))?;
            }
        }
    }
    Ok(0)
}

fn workers(flag: Option<usize>) -> Option<usize> {
    std::env::var("SYK_WORKERS").ok().and_then(|s| s.trim().parse().ok()).or(flag)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = workers(cli.workers) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} workers: {e}");
            return ExitCode::from(3);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(api::exit_code(&e) as u8)
        }
        Err(Failure::Io(what, e)) => {
            eprintln!("error: {what}: {e}");
            ExitCode::from(if e.kind() == io::ErrorKind::NotFound { 2 } else { 3 })
        }
    }
}
