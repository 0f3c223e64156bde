//! Command-line front end and HTTP service over `kfactor-core`.

pub mod service;

use std::ffi::OsString;
use std::io::Write;
use std::net::SocketAddr;
use std::path::PathBuf;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use kfactor::api::{self, ApiError, CheckRequest, GenerateMode, GenerateRequest, KFactorRequest};
use kfactor::{to_dot, DegreeSequence, FamilyClaim, GraphJson, SimpleGraph};
use serde_json::Value;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Parser)]
#[command(name = "kfactor", version, about = "k-factorable degree sequences and k-factors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Connected,
    Disconnected,
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    General,
    TwoFactor,
    ThreeFactor,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graphicality, k-factorability and connected-factor inequalities of a sequence.
    Check {
        /// Comma- or space-separated degrees, e.g. 3,3,2,2,2,2.
        #[arg(long)]
        seq: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generate a k-factorable sequence.
    Generate {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        k: usize,
        /// Length (disconnected mode).
        #[arg(long)]
        n: Option<usize>,
        /// Fix the middle degree instead of drawing it (disconnected mode).
        #[arg(long)]
        x: Option<usize>,
        #[arg(long, value_enum, default_value_t = Claim::General)]
        claim: Claim,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_retries: Option<u32>,
    },
    /// Compute a k-factor by edge switching.
    Kfactor {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        k: usize,
        /// Also write realization.dot, d_minus_k.dot and factor.dot here.
        #[arg(long)]
        dot_dir: Option<PathBuf>,
    },
    /// Serve the JSON API over HTTP.
    Serve {
        #[arg(long, env = "KFACTOR_ADDR", default_value = "127.0.0.1:8080")]
        addr: SocketAddr,
        /// Allowed CORS origin; any origin when omitted.
        #[arg(long, env = "KFACTOR_CORS_ORIGIN")]
        cors_origin: Option<String>,
    },
}

pub fn parse_sequence(text: &str) -> Result<Vec<usize>, String> {
    let values: Result<Vec<usize>, _> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect();
    match values {
        Ok(v) if !v.is_empty() => Ok(v),
        Ok(_) => Err("empty sequence".into()),
        Err(e) => Err(format!("cannot parse sequence {text:?}: {e}")),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Regular output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Command::Serve { addr, cors_origin } = &cli.command {
        return match serve(*addr, cors_origin.clone()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e:#}");
                EXIT_INTERNAL
            }
        };
    }
    match execute(&cli) {
        Ok((code, text)) => match emit(&cli, &text, out) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e:#}");
                EXIT_INTERNAL
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(err, "{}", api::to_canonical_string(&e.envelope()).trim_end());
            e.exit_code()
        }
    }
}

fn emit(cli: &Cli, text: &str, out: &mut dyn Write) -> anyhow::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn usage(msg: impl Into<String>) -> ApiError {
    ApiError::Usage(msg.into())
}

/// Returns the exit code and the rendered output.
fn execute(cli: &Cli) -> Result<(i32, String), ApiError> {
    match &cli.command {
        Command::Check { seq, k } => {
            let seq = parse_sequence(seq).map_err(usage)?;
            let outcome = api::check(CheckRequest { seq, k: *k })?;
            let code = if outcome.graphic { EXIT_OK } else { EXIT_NEGATIVE };
            Ok((code, render(cli.format, &outcome.payload, None)?))
        }
        Command::Generate {
            mode,
            a,
            b,
            k,
            n,
            x,
            claim,
            seed,
            max_retries,
        } => {
            let req = GenerateRequest {
                mode: match mode {
                    Mode::Connected => GenerateMode::Connected,
                    Mode::Disconnected => GenerateMode::Disconnected,
                    Mode::Heuristic => GenerateMode::Heuristic,
                },
                a: *a,
                b: *b,
                k: *k,
                n: *n,
                x: *x,
                claim: match claim {
                    Claim::General => FamilyClaim::General,
                    Claim::TwoFactor => FamilyClaim::TwoFactor,
                    Claim::ThreeFactor => FamilyClaim::ThreeFactor,
                },
                seed: *seed,
                max_retries: *max_retries,
            };
            let payload = api::generate(req)?;
            Ok((EXIT_OK, render(cli.format, &payload, None)?))
        }
        Command::Kfactor { seq, k, dot_dir } => {
            let seq = parse_sequence(seq).map_err(usage)?;
            let payload = api::kfactor(KFactorRequest { seq, k: *k })?;
            if let Some(dir) = dot_dir {
                write_dot_files(dir, &payload)
                    .map_err(|e| usage(format!("writing DOT files: {e:#}")))?;
            }
            Ok((EXIT_OK, render(cli.format, &payload, Some("factor"))?))
        }
        Command::Serve { .. } => unreachable!("serve is dispatched in run"),
    }
}

fn serve(addr: SocketAddr, cors_origin: Option<String>) -> anyhow::Result<()> {
    let config = service::ServiceConfig { cors_origin };
    tokio::runtime::Runtime::new()
        .context("starting runtime")?
        .block_on(service::serve(addr, config))
        .with_context(|| format!("serving on {addr}"))
}

fn graph_at(payload: &Value, key: &str) -> Option<SimpleGraph> {
    let g: GraphJson = serde_json::from_value(payload.get(key)?.clone()).ok()?;
    SimpleGraph::try_from(g).ok()
}

fn write_dot_files(dir: &std::path::Path, payload: &Value) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (key, file) in [
        ("realization", "realization.dot"),
        ("d_minus_k_graph", "d_minus_k.dot"),
        ("factor", "factor.dot"),
    ] {
        let g = graph_at(payload, key).context("payload is missing a graph")?;
        std::fs::write(dir.join(file), to_dot(&g))?;
    }
    Ok(())
}

fn render(format: Format, payload: &Value, dot_key: Option<&str>) -> Result<String, ApiError> {
    match format {
        Format::Json => Ok(api::to_canonical_string(payload)),
        Format::Dot => {
            let key = dot_key.ok_or_else(|| usage("DOT output is only available for kfactor"))?;
            let g = graph_at(payload, key).ok_or_else(|| usage("no graph to render"))?;
            Ok(to_dot(&g))
        }
        Format::Text => Ok(render_text(payload)),
    }
}

fn render_text(payload: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = payload {
        for (key, value) in map {
            let shown = match value {
                Value::Array(items) if key == "sequence" => {
                    let d: Vec<usize> = items.iter().filter_map(|v| v.as_u64()).map(|v| v as usize).collect();
                    DegreeSequence::new(d).map(|s| s.to_string()).unwrap_or_default()
                }
                Value::Object(obj) if obj.contains_key("edges") => {
                    let edges = obj["edges"].as_array().map_or(0, Vec::len);
                    format!("graph with {} vertices, {edges} edges", obj["n"])
                }
                Value::Array(items) => format!("[{} items]", items.len()),
                other => other.to_string(),
            };
            out.push_str(&format!("{key}: {shown}\n"));
        }
    }
    out
}
