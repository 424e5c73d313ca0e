use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use eisenspec::census::{is_des, GraphSource};
use eisenspec::classify::{
    c5_signature_type, classify_lambda2_negative, classify_rank2, classify_rank3, kite_condition,
    semicomplete_bridge_classify,
};
use eisenspec::expansions::{clique_expand, twin_expand};
use eisenspec::named::{named, parse_vector};
use eisenspec::reproduce::{reproduce, Claim};
use eisenspec::spectra::{rank_exact, spectrum};
use eisenspec::switching::{normalize_tree, switching_isomorphic_with};
use eisenspec::{Error, IntPolynomial, SignedDigraph, UnderlyingGraph};

#[derive(Parser)]
#[command(name = "eisenspec", version, about = "Spectra and switching classes of signed digraphs")]
struct Cli {
    /// Render the payload as an aligned table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial and numeric eigenvalues.
    Charpoly { file: PathBuf },
    /// Exact inertia and rank.
    Inertia { file: PathBuf },
    /// Switching isomorphism test with a witness.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Do not allow taking the converse.
        #[arg(long)]
        no_converse: bool,
    },
    /// Tree normal form and the switch that produces it.
    Normalize {
        file: PathBuf,
        /// Spanning forest as `u-v` pairs, comma separated.
        #[arg(long)]
        tree: Option<String>,
    },
    /// Twin or clique expansion, printed as .sdg.
    Expand {
        #[arg(long, value_enum)]
        mode: ExpandMode,
        #[arg(long)]
        tau: String,
        file: PathBuf,
    },
    /// Decide membership in one of the characterized families.
    Classify {
        file: PathBuf,
        #[arg(long, value_enum)]
        theorem: Theorem,
    },
    /// Switching classes cospectral with the target.
    Census {
        #[arg(long)]
        target: PathBuf,
        /// graph6 file restricting the underlying graphs.
        #[arg(long)]
        graphs: Option<PathBuf>,
        /// Worker threads; overrides EISENSPEC_THREADS.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Build a named digraph, printed as .sdg.
    Named {
        constructor: String,
        params: Vec<String>,
    },
    /// Check a published claim.
    Reproduce { claim: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandMode {
    Twin,
    Clique,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Rank2,
    Rank3,
    Lambda2neg,
    C5type,
    Kite,
    Semicomplete,
}

enum Output {
    Json(Value),
    Text(String),
    /// JSON payload with a failing exit status.
    Failed(Value),
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Json(v)) => {
            emit(&json!({"status": "ok", "payload": v}), cli.pretty);
            ExitCode::SUCCESS
        }
        Ok(Output::Failed(v)) => {
            emit(&json!({"status": "fail", "payload": v}), cli.pretty);
            ExitCode::from(1)
        }
        Err(e) => {
            emit(&json!({"status": "error", "error": {"kind": e.kind, "message": e.message}}), cli.pretty);
            ExitCode::from(2)
        }
    }
}

struct CliError {
    kind: &'static str,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::Parse { .. } => "malformed_input",
            Error::SizeLimit { .. } | Error::Scope(_) => "scope_limit",
            Error::UnknownConstructor(_) => "unknown_constructor",
            Error::InvalidParameters { .. } | Error::LengthMismatch { .. } => "invalid_parameters",
            Error::WrongShape(_) | Error::Disconnected => "wrong_shape",
            _ => "error",
        };
        CliError { kind, message: e.to_string() }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError { kind: "io", message: format!("{}: {e}", path.display()) }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_sdg(path: &Path) -> CliResult<SignedDigraph> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Ok(SignedDigraph::parse_sdg(&text)?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload types serialize")
}

/// Coefficients highest degree first; numbers outside `i64` become strings.
fn poly_value(p: &IntPolynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| i64::try_from(c).map_or_else(|_| Value::String(c.to_string()), Value::from))
            .collect(),
    )
}

fn parse_tree(s: &str) -> CliResult<Vec<(usize, usize)>> {
    let bad = || CliError { kind: "invalid_parameters", message: format!("tree edges must look like `0-1,1-2`, got `{s}`") };
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (u, v) = t.trim().split_once(['-', ':']).ok_or_else(bad)?;
            Ok((u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn thread_count(flag: Option<usize>) -> CliResult<Option<usize>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("EISENSPEC_THREADS") {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError { kind: "invalid_parameters", message: format!("EISENSPEC_THREADS must be a count, got `{s}`") }),
        Err(_) => Ok(None),
    }
}

fn run(command: Command) -> CliResult<Output> {
    Ok(match command {
        Command::Charpoly { file } => {
            let s = spectrum(&read_sdg(&file)?)?;
            Output::Json(json!({
                "n": s.charpoly.degree(),
                "coefficients": poly_value(&s.charpoly),
                "eigenvalues": s.numeric_eigenvalues,
            }))
        }
        Command::Inertia { file } => {
            let phi = read_sdg(&file)?;
            let i = eisenspec::spectra::inertia(&phi)?;
            Output::Json(json!({
                "n_pos": i.n_pos,
                "n_zero": i.n_zero,
                "n_neg": i.n_neg,
                "rank": rank_exact(&phi)?,
            }))
        }
        Command::Iso { a, b, no_converse } => {
            let (a, b) = (read_sdg(&a)?, read_sdg(&b)?);
            match switching_isomorphic_with(&a, &b, !no_converse) {
                Some(w) => Output::Json(json!({"verdict": "isomorphic", "witness": to_value(&w)})),
                None => Output::Json(json!({"verdict": "distinct"})),
            }
        }
        Command::Normalize { file, tree } => {
            let phi = read_sdg(&file)?;
            let tree = tree.as_deref().map(parse_tree).transpose()?;
            let t = normalize_tree(&phi, tree.as_deref())?;
            Output::Json(json!({
                "tree": t.tree,
                "normal_form": t.base.to_sdg(),
                "switch": t.applied.x,
            }))
        }
        Command::Expand { mode, tau, file } => {
            let phi = read_sdg(&file)?;
            let tau = parse_vector(&tau)?;
            let g = match mode {
                ExpandMode::Twin => twin_expand(&phi, &tau)?,
                ExpandMode::Clique => clique_expand(&phi, &tau)?,
            };
            Output::Text(g.to_sdg())
        }
        Command::Classify { file, theorem } => {
            let phi = read_sdg(&file)?;
            let verdict = match theorem {
                Theorem::Rank2 => classify_rank2(&phi)?,
                Theorem::Rank3 => classify_rank3(&phi)?,
                Theorem::Lambda2neg => classify_lambda2_negative(&phi)?,
                Theorem::C5type => c5_signature_type(&phi)?,
                Theorem::Semicomplete => semicomplete_bridge_classify(&phi)?,
                Theorem::Kite => return Ok(Output::Json(json!({"kite_condition": kite_condition(&phi)?}))),
            };
            Output::Json(to_value(&verdict))
        }
        Command::Census { target, graphs, threads } => {
            let phi = read_sdg(&target)?;
            let source = match graphs {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| io_error(&path, e))?;
                    GraphSource::Graphs(UnderlyingGraph::parse_graph6_list(&text)?)
                }
                None => GraphSource::BuiltIn,
            };
            let report = match thread_count(threads)? {
                Some(k) => rayon::ThreadPoolBuilder::new()
                    .num_threads(k.max(1))
                    .build()
                    .map_err(|e| CliError { kind: "error", message: e.to_string() })?
                    .install(|| is_des(&phi, source))?,
                None => is_des(&phi, source)?,
            };
            Output::Json(to_value(&report))
        }
        Command::Named { constructor, params } => {
            let spec = if params.is_empty() { constructor } else { format!("{constructor}({})", params.join(",")) };
            Output::Text(named(&spec)?.to_sdg())
        }
        Command::Reproduce { claim } => {
            let claim: Claim = claim.parse()?;
            let report = reproduce(claim)?;
            if report.pass {
                Output::Json(to_value(&report))
            } else {
                Output::Failed(to_value(&report))
            }
        }
    })
}

fn emit(v: &Value, pretty: bool) {
    if !pretty {
        println!("{v}");
        return;
    }
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, val) in rows {
        println!("{k:width$}  {val}");
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&join(k), x, rows);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.replace('\n', "; "))),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_parsing() {
        assert_eq!(parse_tree("0-1, 1:2").ok().unwrap(), vec![(0, 1), (1, 2)]);
        assert!(parse_tree("0-").is_err());
    }

    #[test]
    fn flatten_nested() {
        let mut rows = Vec::new();
        flatten("", &json!({"a": {"b": 1}, "c": [{"d": "x\ny"}], "e": [1, 2]}), &mut rows);
        assert_eq!(
            rows,
            vec![
                ("a.b".into(), "1".into()),
                ("c.0.d".into(), "x; y".into()),
                ("e".into(), "[1,2]".into())
            ]
        );
    }
}
