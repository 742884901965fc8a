//! The `polydiff` command line.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::basis::BasisKind;
use crate::dynamic::{self, AnyMatrix, BasisRequest};
use crate::error::{Error, Result};
use crate::experiment::{self, Experiment, NodeFamily, FIBONACCI_NS};
use crate::field::{FieldTag, Scalar};
use crate::verify::{self, VerifyOptions};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "polydiff", version, about = "Differentiation matrices for polynomial bases")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a differentiation matrix (or its antiderivative companion).
    Matrix(MatrixArgs),
    /// Print barycentric weights as rows `i,j,beta`.
    Weights(WeightsArgs),
    /// Run the invariant suite; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// Run a conditioning experiment and write CSV.
    Experiment(ExperimentArgs),
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    #[arg(long, value_parser = parse_kind)]
    pub basis: BasisKind,
    #[arg(long)]
    pub degree: Option<usize>,
    /// Comma-separated list, or @path to a file of nodes.
    #[arg(long, allow_hyphen_values = true)]
    pub nodes: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub confluency: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// Defaults to the smallest field holding the inputs.
    #[arg(long, value_parser = parse_field)]
    pub field: Option<FieldTag>,
    #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
    pub format: String,
    /// Emit the antiderivative (closed form where known, else V J^T V^-1).
    #[arg(long)]
    pub pinv: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct WeightsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub nodes: String,
    #[arg(long, allow_hyphen_values = true)]
    pub confluency: Option<String>,
    #[arg(long, value_parser = parse_field)]
    pub field: Option<FieldTag>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_kind)]
    pub basis: Option<BasisKind>,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, hide = true)]
    pub corrupt: bool,
}

#[derive(Args, Debug)]
pub struct ExperimentArgs {
    #[arg(long, value_parser = parse_experiment)]
    pub which: Experiment,
    #[arg(long, default_value = "chebyshev", value_parser = parse_family)]
    pub nodes: NodeFamily,
    #[arg(long, default_value_t = 3)]
    pub confluency: usize,
    /// Comma-separated node counts; defaults to 3,5,8,13,21,34,55.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_kind(s: &str) -> std::result::Result<BasisKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_field(s: &str) -> std::result::Result<FieldTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_experiment(s: &str) -> std::result::Result<Experiment, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<NodeFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Items of a comma list, or of `@path` split on commas and whitespace.
pub fn read_list(text: &str) -> Result<Vec<String>> {
    let body = match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?,
        None => text.to_string(),
    };
    Ok(body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect())
}

pub fn parse_scalars(text: &str) -> Result<Vec<Scalar>> {
    read_list(text)?
        .iter()
        .map(|t| Scalar::parse(t, Scalar::natural_field(t)))
        .collect()
}

pub fn parse_counts(text: &str) -> Result<Vec<usize>> {
    read_list(text)?
        .iter()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("expected a non-negative integer, got '{t}'")))
        })
        .collect()
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    let io_err = |e: io::Error| Error::InvalidArgument(format!("cannot write output: {e}"));
    match out {
        Some(path) => fs::write(path, text).map_err(io_err),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(io_err),
    }
}

#[derive(Serialize)]
struct JsonMatrix<'a> {
    basis: &'a str,
    dimension: usize,
    field: &'a str,
    entries: Vec<Vec<String>>,
}

pub fn matrix_csv(m: &AnyMatrix) -> String {
    let mut s = String::new();
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

pub fn matrix_json(kind: BasisKind, m: &AnyMatrix) -> String {
    let doc = JsonMatrix {
        basis: kind.name(),
        dimension: m.rows(),
        field: m.tag().name(),
        entries: m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(Scalar::to_string).collect())
            .collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn cmd_matrix(args: &MatrixArgs) -> Result<String> {
    let mut req = BasisRequest::new(args.basis);
    req.degree = args.degree;
    let opt_list = |v: &Option<String>| v.as_deref().map(parse_scalars).transpose().map(Option::unwrap_or_default);
    req.nodes = opt_list(&args.nodes)?;
    req.alpha = opt_list(&args.alpha)?;
    req.beta = opt_list(&args.beta)?;
    req.gamma = opt_list(&args.gamma)?;
    req.confluency = args.confluency.as_deref().map(parse_counts).transpose()?.unwrap_or_default();
    let field = args.field.unwrap_or_else(|| req.natural_field());
    let m = req.build(field, args.pinv)?;
    Ok(if args.format == "json" {
        matrix_json(args.basis, &m)
    } else {
        matrix_csv(&m)
    })
}

pub fn cmd_weights(args: &WeightsArgs) -> Result<String> {
    let nodes = parse_scalars(&args.nodes)?;
    if nodes.is_empty() {
        return Err(Error::EmptyNodes);
    }
    let conf = args.confluency.as_deref().map(parse_counts).transpose()?.unwrap_or_default();
    let field = args
        .field
        .unwrap_or_else(|| nodes.iter().map(Scalar::tag).fold(FieldTag::Rational, FieldTag::join));
    let mut s = String::new();
    for w in dynamic::weights(&nodes, &conf, field)? {
        s.push_str(&format!("{},{},{}\n", w.node, w.order, w.value));
    }
    Ok(s)
}

pub fn cmd_verify(args: &VerifyArgs) -> (String, bool) {
    let results = verify::run(VerifyOptions {
        basis: args.basis,
        seed: args.seed,
        corrupt: args.corrupt,
    });
    let mut s = String::new();
    for r in &results {
        s.push_str(&r.line());
        s.push('\n');
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    s.push_str(&format!("{} checks, {} failed\n", results.len(), failed));
    (s, failed == 0)
}

pub fn cmd_experiment(args: &ExperimentArgs) -> Result<String> {
    let ns = match &args.n {
        Some(list) => parse_counts(list)?,
        None => FIBONACCI_NS.to_vec(),
    };
    let records = experiment::run(args.which, args.nodes, args.confluency, &ns)?;
    let mut buf = Vec::new();
    experiment::write_csv(&mut buf, args.which, &records).expect("writing to memory");
    Ok(String::from_utf8(buf).expect("ascii output"))
}

/// Parses `argv`, runs the command, and returns the process exit code.
pub fn run<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let outcome = match &cli.command {
        Command::Matrix(a) => cmd_matrix(a).and_then(|s| emit(a.out.as_deref(), &s)),
        Command::Weights(a) => cmd_weights(a).and_then(|s| emit(a.out.as_deref(), &s)),
        Command::Experiment(a) => cmd_experiment(a).and_then(|s| emit(a.out.as_deref(), &s)),
        Command::Verify(a) => {
            let (report, ok) = cmd_verify(a);
            return match emit(None, &report) {
                Ok(()) if ok => ExitCode::from(EXIT_OK),
                Ok(()) => ExitCode::from(EXIT_VERIFY_FAILED),
                Err(e) => fail(&e),
            };
        }
    };
    match outcome {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(e) => fail(&e),
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("polydiff: {e}");
    ExitCode::from(EXIT_USAGE)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(args: &[&str]) -> Result<String> {
        let mut argv = vec!["polydiff", "matrix"];
        argv.extend_from_slice(args);
        match Cli::try_parse_from(argv).expect("valid flags").command {
            Command::Matrix(a) => cmd_matrix(&a),
            _ => unreachable!(),
        }
    }

    fn weights(args: &[&str]) -> Result<String> {
        let mut argv = vec!["polydiff", "weights"];
        argv.extend_from_slice(args);
        match Cli::try_parse_from(argv).expect("valid flags").command {
            Command::Weights(a) => cmd_weights(&a),
            _ => unreachable!(),
        }
    }

    #[test]
    fn bernstein_csv() {
        let out = matrix(&["--basis", "bernstein", "--degree", "4", "--format", "csv"]).unwrap();
        assert_eq!(
            out,
            "-4,4,0,0,0\n-1,-2,3,0,0\n0,-2,0,2,0\n0,0,-3,2,1\n0,0,0,-4,4\n"
        );
    }

    #[test]
    fn monomial_degree_zero() {
        assert_eq!(matrix(&["--basis", "monomial", "--degree", "0"]).unwrap(), "0\n");
    }

    #[test]
    fn hermite_json() {
        let out = matrix(&[
            "--basis", "hermite", "--nodes", "-1,0,1", "--confluency", "3,4,2", "--format", "json",
        ])
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["basis"], "hermite");
        assert_eq!(v["dimension"], 9);
        assert_eq!(v["field"], "rational");
        assert_eq!(v["entries"][2][0], "-201/2");
        assert_eq!(v["entries"][8][7], "-35");
    }

    #[test]
    fn complex_nodes_select_complex_field() {
        let out = matrix(&["--basis", "lagrange", "--nodes", "1,i,-1,-i", "--format", "json"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["field"], "complex");
        assert_eq!(v["entries"][0][0], "1.5+0i");
    }

    #[test]
    fn inconsistent_flags() {
        assert!(matrix(&["--basis", "monomial", "--degree", "2", "--nodes", "0,1"]).is_err());
        assert!(matrix(&["--basis", "lagrange", "--degree", "2", "--nodes", "0,1"]).is_err());
        assert!(matrix(&["--basis", "lagrange", "--nodes", "0,1", "--field", "rational", "--pinv"]).is_ok());
        assert!(matrix(&["--basis", "lagrange", "--nodes", "i,1", "--field", "real"]).is_err());
    }

    #[test]
    fn pinv_monomial() {
        let out = matrix(&["--basis", "monomial", "--degree", "2", "--pinv"]).unwrap();
        assert_eq!(out, "0,0,0\n1,0,0\n0,1/2,0\n");
    }

    #[test]
    fn weight_rows() {
        assert_eq!(
            weights(&["--nodes", "-1,-0.5,0.5,1"]).unwrap(),
            "0,0,-2/3\n1,0,4/3\n2,0,-4/3\n3,0,2/3\n"
        );
        assert_eq!(
            weights(&["--nodes", "0,1", "--confluency", "2,1"]).unwrap(),
            "0,0,-1\n0,1,-1\n1,0,1\n"
        );
        assert_eq!(weights(&["--nodes", "0", "--confluency", "1"]).unwrap(), "0,0,1\n");
        assert!(weights(&["--nodes", "1,1"]).is_err());
    }

    #[test]
    fn node_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nodes.txt");
        fs::write(&path, "-1\n-1/2\n1/2 1\n").unwrap();
        let arg = format!("@{}", path.display());
        let out = matrix(&["--basis", "lagrange", "--nodes", &arg]).unwrap();
        assert_eq!(out.lines().next().unwrap(), "-19/6,4,-4/3,1/2");
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_counts("3, 4,2").unwrap(), vec![3, 4, 2]);
        assert!(parse_counts("3,x").is_err());
        assert_eq!(parse_scalars("1/2,0.25,i").unwrap()[2].tag(), FieldTag::Complex);
    }
}
