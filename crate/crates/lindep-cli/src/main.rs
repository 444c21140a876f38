//! Command-line front end: build dependence graphs, print exact
//! characteristic polynomials, dump brute-force invariants, and run the
//! verification suite.
//!
//! Exit codes: 0 success, 1 usage or validation failure, 2 capacity bound
//! exceeded, 3 theorem mismatch (`verify` only; known corollary
//! discrepancies only fail under `--strict`).

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use lindep::gf::FieldSpec;
use lindep::graph::{adjacency_matrix, build_graph, distance_matrix, laplacian_matrix, DepGraph};
use lindep::spectra::{self, MatrixKind};
use lindep::verifier::{render_report, run_suite, ReportFormat, SuiteOptions};
use lindep::{invariants, Error};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lindep",
    version,
    about = "Linear dependence graphs of F_q^n: exact spectra and invariant verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArgs {
    /// Field characteristic (a prime; GF(4) is requested as --p 2 --k 2)
    #[arg(long)]
    p: u64,

    /// Extension degree k; the field is GF(p^k)
    #[arg(long, default_value_t = 1)]
    k: u32,

    /// Dimension n of the vector space V = F_q^n
    #[arg(long)]
    n: u32,

    /// Override the modulus polynomial, ascending coefficients (e.g. 1,1,1
    /// for x^2+x+1); validated for monicity and irreducibility
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,

    /// Cap on q^n when materialising the graph
    #[arg(long, default_value_t = lindep::DEFAULT_GRAPH_BOUND)]
    graph_bound: u64,
}

impl FieldArgs {
    fn field(&self) -> lindep::Result<FieldSpec> {
        match &self.modulus {
            Some(m) => FieldSpec::with_modulus(self.p, self.k, m.clone()),
            None => FieldSpec::new(self.p, self.k),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildFormat {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    Adjacency,
    Laplacian,
    Distance,
}

impl From<MatrixArg> for MatrixKind {
    fn from(m: MatrixArg) -> MatrixKind {
        match m {
            MatrixArg::Adjacency => MatrixKind::Adjacency,
            MatrixArg::Laplacian => MatrixKind::Laplacian,
            MatrixArg::Distance => MatrixKind::Distance,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CharpolyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the dependence graph of F_q^n and export it
    Build {
        #[command(flatten)]
        field: FieldArgs,

        /// Export format: graph json, graph dot, or one matrix as csv
        #[arg(long, value_enum, default_value_t = BuildFormat::Json)]
        format: BuildFormat,

        /// Which matrix to export when --format csv
        #[arg(long, value_enum, default_value_t = MatrixArg::Adjacency)]
        matrix: MatrixArg,

        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Exact characteristic polynomial of one matrix, against its predicted
    /// factorisation
    Charpoly {
        #[command(flatten)]
        field: FieldArgs,

        #[arg(long, value_enum, default_value_t = MatrixArg::Adjacency)]
        matrix: MatrixArg,

        #[arg(long, value_enum, default_value_t = CharpolyFormat::Text)]
        format: CharpolyFormat,

        /// Cap on q^n for the exact charpoly computation
        #[arg(long, default_value_t = lindep::DEFAULT_SPECTRA_BOUND)]
        spectra_bound: u64,

        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Run the claim-by-claim verification suite and emit a report
    Verify {
        #[command(flatten)]
        field: FieldArgs,

        #[arg(long, value_enum, default_value_t = VerifyFormat::Json)]
        format: VerifyFormat,

        /// Cap on q^n for the exact charpoly work
        #[arg(long, default_value_t = lindep::DEFAULT_SPECTRA_BOUND)]
        spectra_bound: u64,

        /// Cap on q^n for the NP-hard search oracles
        #[arg(long, default_value_t = lindep::DEFAULT_ORACLE_BOUND)]
        oracle_bound: u64,

        /// Exit nonzero even for the known corollary discrepancies
        #[arg(long)]
        strict: bool,

        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Dump every brute-force oracle value for the dependence graph
    Invariants {
        #[command(flatten)]
        field: FieldArgs,

        /// Cap on q^n for the NP-hard search oracles
        #[arg(long, default_value_t = lindep::DEFAULT_ORACLE_BOUND)]
        oracle_bound: u64,

        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Capacity { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

/// Emit `content` to stdout or --out; the one-line `summary` goes wherever
/// the content is not.
fn emit(out: &Option<PathBuf>, content: &str, summary: &str) -> lindep::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content).map_err(|e| {
                Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
            })?;
            if !summary.is_empty() {
                println!("{summary}");
            }
        }
        None => {
            print!("{content}");
            if !summary.is_empty() {
                eprintln!("{summary}");
            }
        }
    }
    Ok(())
}

fn matrix_of(g: &DepGraph, which: MatrixKind) -> lindep::Result<lindep::graph::IntMatrix> {
    Ok(match which {
        MatrixKind::Adjacency => adjacency_matrix(g),
        MatrixKind::Laplacian => laplacian_matrix(g),
        MatrixKind::Distance => distance_matrix(g)?,
    })
}

fn run(cli: Cli) -> lindep::Result<ExitCode> {
    match cli.command {
        Command::Build {
            field,
            format,
            matrix,
            out,
        } => {
            let spec = field.field()?;
            let g = build_graph(&spec, field.n, field.graph_bound)?;
            let summary = format!("vertices: {}, edges: {}", g.order(), g.edges().len());
            let content = match format {
                BuildFormat::Json => g.to_json()?,
                BuildFormat::Dot => g.to_dot()?,
                BuildFormat::Csv => matrix_of(&g, matrix.into())?.to_csv(),
            };
            emit(&out, &content, &summary)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Charpoly {
            field,
            matrix,
            format,
            spectra_bound,
            out,
        } => {
            let spec = field.field()?;
            let g = build_graph(&spec, field.n, field.graph_bound)?;
            if g.order() as u64 > spectra_bound {
                return Err(Error::Capacity {
                    what: "q^n for the exact charpoly",
                    requested: g.order() as u128,
                    bound: spectra_bound as u128,
                });
            }
            let kind: MatrixKind = matrix.into();
            let m = matrix_of(&g, kind)?;
            let computed = spectra::charpoly_exact(&m);
            let meta = g.meta().expect("built graph has meta");
            let predicted = spectra::predicted_poly(meta.q, meta.n, kind);
            let equal = computed == predicted;
            let content = match format {
                CharpolyFormat::Text => {
                    let coeffs = |p: &lindep::poly::ExactPoly| {
                        p.coeffs()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    };
                    format!(
                        "matrix: {} (q = {}, n = {}, order {})\n\
                         computed:  {}\n\
                         predicted: {}\n\
                         computed coefficients (ascending):  [{}]\n\
                         predicted coefficients (ascending): [{}]\n\
                         equal={equal}\n",
                        kind.name(),
                        meta.q,
                        meta.n,
                        g.order(),
                        computed,
                        predicted,
                        coeffs(&computed),
                        coeffs(&predicted),
                    )
                }
                CharpolyFormat::Json => {
                    let value = serde_json::json!({
                        "matrix": kind.name(),
                        "computed": computed,
                        "predicted": predicted,
                        "equal": equal,
                    });
                    serde_json::to_string_pretty(&value).expect("serialises") + "\n"
                }
            };
            emit(&out, &content, "")?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify {
            field,
            format,
            spectra_bound,
            oracle_bound,
            strict,
            out,
        } => {
            let spec = field.field()?;
            let options = SuiteOptions {
                graph_bound: field.graph_bound,
                spectra_bound,
                oracle_bound,
            };
            let report = run_suite(&spec, field.n, &options)?;
            let rendered = match format {
                VerifyFormat::Json => render_report(&report, ReportFormat::Json),
                VerifyFormat::Markdown => render_report(&report, ReportFormat::Markdown),
            };
            let mismatches = report
                .claims
                .iter()
                .filter(|c| c.status == lindep::verifier::ClaimStatus::Evaluated && !c.matched)
                .count();
            let summary = format!(
                "claims: {}, mismatches: {mismatches} ({} unexpected)",
                report.claims.len(),
                if report.has_unexpected_mismatch() {
                    "some"
                } else {
                    "none"
                }
            );
            emit(&out, &rendered, &summary)?;
            if report.has_unexpected_mismatch() || (strict && report.has_any_mismatch()) {
                Ok(ExitCode::from(3))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }

        Command::Invariants {
            field,
            oracle_bound,
            out,
        } => {
            let spec = field.field()?;
            let g = build_graph(&spec, field.n, field.graph_bound)?;
            let results = invariants::run_all(&g, oracle_bound);
            let mut oracles = serde_json::Map::new();
            let mut witnesses = serde_json::Map::new();
            for r in &results {
                oracles.insert(
                    r.name.to_string(),
                    serde_json::to_value(&r.value).expect("serialises"),
                );
                if let Some(w) = &r.witness {
                    witnesses.insert(
                        r.name.to_string(),
                        serde_json::to_value(w).expect("serialises"),
                    );
                }
            }
            let value = serde_json::json!({
                "meta": g.meta().expect("built graph has meta"),
                "oracles": oracles,
                "witnesses": witnesses,
            });
            let content = serde_json::to_string_pretty(&value).expect("serialises") + "\n";
            emit(&out, &content, "")?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
