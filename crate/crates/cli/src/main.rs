//! `onecrit`: exit code 0 for success or true, 1 for false or no match, 2 for errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use onecrit_cli::verify::verify_paper;
use onecrit_core::bifurcation::affine_critical_values;
use onecrit_core::classify::{classify, classify_factors, emit_polynomial, invariant_tuple, CaseTag, NormalFormInstance};
use onecrit_core::graph::{canonical_form, graph_iso, parse_graph, reduce, resolve_factors, to_dot, to_text, ColoredGraph};
use onecrit_core::infinity::CurveGerm;
use onecrit_core::intersect::imult;
use onecrit_core::{
    parse_factors, parse_poly, BifurcationError, ClassifyError, GraphError, IntersectError, LocalError, ParseError, ResolveError,
};

/// Writes to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Bifurcation(#[from] BifurcationError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Intersect(#[from] IntersectError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Parser)]
#[command(name = "onecrit", version, about = "Invariants of plane polynomials with one critical value")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the polynomial of a family member.
    Gen {
        #[arg(long)]
        tag: CaseTag,
        /// Parameters as K=V: p q s n n' eps eps' as naturals, m and alpha as comma lists, ell and h as polynomials in x.
        #[arg(long, num_args = 0..)]
        params: Vec<String>,
    },
    /// Affine critical values of a polynomial.
    Baff { poly: String },
    /// Intersection multiplicity at the origin; `x` and `y` are the local coordinates.
    Imult { germ1: String, germ2: String },
    /// Resolution graphs in the coloredgraph v1 format.
    Graph {
        #[command(subcommand)]
        command: GraphCommand,
    },
    /// Classify a polynomial, or an explicit list of its irreducible factors.
    Classify {
        #[arg(required_unless_present = "factors", conflicts_with = "factors")]
        poly: Option<String>,
        #[arg(long, num_args = 1..)]
        factors: Vec<String>,
    },
    /// Print the invariant tuple of a family member.
    Invariants {
        #[arg(long)]
        tag: CaseTag,
        #[arg(long, num_args = 0..)]
        params: Vec<String>,
    },
    /// Run every acceptance criterion.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Resolve the pencil of a polynomial at infinity.
    Resolve {
        poly: String,
        /// Also write the graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Blow down every eligible vertex.
    Reduce { file: PathBuf },
    /// Decide whether two graph files are isomorphic.
    Iso {
        g1: PathBuf,
        g2: PathBuf,
        /// Compare canonical forms, i.e. decide equivalence under blow-ups and blow-downs.
        #[arg(long)]
        canonical: bool,
    },
}

fn read_graph(path: &Path) -> Result<ColoredGraph, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    Ok(parse_graph(&text)?)
}

fn instance(tag: CaseTag, params: &[String]) -> Result<NormalFormInstance, CliError> {
    Ok(NormalFormInstance::from_params(tag, params)?)
}

/// `Ok(true)` maps to exit code 0, `Ok(false)` to 1.
fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Gen { tag, params } => {
            outln!("{}", emit_polynomial(&instance(tag, &params)?)?);
            Ok(true)
        }
        Command::Baff { poly } => {
            outln!("{}", affine_critical_values(&parse_poly(&poly)?)?);
            Ok(true)
        }
        Command::Imult { germ1, germ2 } => {
            let f = CurveGerm::new(parse_poly(&germ1)?)?;
            let g = CurveGerm::new(parse_poly(&germ2)?)?;
            let r = imult(&f, &g)?;
            outln!("{} ({})", r.value, r.method);
            Ok(true)
        }
        Command::Graph { command } => match command {
            GraphCommand::Resolve { poly, dot } => {
                let r = resolve_factors(&parse_factors(&poly)?)?;
                out!("{}", to_text(&r.graph));
                if let Some(path) = dot {
                    fs::write(&path, to_dot(&r.graph)).map_err(|source| CliError::Io { path, source })?;
                }
                Ok(true)
            }
            GraphCommand::Reduce { file } => {
                let r = reduce(&read_graph(&file)?);
                out!("{}", to_text(&r.graph));
                if !r.blocked.is_empty() {
                    let ids: Vec<String> = r.blocked.iter().map(|v| v.to_string()).collect();
                    eprintln!("blocked (-1) vertices: {}", ids.join(" "));
                }
                Ok(true)
            }
            GraphCommand::Iso { g1, g2, canonical } => {
                let (mut a, mut b) = (read_graph(&g1)?, read_graph(&g2)?);
                if canonical {
                    a = canonical_form(&a);
                    b = canonical_form(&b);
                }
                match graph_iso(&a, &b)? {
                    Some(map) => {
                        outln!("isomorphic");
                        for (u, v) in map {
                            outln!("{u} -> {v}");
                        }
                        Ok(true)
                    }
                    None => {
                        outln!("not isomorphic");
                        Ok(false)
                    }
                }
            }
        },
        Command::Classify { poly, factors } => {
            let report = match poly {
                Some(p) => classify(&p)?,
                None => {
                    let parsed = factors.iter().map(|f| parse_poly(f)).collect::<Result<Vec<_>, _>>()?;
                    let echo: Vec<String> = factors.iter().map(|f| format!("({f})")).collect();
                    classify_factors(&echo.join("*"), &parsed)?
                }
            };
            outln!("{report}");
            Ok(report.matched().is_some())
        }
        Command::Invariants { tag, params } => {
            outln!("{}", invariant_tuple(&instance(tag, &params)?)?);
            Ok(true)
        }
        Command::VerifyPaper { json } => {
            let report = verify_paper();
            if json {
                outln!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for c in &report.criteria {
                    outln!("{c}");
                }
            }
            Ok(report.all_passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
