//! Command-line front end: graph ingestion, zeta reciprocals, pole tables
//! and plots, invariants, and the full verification suite.
//!
//! Exit codes: 0 success / all checks pass, 1 verification failure,
//! 2 input error, 3 hypothesis violation.

mod plot;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grover_zeta::error::Error;
use grover_zeta::graph::edgelist::{emit_edge_list, parse_edge_list};
use grover_zeta::graph::graph6::{emit_graph6, parse_graph6};
use grover_zeta::graph::named::generate;
use grover_zeta::graph::{classify, validate_for_modified_zeta, Graph};
use grover_zeta::spectra::{pole_geometry_with_tol, poles_with_tol, PoleSet, CIRCLE_TOL};
use grover_zeta::verify::{verify_graph, CheckStatus};
use grover_zeta::zeta::{
    derivative_identities, ihara_reciprocal_edge, modified_reciprocal, ZetaKind,
};

#[derive(Parser)]
#[command(
    name = "grover-zeta",
    version,
    about = "Exact zeta functions of finite graphs from quantum-walk supports"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Log the parsed graph and timing to stderr
    #[arg(long, short = 'v', global = true)]
    verbose: bool,
}

/// Where the graph comes from; exactly one source must be given.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list file, `-` for stdin
    #[arg(long, value_name = "FILE")]
    edges: Option<String>,
    /// graph6 string
    #[arg(long, value_name = "STRING")]
    graph6: Option<String>,
    /// Named graph: petersen, cube, k4, k33, complete:N, complete_bipartite:A,B, cycle:N
    #[arg(long, value_name = "NAME")]
    named: Option<String>,
}

impl Source {
    fn load(&self) -> Result<Graph, Error> {
        if let Some(path) = &self.edges {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidInput(format!("reading {path}: {e}")))?
            };
            parse_edge_list(&text)
        } else if let Some(g6) = &self.graph6 {
            parse_graph6(g6)
        } else {
            generate(self.named.as_deref().unwrap())
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Edges,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Structural summary: sizes, degrees, regularity, eligibility
    Info {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Reciprocal zeta polynomial with its cofactor/core factorization
    Zeta {
        #[command(flatten)]
        source: Source,
        /// Two-step zeta instead of the edge zeta
        #[arg(long)]
        modified: bool,
        #[arg(long)]
        json: bool,
    },
    /// Poles with exact multiplicities and geometric annotations
    Poles {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        modified: bool,
        /// Write CSV to a file, `-` for stdout
        #[arg(long, value_name = "FILE")]
        csv: Option<String>,
        /// Write an SVG scatter plot (requires a regular graph)
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Tolerance for circle/triviality annotations
        #[arg(long, value_name = "TOL", default_value_t = CIRCLE_TOL)]
        tolerance: f64,
    },
    /// Spanning-tree count, det(D+A) invariant, and derivative identities
    Invariants {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Run every identity check; exit 1 if any fails
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Print a named graph as an edge list or graph6 string
    Gen {
        name: String,
        #[arg(long, value_enum, default_value_t = GenFormat::Edges)]
        format: GenFormat,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::EdgeList { .. }
        | Error::Graph6(_)
        | Error::UnknownName(_)
        | Error::InvalidParameter { .. }
        | Error::InvalidInput(_)
        | Error::IsolatedVertex(_) => 2,
        Error::Hypothesis { .. } | Error::NotApplicable(..) | Error::EnumerationCap { .. } => 3,
        Error::NonIntegerCoefficient { .. }
        | Error::IdentityViolation { .. }
        | Error::InexactDivision(_)
        | Error::CheckFailed { .. } => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = std::time::Instant::now();
    let result = run(cli.command, cli.verbose);
    if cli.verbose {
        eprintln!("elapsed: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn load_graph(source: &Source, verbose: bool) -> Result<Graph, Error> {
    let g = source.load()?;
    if verbose {
        eprintln!("graph: n={} m={} degrees {}..{}", g.vertex_count(), g.edge_count(), g.min_degree(), g.max_degree());
    }
    Ok(g)
}

fn run(command: Command, verbose: bool) -> Result<u8, Error> {
    match command {
        Command::Info { source, json } => {
            let g = load_graph(&source, verbose)?;
            cmd_info(&g, json);
            Ok(0)
        }
        Command::Zeta { source, modified, json } => {
            let g = load_graph(&source, verbose)?;
            let z = if modified { modified_reciprocal(&g)? } else { ihara_reciprocal_edge(&g)? };
            if json {
                println!("{}", serde_json::to_string_pretty(&z).unwrap());
            } else {
                let kind = if modified { "modified" } else { "ihara" };
                println!("kind: {kind}");
                println!("degree: {}", z.polynomial.degree().unwrap_or(0));
                println!("polynomial: {}", z.polynomial);
                println!("coeffs: {}", coeff_list(&z.polynomial));
                println!("cofactor: {}", z.cofactor_string());
                println!("core_degree: {}", z.core.degree().unwrap_or(0));
                println!("core: {}", z.core);
            }
            Ok(0)
        }
        Command::Poles { source, modified, csv, svg, json, tolerance } => {
            let g = load_graph(&source, verbose)?;
            let kind = if modified { ZetaKind::Modified } else { ZetaKind::Ihara };
            let ps = if svg.is_some() {
                // the plot draws the reference circle, so this path needs the
                // regular-graph geometry
                pole_geometry_with_tol(&g, kind, tolerance)?.poles
            } else {
                let z = if modified { modified_reciprocal(&g)? } else { ihara_reciprocal_edge(&g)? };
                poles_with_tol(&g, &z, tolerance)
            };
            if let Some(path) = &svg {
                std::fs::write(path, plot::pole_plot_svg(&ps))
                    .map_err(|e| Error::InvalidInput(format!("writing {}: {e}", path.display())))?;
            }
            match (&csv, json, &svg) {
                (Some(target), _, _) => {
                    if target == "-" {
                        print!("{}", ps.csv());
                    } else {
                        std::fs::write(target, ps.csv())
                            .map_err(|e| Error::InvalidInput(format!("writing {target}: {e}")))?;
                    }
                }
                (None, true, _) => println!("{}", serde_json::to_string_pretty(&ps).unwrap()),
                (None, false, None) => print_pole_table(&ps),
                (None, false, Some(_)) => {}
            }
            Ok(0)
        }
        Command::Invariants { source, json } => {
            let g = load_graph(&source, verbose)?;
            let report = derivative_identities(&g)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                let mut parts = vec![format!("kappa={}", report.kappa)];
                if let Some(iota) = &report.iota {
                    parts.push(format!("iota={iota}"));
                }
                if let Some(bf) = &report.iota_bruteforce {
                    parts.push(format!("iota_bruteforce={bf}"));
                }
                for id in &report.identities {
                    parts.push(format!(
                        "{}={}",
                        id.name,
                        grover_zeta::exact::rational_string(&id.lhs)
                    ));
                }
                parts.push(format!("pass={}", report.pass));
                println!("{}", parts.join(" "));
            }
            Ok(u8::from(!report.pass))
        }
        Command::Verify { source, json } => {
            let g = load_graph(&source, verbose)?;
            let report = verify_graph(&g);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                for c in &report.checks {
                    let tag = match c.status {
                        CheckStatus::Pass => "PASS",
                        CheckStatus::Fail => "FAIL",
                        CheckStatus::NotApplicable => "SKIP",
                    };
                    let detail = match (&c.status, &c.detail) {
                        (CheckStatus::Pass, _) | (_, None) => String::new(),
                        (_, Some(d)) => format!(" [{d}]"),
                    };
                    println!("{tag} {} ({:.1} ms){detail}", c.name, c.elapsed_ms);
                }
                println!("overall: {}", if report.overall_pass { "PASS" } else { "FAIL" });
            }
            Ok(u8::from(!report.overall_pass))
        }
        Command::Gen { name, format } => {
            let g = generate(&name)?;
            match format {
                GenFormat::Edges => print!("{}", emit_edge_list(&g)),
                GenFormat::Graph6 => println!("{}", emit_graph6(&g)?),
            }
            Ok(0)
        }
    }
}

fn coeff_list(p: &grover_zeta::IntPolynomial) -> String {
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_info(g: &Graph, json: bool) {
    let c = classify(g);
    let violations = validate_for_modified_zeta(g);
    if json {
        let value = serde_json::json!({
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "min_degree": c.min_degree,
            "max_degree": c.max_degree,
            "regular_degree": c.regular_degree,
            "connected": c.connected,
            "bipartite": c.bipartite,
            "simple": c.simple,
            "modified_zeta_ok": violations.is_empty(),
            "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let k = c.regular_degree.map_or("-".to_string(), |k| k.to_string());
        let eligibility = if violations.is_empty() {
            "ok".to_string()
        } else {
            violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
        };
        println!(
            "n={} m={} delta={} Delta={} k={} connected={} bipartite={} simple={} modified_zeta={}",
            g.vertex_count(),
            g.edge_count(),
            c.min_degree,
            c.max_degree,
            k,
            yn(c.connected),
            yn(c.bipartite),
            yn(c.simple),
            eligibility
        );
    }
}

fn print_pole_table(ps: &PoleSet) {
    if let Some(circle) = ps.circle {
        println!("circle: center=({},0) radius={}", circle.center, circle.radius);
    }
    println!("{:>22} {:>22} {:>5} annotation", "re", "im", "mult");
    for p in &ps.poles {
        println!("{:>22} {:>22} {:>5} {}", p.re, p.im, p.multiplicity, p.annotation());
    }
}
