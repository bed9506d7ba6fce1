//! `eqlines`: construct, certify, realize, verify and search.
//!
//! Exit status: 0 on success, 1 when a certificate or line system fails verification, 2 for
//! usage errors and unmet preconditions.

mod graph_arg;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use equiangular::arith::parse_rational;
use equiangular::audit::parity_audit;
use equiangular::certificate::{Certificate, RadiusCert};
use equiangular::constructions::{shearer_graph_with_budget, theorem1_run, DEFAULT_STEP_BUDGET};
use equiangular::realize::LineSystem;
use equiangular::search::{enumerate_switching_classes, compute_r_over, render_table, RTableEntry};
use equiangular::{
    certify, graph6_encode, line_graph_complement_cert, n_from_r, realize_lines, union_cert,
    verify_lines, AlgebraicNumber, BigRational, Error, Graph,
};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "eqlines", version, about = "Equiangular lines from Seidel spectra, with exact certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certificate from one of the constructions.
    #[command(subcommand)]
    Construct(Construct),
    /// Certify rank(S(G) + beta I) for a given graph.
    Certify {
        #[arg(long, help = graph_arg::HELP)]
        graph: String,
        #[arg(long)]
        beta: AlgebraicNumber,
    },
    /// Turn a rank certificate into a line-count certificate.
    Convert {
        #[arg(long)]
        cert: PathBuf,
        /// Dimension to certify; defaults to the certified rank.
        #[arg(long)]
        target_d: Option<usize>,
    },
    /// Write explicit unit vectors for a rank certificate.
    Realize {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Re-verify a certificate (JSON) or line system (JSON, or CSV with --alpha).
    Verify {
        file: PathBuf,
        /// Cosine of a CSV line system.
        #[arg(long)]
        alpha: Option<AlgebraicNumber>,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Exact R_beta(n) by exhaustive search over switching classes (n <= 10).
    Search(SearchArgs),
    /// Exhaustive parity and forbidden-eigenvalue checks over all graphs up to a given order.
    ParityAudit {
        #[arg(long)]
        max_n: usize,
    },
    /// Print a graph in graph6.
    Graph {
        #[arg(help = graph_arg::HELP)]
        graph: String,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Graph with spectral radius in (lambda - eps, lambda].
    Shearer {
        #[arg(long)]
        lambda: AlgebraicNumber,
        #[arg(long, value_parser = rational)]
        eps: BigRational,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        budget: usize,
    },
    /// t disjoint copies of a connected graph at beta = 2 rho + 1.
    Union {
        #[arg(long, help = graph_arg::HELP)]
        graph: String,
        #[arg(long)]
        t: usize,
    },
    /// Complement of the line graph of a cubic graph on 4n'+2 vertices.
    Lgc {
        #[arg(long, help = graph_arg::HELP)]
        graph: String,
    },
    /// Line-count certificate at cosine close to tau.
    Theorem1 {
        #[arg(long)]
        tau: AlgebraicNumber,
        /// Tolerance exponent: the spectral radius is matched to within 2^-i.
        #[arg(long)]
        i: u32,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    beta: AlgebraicNumber,
    #[arg(long, conflicts_with_all = ["n_lo", "n_hi"])]
    n: Option<usize>,
    #[arg(long, requires = "n_hi")]
    n_lo: Option<usize>,
    #[arg(long, requires = "n_lo")]
    n_hi: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Append results as JSON lines.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip (beta, n) pairs already present in --out.
    #[arg(long, requires = "out")]
    resume: bool,
    /// Print an aligned table instead of one line per order.
    #[arg(long)]
    table: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn rational(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A certificate or line system that did not re-verify.
#[derive(Debug)]
struct VerificationFailed(String);

impl fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verification failed: {}", self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn show(a: &AlgebraicNumber) -> String {
    a.to_short_string()
}

/// Reads a file, or stdin for `-`.
fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)?;
        return Ok(buf);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_certificate(path: &Path) -> Result<Certificate> {
    let text = read_input(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("{} is not JSON", path.display()))?;
    Certificate::from_value(&value).map_err(|e| VerificationFailed(e.to_string()).into())
}

fn read_verified(path: &Path) -> Result<Certificate> {
    certificate_verified(read_certificate(path)?)
}

fn certificate_verified(c: Certificate) -> Result<Certificate> {
    c.verify().map_err(|e| VerificationFailed(e.to_string()))?;
    Ok(c)
}

fn emit(c: impl Into<Certificate>) {
    println!("{}", c.into().to_json());
}

fn construct(c: Construct) -> Result<()> {
    match c {
        Construct::Shearer { lambda, eps, budget } => {
            let g = shearer_graph_with_budget(&lambda, &eps, budget)?;
            emit(RadiusCert::new(g, lambda, eps));
        }
        Construct::Union { graph, t } => emit(union_cert(&graph_arg::parse(&graph)?, t)?),
        Construct::Lgc { graph } => {
            let cert = line_graph_complement_cert(&graph_arg::parse(&graph)?)?;
            if cert.multiplicity != 1 {
                eprintln!(
                    "note: eigenvalue {} has multiplicity {} (expected 1)",
                    show(&cert.beta.neg()),
                    cert.multiplicity
                );
            }
            emit(cert);
        }
        Construct::Theorem1 { tau, i, t } => {
            let run = theorem1_run(&tau, i, t)?;
            eprintln!(
                "lambda = {}, component order {}, 1/tau - 1/alpha = {:.3e}",
                show(&run.lambda),
                run.component_order,
                run.beta_gap()
            );
            emit(run.cert);
        }
    }
    Ok(())
}

fn verify(file: &Path, alpha: Option<AlgebraicNumber>, tolerance: f64) -> Result<()> {
    let text = read_input(file)?;
    let mut cert = None;
    let ls = if file.extension().is_some_and(|e| e == "csv") {
        let Some(alpha) = alpha else {
            bail!("verifying a CSV line system needs --alpha");
        };
        Some(parse_csv(&text, alpha, tolerance)?)
    } else {
        let value: serde_json::Value =
            serde_json::from_str(&text).with_context(|| format!("{} is not JSON", file.display()))?;
        if value.get("kind").and_then(|k| k.as_str()) == Some("line_system") {
            Some(match LineSystem::from_json(&text) {
                Ok(ls) => ls,
                Err(e @ Error::FactorizationResidual { .. }) => {
                    return Err(VerificationFailed(e.to_string()).into())
                }
                Err(e) => return Err(e.into()),
            })
        } else {
            cert = Some(Certificate::from_value(&value).map_err(|e| VerificationFailed(e.to_string()))?);
            None
        }
    };
    if let Some(ls) = ls {
        let r = verify_lines(&ls);
        if !r.passed {
            return Err(VerificationFailed(format!(
                "line system: max norm deviation {:.3e}, max cosine deviation {:.3e}, tolerance {:.1e}",
                r.max_norm_deviation, r.max_cosine_deviation, ls.tolerance
            ))
            .into());
        }
        println!("PASS: {} lines in R^{} at cosine {}", ls.len(), ls.dim, show(&ls.alpha));
        return Ok(());
    }
    let cert = certificate_verified(cert.expect("JSON that is not a line system"))?;
    match &cert {
        Certificate::RBound(c) => println!("PASS: R_{}({}) <= {}", show(&c.beta), c.n, c.d),
        Certificate::NBound(c) => println!("PASS: N_{}({}) >= {}", show(&c.alpha), c.d, c.n),
        Certificate::Radius(c) => println!(
            "PASS: spectral radius {} in ({} - {}, {}]",
            show(&c.rho),
            show(&c.lambda),
            c.epsilon,
            show(&c.lambda)
        ),
    }
    Ok(())
}

fn parse_csv(text: &str, alpha: AlgebraicNumber, tolerance: f64) -> Result<LineSystem> {
    match LineSystem::from_csv(text, alpha, tolerance) {
        Ok(ls) => Ok(ls),
        Err(e @ Error::FactorizationResidual { .. }) => Err(VerificationFailed(e.to_string()).into()),
        Err(e) => Err(e.into()),
    }
}

fn realize(cert: &Path, out: Option<PathBuf>, format: Format) -> Result<()> {
    let Certificate::RBound(c) = read_verified(cert)? else {
        bail!("realize needs an r_bound certificate");
    };
    let ls = realize_lines(&c)?;
    let r = verify_lines(&ls);
    let body = match format {
        Format::Csv => ls.to_csv(),
        Format::Json => ls.to_json() + "\n",
    };
    match out {
        Some(path) => fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{body}"),
    }
    eprintln!(
        "verify-lines: {} ({} lines in R^{}, max norm deviation {:.1e}, max cosine deviation {:.1e})",
        if r.passed { "pass" } else { "FAIL" },
        ls.len(),
        ls.dim,
        r.max_norm_deviation,
        r.max_cosine_deviation
    );
    Ok(())
}

fn search(args: SearchArgs) -> Result<()> {
    let orders = match (args.n, args.n_lo, args.n_hi) {
        (Some(n), _, _) => n..=n,
        (None, Some(lo), Some(hi)) if lo <= hi => lo..=hi,
        _ => bail!("give --n, or --n-lo <= --n-hi"),
    };
    let mut done: Vec<RTableEntry> = Vec::new();
    if args.resume {
        let path = args.out.as_ref().expect("clap requires --out");
        if path.exists() {
            for line in fs::read_to_string(path)?.lines().filter(|l| !l.trim().is_empty()) {
                let e = RTableEntry::from_json_line(line)
                    .with_context(|| format!("resuming from {}", path.display()))?;
                if e.beta == args.beta {
                    done.push(e);
                }
            }
        }
    }
    let mut sink = match &args.out {
        Some(p) => Some(fs::OpenOptions::new().create(true).append(true).open(p)?),
        None => None,
    };
    let mut entries = Vec::new();
    for n in orders {
        let entry = match done.iter().find(|e| e.n == n) {
            Some(e) => e.clone(),
            None => {
                let classes = enumerate_switching_classes(n)?;
                let e = compute_r_over(&args.beta, n, &classes, args.workers)?;
                if let Some(f) = sink.as_mut() {
                    writeln!(f, "{}", e.to_json_line())?;
                }
                e
            }
        };
        if !args.table {
            println!(
                "R_{}({}) = {}  witness {}  ({} switching classes)",
                show(&entry.beta),
                entry.n,
                entry.value,
                entry.witness.as_ref().map_or("-".into(), graph6_encode),
                entry.classes_scanned
            );
        }
        entries.push(entry);
    }
    if args.table {
        print!("{}", render_table(&entries));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Construct(c) => construct(c)?,
        Command::Certify { graph, beta } => emit(certify(&graph_arg::parse(&graph)?, &beta)?),
        Command::Convert { cert, target_d } => {
            let Certificate::RBound(c) = read_verified(&cert)? else {
                bail!("convert needs an r_bound certificate");
            };
            emit(n_from_r(&c, target_d.unwrap_or(c.d))?);
        }
        Command::Realize { cert, out, format } => realize(&cert, out, format)?,
        Command::Verify { file, alpha, tolerance } => verify(&file, alpha, tolerance)?,
        Command::Search(args) => search(args)?,
        Command::ParityAudit { max_n } => {
            let audit = parity_audit(max_n)?;
            print!("{}", audit.render());
            if !audit.passed() {
                return Err(VerificationFailed("parity audit found failing classes".into()).into());
            }
        }
        Command::Graph { graph } => {
            let g: Graph = graph_arg::parse(&graph)?;
            println!("{}", graph6_encode(&g));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<VerificationFailed>().is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
