//! Command-line front end. Exit codes: 0 on success and on verification
//! reports with no violations, 1 on a violated claim, 2 on usage or
//! input errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::json;

use crate::antiregular::{
    antiregular, antiregular_complement, antiregular_poly_closed, verify_antiregular_claims,
    AntiregularSpec,
};
use crate::engine;
use crate::graph::Graph;
use crate::poly::Polynomial;
use crate::roots::{self, RootReport};
use crate::threshold::{
    build_threshold, enumerate_threshold, pattern_survey, recognize_threshold, BuildingString,
    PatternSpec,
};
use crate::Error;

#[derive(Parser)]
#[command(
    name = "indpoly",
    about = "Exact independence polynomials of threshold and antiregular graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable text.
    Text,
    /// Line-delimited JSON records.
    Records,
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list file: first line "n m", then m lines "u v" (0-based).
    #[arg(long, conflicts_with = "string")]
    edges: Option<String>,
    /// Binary building string of a threshold graph, e.g. "00011".
    #[arg(long)]
    string: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Error> {
        match (&self.edges, &self.string) {
            (Some(path), None) => Graph::read_edge_list(path),
            (None, Some(s)) => build_threshold(&BuildingString::parse(s)?),
            _ => Err(Error::MalformedEdgeList(
                "exactly one of --edges or --string is required".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the independence polynomial of a graph.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the antiregular graph A_n: polynomial, Fibonacci and
    /// alternating numbers, optionally its real roots.
    Antiregular {
        /// Order n (1..=64; closed forms only above 24 vertices).
        n: usize,
        /// Use the disconnected antiregular graph (the complement).
        #[arg(long)]
        complement: bool,
        /// Also isolate the real roots.
        #[arg(long)]
        roots: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-check the antiregular and uniqueness claims; exit 1 on any failure.
    Verify {
        #[arg(long, value_enum, default_value_t = Claims::All)]
        claims: Claims,
        /// Largest order swept (uniqueness is capped at 10 internally).
        #[arg(long, default_value_t = 16)]
        nmax: usize,
    },
    /// Enumerate every threshold graph of order n, one record each.
    Census {
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand a building-string pattern over a range of orders and
    /// classify each independence polynomial.
    Survey {
        /// Fixed bit prefix (may be empty).
        #[arg(long, default_value = "")]
        prefix: String,
        /// Repeated bit period, truncated to hit each order exactly.
        #[arg(long)]
        period: String,
        /// Inclusive order range, e.g. 4..12.
        #[arg(long, value_parser = parse_range)]
        orders: std::ops::RangeInclusive<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count and isolate the real roots of a graph's independence polynomial.
    Roots {
        #[command(flatten)]
        input: GraphInput,
        /// Use I(A_n;x) instead of a graph input.
        #[arg(long, conflicts_with_all = ["edges", "string"])]
        antiregular: Option<usize>,
    },
    /// Compute the matching polynomial (independence polynomial of the
    /// line graph).
    Matching {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Claims {
    All,
    Antiregular,
    Uniqueness,
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: usize = b.trim_start_matches('=').trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    Ok(a..=b)
}

fn approx(r: &num_rational::BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn print_root_report(rr: &RootReport) {
    println!("distinct real roots: {}", rr.count);
    for (lo, hi) in &rr.intervals {
        if lo == hi {
            println!("  root = {lo}  # = {:.6}", approx(lo));
        } else {
            println!("  root in ({lo}, {hi}]  # ({:.6}, {:.6}]", approx(lo), approx(hi));
        }
    }
}

fn poly_record(g: &Graph, p: &Polynomial) -> serde_json::Value {
    json!({
        "n": g.vertex_count(),
        "m": g.edge_count(),
        "coeffs": p.coeff_strings(),
        "alpha": p.degree(),
        "polynomial": p.to_string(),
    })
}

fn run_inner(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Compute { input, format } => {
            let g = input.load()?;
            let p = engine::independence_poly(&g)?;
            match format {
                Format::Text => println!("{p}"),
                Format::Records => println!("{}", poly_record(&g, &p)),
            }
            Ok(0)
        }
        Command::Antiregular { n, complement, roots: want_roots, format } => {
            let (g, spec) = if complement {
                (antiregular_complement(n)?, AntiregularSpec::complement(n)?)
            } else {
                (antiregular(n)?, AntiregularSpec::connected(n)?)
            };
            let p = antiregular_poly_closed(&spec);
            let fib = p.evaluate_int(1);
            let alt = p.evaluate_int(-1);
            match format {
                Format::Text => {
                    let name = if complement { format!("comp(A_{n})") } else { format!("A_{n}") };
                    println!("{name}: I = {p}");
                    println!("degree sequence: {}", g.degree_sequence());
                    println!("Fibonacci number I(;1) = {fib}");
                    println!("alternating number I(;-1) = {alt}");
                    if want_roots {
                        print_root_report(&roots::real_roots(&p)?);
                    }
                }
                Format::Records => {
                    let mut rec = poly_record(&g, &p);
                    rec["fibonacci"] = json!(fib.to_string());
                    rec["alternating"] = json!(alt.to_string());
                    if want_roots {
                        let rr = roots::real_roots(&p)?;
                        rec["real_root_count"] = json!(rr.count);
                        rec["intervals"] = json!(rr
                            .intervals
                            .iter()
                            .map(|(lo, hi)| vec![lo.to_string(), hi.to_string()])
                            .collect::<Vec<_>>());
                    }
                    println!("{rec}");
                }
            }
            Ok(0)
        }
        Command::Verify { claims, nmax } => {
            let mut report = crate::Report::new();
            if matches!(claims, Claims::All | Claims::Antiregular) {
                report.merge(verify_antiregular_claims(nmax.min(30))?);
            }
            if matches!(claims, Claims::All | Claims::Uniqueness) {
                for n in 1..=nmax.min(10) {
                    report.merge(crate::threshold::verify_uniqueness(n)?);
                }
            }
            print!("{report}");
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Census { n, format } => {
            for record in enumerate_threshold(n)? {
                match format {
                    Format::Text => println!(
                        "{}  deg {}  I = {}",
                        record.string, record.degrees, record.poly
                    ),
                    Format::Records => println!(
                        "{}",
                        json!({
                            "string": record.string.to_string(),
                            "degrees": record.degrees,
                            "coeffs": record.poly.coeff_strings(),
                        })
                    ),
                }
            }
            Ok(0)
        }
        Command::Survey { prefix, period, orders, format } => {
            let spec = PatternSpec::parse(&prefix, &period, orders)?;
            for record in pattern_survey(&spec)? {
                match format {
                    Format::Text => {
                        let mut flags = String::new();
                        write!(
                            flags,
                            "unimodal={} log-concave={} real-roots={}{}",
                            record.unimodal,
                            record.log_concave,
                            record.real_root_count,
                            if record.all_roots_real { " (all real)" } else { "" }
                        )
                        .unwrap();
                        println!("n={:<3} {}  I = {}  [{}]", record.order, record.string, record.poly, flags);
                    }
                    Format::Records => println!("{}", serde_json::to_string(&record).unwrap()),
                }
            }
            Ok(0)
        }
        Command::Roots { input, antiregular: order } => {
            let p = if let Some(n) = order {
                antiregular_poly_closed(&AntiregularSpec::connected(n)?)
            } else {
                engine::independence_poly(&input.load()?)?
            };
            println!("I = {p}");
            print_root_report(&roots::real_roots(&p)?);
            Ok(0)
        }
        Command::Matching { input } => {
            let g = input.load()?;
            let p = engine::matching_poly(&g)?;
            println!("{p}");
            if let Some(s) = recognize_threshold(&g) {
                // harmless extra context when the input happens to be threshold
                eprintln!("note: input is a threshold graph with building string {s}");
            }
            Ok(0)
        }
    }
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout with exit 0
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run_inner(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
