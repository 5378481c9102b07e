//! Command-line front end. Every computation is exposed as a subcommand that
//! emits machine-readable reports (a JSON array by default, CSV rows with
//! `--csv`); coefficients are always decimal strings so arbitrary-precision
//! values survive any JSON parser. Output is byte-identical across runs for
//! identical arguments; wall-clock timings are only attached under `--timing`.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::coordinator::{f_closed, h_closed};
use crate::dn_series::{fdelta_series, SeriesBundle};
use crate::lattices::{growth_bfs, h_star_from_dilates, FamilyKind, LatticeFamily};
use crate::polyalg::{expand_growth, Poly};
use crate::staircase::{collect_faces, staircase_f_vector};
use crate::verify::{run_all, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "rootlat",
    about = "Exact growth series, coordinator polynomials, and root-polytope face counts for the lattices A_n, C_n, D_n",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit CSV rows (one per coefficient) instead of JSON.
    #[arg(long, global = true)]
    csv: bool,
    /// Attach wall-clock timings to the reports (off by default so output is
    /// byte-identical across runs).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form coordinator polynomial h of the growth series.
    H { family: String, n: usize },
    /// Closed-form f-polynomial of the boundary triangulation.
    F { family: String, n: usize },
    /// Growth function S(0..=kmax), by breadth-first search, series
    /// expansion, or both (cross-checked).
    Growth {
        family: String,
        n: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// h*-polynomial from dilate lattice-point counts, compared with h.
    Hstar { family: String, n: usize },
    /// Staircase-triangulation f-vector of the A-family boundary, with an
    /// optional dump of every face.
    Faces {
        family: String,
        n: usize,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// z-coefficients of a pipeline generating function.
    Series {
        #[arg(value_enum)]
        component: SeriesComponent,
        #[arg(long)]
        order: usize,
    },
    /// Run the full verification suite; exits 0 only if every check passes.
    Verify {
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Bfs,
    Series,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesComponent {
    /// Hypersimplex triangulation f-vectors F_Delta(z,x).
    Fdelta,
    /// Coordinator generating function H_D(z,x).
    Hd,
    /// Coordinator generating function H_C(z,x).
    Hc,
}

impl SeriesComponent {
    fn name(self) -> &'static str {
        match self {
            SeriesComponent::Fdelta => "fdelta",
            SeriesComponent::Hd => "hd",
            SeriesComponent::Hc => "hc",
        }
    }
}

#[derive(Serialize)]
pub struct Report {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    quantity: String,
    coefficients: Vec<String>,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

enum CliError {
    /// Bad arguments: exit code 2.
    Usage(String),
    /// A computation refused to run: exit code 1.
    Runtime(String),
}

fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn parse_family(family: &str, n: usize) -> Result<LatticeFamily, CliError> {
    let kind = FamilyKind::from_str(family).map_err(CliError::Usage)?;
    LatticeFamily::new(kind, n).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    run(&argv)
}

/// Parse and dispatch. Exit codes: 0 success, 1 failed verification or
/// refused computation, 2 usage error.
pub fn run(argv: &[String]) -> ExitCode {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let echo = argv.iter().skip(1).cloned().collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    let reports = match dispatch(&cli.command, &echo) {
        Ok(reports) => reports,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let mut reports = reports;
    if cli.timing {
        let elapsed = start.elapsed().as_millis();
        for r in &mut reports {
            r.timing_ms = Some(elapsed);
        }
    }
    let any_fail = reports.iter().any(|r| r.status == "fail");
    if cli.csv {
        print!("{}", to_csv(&reports));
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        );
    }
    if any_fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn report(
    echo: &str,
    family: Option<&LatticeFamily>,
    n: Option<usize>,
    quantity: &str,
    coefficients: Vec<String>,
    status: &str,
    message: Option<String>,
) -> Report {
    Report {
        command: echo.to_string(),
        family: family.map(|f| f.kind().to_string()),
        n,
        quantity: quantity.to_string(),
        coefficients,
        status: status.to_string(),
        message,
        timing_ms: None,
    }
}

fn dispatch(command: &Command, echo: &str) -> Result<Vec<Report>, CliError> {
    match command {
        Command::H { family, n } => {
            let fam = parse_family(family, *n)?;
            let h = h_closed(&fam).map_err(|e| CliError::Runtime(e.to_string()))?;
            Ok(vec![report(
                echo,
                Some(&fam),
                Some(*n),
                "h_closed",
                poly_strings(&h),
                "ok",
                None,
            )])
        }
        Command::F { family, n } => {
            let fam = parse_family(family, *n)?;
            let f = f_closed(&fam).map_err(|e| CliError::Runtime(e.to_string()))?;
            Ok(vec![report(
                echo,
                Some(&fam),
                Some(*n),
                "f_closed",
                poly_strings(&f),
                "ok",
                None,
            )])
        }
        Command::Growth {
            family,
            n,
            kmax,
            method,
        } => {
            let fam = parse_family(family, *n)?;
            let mut out = Vec::new();
            let series: Option<Vec<BigInt>> = if *method != Method::Bfs {
                let h = h_closed(&fam).map_err(|e| CliError::Runtime(e.to_string()))?;
                Some(expand_growth(&h, *n, *kmax))
            } else {
                None
            };
            let bfs = if *method != Method::Series {
                Some(growth_bfs(&fam, *kmax).map_err(|e| CliError::Runtime(e.to_string()))?)
            } else {
                None
            };
            let agree = match (&bfs, &series) {
                (Some(b), Some(s)) => {
                    let bfs_big: Vec<BigInt> = b.s.iter().map(|&v| BigInt::from(v)).collect();
                    Some(&bfs_big == s)
                }
                _ => None,
            };
            let status = |reported: &str| match agree {
                None => reported.to_string(),
                Some(true) => "pass".to_string(),
                Some(false) => "fail".to_string(),
            };
            if let Some(b) = bfs {
                out.push(report(
                    echo,
                    Some(&fam),
                    Some(*n),
                    "growth_bfs",
                    b.s.iter().map(u64::to_string).collect(),
                    &status("ok"),
                    None,
                ));
            }
            if let Some(s) = series {
                out.push(report(
                    echo,
                    Some(&fam),
                    Some(*n),
                    "growth_series",
                    s.iter().map(BigInt::to_string).collect(),
                    &status("ok"),
                    None,
                ));
            }
            Ok(out)
        }
        Command::Hstar { family, n } => {
            let fam = parse_family(family, *n)?;
            let h_star =
                h_star_from_dilates(&fam).map_err(|e| CliError::Runtime(e.to_string()))?;
            let h = h_closed(&fam).map_err(|e| CliError::Runtime(e.to_string()))?;
            let pass = h_star == h;
            Ok(vec![report(
                echo,
                Some(&fam),
                Some(*n),
                "h_star",
                poly_strings(&h_star),
                if pass { "pass" } else { "fail" },
                (!pass).then(|| format!("h* = {h_star} but the coordinator polynomial is {h}")),
            )])
        }
        Command::Faces { family, n, dump } => {
            let fam = parse_family(family, *n)?;
            if fam.kind() != FamilyKind::A {
                return Err(CliError::Usage(
                    "the staircase triangulation is defined for the A family only".into(),
                ));
            }
            let fv = staircase_f_vector(*n).map_err(|e| CliError::Runtime(e.to_string()))?;
            if let Some(path) = dump {
                let mut text = String::new();
                for m in 1..=*n {
                    for face in collect_faces(*n, m) {
                        let _ = writeln!(text, "{face}");
                    }
                }
                std::fs::write(path, text)
                    .map_err(|e| CliError::Runtime(format!("writing {}: {e}", path.display())))?;
            }
            Ok(vec![report(
                echo,
                Some(&fam),
                Some(*n),
                "staircase_f_vector",
                fv.counts().iter().map(BigInt::to_string).collect(),
                "ok",
                None,
            )])
        }
        Command::Series { component, order } => {
            let series = match component {
                SeriesComponent::Fdelta => fdelta_series(*order),
                SeriesComponent::Hd => SeriesBundle::new(*order).hd,
                SeriesComponent::Hc => SeriesBundle::new(*order).hc,
            };
            Ok((0..=*order)
                .map(|r| {
                    report(
                        echo,
                        None,
                        Some(r),
                        component.name(),
                        poly_strings(series.coeff(r)),
                        "ok",
                        None,
                    )
                })
                .collect())
        }
        Command::Verify { nmax, seed } => {
            let cfg = VerifyConfig {
                nmax: *nmax,
                seed: *seed,
            };
            let outcomes = run_all(&cfg);
            let mut out = Vec::new();
            for outcome in outcomes {
                eprintln!("{}", outcome.summary());
                out.push(report(
                    echo,
                    None,
                    None,
                    &format!("criterion {}: {}", outcome.id, outcome.name),
                    Vec::new(),
                    if outcome.pass { "pass" } else { "fail" },
                    (!outcome.failures.is_empty()).then(|| outcome.failures.join("; ")),
                ));
            }
            Ok(out)
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_csv(reports: &[Report]) -> String {
    let mut out = String::from("command,family,n,quantity,index,coefficient,status\n");
    for r in reports {
        let base = format!(
            "{},{},{},{},",
            csv_field(&r.command),
            r.family.as_deref().unwrap_or(""),
            r.n.map(|n| n.to_string()).unwrap_or_default(),
            csv_field(&r.quantity),
        );
        if r.coefficients.is_empty() {
            let _ = writeln!(out, "{base},,{}", r.status);
        } else {
            for (i, c) in r.coefficients.iter().enumerate() {
                let _ = writeln!(out, "{base}{i},{c},{}", r.status);
            }
        }
    }
    out
}
