//! Command-line front end.
//!
//! Exit codes: 0 success, 1 certification failure, 2 usage error,
//! 3 numerical non-convergence or I/O failure.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::bonk::{BonkDisc, ExtremalFunction, STARLIKE_RADIUS};
use crate::certify::{self, CertOptions, CertReport, Sharpness};
use crate::error::{Error, Result};
use crate::output::{self, TableRow};
use crate::regions::{BoundaryCurve, RegionId};
use crate::solver::{self, Method};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bloch-radius",
    version,
    about = "Starlikeness radii of the Bloch class"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute radii with one method.
    Radius {
        #[arg(long, default_value = "all")]
        region: RegionArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Branch)]
        method: MethodArg,
        /// Solver tolerance on r (branch default 1e-12, oracle default 1e-6).
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        print: PrintOpts,
    },
    /// Run every solver and certificate; exit 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        region: RegionArg,
        #[arg(long, default_value_t = solver::DEFAULT_ORACLE_TOL)]
        oracle_tol: f64,
        #[arg(long, default_value_t = solver::DEFAULT_RAYS)]
        rays: usize,
        /// Write the report as CSV.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        print: PrintOpts,
    },
    /// Radii of all regions by all applicable methods.
    Table {
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        print: PrintOpts,
    },
    /// Sample a region boundary.
    Boundary {
        #[arg(long)]
        region: RegionId,
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(3..))]
        samples: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample the image of |z| = r under the extremal quotient w0.
    Curve {
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(3..))]
        samples: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample the disc bound at r; with an .svg output, draw it against a region.
    Disc {
        /// Defaults to the certified radius of --region.
        #[arg(long)]
        r: Option<f64>,
        #[arg(long)]
        region: Option<RegionId>,
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(3..))]
        samples: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct PrintOpts {
    /// Decimal places in printed values.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(0..=15))]
    digits: u8,
}

#[derive(Debug, Clone, Copy)]
enum RegionArg {
    All,
    One(RegionId),
}

impl RegionArg {
    fn regions(self) -> Vec<RegionId> {
        match self {
            RegionArg::All => RegionId::ALL.to_vec(),
            RegionArg::One(id) => vec![id],
        }
    }
}

impl FromStr for RegionArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            Ok(RegionArg::All)
        } else {
            s.parse().map(RegionArg::One)
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    #[value(alias = "closed_form")]
    Closed,
    Branch,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Branch => Method::Branch,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

enum Failure {
    Usage(String),
    Numeric(Error),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported { .. } | Error::InvalidArgument(_) | Error::OutOfDomain { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Numeric(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Numeric(Error::Io(e))
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to standard output and diagnostics to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Check) => EXIT_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "run `bloch-radius --help` for usage");
            EXIT_USAGE
        }
        Err(Failure::Numeric(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_NUMERIC
        }
    }
}

fn check_r(r: f64) -> std::result::Result<f64, Failure> {
    if r > 0.0 && r < STARLIKE_RADIUS {
        Ok(r)
    } else {
        Err(Failure::Usage(format!(
            "--r must lie in (0, 1/sqrt(3)), got {r}"
        )))
    }
}

fn is_svg(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("svg"))
}

fn emit_curve(
    curve: &BoundaryCurve,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => output::emit_curve_csv(curve, p)?,
        None => output::write_curve_csv(curve, out)?,
    }
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match cmd {
        Command::Radius {
            region,
            method,
            tol,
            print,
        } => {
            let method = Method::from(method);
            let digits = print.digits as usize;
            let regions = region.regions();
            for id in &regions {
                let result = solver::solve(*id, method, tol)?;
                if regions.len() == 1 {
                    writeln!(out, "{:.digits$}", result.value)?;
                } else {
                    writeln!(out, "{:<12}{:.digits$}", id.name(), result.value)?;
                }
            }
        }
        Command::Verify {
            region,
            oracle_tol,
            rays,
            output: path,
            print,
        } => {
            let opts = CertOptions {
                regions: region.regions(),
                oracle_tol,
                rays,
                ..CertOptions::default()
            };
            let report = certify::cross_validate(&opts);
            write_report_text(&report, print.digits as usize, out)?;
            if let Some(p) = path {
                output::emit_report_csv(&report, &p)?;
            }
            if !report.overall {
                return Err(Failure::Check);
            }
        }
        Command::Table {
            output: path,
            print,
        } => {
            let rows = table_rows();
            write_table_text(&rows, print.digits as usize, out)?;
            if let Some(p) = path {
                output::emit_table_csv(&rows, &p)?;
            }
        }
        Command::Boundary {
            region,
            samples,
            output: path,
        } => {
            let curve = region.boundary(samples as usize)?;
            emit_curve(&curve, path.as_deref(), out)?;
        }
        Command::Curve {
            r,
            samples,
            output: path,
        } => {
            let r = check_r(r)?;
            let curve = BoundaryCurve::from_circle_map(samples as usize, |z| {
                ExtremalFunction
                    .ratio(r * z)
                    .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
            })?;
            emit_curve(&curve, path.as_deref(), out)?;
        }
        Command::Disc {
            r,
            region,
            samples,
            output: path,
        } => {
            let r = match (r, region) {
                (Some(r), _) => check_r(r)?,
                (None, Some(id)) => solver::solve_branch(id, solver::DEFAULT_BRANCH_TOL)?.value,
                (None, None) => return Err(Failure::Usage("disc needs --r or --region".into())),
            };
            match path {
                Some(p) if is_svg(&p) => {
                    let id = region
                        .ok_or_else(|| Failure::Usage("an .svg output needs --region".into()))?;
                    output::emit_svg(id, r, &p)?;
                }
                p => {
                    let disc = BonkDisc::at(r)?;
                    let curve = BoundaryCurve::from_circle_map(samples as usize, |z| {
                        disc.center + disc.radius * z
                    })?;
                    emit_curve(&curve, p.as_deref(), out)?;
                }
            }
        }
    }
    Ok(())
}

/// All regions by every applicable method, with default tolerances.
pub fn table_rows() -> Vec<TableRow> {
    use rayon::prelude::*;
    RegionId::ALL
        .par_iter()
        .map(|&id| TableRow {
            region: id,
            closed_form: solver::solve_closed_form(id).ok().map(|r| r.value),
            branch: solver::solve_branch(id, solver::DEFAULT_BRANCH_TOL)
                .ok()
                .map(|r| r.value),
            oracle: solver::solve_oracle(id, solver::DEFAULT_ORACLE_TOL)
                .ok()
                .map(|r| r.value),
        })
        .collect()
}

fn write_table_text(rows: &[TableRow], digits: usize, out: &mut dyn Write) -> io::Result<()> {
    let width = digits + 4;
    writeln!(
        out,
        "{:<12}{:>width$}{:>width$}{:>width$}",
        "region", "closed", "branch", "oracle"
    )?;
    for row in rows {
        write!(out, "{:<12}", row.region.name())?;
        for m in Method::ALL {
            match row.get(m) {
                Some(x) => write!(out, "{x:>width$.digits$}")?,
                None => write!(out, "{:>width$}", "-")?,
            }
        }
        writeln!(out)?;
    }
    Ok(())
}

fn write_report_text(report: &CertReport, digits: usize, out: &mut dyn Write) -> io::Result<()> {
    let width = digits + 4;
    writeln!(
        out,
        "{:<12}{:>width$}{:>width$}{:>width$}  {:<13}{:<6}status",
        "region", "closed", "branch", "oracle", "sharpness", "flip"
    )?;
    for e in &report.entries {
        write!(out, "{:<12}", e.region.name())?;
        for m in Method::ALL {
            match e.radii.iter().find(|o| o.method == m) {
                Some(o) => match &o.result {
                    Ok(r) => write!(out, "{:>width$.digits$}", r.value)?,
                    Err(_) => write!(out, "{:>width$}", "FAILED")?,
                },
                None => write!(out, "{:>width$}", "-")?,
            }
        }
        let sharp = match &e.sharpness {
            Sharpness::NotClaimed => "not claimed".to_string(),
            Sharpness::Residual(x) => format!("{x:.2e}"),
            Sharpness::Failed(_) => "FAILED".to_string(),
        };
        let failed: Vec<&str> = e
            .flags
            .iter()
            .filter(|f| !f.passed)
            .map(|f| f.name)
            .collect();
        let status = if e.passed() {
            "ok".to_string()
        } else if failed.is_empty() {
            "FAILED".to_string()
        } else {
            format!("FAILED ({})", failed.join(", "))
        };
        writeln!(out, "  {sharp:<13}{:<6}{status}", e.flip)?;
        for o in &e.radii {
            if let Err(msg) = &o.result {
                writeln!(out, "    {} {}: {msg}", e.region, o.method)?;
            }
        }
    }
    for f in &report.core_flags {
        writeln!(
            out,
            "core {:<24}{}",
            f.name,
            if f.passed { "ok" } else { "FAILED" }
        )?;
    }
    writeln!(
        out,
        "overall: {}",
        if report.overall { "PASS" } else { "FAIL" }
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["bloch-radius"];
        argv.extend_from_slice(args);
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn radius_closed_exp() {
        let (code, out, _) = run_capture(&["radius", "--region", "exp", "--method", "closed"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "0.517387");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["radius", "--region", "bogus"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["curve", "--r", "0.7"]).0, EXIT_USAGE);
        assert_eq!(
            run_capture(&["boundary", "--region", "exp", "--samples", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_capture(&["radius", "--digits", "16"]).0, EXIT_USAGE);
        let (code, _, err) = run_capture(&["radius", "--region", "sine", "--method", "closed"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("not supported"));
    }

    #[test]
    fn digits_flag() {
        let (code, out, _) = run_capture(&[
            "radius", "--region", "nephroid", "--method", "branch", "--digits", "10",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "0.3464101615");
    }

    #[test]
    fn oracle_non_convergence_exit_code() {
        let (code, _, err) = run_capture(&[
            "radius",
            "--region",
            "halfplane",
            "--method",
            "oracle",
            "--tol",
            "1e-15",
        ]);
        assert_eq!(code, EXIT_NUMERIC);
        assert!(err.contains("did not converge"));
    }
}
