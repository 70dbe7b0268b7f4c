use std::ffi::OsString;
use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use complex_moments::convolution::{convolution_power, convolve_moments};
use complex_moments::cumulants::{cumulants_by_n_extraction, moments_to_cumulants};
use complex_moments::limits::limit_trajectory;
use complex_moments::moments::{moment_sequence, radius_estimate};
use complex_moments::transforms::{
    fourier_numeric, order_and_type, reciprocal_f, stieltjes_numeric, MIN_GROWTH_ENTRIES,
};
use complex_moments::{Complex64, ComplexSequence, CumulantKind, MeasureP1};

use crate::csv_io::{number, optional, Table};
use crate::{spec_file, CliError};

#[derive(Debug, Parser)]
#[command(name = "cmoments", version, about = "Complex moments and cumulants of Laurent-tailed measures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Tensor,
    Free,
    Boolean,
    Monotone,
}

impl From<Kind> for CumulantKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Tensor => CumulantKind::Tensor,
            Kind::Free => CumulantKind::Free,
            Kind::Boolean => CumulantKind::Boolean,
            Kind::Monotone => CumulantKind::Monotone,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    Stieltjes,
    Fourier,
    Reciprocal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    /// Invert the partition formula.
    Table,
    /// Coefficient of N in the moments of N-fold convolution powers.
    Extraction,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the class conditions; lists violations, exit 2 if any.
    Validate { spec: PathBuf },
    /// Complex moments m_0..m_K.
    Moments {
        spec: PathBuf,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Complex cumulants K_1..K_K.
    Cumulants {
        spec: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Method::Table)]
        method: Method,
    },
    /// Moments of SPEC1 □ SPEC2.
    Convolve {
        spec1: PathBuf,
        spec2: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Moments of the N-fold convolution power.
    Power {
        spec: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short = 'N', long = "fold")]
        n_fold: u64,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Transform values at the points of a CSV file (columns re,im; or t for fourier).
    Transform {
        spec: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        points: PathBuf,
    },
    /// Moments of D_{1/N} μ^{□N} and their distance to the Cauchy limit.
    Limit {
        spec: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_delimiter = ',', default_value = "1,2,4,8,16,32,64,128,256")]
        n_list: Vec<u64>,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Radius, order and type estimates from m_0..m_K.
    Radius {
        spec: PathBuf,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
    },
}

/// Runs one invocation and returns the exit code: 0 success, 1 usage,
/// 2 validation failure, 3 numeric-domain error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if informational {
                let _ = write!(stdout, "{text}");
                return 0;
            }
            let _ = write!(stderr, "{text}");
            return 1;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_valid(path: &Path) -> Result<MeasureP1, CliError> {
    let m = spec_file::load(path)?;
    let report = m.validate();
    if !report.is_valid() {
        let lines: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(CliError::Invalid(format!("{}: {}", path.display(), lines.join("; "))));
    }
    Ok(m)
}

fn sequence_table(seq: &ComplexSequence) -> Table {
    let mut t = Table::new(&["n", "re", "im"]);
    for (n, v) in seq.indexed() {
        t.push(vec![n.to_string(), number(v.re), number(v.im)]);
    }
    t
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let table = match command {
        Command::Validate { spec } => {
            let m = spec_file::load(&spec)?;
            let report = m.validate();
            let mut t = Table::new(&["violation", "detail"]);
            for v in &report.violations {
                t.push(vec![v.name().to_string(), v.to_string()]);
            }
            t.write(&mut *out)?;
            if !report.is_valid() {
                return Err(CliError::Invalid(format!("{}: {} violation(s)", spec.display(), report.violations.len())));
            }
            return Ok(());
        }
        Command::Moments { spec, n_max } => sequence_table(&moment_sequence(&load_valid(&spec)?, n_max)),
        Command::Cumulants { spec, kind, n_max, method } => {
            let m = moment_sequence(&load_valid(&spec)?, n_max);
            let k = match method {
                Method::Table => moments_to_cumulants(kind.into(), &m, n_max)?,
                Method::Extraction => cumulants_by_n_extraction(kind.into(), &m, n_max)?.cumulants,
            };
            sequence_table(&k)
        }
        Command::Convolve { spec1, spec2, kind, n_max } => {
            let a = moment_sequence(&load_valid(&spec1)?, n_max);
            let b = moment_sequence(&load_valid(&spec2)?, n_max);
            sequence_table(&convolve_moments(kind.into(), &a, &b, n_max)?)
        }
        Command::Power { spec, kind, n_fold, n_max } => {
            let m = moment_sequence(&load_valid(&spec)?, n_max);
            sequence_table(&convolution_power(kind.into(), &m, n_fold, n_max)?)
        }
        Command::Transform { spec, which, points } => transform(&load_valid(&spec)?, which, &points)?,
        Command::Limit { spec, kind, n_list, n_max } => {
            let m = moment_sequence(&load_valid(&spec)?, n_max);
            let kind: CumulantKind = kind.into();
            let (_, traj) = limit_trajectory(kind, &m, &n_list, n_max)?;
            let mut t = Table::new(&["kind", "N", "n", "re", "im", "deviation"]);
            for p in traj {
                for (n, v) in p.moments.indexed() {
                    t.push(vec![
                        kind.name().to_string(),
                        p.n_fold.to_string(),
                        n.to_string(),
                        number(v.re),
                        number(v.im),
                        number(p.deviation),
                    ]);
                }
            }
            t
        }
        Command::Radius { spec, n_max } => {
            let m = moment_sequence(&load_valid(&spec)?, n_max);
            let r = radius_estimate(&m)?;
            let growth = if m.len() >= MIN_GROWTH_ENTRIES { Some(order_and_type(&m)?) } else { None };
            let mut t = Table::new(&["n_max", "radius", "extrapolated", "window_lo", "window_hi", "degenerate", "order", "type"]);
            t.push(vec![
                n_max.to_string(),
                number(r.estimate),
                optional(r.extrapolated),
                r.window.0.to_string(),
                r.window.1.to_string(),
                r.degenerate.to_string(),
                optional(growth.and_then(|g| g.order)),
                optional(growth.map(|g| g.exponential_type)),
            ]);
            t
        }
    };
    table.write(out)?;
    Ok(())
}

fn transform(m: &MeasureP1, which: Which, points: &Path) -> Result<Table, CliError> {
    let usage = |msg: String| CliError::Usage(format!("{}: {msg}", points.display()));
    let file = File::open(points).map_err(|e| usage(e.to_string()))?;
    let input = Table::read(file).map_err(|e| usage(e.to_string()))?;
    match which {
        Which::Fourier => {
            let ts = input.column_f64("t").ok_or_else(|| usage("expected a numeric column t".into()))?;
            let mut t = Table::new(&["t", "value_re", "value_im", "error"]);
            for x in ts {
                let e = fourier_numeric(m, x)?;
                t.push(vec![number(x), number(e.value.re), number(e.value.im), number(e.error)]);
            }
            Ok(t)
        }
        Which::Stieltjes | Which::Reciprocal => {
            let zs: Vec<Complex64> =
                input.column_complex("re", "im").ok_or_else(|| usage("expected numeric columns re,im".into()))?;
            let mut t = Table::new(&["re", "im", "value_re", "value_im", "error"]);
            for z in zs {
                let e = match which {
                    Which::Stieltjes => stieltjes_numeric(m, z)?,
                    _ => reciprocal_f(m, z)?,
                };
                t.push(vec![number(z.re), number(z.im), number(e.value.re), number(e.value.im), number(e.error)]);
            }
            Ok(t)
        }
    }
}
