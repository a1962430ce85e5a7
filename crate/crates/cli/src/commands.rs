//! Implementations of the CLI subcommands and the error-to-exit-code map.

use std::fmt::{self, Write as _};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bezout_core::{
    bezout_signed, bezout_zero, build_arc, build_bezout_set, farey_terms, set_stats, theta,
    write_points_csv, BezoutIndex, BezoutSet, CoprimePair, PlotConfig, ScaleMode, SetOptions,
};
use clap::{Args, ValueEnum};

/// Largest Farey order the `farey` subcommand accepts. The sequence streams
/// lazily, but beyond this the entry count alone makes a full run pointless.
const MAX_FAREY_ORDER: i64 = 1_000_000;

/// Moduli at and above this report progress on standard error so standard
/// output stays machine-parseable.
const PROGRESS_THRESHOLD: i128 = 100_000;

/// Failure modes with distinct exit codes: domain errors and failed
/// verification runs exit 1, I/O errors exit 3. Usage errors exit 2 via the
/// argument parser before any of these are constructed.
#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Io(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Domain(_) | CliError::Failed(_) => ExitCode::from(1),
            CliError::Io(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (CliError::Domain(msg) | CliError::Io(msg) | CliError::Failed(msg)) = self;
        f.write_str(msg)
    }
}

impl From<bezout_core::Error> for CliError {
    fn from(err: bezout_core::Error) -> Self {
        CliError::Domain(err.to_string())
    }
}

/// Sizes the global worker pool. `None` keeps the default (all cores).
pub fn configure_threads(threads: Option<usize>) -> Result<(), CliError> {
    let Some(count) = threads else {
        return Ok(());
    };
    if count == 0 {
        return Err(CliError::Domain("thread count must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(count)
        .build_global()
        .map_err(|err| CliError::Domain(format!("cannot size the worker pool: {err}")))
}

/// Wraps a negative value in parentheses so printed identities stay readable.
fn term(value: i128) -> String {
    if value < 0 {
        format!("({value})")
    } else {
        value.to_string()
    }
}

/// `bezout I P Q`: the i-Bezout point of (p, q) plus its identity line.
pub fn cmd_bezout(index: i64, p: i64, q: i64) -> Result<(), CliError> {
    let index = BezoutIndex::from_value(i128::from(index))?;
    let (p, q) = (i128::from(p), i128::from(q));
    // Index 0 is defined for any pair except (0, 0); the signed indices
    // require a coprime pair with both magnitudes at least 2.
    let point = match index {
        BezoutIndex::Zero => bezout_zero(p, q)?,
        _ => bezout_signed(index, CoprimePair::new(p, q)?)?,
    };
    println!("{point}");
    println!(
        "{} * {} - {} * {} = {}",
        term(point.x()),
        term(q),
        term(point.y()),
        term(p),
        index.value(),
    );
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetFormat {
    Csv,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    /// Shrink the point cloud to the canvas.
    Fit,
    /// One lattice unit per pixel; the canvas grows to cover the cloud.
    #[value(name = "1:1")]
    OneToOne,
}

#[derive(Args)]
pub struct SetArgs {
    /// Modulus p (2 <= p <= 2^31); p = 2 yields an empty set and a warning
    pub p: i64,
    /// Keep only the positive B1 slice (the first-quadrant point cloud)
    #[arg(long)]
    pub quadrant_only: bool,
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    pub format: SetFormat,
    /// Write to this file instead of standard output
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// SVG scale mode
    #[arg(long, value_enum, default_value = "fit")]
    pub scale: Scale,
    /// SVG canvas width in pixels
    #[arg(long)]
    pub width: Option<u32>,
    /// SVG canvas height in pixels
    #[arg(long)]
    pub height: Option<u32>,
    /// SVG point radius, in canvas pixels
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Draw the coordinate axes in the SVG
    #[arg(long)]
    pub axes: bool,
    /// Print summary statistics to standard error
    #[arg(long)]
    pub stats: bool,
}

/// `set P`: build the Bezout set and export it as CSV or SVG.
pub fn cmd_set(args: &SetArgs) -> Result<(), CliError> {
    let p = i128::from(args.p);
    let progress = p >= PROGRESS_THRESHOLD;
    if progress {
        eprintln!("building the Bezout set for p = {p} ...");
    }
    let started = Instant::now();
    let set = build_bezout_set(
        p,
        SetOptions {
            quadrant_only: args.quadrant_only,
            provenance: false,
        },
    )?;
    if progress {
        eprintln!("built {} points in {:.2?}", set.len(), started.elapsed());
    }
    if set.is_empty() {
        eprintln!("warning: the Bezout set for p = {p} is empty (no q satisfies 1 < q < p)");
    }
    if args.stats {
        print_stats(&set);
    }
    match args.format {
        SetFormat::Csv => write_csv_output(&set, args.output.as_deref()),
        SetFormat::Svg => {
            let config = PlotConfig {
                width: args.width,
                height: args.height,
                point_radius: args.radius,
                scale: match args.scale {
                    Scale::Fit => ScaleMode::Fit,
                    Scale::OneToOne => ScaleMode::OneToOne,
                },
                axes: args.axes,
            };
            let svg = bezout_core::render_points_svg(set.points(), &config)?;
            write_text_output(&svg, args.output.as_deref())
        }
    }
}

fn print_stats(set: &BezoutSet) {
    let stats = set_stats(set);
    eprintln!("points: {}", stats.cardinality());
    eprintln!(
        "bounding box: x in [{}, {}], y in [{}, {}]",
        stats.min_x(),
        stats.max_x(),
        stats.min_y(),
        stats.max_y(),
    );
    let [q1, q2, q3, q4] = stats.quadrant_counts();
    eprintln!("points per quadrant (I, II, III, IV): {q1}, {q2}, {q3}, {q4}");
    eprintln!(
        "seeds on multi-point arcs: {} of {} ({:.4})",
        stats.arc_covered(),
        stats.arc_seeds(),
        stats.arc_coverage_fraction(),
    );
}

fn io_error(path: Option<&Path>, err: io::Error) -> CliError {
    match path {
        Some(path) => CliError::Io(format!("cannot write {}: {err}", path.display())),
        None => CliError::Io(format!("cannot write to standard output: {err}")),
    }
}

fn write_csv_output(set: &BezoutSet, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(path) => {
            let file = File::create(path).map_err(|err| io_error(Some(path), err))?;
            write_points_csv(file, set.points()).map_err(|err| io_error(Some(path), err))
        }
        None => write_points_csv(io::stdout().lock(), set.points())
            .map_err(|err| io_error(None, err)),
    }
}

fn write_text_output(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(path) => {
            std::fs::write(path, text).map_err(|err| io_error(Some(path), err))
        }
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|err| io_error(None, err)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ArcFormat {
    Table,
    Csv,
}

#[derive(Args)]
pub struct ArcArgs {
    /// Modulus p (3 <= p <= 2^31)
    pub p: i64,
    /// Seed q (2 <= q < p, coprime to p)
    pub q: i64,
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    pub format: ArcFormat,
    /// Print only the curve coefficients as exact fractions
    #[arg(long)]
    pub coeffs: bool,
}

/// `arc P Q`: the quadratic arc of Bezout points through B1(p, q).
pub fn cmd_arc(args: &ArcArgs) -> Result<(), CliError> {
    let spec = build_arc(i128::from(args.p), i128::from(args.q))?;
    if spec.step() >= spec.modulus() {
        eprintln!(
            "note: step d = {} is at least p = {}; only the anchor lies in range",
            spec.step(),
            spec.modulus(),
        );
    }
    let coefficients = spec.coefficients();
    if args.coeffs {
        println!("a0 = {}/{}", coefficients.a0_num(), coefficients.denominator());
        println!("a1 = {}/{}", coefficients.a1_num(), coefficients.denominator());
        println!("a2 = {}/{}", coefficients.a2_num(), coefficients.denominator());
        return Ok(());
    }
    let points = spec.points_in_range();
    match args.format {
        ArcFormat::Csv => {
            let mut csv = String::from("n,q,x,y,key\n");
            for (n, point) in &points {
                let seed = spec.seed() + n * spec.step();
                let _ = writeln!(
                    csv,
                    "{n},{seed},{},{},{}",
                    point.x(),
                    point.y(),
                    spec.curve_key(),
                );
            }
            write_text_output(&csv, None)
        }
        ArcFormat::Table => {
            let (lo, hi) = spec.index_window();
            println!(
                "arc through B1({}, {}) = {}",
                spec.modulus(),
                spec.seed(),
                spec.anchor(),
            );
            println!(
                "step d = {}, window n in [{lo}, {hi}], {} points",
                spec.step(),
                spec.in_range_len(),
            );
            println!(
                "curve: {}*y = -1 + {}*x - x^2",
                spec.modulus(),
                spec.curve_key(),
            );
            println!(
                "coefficients: a0 = {}/{denom}, a1 = {}/{denom}, a2 = {}/{denom}",
                coefficients.a0_num(),
                coefficients.a1_num(),
                coefficients.a2_num(),
                denom = coefficients.denominator(),
            );
            println!();
            println!("{:>8} {:>10} {:>10} {:>10}", "n", "q", "x", "y");
            for (n, point) in &points {
                let seed = spec.seed() + n * spec.step();
                println!("{n:>8} {seed:>10} {:>10} {:>10}", point.x(), point.y());
            }
            Ok(())
        }
    }
}

/// `farey N`: stream the Farey sequence F_N in increasing order.
pub fn cmd_farey(order: i64) -> Result<(), CliError> {
    if order > MAX_FAREY_ORDER {
        return Err(CliError::Domain(format!(
            "order {order} exceeds the supported maximum {MAX_FAREY_ORDER}",
        )));
    }
    let terms = farey_terms(i128::from(order))?;
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);
    for fraction in terms {
        writeln!(out, "{fraction}").map_err(|err| io_error(None, err))?;
    }
    out.flush().map_err(|err| io_error(None, err))
}

/// `theta P Q`: the inverse of q in the multiplicative group mod p.
pub fn cmd_theta(p: i64, q: i64) -> Result<(), CliError> {
    let (p, q) = (i128::from(p), i128::from(q));
    let inverse = theta(p, q)?;
    // Re-verify before printing; a mismatch would mean an internal bug.
    if (q * inverse).rem_euclid(p) != 1 {
        return Err(CliError::Failed(format!(
            "internal check failed: {q} * {inverse} is not 1 (mod {p})",
        )));
    }
    println!("{inverse}");
    println!("{q} * {inverse} = 1 (mod {p})");
    Ok(())
}
