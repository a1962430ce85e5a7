//! bezout-sets: compute Bezout points of coprime pairs, build Bezout sets,
//! construct quadratic arcs, stream Farey sequences, and run verification
//! suites.

mod commands;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{ArcArgs, CliError, SetArgs};

/// Bezout transformations of integer pairs: single points, full sets,
/// quadratic arcs, Farey sequences, and modular inverses.
#[derive(Parser)]
#[command(
    name = "bezout-sets",
    version,
    after_help = "Exit codes: 0 success, 1 domain error, 2 usage error, 3 I/O error."
)]
struct Cli {
    /// Worker threads for set generation (defaults to all cores)
    #[arg(long, global = true, env = "BEZOUT_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the i-Bezout point of a pair: the (x, y) with x*q - y*p = i
    ///
    /// Indices -1 and +1 need a coprime pair with both magnitudes at least
    /// 2; index 0 accepts any pair except (0, 0) and reduces it to lowest
    /// terms. Prints the point and its identity line.
    #[command(allow_negative_numbers = true)]
    Bezout {
        /// Identity index i
        #[arg(value_parser = clap::value_parser!(i64).range(-1..=1))]
        index: i64,
        /// First component p of the pair
        p: i64,
        /// Second component q of the pair
        q: i64,
    },

    /// Build the Bezout set for p and export it as CSV or SVG
    ///
    /// SVG output uses mathematical orientation (y up). The viewport covers
    /// the point cloud together with the origin, so a full set is centered
    /// on the origin and a quadrant-only set sits in the first quadrant
    /// with the origin at the lower left. Progress and statistics go to
    /// standard error; standard output stays machine-parseable.
    Set(SetArgs),

    /// Construct the quadratic arc of Bezout points through B1(p, q)
    ///
    /// The arc collects B1(p, q + n*d) for every in-range index n of the
    /// arithmetic progression of step d; all points lie on one exact
    /// quadratic curve and share the key x + q.
    Arc(ArcArgs),

    /// Stream the Farey sequence F_n in increasing order, one fraction per
    /// line
    Farey {
        /// Order n (1 <= n <= 10^6); entries stream lazily
        order: i64,
    },

    /// Compute theta_p(q), the inverse of q in the multiplicative group
    /// mod p, as the power q^(phi(p) - 1)
    Theta {
        /// Modulus p (p >= 2)
        p: i64,
        /// Group element q (1 <= q < p, coprime to p)
        q: i64,
    },

    /// Run a verification suite; nonzero exit if any check fails
    ///
    /// Suites print one line per check and list counterexamples verbatim on
    /// failure. Defaults and caps for --bound: identities 1000/5000,
    /// propositions 300/2000, theta 500/2000, farey 150/500, arcs (maximum
    /// modulus) 100000/1000000.
    Verify {
        /// Which suite to run
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Exhaustive bound (for arcs: the maximum modulus)
        #[arg(long)]
        bound: Option<i64>,
        /// Number of random seed pairs for the arcs suite
        #[arg(long, default_value_t = 500)]
        seeds: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    commands::configure_threads(cli.threads)?;
    match cli.command {
        Command::Bezout { index, p, q } => commands::cmd_bezout(index, p, q),
        Command::Set(args) => commands::cmd_set(&args),
        Command::Arc(args) => commands::cmd_arc(&args),
        Command::Farey { order } => commands::cmd_farey(order),
        Command::Theta { p, q } => commands::cmd_theta(p, q),
        Command::Verify {
            suite,
            bound,
            seeds,
        } => verify::run(suite, bound, seeds),
    }
}
