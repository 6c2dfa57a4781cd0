//! Command-line grammar.
//!
//! Every numeric argument is free text in the gross-number syntax (`3`,
//! `1/2`, `0.5G^2 + 0.5G`, `G^{G^-1}`), so the values here stay `String`s and
//! are parsed by the dispatcher, where failures map onto the shared error
//! rendering. Grids are written `a,b,step` and units as a single number (the
//! factor relative to the ambient unit).

use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Exact arithmetic, series, continuity, and derivatives over gross numbers.
#[derive(Debug, Parser)]
#[command(name = "gross", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Largest number of positional terms an exact quotient may need
    /// (default: GROSS_MAX_TERMS or 32).
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,

    /// Cap on grosspower nesting depth (default: GROSS_MAX_DEPTH or 3).
    #[arg(long, global = true)]
    pub depth: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression in x at a point.
    Eval {
        /// Expression in x.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Point to substitute for x.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        at: String,
    },
    /// Differentiate a piecewise function at a point.
    Derive {
        /// File holding the function (an expression or a `piece ...` form).
        #[arg(long)]
        func: PathBuf,
        /// Point of differentiation.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Accept agreeing side formulae even if the point value disagrees.
        #[arg(long)]
        relaxed: bool,
        /// Also print the formulae status and both side derivatives.
        #[arg(long)]
        verbose: bool,
        /// Use neighbor difference quotients on this grid instead of the
        /// symbolic report.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
    /// Show one side's relative difference as a form in x and the step.
    Reldiff {
        /// File holding the function.
        #[arg(long)]
        func: PathBuf,
        /// Which side: left or right.
        #[arg(long)]
        side: String,
    },
    /// Classify continuity of grids, functions on grids, or formulae.
    #[command(subcommand)]
    Continuity(ContinuityCmd),
    /// Sum series with explicit (possibly infinite) item counts.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Raise a rational base to a gross exponent.
    Power {
        /// Rational base.
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        /// Gross exponent.
        #[arg(long, allow_hyphen_values = true)]
        exp: String,
    },
    /// Count the points a family of coordinate numerals can express.
    Count {
        /// One of: unit_interval_grossone, ray_grossone, line_grossone,
        /// line_grossone_closed, unit_interval_positional,
        /// line_positional_units, reals_positional.
        kind: String,
        /// Radix for the positional kinds (at least 2).
        #[arg(long)]
        radix: Option<u32>,
    },
    /// Farthest numeral a complete counting process reaches from a start.
    Reach {
        /// First numeral named by the process.
        #[arg(allow_hyphen_values = true)]
        start: String,
    },
    /// Re-express a value in another unit of measure.
    Convert {
        /// Value to convert.
        #[arg(allow_hyphen_values = true)]
        value: String,
        /// Unit the value is currently measured in (a positive factor).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        unit: String,
        /// Unit to convert into (a positive factor).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        to: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ContinuityCmd {
    /// Classify the grid itself in a unit of measure.
    Set {
        /// Grid as `a,b,step`.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        /// Unit of measure (a positive factor).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        unit: String,
    },
    /// Check a function's continuity on a grid, at a point or overall.
    Func {
        /// File holding the function.
        #[arg(long)]
        func: PathBuf,
        /// Grid as `a,b,step`.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        /// Unit of measure for both axes (a positive factor).
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        unit: String,
        /// Separate unit for the function axis.
        #[arg(long, allow_hyphen_values = true)]
        unit2: Option<String>,
        /// Grid point to check.
        #[arg(
            long,
            allow_hyphen_values = true,
            required_unless_present = "over",
            conflicts_with = "over"
        )]
        at: Option<String>,
        /// Check every consecutive pair over the whole grid instead.
        #[arg(long)]
        over: bool,
        /// Monotone function: only the endpoint differences need checking.
        #[arg(long)]
        monotone: bool,
    },
    /// Evaluate the three formulae of a piecewise function at a point.
    Formulae {
        /// File holding the function.
        #[arg(long)]
        func: PathBuf,
        /// Point to compare the formulae at.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum SeriesCmd {
    /// Sum of an arithmetic progression over an explicit item count.
    Arithmetic {
        /// First item.
        #[arg(long, allow_hyphen_values = true)]
        a1: String,
        /// Common difference.
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        /// Number of items (positive and integer-valued).
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
    /// Sum of q^i for i from `from` to n.
    Geometric {
        /// Common ratio (a rational or a one-term gross number).
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Upper index (integer-valued, finite or infinite).
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Lower index.
        #[arg(long, default_value_t = 0)]
        from: u32,
        /// Subtract the sum up to this index, printing the difference.
        #[arg(long, allow_hyphen_values = true)]
        minus_n: Option<String>,
    },
    /// The same item added to itself `count` times.
    Repeat {
        /// Item to repeat.
        #[arg(long, allow_hyphen_values = true)]
        item: String,
        /// Number of items (positive and integer-valued).
        #[arg(long, allow_hyphen_values = true)]
        count: String,
    },
    /// Exact difference of two decimal records extended over `places`
    /// positions, the last fractional digit repeating.
    Decimal {
        /// Record to subtract from.
        #[arg(long, allow_hyphen_values = true)]
        minuend: String,
        /// Record to subtract.
        #[arg(long, allow_hyphen_values = true)]
        subtrahend: String,
        /// Number of decimal positions (finite or infinite).
        #[arg(long, allow_hyphen_values = true)]
        places: String,
    },
}
