//! Subcommand execution and text rendering.
//!
//! Every handler returns the full text to print (no trailing newline) or a
//! [`Failure`]. All numbers go through the canonical gross-expr formatter, so
//! identical inputs always produce byte-identical output.

use std::fs;
use std::path::Path;

use gross_core::{GrossNumber, DEFAULT_MAX_DEPTH, DEFAULT_MAX_TERMS};
use gross_deriv::{
    derivative_report, formulae_continuity_at, numerical_deriv_interval, relative_difference,
    DerivError, DerivOutcome, DerivReport, Side,
};
use gross_expr::{
    evaluate, format_number, format_rational, parse_expr, parse_function, parse_number,
    EvalOptions, PiecewiseFunc,
};
use gross_series::{
    arithmetic_sum, count_points, decimal_difference, geometric_sum, rational_power, repeated_sum,
    PointKind,
};
use gross_topo::{
    convert_unit, func_continuity_at, func_continuity_over, sequence_reach, set_continuity,
    ContinuityVerdict, Grid, PointVerdict, SetKind, SideCheck, Unit, DEFAULT_BUDGET,
};

use crate::args::{Cli, Command, ContinuityCmd, SeriesCmd};
use crate::failure::Failure;

/// Resolve a knob: explicit flag, then environment variable, then default.
fn resolve_knob(flag: Option<usize>, env: &str, default: usize) -> Result<usize, Failure> {
    let value = match flag {
        Some(v) => v,
        None => match std::env::var(env) {
            Ok(text) => text.trim().parse::<usize>().map_err(|_| {
                Failure::syntax(format!("{env} must be a positive integer, got '{text}'"))
            })?,
            Err(std::env::VarError::NotPresent) => default,
            Err(std::env::VarError::NotUnicode(_)) => {
                return Err(Failure::syntax(format!("{env} is not valid text")))
            }
        },
    };
    if value == 0 {
        return Err(Failure::syntax(format!("{env} must be a positive integer")));
    }
    Ok(value)
}

pub fn dispatch(cli: Cli) -> Result<String, Failure> {
    let opts = EvalOptions {
        max_terms: resolve_knob(cli.max_terms, "GROSS_MAX_TERMS", DEFAULT_MAX_TERMS)?,
    };
    gross_core::set_max_depth(resolve_knob(cli.depth, "GROSS_MAX_DEPTH", DEFAULT_MAX_DEPTH)?);
    match cli.command {
        Command::Eval { expr, at } => {
            let e = parse_expr(&expr)?;
            let x = parse_number(&at)?;
            Ok(format_number(&evaluate(&e, &x, &opts)?))
        }
        Command::Derive {
            func,
            at,
            relaxed,
            verbose,
            grid,
        } => {
            let f = read_function(&func)?;
            let x = parse_number(&at)?;
            if let Some(text) = grid {
                let g = parse_grid(&text)?;
                let (lo, hi) = numerical_deriv_interval(&f, &g, &x, &opts)?;
                return Ok(interval_text(&lo, &hi));
            }
            match derivative_report(&f, &x, relaxed, &opts) {
                Ok(report) => Ok(render_report(&report, verbose)),
                Err(e @ (DerivError::FormulaeDiscontinuous | DerivError::UndefinedAtZero)) => {
                    Ok(format!("undefined: {e}"))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Reldiff { func, side } => {
            let f = read_function(&func)?;
            let side = parse_side(&side)?;
            let rd = relative_difference(&f, side)?;
            Ok(rd.form.render("x", rd.side.step_symbol()))
        }
        Command::Continuity(cmd) => continuity(cmd, &opts),
        Command::Series(cmd) => series(cmd),
        Command::Power { base, exp } => {
            let b = parse_finite(&base, "the base")?;
            let e = parse_number(&exp)?;
            Ok(rational_power(&b, &e)?.to_string())
        }
        Command::Count { kind, radix } => {
            let kind = PointKind::parse(&kind)
                .ok_or_else(|| Failure::syntax(format!("unknown point kind '{kind}'")))?;
            Ok(count_points(kind, radix)?.to_string())
        }
        Command::Reach { start } => Ok(format_number(&sequence_reach(&parse_number(&start)?))),
        Command::Convert { value, unit, to } => {
            let v = parse_number(&value)?;
            let from = parse_unit(&unit)?;
            let to = parse_unit(&to)?;
            Ok(format_number(&convert_unit(&v, &from, &to)?))
        }
    }
}

fn continuity(cmd: ContinuityCmd, opts: &EvalOptions) -> Result<String, Failure> {
    match cmd {
        ContinuityCmd::Set { grid, unit } => {
            let g = parse_grid(&grid)?;
            let u = parse_unit(&unit)?;
            Ok(render_set_verdict(&set_continuity(&g, &u)?))
        }
        ContinuityCmd::Func {
            func,
            grid,
            unit,
            unit2,
            at,
            over,
            monotone,
        } => {
            let f = read_function(&func)?;
            let g = parse_grid(&grid)?;
            let u = parse_unit(&unit)?;
            let y = match unit2 {
                Some(text) => Some(parse_unit(&text)?),
                None => None,
            };
            if over {
                let v = func_continuity_over(&f, &g, &u, y.as_ref(), monotone, DEFAULT_BUDGET, opts)?;
                return Ok(match v.witness {
                    None => "continuous over the grid".to_string(),
                    Some(w) => format!(
                        "discontinuous over the grid\nwitness: {}",
                        format_number(&w)
                    ),
                });
            }
            let Some(at) = at else {
                return Err(Failure::syntax("pass --at <point> or --over"));
            };
            let x = parse_number(&at)?;
            let v = func_continuity_at(&f, &g, &x, &u, y.as_ref(), opts)?;
            Ok(render_point_verdict(&v))
        }
        ContinuityCmd::Formulae { func, at } => {
            let f = read_function(&func)?;
            let x = parse_number(&at)?;
            let c = formulae_continuity_at(&f, &x, opts)?;
            let side = |v: &Option<GrossNumber>| match v {
                Some(n) => format_number(n),
                None => "undefined".to_string(),
            };
            Ok(format!(
                "f1: {}\nf2: {}\nf3: {}\nstatus: {}",
                side(&c.left),
                format_number(&c.at),
                side(&c.right),
                c.status
            ))
        }
    }
}

fn series(cmd: SeriesCmd) -> Result<String, Failure> {
    match cmd {
        SeriesCmd::Arithmetic { a1, d, n } => {
            let s = arithmetic_sum(&parse_number(&a1)?, &parse_number(&d)?, &parse_number(&n)?)?;
            Ok(format_number(&s))
        }
        SeriesCmd::Geometric {
            q,
            n,
            from,
            minus_n,
        } => {
            let q = parse_number(&q)?;
            let upper = geometric_sum(&q, &parse_number(&n)?, from)?;
            let s = match minus_n {
                Some(m) => upper.sub(&geometric_sum(&q, &parse_number(&m)?, from)?),
                None => upper,
            };
            Ok(s.to_string())
        }
        SeriesCmd::Repeat { item, count } => {
            let s = repeated_sum(&parse_number(&item)?, &parse_number(&count)?)?;
            Ok(format_number(&s))
        }
        SeriesCmd::Decimal {
            minuend,
            subtrahend,
            places,
        } => {
            let m = parse_finite(&minuend, "the minuend")?;
            let s = parse_finite(&subtrahend, "the subtrahend")?;
            let p = parse_number(&places)?;
            Ok(decimal_difference(&m, &s, &p)?.to_string())
        }
    }
}

// ----- input parsing -----

fn read_function(path: &Path) -> Result<PiecewiseFunc, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    Ok(parse_function(text.trim())?)
}

fn parse_grid(text: &str) -> Result<Grid, Failure> {
    let pieces: Vec<&str> = text.split(',').collect();
    let [a, b, step] = pieces.as_slice() else {
        return Err(Failure::syntax(format!(
            "a grid is written 'a,b,step', got '{text}'"
        )));
    };
    Ok(Grid::new(
        parse_number(a)?,
        parse_number(b)?,
        parse_number(step)?,
    )?)
}

fn parse_unit(text: &str) -> Result<Unit, Failure> {
    Ok(Unit::new(parse_number(text)?)?)
}

fn parse_side(text: &str) -> Result<Side, Failure> {
    match text {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        _ => Err(Failure::syntax(format!(
            "the side must be 'left' or 'right', got '{text}'"
        ))),
    }
}

/// A plain rational, for the flags whose grammar excludes gross parts.
fn parse_finite(text: &str, what: &str) -> Result<gross_core::Rational, Failure> {
    let n = parse_number(text)?;
    n.as_rational()
        .ok_or_else(|| Failure::syntax(format!("{what} must be a finite rational, got '{text}'")))
}

// ----- rendering -----

fn interval_text(lo: &GrossNumber, hi: &GrossNumber) -> String {
    format!("interval: [{}, {}]", format_number(lo), format_number(hi))
}

fn render_report(r: &DerivReport, verbose: bool) -> String {
    let mut out = match &r.outcome {
        DerivOutcome::Unique { form, .. } => format!("derivative: {form}"),
        DerivOutcome::Interval { lo, hi } => interval_text(lo, hi),
    };
    if verbose {
        out.push_str(&format!("\nstatus: {}", r.status));
        out.push_str(&format!(
            "\nleft: {} = {}",
            r.left_form.render("x", "l"),
            format_number(&r.left_value)
        ));
        out.push_str(&format!(
            "\nright: {} = {}",
            r.right_form.render("x", "r"),
            format_number(&r.right_value)
        ));
    }
    out
}

/// The order as a gap size: `G^-1` for a plain power, braced otherwise.
fn order_text(order: &GrossNumber) -> String {
    match order.as_rational() {
        Some(r) => format!("G^{}", format_rational(&r)),
        None => format!("G^{{{}}}", format_number(order)),
    }
}

fn render_set_verdict(v: &ContinuityVerdict) -> String {
    match (&v.kind, &v.order) {
        (SetKind::Continuous, Some(order)) => {
            format!("continuous, order {}", order_text(order))
        }
        (SetKind::Continuous, None) => "continuous".to_string(),
        (SetKind::Discrete, _) => "discrete".to_string(),
        (SetKind::Mixed, _) => "mixed".to_string(),
    }
}

fn side_line(label: &str, s: &SideCheck) -> String {
    format!(
        "{label}: neighbor {}, difference {}, {}",
        format_number(&s.neighbor),
        format_number(&s.difference),
        verdict_word(s.continuous)
    )
}

fn verdict_word(continuous: bool) -> &'static str {
    if continuous {
        "continuous"
    } else {
        "discontinuous"
    }
}

fn render_point_verdict(v: &PointVerdict) -> String {
    let mut lines = Vec::new();
    if let Some(side) = &v.left {
        lines.push(side_line("left", side));
    }
    if let Some(side) = &v.right {
        lines.push(side_line("right", side));
    }
    lines.push(format!("verdict: {}", verdict_word(v.continuous)));
    lines.join("\n")
}
