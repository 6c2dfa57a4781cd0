//! `gross` — a calculator for the gross-number numeral system.
//!
//! One binary, nine verbs: `eval` substitutes a number into an expression,
//! `derive`/`reldiff` do exact derivative work on piecewise functions,
//! `continuity` classifies sets, functions, and formula triples, `series`
//! sums arithmetic/geometric/repeated/decimal families with infinite counts,
//! and `power`, `count`, `reach`, `convert` expose the small one-shot
//! operations. Everything prints to stdout; exit code 0 is a computed answer,
//! 1 a domain failure, 2 a grammar failure. Output is deterministic: the same
//! invocation always produces the same bytes.

mod args;
mod dispatch;
mod failure;

use clap::error::ErrorKind;
use clap::Parser;

/// Run one invocation: the full stdout text and the exit code.
fn execute<I, T>(argv: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match args::Cli::try_parse_from(argv) {
        Ok(cli) => match dispatch::dispatch(cli) {
            Ok(text) => (with_newline(text), 0),
            Err(f) => (with_newline(f.render()), f.exit_code()),
        },
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            (with_newline(e.to_string()), code)
        }
    }
}

fn with_newline(mut text: String) -> String {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    text
}

fn main() {
    let (text, code) = execute(std::env::args());
    print!("{text}");
    std::process::exit(code);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn answers_exit_zero() {
        let (text, code) = execute(["gross", "eval", "x", "--at", "G"]);
        assert_eq!(text, "G\n");
        assert_eq!(code, 0);
    }

    #[test]
    fn domain_failures_exit_one() {
        let (text, code) = execute(["gross", "eval", "1/(x - x)", "--at", "G"]);
        assert_eq!(text, "error: DivisionByZero: division by zero\n");
        assert_eq!(code, 1);
    }

    #[test]
    fn grammar_failures_exit_two() {
        let (text, code) = execute(["gross", "eval", "2 +"]);
        assert!(text.starts_with("error: SyntaxError:"), "got {text:?}");
        assert_eq!(code, 2);

        let (text, code) = execute(["gross"]);
        assert!(text.contains("Usage"), "got {text:?}");
        assert_eq!(code, 2);
    }

    #[test]
    fn help_and_version_exit_zero() {
        let (text, code) = execute(["gross", "--help"]);
        assert!(text.contains("Usage"), "got {text:?}");
        assert_eq!(code, 0);

        let (_, code) = execute(["gross", "--version"]);
        assert_eq!(code, 0);
    }
}
