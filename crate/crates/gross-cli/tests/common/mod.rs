//! Shared plumbing for the end-to-end suites: loading recorded invocations
//! from `tests/golden/` and running the real binary against them.
//!
//! A case is a file trio named after its stem: `{stem}.args` (one argv token
//! per line), `{stem}.out` (the exact bytes the run must print), and an
//! optional `{stem}.code` (expected exit code, default 0).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub struct Case {
    pub stem: String,
    pub args: Vec<String>,
    pub expected_out: String,
    pub expected_code: i32,
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// All recorded cases whose stem starts with `prefix`, in stem order.
pub fn cases(prefix: &str) -> Vec<Case> {
    let dir = corpus_dir();
    let mut stems: Vec<String> = fs::read_dir(&dir)
        .expect("the golden corpus directory should exist")
        .map(|entry| entry.expect("corpus entries should be readable").path())
        .filter(|p| p.extension().is_some_and(|e| e == "args"))
        .map(|p| p.file_stem().unwrap().to_str().unwrap().to_string())
        .filter(|stem| stem.starts_with(prefix))
        .collect();
    stems.sort();
    assert!(!stems.is_empty(), "no corpus cases match prefix '{prefix}'");

    stems
        .into_iter()
        .map(|stem| {
            let read = |ext: &str| fs::read_to_string(dir.join(format!("{stem}.{ext}")));
            let args = read("args")
                .expect("every case has an args file")
                .lines()
                .map(str::to_string)
                .collect();
            let expected_out = read("out").expect("every case has an out file");
            let expected_code = match read("code") {
                Ok(text) => text.trim().parse().expect("exit codes are small integers"),
                Err(_) => 0,
            };
            Case {
                stem,
                args,
                expected_out,
                expected_code,
            }
        })
        .collect()
}

/// Run the binary once with the crate root as working directory. The knob
/// variables are cleared so recorded expectations cannot drift with the
/// caller's environment; `env` puts specific values back deliberately.
pub fn run(args: &[String], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gross"));
    cmd.args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("GROSS_MAX_TERMS")
        .env_remove("GROSS_MAX_DEPTH");
    for (key, value) in env {
        cmd.env(key, value);
    }
    cmd.output().expect("the gross binary should spawn")
}

/// Run one case and compare bytes and exit code.
pub fn verify(case: &Case) {
    let output = run(&case.args, &[]);
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert_eq!(
        stdout, case.expected_out,
        "stdout mismatch for '{}' (argv {:?})",
        case.stem, case.args
    );
    assert!(
        output.stderr.is_empty(),
        "'{}' wrote to stderr: {}",
        case.stem,
        String::from_utf8_lossy(&output.stderr)
    );
    assert_eq!(
        output.status.code(),
        Some(case.expected_code),
        "exit code mismatch for '{}'",
        case.stem
    );
}
