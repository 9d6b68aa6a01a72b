//! The `peg1d` command line.
//!
//! Exit codes: 0 on success, 2 for usage or parse errors, 3 when a computed
//! plan fails its own replay check or a verification suite finds a
//! mismatch. Results go to stdout, diagnostics to stderr.

use std::io::{self, BufRead, Write};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::automaton::{self, enumerate_solvable};
use crate::board::Configuration;
use crate::generate;
use crate::minpegs::solve_min;
use crate::oracle::{Oracle, DEFAULT_MAX_LEN};
use crate::solver::{solve_single, SolveError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "peg1d", version, about = "One-dimensional peg solitaire")]
pub struct Cli {
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Whether a board reduces to one peg.
    Check { cfg: Option<String> },
    /// A move sequence reducing a board to one peg.
    Solve { cfg: Option<String> },
    /// The minimum peg count, its segments and a plan reaching it.
    Min { cfg: Option<String> },
    /// Number of distinct solvable boards with `n` pegs.
    Count { n: usize },
    /// The distinct solvable boards with `n` pegs.
    Enum { n: usize },
    /// Exhaustive search answers.
    Oracle {
        cfg: Option<String>,
        /// Print the minimum peg count instead of solvability.
        #[arg(long)]
        min: bool,
        /// Length guard for the search (at most 64).
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
    },
    /// Check the recognizer and the minimum-peg solver against the oracle.
    Verify {
        #[arg(long, default_value_t = 12)]
        maxlen: usize,
    },
    /// Time both solvers on a random solvable board.
    Bench {
        #[arg(long, default_value_t = 1_000_000)]
        len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `argv` (program name first) and runs it against the standard
/// streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(
        argv,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// [`run`] with explicit streams.
pub fn run_with<I, T>(
    argv: I,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, input, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "peg1d: {e}");
            EXIT_USAGE
        }
    }
}

fn inputs(cfg: &Option<String>, input: &mut dyn BufRead) -> io::Result<Vec<String>> {
    match cfg {
        Some(text) => Ok(vec![text.clone()]),
        None => {
            let mut lines = Vec::new();
            for line in input.lines() {
                let line = line?;
                let line = line.trim();
                if !line.is_empty() {
                    lines.push(line.to_string());
                }
            }
            Ok(lines)
        }
    }
}

type Outcome = Result<i32, Box<dyn std::error::Error>>;

fn execute(
    cli: &Cli,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Check { cfg } => per_board(cfg, input, err, |c, _err| {
            let ok = automaton::is_solvable(c);
            if json {
                writeln!(out, "{}", json!({ "configuration": c, "solvable": ok }))?;
            } else {
                writeln!(out, "{}", if ok { "solvable" } else { "unsolvable" })?;
            }
            Ok(EXIT_OK)
        }),
        Command::Solve { cfg } => per_board(cfg, input, err, |c, err| match solve_single(c) {
            Ok(plan) => {
                if let Err(e) = plan.validate() {
                    writeln!(err, "peg1d: plan for {c} does not replay: {e}")?;
                    return Ok(EXIT_INVARIANT);
                }
                if json {
                    writeln!(out, "{}", plan.to_json())?;
                } else {
                    writeln!(out, "{}", plan.compact())?;
                }
                Ok(EXIT_OK)
            }
            Err(SolveError::Unsolvable(_)) => {
                writeln!(err, "peg1d: {c} cannot be reduced to one peg")?;
                if json {
                    writeln!(out, "{}", json!({ "configuration": c, "solvable": false }))?;
                } else {
                    writeln!(out, "unsolvable")?;
                }
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "peg1d: {e}")?;
                Ok(EXIT_INVARIANT)
            }
        }),
        Command::Min { cfg } => per_board(cfg, input, err, |c, err| {
            let result = solve_min(c);
            match result.combined.validate() {
                Err(e) => {
                    writeln!(err, "peg1d: plan for {c} does not replay: {e}")?;
                    return Ok(EXIT_INVARIANT);
                }
                Ok(_) if result.path_length != c.len() + result.k && result.k > 0 => {
                    writeln!(
                        err,
                        "peg1d: path length {} is not n + k",
                        result.path_length
                    )?;
                    return Ok(EXIT_INVARIANT);
                }
                Ok(_) => {}
            }
            if json {
                writeln!(out, "{}", result.to_json())?;
            } else {
                writeln!(out, "k = {}", result.k)?;
                for s in &result.segments {
                    writeln!(out, "  [{}, {}) {} {:?}", s.start, s.end, s.cells, s.kind)?;
                }
                writeln!(out, "moves: {}", result.combined.compact())?;
            }
            Ok(EXIT_OK)
        }),
        Command::Count { n } => {
            let count = automaton::count_solvable(*n)?;
            if json {
                writeln!(out, "{}", json!({ "n": n, "count": count }))?;
            } else {
                writeln!(out, "{count}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Enum { n } => {
            let words = enumerate_solvable(*n)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&words)?)?;
            } else {
                for w in words {
                    writeln!(out, "{w}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { cfg, min, max_len } => {
            let mut oracle = Oracle::new().with_max_len(*max_len);
            per_board(cfg, input, err, |c, _err| {
                let k = oracle.min_pegs(c)?;
                match (json, *min) {
                    (true, true) => {
                        writeln!(out, "{}", json!({ "configuration": c, "min_pegs": k }))?
                    }
                    (true, false) => {
                        writeln!(out, "{}", json!({ "configuration": c, "solvable": k == 1 }))?
                    }
                    (false, true) => writeln!(out, "{k}")?,
                    (false, false) => {
                        writeln!(out, "{}", if k == 1 { "solvable" } else { "unsolvable" })?
                    }
                }
                Ok(EXIT_OK)
            })
        }
        Command::Verify { maxlen } => verify(*maxlen, json, out),
        Command::Bench { len, seed } => bench(*len, *seed, json, out),
    }
}

fn per_board(
    cfg: &Option<String>,
    input: &mut dyn BufRead,
    err: &mut dyn Write,
    mut each: impl FnMut(&Configuration, &mut dyn Write) -> Outcome,
) -> Outcome {
    let mut code = EXIT_OK;
    for text in inputs(cfg, input)? {
        match text.parse::<Configuration>() {
            Ok(c) => code = code.max(each(&c, err)?),
            Err(e) => {
                writeln!(err, "peg1d: {text:?}: {e}")?;
                code = code.max(EXIT_USAGE);
            }
        }
    }
    Ok(code)
}

fn verify(maxlen: usize, json: bool, out: &mut dyn Write) -> Outcome {
    if maxlen > 20 {
        return Err(format!("--maxlen {maxlen} is above the exhaustive limit of 20").into());
    }
    let mut oracle = Oracle::new();
    let (mut checked, mut recognizer_bad, mut minpegs_bad) = (0u64, 0u64, 0u64);
    for len in 1..=maxlen {
        for bits in 0u64..1 << len {
            let c = Configuration::from_bits(bits, len);
            let k = oracle.min_pegs(&c)?;
            checked += 1;
            if automaton::is_solvable(&c) != (k == 1) {
                recognizer_bad += 1;
            }
            let r = solve_min(&c);
            let replays = r.combined.validate().is_ok();
            if r.k != k || !replays {
                minpegs_bad += 1;
            }
        }
    }
    let pass = recognizer_bad == 0 && minpegs_bad == 0;
    if json {
        let report = json!({
            "maxlen": maxlen,
            "checked": checked,
            "recognizer_mismatches": recognizer_bad,
            "minpegs_mismatches": minpegs_bad,
            "pass": pass,
        });
        writeln!(out, "{report}")?;
    } else {
        writeln!(out, "boards checked: {checked} (lengths 1..={maxlen})")?;
        writeln!(out, "recognizer vs oracle: {recognizer_bad} mismatches")?;
        writeln!(out, "min pegs vs oracle: {minpegs_bad} mismatches")?;
        writeln!(out, "{}", if pass { "PASS" } else { "FAIL" })?;
    }
    Ok(if pass { EXIT_OK } else { EXIT_INVARIANT })
}

fn bench(len: usize, seed: u64, json: bool, out: &mut dyn Write) -> Outcome {
    if len == 0 {
        return Err("--len must be at least 1".into());
    }
    let c = generate::random_solvable(&mut generate::rng(seed), len);

    let t = Instant::now();
    let plan = solve_single(&c)?;
    let single = t.elapsed();

    let t = Instant::now();
    let result = solve_min(&c);
    let min = t.elapsed();

    if plan.validate().is_err() || result.k != 1 {
        return Ok(EXIT_INVARIANT);
    }
    if json {
        let report = json!({
            "len": len,
            "seed": seed,
            "pegs": c.peg_count(),
            "solve_single_ms": single.as_secs_f64() * 1e3,
            "solve_min_ms": min.as_secs_f64() * 1e3,
        });
        writeln!(out, "{report}")?;
    } else {
        writeln!(out, "length {len}, seed {seed}, {} pegs", c.peg_count())?;
        writeln!(out, "solve_single: {:.3} ms", single.as_secs_f64() * 1e3)?;
        writeln!(out, "solve_min:    {:.3} ms", min.as_secs_f64() * 1e3)?;
    }
    Ok(EXIT_OK)
}
