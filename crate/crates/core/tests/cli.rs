use peg1d::cli::{run_with, EXIT_INVARIANT, EXIT_OK, EXIT_USAGE};
use peg1d::{Configuration, SolveResult};

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let argv = std::iter::once("peg1d").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn check() {
    assert_eq!(
        run(&["check", "1011"], ""),
        (EXIT_OK, "solvable\n".into(), String::new())
    );
    assert_eq!(run(&["check", "1111"], "").1, "unsolvable\n");
}

#[test]
fn count_and_enum() {
    assert_eq!(run(&["count", "5"], "").1, "6\n");
    assert_eq!(run(&["enum", "4"], "").1, "101011\n110011\n110101\n");
    assert_eq!(run(&["count", "0"], "").0, EXIT_USAGE);
}

#[test]
fn min_json() {
    let (code, out, _) = run(&["min", "11011", "--json"], "");
    assert_eq!(code, EXIT_OK);
    let r: SolveResult = serde_json::from_str(&out).unwrap();
    assert_eq!(r.k, 2);
    let cells: Vec<String> = r.segments.iter().map(|s| s.cells.to_string()).collect();
    assert_eq!(cells, ["1101", "1"]);
    assert_eq!(r.combined.validate().unwrap().peg_count(), 2);
}

#[test]
fn solve_json_replays() {
    let (_, out, _) = run(&["--json", "solve", "110010101011"], "");
    let plan: peg1d::Plan = serde_json::from_str(&out).unwrap();
    assert_eq!(
        plan.validate().unwrap(),
        "000010000000".parse::<Configuration>().unwrap()
    );
    let (code, out, err) = run(&["solve", "11"], "");
    assert_eq!((code, out.as_str()), (EXIT_OK, "unsolvable\n"));
    assert!(!err.is_empty());
}

#[test]
fn batch_from_stdin() {
    let (code, out, _) = run(&["check"], "1011\n\n11\n 1101 \n");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "solvable\nunsolvable\nsolvable\n");
    let (code, out, err) = run(&["oracle", "--min"], "11011\n1x1\n0111111\n");
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(out, "2\n3\n");
    assert!(err.contains("1x1"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[], "").0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"], "").0, EXIT_USAGE);
    assert_eq!(run(&["check", "102"], "").0, EXIT_USAGE);
    assert_eq!(run(&["oracle", &"1".repeat(30)], "").0, EXIT_USAGE);
    assert_eq!(
        run(&["oracle", &"1".repeat(30), "--max-len", "40", "--min"], "").1,
        "30\n"
    );
    assert_ne!(EXIT_INVARIANT, EXIT_USAGE);
}

#[test]
fn verify_and_bench() {
    let (code, out, _) = run(&["verify", "--maxlen", "8"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("PASS\n"));
    let (code, a, _) = run(&["bench", "--len", "500", "--seed", "9", "--json"], "");
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["len"], 500);
    let (_, b, _) = run(&["bench", "--len", "500", "--seed", "9", "--json"], "");
    let pegs = |s: &str| serde_json::from_str::<serde_json::Value>(s).unwrap()["pegs"].clone();
    assert_eq!(pegs(&a), pegs(&b));
}
