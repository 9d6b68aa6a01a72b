//! Exhaustive cross-check of the recognizer and the minimum-peg solver
//! against memoized search, for every board up to a given length.
//!
//!     cargo run --release --example oracle_verify -- 16

use peg1d::{is_solvable, solve_min, Configuration, Oracle};

fn main() {
    let maxlen: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("a length"))
        .unwrap_or(12);
    let mut oracle = Oracle::new();
    for len in 1..=maxlen {
        let (mut solvable, mut bad) = (0, 0);
        for bits in 0u64..1 << len {
            let c = Configuration::from_bits(bits, len);
            let k = oracle.min_pegs(&c).unwrap();
            solvable += usize::from(k == 1);
            let r = solve_min(&c);
            if is_solvable(&c) != (k == 1) || r.k != k || r.combined.validate().is_err() {
                bad += 1;
                println!("mismatch: {c} oracle {k} solver {}", r.k);
            }
        }
        println!(
            "length {len:>2}: {:>6} boards, {solvable:>5} solvable, {bad} mismatches",
            1u64 << len
        );
    }
    println!("memo entries: {}", oracle.cached_entries());
}
