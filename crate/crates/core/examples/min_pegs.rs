//! Minimum peg counts, with the group split found by the shortest path and
//! the plain factorization count for comparison.
//!
//!     cargo run --example min_pegs -- 0111111 11011

use peg1d::automaton::build_language_nfa;
use peg1d::minpegs::factor_partition;
use peg1d::{solve_min, Configuration};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let boards = if args.is_empty() {
        [
            "11011",
            "1111",
            "01111",
            "0111111",
            "000111111000",
            "110010101011",
        ]
        .map(String::from)
        .to_vec()
    } else {
        args
    };
    let nfa = build_language_nfa();
    for text in boards {
        let c: Configuration = text.parse().expect("a 0/1 board");
        let result = solve_min(&c);
        let factors = factor_partition(&c, &nfa).map(|p| p.k).unwrap_or(0);
        println!("{c}: k = {} (factorization: {factors})", result.k);
        for s in &result.segments {
            let moves: Vec<String> = s.moves.iter().map(|m| m.to_string()).collect();
            println!(
                "  [{:>2}, {:>2}) {:<12} {:?} {}",
                s.start,
                s.end,
                s.cells.to_string(),
                s.kind,
                moves.join(" ")
            );
        }
        let end = result.combined.validate().expect("plan replays");
        println!("  end: {end}");
    }
}
