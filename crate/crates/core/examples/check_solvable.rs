//! Decide single-peg solvability with the recognizer, and compare against
//! exhaustive search.
//!
//!     cargo run --example check_solvable -- 1011 11011 0000110000

use peg1d::{is_solvable, oracle_solvable, Configuration};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let boards = if args.is_empty() {
        ["1", "011", "1101", "110010101011", "11", "1111", "11011"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for text in boards {
        let c: Configuration = match text.parse() {
            Ok(c) => c,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        let fast = is_solvable(&c);
        let slow = oracle_solvable(&c)
            .map(|b| b.to_string())
            .unwrap_or_else(|e| e.to_string());
        println!(
            "{:>16}  recognizer: {fast:<5}  oracle: {slow}",
            c.to_string()
        );
    }
}
