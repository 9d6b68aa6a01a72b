//! Seeded random boards: one solvable shape, and a run of shapes packed
//! together, reduced as far as possible.
//!
//!     cargo run --example random_boards -- 42

use peg1d::generate::{random_multi, random_solvable, rng};
use peg1d::{classify, solve_min};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("a seed"))
        .unwrap_or(42);
    let mut r = rng(seed);
    for len in [6, 12, 24, 48] {
        let c = random_solvable(&mut r, len);
        let (window, _) = c.trim();
        println!("{:<48}  {}", c.to_string(), classify(&window).unwrap());
    }
    for _ in 0..4 {
        let c = random_multi(&mut r, 40, 9);
        let result = solve_min(&c);
        println!("{c}  {} pegs, k = {}", c.peg_count(), result.k);
    }
}
