//! Reduce a solvable board to one peg and print every intermediate board.
//!
//!     cargo run --example solve_single -- 111111101111

use peg1d::{classify, solve_single, Configuration};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "110010101011".into());
    let c: Configuration = text.parse().expect("a 0/1 board");
    let plan = match solve_single(&c) {
        Ok(plan) => plan,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    let (window, _) = c.trim();
    if let Ok(family) = classify(&window) {
        println!("shape: {family}");
    }
    let mut board = c.clone();
    println!("     {board}");
    for m in &plan.moves {
        board.play(*m).unwrap();
        println!("{m:>4} {board}");
    }
    println!("{} moves, {} peg left", plan.moves.len(), board.peg_count());
}
