//! Number of distinct solvable boards per peg count, from the automaton, the
//! closed form and (for small n) brute force.

use peg1d::automaton::{closed_form_count, count_solvable, enumerate_solvable, length_cap};
use peg1d::Oracle;

fn main() {
    let mut oracle = Oracle::new();
    println!(
        "{:>3} {:>8} {:>8} {:>8} {:>8}",
        "n", "dfa", "formula", "listed", "search"
    );
    for n in 1..=14 {
        let dfa = count_solvable(n).unwrap();
        let formula = closed_form_count(n).unwrap();
        let listed = enumerate_solvable(n).unwrap().len();
        let search = if n <= 8 {
            oracle.count_classes(n, length_cap(n)).unwrap().to_string()
        } else {
            "-".into()
        };
        println!("{n:>3} {dfa:>8} {formula:>8} {listed:>8} {search:>8}");
    }
    for n in 3..=5 {
        let words: Vec<String> = enumerate_solvable(n)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("n = {n}: {}", words.join(" "));
    }
}
