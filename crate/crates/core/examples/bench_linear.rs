//! Wall time of both solvers on random solvable boards of growing length.
//!
//!     cargo run --release --example bench_linear

use std::time::{Duration, Instant};

use peg1d::generate::{random_solvable, rng};
use peg1d::{solve_min, solve_single};

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

fn main() {
    let _ = solve_min(&"1".parse().unwrap());
    println!("{:>9} {:>12} {:>12}", "length", "single ms", "min ms");
    let mut len = 1000;
    while len <= 1_024_000 {
        let (mut single, mut min) = (vec![], vec![]);
        for seed in 0..5 {
            let c = random_solvable(&mut rng(seed), len);
            let t = Instant::now();
            solve_single(&c).unwrap();
            single.push(t.elapsed());
            let t = Instant::now();
            assert_eq!(solve_min(&c).k, 1);
            min.push(t.elapsed());
        }
        let ms = |d: Duration| d.as_secs_f64() * 1e3;
        println!(
            "{len:>9} {:>12.3} {:>12.3}",
            ms(median(single)),
            ms(median(min))
        );
        len *= 2;
    }
}
