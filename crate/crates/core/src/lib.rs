//! One-dimensional peg solitaire.
//!
//! - [`board`]: configurations, hops and unhops.
//! - [`automaton`]: the regular language of boards that reduce to one peg,
//!   as an epsilon-free NFA and a minimal DFA, with counting and enumeration.
//! - [`solver`]: a linear-time strategy that reduces any such board to one peg.
//! - [`minpegs`]: linear-time reduction of any board to its minimum peg count
//!   by a shortest path through a layered DAG.
//! - [`oracle`]: exhaustive memoized search used as ground truth.
//! - [`generate`]: seeded random solvable boards for benchmarks.
//! - [`cli`]: the `peg1d` command-line front end.

pub mod automaton;
pub mod board;
pub mod cli;
pub mod generate;
pub mod minpegs;
pub mod oracle;
pub mod solver;

pub use automaton::{count_solvable, enumerate_solvable, is_solvable, recognizer};
pub use board::{Cell, Configuration, Dir, Move, Unhop};
pub use minpegs::{solve_min, SolveResult};
pub use oracle::{oracle_min_pegs, oracle_solvable, Oracle};
pub use solver::{classify, solve_single, Family, Plan};
