//! Print the recognizer: the regular expression, NFA and minimal DFA
//! transition tables, and a few structural checks.

use peg1d::automaton::{double_gap_witness, regex, reversal_counterexample};
use peg1d::recognizer;

fn main() {
    let r = recognizer();
    println!("L = {}", regex::core_language());
    println!();
    println!(
        "# NFA: {} states, {} transitions",
        r.nfa().num_states(),
        r.nfa().num_transitions()
    );
    print!("{}", r.nfa().to_table());
    println!();
    println!("# minimal DFA: {} states", r.dfa().num_states());
    print!("{}", r.dfa().to_table());
    println!();
    println!(
        "closed under reversal: {}",
        reversal_counterexample(r.nfa()).is_none()
    );
    println!(
        "no word with two 00 runs or a 000: {}",
        double_gap_witness(r.dfa()).is_none()
    );
}
