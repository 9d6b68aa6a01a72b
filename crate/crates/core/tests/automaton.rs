use peg1d::automaton::{
    build_language_nfa, closed_form_count, count_solvable, determinize_minimize,
    enumerate_solvable, regex, Dfa,
};
use peg1d::{is_solvable, recognizer, Cell, Configuration};
use proptest::prelude::*;

fn board(max: usize) -> impl Strategy<Value = Configuration> {
    prop::collection::vec(any::<bool>(), 1..max).prop_map(|v| {
        Configuration::new(
            v.into_iter()
                .map(|p| if p { Cell::Peg } else { Cell::Hole })
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn nfa_and_dfa_agree(c in board(60)) {
        let r = recognizer();
        prop_assert_eq!(r.nfa().accepts(c.symbols()), r.dfa().accepts(c.symbols()));
    }

    #[test]
    fn mirror_invariant(c in board(60)) {
        prop_assert_eq!(is_solvable(&c), is_solvable(&c.reverse()));
    }

    #[test]
    fn holes_at_the_ends_do_not_matter(c in board(30), left in 0usize..4, right in 0usize..4) {
        let padded: Configuration = format!("{}{c}{}", "0".repeat(left), "0".repeat(right)).parse().unwrap();
        let (t, _) = c.trim();
        prop_assume!(t.len() != 2);
        prop_assert_eq!(is_solvable(&padded), is_solvable(&t));
    }
}

#[test]
fn regex_and_automata_agree_exhaustively() {
    let re = regex::solvable_language();
    let nfa = build_language_nfa();
    let dfa = determinize_minimize(&nfa);
    for len in 0..=11 {
        for bits in 0u64..1 << len {
            let word: Vec<u8> = (0..len).map(|i| (bits >> i & 1) as u8).collect();
            let expected = re.matches(&word);
            assert_eq!(nfa.accepts(word.iter().copied()), expected, "{word:?}");
            assert_eq!(dfa.accepts(word.iter().copied()), expected, "{word:?}");
        }
    }
}

#[test]
fn reversed_language_is_the_same() {
    let nfa = build_language_nfa();
    assert!(Dfa::minimal(&nfa).equivalent(&Dfa::minimal(&nfa.reversed())));
}

#[test]
fn counts_match_listing_and_formula() {
    for n in 1..=20 {
        let formula = closed_form_count(n).unwrap();
        assert_eq!(count_solvable(n).unwrap(), formula, "n = {n}");
        let words = enumerate_solvable(n).unwrap();
        assert_eq!(words.len() as u128, formula, "n = {n}");
        for w in &words {
            assert_eq!(w.peg_count(), n);
            assert!(n == 2 || is_solvable(w), "{w}");
        }
    }
}

#[test]
fn epsilon_free() {
    assert!(recognizer().nfa().is_epsilon_free());
}
