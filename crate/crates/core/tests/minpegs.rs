use peg1d::automaton::build_language_nfa;
use peg1d::generate::{random_board, random_multi, rng};
use peg1d::minpegs::{factor_partition, min_peg_partition, GroupKind};
use peg1d::{is_solvable, solve_min, Cell, Configuration, Oracle};
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

fn all_boards(max_len: usize) -> impl Iterator<Item = Configuration> {
    (1..=max_len).flat_map(|len| (0u64..1 << len).map(move |b| Configuration::from_bits(b, len)))
}

#[test]
fn one_peg_exactly_when_recognized() {
    for c in all_boards(14).filter(|c| c.peg_count() > 0) {
        assert_eq!(solve_min(&c).k == 1, is_solvable(&c), "{c}");
    }
}

#[test]
fn matches_search_up_to_sixteen() {
    let mut oracle = Oracle::new();
    for c in all_boards(16) {
        assert_eq!(solve_min(&c).k, oracle.min_pegs(&c).unwrap(), "{c}");
    }
}

#[test]
fn subadditive_on_short_pieces() {
    let k = |c: &Configuration| solve_min(c).k;
    let short: Vec<Configuration> = all_boards(6).collect();
    for u in &short {
        for v in &short {
            let uv: Configuration = format!("{u}{v}").parse().unwrap();
            assert!(k(&uv) <= k(u) + k(v), "{u} {v}");
        }
    }
}

#[test]
fn factorization_is_an_upper_bound() {
    let nfa = build_language_nfa();
    let mut strict = 0;
    for c in all_boards(12).filter(|c| c.peg_count() > 0) {
        let factors = factor_partition(&c, &nfa).unwrap();
        assert_eq!(factors.path_length, c.len() + factors.k);
        let k = solve_min(&c).k;
        assert!(k <= factors.k, "{c}");
        strict += usize::from(k < factors.k);
    }
    assert!(strict > 0);
}

#[test]
fn segments_cover_the_board() {
    for c in all_boards(10).filter(|c| c.peg_count() > 0) {
        let r = solve_min(&c);
        let mut at = 0;
        for s in &r.segments {
            assert_eq!(s.start, at);
            assert!(s.end > s.start);
            assert_eq!(s.cells, c.slice(s.start, s.end));
            at = s.end;
        }
        assert_eq!(at, c.len());
        assert_eq!(r.segments.len(), r.k);
    }
}

#[test]
fn pairs_need_room() {
    let p = min_peg_partition(&"1111".parse().unwrap()).unwrap();
    assert!(p.kinds.iter().all(|&k| k == GroupKind::Single));
    let p = min_peg_partition(&"01111".parse().unwrap()).unwrap();
    assert_eq!(p.kinds, [GroupKind::PairLeft, GroupKind::PairLeft]);
}

proptest! {
    #[test]
    fn matches_search_on_longer_boards(c in board(22)) {
        prop_assert_eq!(solve_min(&c).k, Oracle::new().min_pegs(&c).unwrap());
    }

    #[test]
    fn plan_reaches_k(seed in any::<u64>(), len in 1usize..300) {
        for c in [random_board(&mut rng(seed), len), random_multi(&mut rng(seed), len, 12)] {
            let r = solve_min(&c);
            prop_assert_eq!(r.combined.moves.len() + r.k, c.peg_count());
            prop_assert_eq!(r.combined.validate().unwrap().peg_count(), r.k);
            if r.k > 0 {
                prop_assert_eq!(r.path_length, c.len() + r.k);
            }
        }
    }

    #[test]
    fn mirror_invariant(c in board(60)) {
        prop_assert_eq!(solve_min(&c).k, solve_min(&c.reverse()).k);
    }

    #[test]
    fn bounded_by_peg_count(c in board(60)) {
        let k = solve_min(&c).k;
        prop_assert!(k <= c.peg_count());
        prop_assert_eq!(k == 0, c.peg_count() == 0);
    }

    #[test]
    fn result_json_round_trip(c in board(40)) {
        let r = solve_min(&c);
        let back: peg1d::SolveResult = serde_json::from_str(&r.to_json()).unwrap();
        prop_assert_eq!(back.combined.validate().unwrap().peg_count(), r.k);
        prop_assert_eq!(back, r);
    }
}
