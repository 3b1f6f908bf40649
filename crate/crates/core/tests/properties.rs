use proptest::prelude::*;
use proptest::sample::subsequence;
use shapewilf_core::bijection::{BijectionOracle, TopRowBijection};
use shapewilf_core::equivalence::{
    count_terms, shape_wilf_table, symmetry_orbit, trivial_symmetry_class, wilf_table, Strategy as Search,
};
use shapewilf_core::ferrers::{count_fillings, enumerate_boards, enumerate_fillings};
use shapewilf_core::pattern::pattern_occurrences;
use shapewilf_core::{FanPop, FerrersBoard, Filling, PatternSet, Permutation, Pop};

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len).prop_flat_map(|n| {
        Just((1..=n as u8).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

fn pattern_set() -> impl Strategy<Value = PatternSet> {
    let pool: Vec<Permutation> = (3..=4).flat_map(Permutation::all).collect();
    subsequence(pool, 1..=3).prop_map(|v| PatternSet::new(v).unwrap())
}

fn filling() -> impl Strategy<Value = Filling> {
    (1..=6usize).prop_flat_map(|n| {
        let boards = enumerate_boards(n);
        (0..boards.len(), Just(boards)).prop_flat_map(|(i, boards)| {
            let board = boards[i].clone();
            let all: Vec<Filling> = enumerate_fillings(&board, &PatternSet::empty()).collect();
            (0..all.len()).prop_map(move |j| all[j].clone())
        })
    })
}

proptest! {
    #[test]
    fn symmetries_are_involutions(w in permutation(9)) {
        prop_assert_eq!(w.reverse().reverse(), w.clone());
        prop_assert_eq!(w.complement().complement(), w.clone());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.reverse().complement(), w.complement().reverse());
    }

    #[test]
    fn occurrences_are_symmetry_invariant(w in permutation(8), p in permutation(4)) {
        prop_assume!(!p.is_empty());
        let n = pattern_occurrences(&p, &w);
        prop_assert_eq!(n, pattern_occurrences(&p.reverse(), &w.reverse()));
        prop_assert_eq!(n, pattern_occurrences(&p.complement(), &w.complement()));
        prop_assert_eq!(n, pattern_occurrences(&p.inverse(), &w.inverse()));
    }

    #[test]
    fn direct_sum_is_associative(a in permutation(4), b in permutation(4), c in permutation(4)) {
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        prop_assert_eq!(a.direct_sum(&b).len(), a.len() + b.len());
    }

    #[test]
    fn notation_round_trips(w in permutation(12), s in pattern_set(), f in filling()) {
        prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
        prop_assert_eq!(s.to_string().parse::<PatternSet>().unwrap(), s);
        prop_assert_eq!(f.to_string().parse::<Filling>().unwrap(), f);
    }

    #[test]
    fn avoider_counts_are_symmetry_invariant(s in pattern_set()) {
        let base = count_terms(&s, 7, Search::Auto).unwrap();
        for image in symmetry_orbit(&s) {
            prop_assert_eq!(&count_terms(&image, 7, Search::Auto).unwrap(), &base);
        }
    }

    #[test]
    fn symmetry_class_is_canonical(s in pattern_set()) {
        let c = trivial_symmetry_class(&s);
        prop_assert_eq!(trivial_symmetry_class(&c), c.clone());
        for image in symmetry_orbit(&s) {
            prop_assert_eq!(trivial_symmetry_class(&image), c.clone());
        }
    }

    #[test]
    fn shape_wilf_implies_wilf(a in pattern_set(), b in pattern_set()) {
        if shape_wilf_table(&a, &b, 5).is_equal() {
            prop_assert!(wilf_table(&a, &b, 5).unwrap().is_equal());
        }
    }

    #[test]
    fn filling_counts_bounded_by_transversals(s in pattern_set(), n in 1..=5usize) {
        for board in enumerate_boards(n) {
            prop_assert!(count_fillings(&board, &s) <= board.transversal_count());
        }
    }

    #[test]
    fn pop_pattern_sets_match_occurrence(gens in proptest::collection::vec((1..=4usize, 1..=4usize), 0..4), w in permutation(7)) {
        if let Ok(pop) = Pop::new(4, &gens) {
            prop_assert_eq!(pop.occurs_in(&w), !pop.to_pattern_set().avoided_by(&w));
        }
    }

    #[test]
    fn fan_bijection_round_trips(f in filling(), k in 2..=4usize, a in 1..=4usize, b in 1..=4usize) {
        prop_assume!(a <= k && b <= k);
        let map = TopRowBijection::fan(FanPop::new(k, a).unwrap(), FanPop::new(k, b).unwrap()).unwrap();
        prop_assume!(f.avoids(map.source_set()));
        let g = map.map(&f).unwrap();
        prop_assert_eq!(g.board(), f.board());
        prop_assert!(g.avoids(map.target_set()));
        prop_assert_eq!(map.inverse().map(&g).unwrap(), f);
    }
}

#[test]
fn squares_restrict_shape_wilf_to_wilf() {
    let s: PatternSet = "132,4321".parse().unwrap();
    let terms = count_terms(&s, 6, Search::Auto).unwrap();
    for n in 1..=6 {
        assert_eq!(count_fillings(&FerrersBoard::square(n), &s), terms[n]);
    }
}
