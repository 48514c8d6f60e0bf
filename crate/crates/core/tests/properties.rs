use std::sync::OnceLock;

use proptest::prelude::*;
use weakorder::bruhat::{
    bruhat_reachable, dihedral_profile_words, pair_labels, reflections_reached, DihedralWord,
    Generator,
};
use weakorder::weak_order::{is_closed, join_bruteforce, leq_weak};
use weakorder::{CoxeterSystem, ElemId, RootSubset};

fn cached(name: &'static str) -> &'static CoxeterSystem {
    static SYSTEMS: OnceLock<Vec<(&'static str, CoxeterSystem)>> = OnceLock::new();
    let all = SYSTEMS.get_or_init(|| {
        ["A3", "B3", "I2(5)", "I2(8)", "H3", "D4"]
            .into_iter()
            .map(|n| (n, CoxeterSystem::named(n).unwrap()))
            .collect()
    });
    &all.iter().find(|(n, _)| *n == name).unwrap().1
}

fn types() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A3", "B3", "I2(5)", "I2(8)"])
}

fn triple() -> impl Strategy<Value = (&'static str, u32, u32, u32)> {
    types().prop_flat_map(|name| {
        let n = cached(name).group().order() as u32;
        (Just(name), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn join_is_a_lattice_operation((name, a, b, c) in triple()) {
        let g = cached(name).group();
        let (u, v, w) = (ElemId(a), ElemId(b), ElemId(c));
        let j = |x, y| join_bruteforce(g, x, y).unwrap();
        prop_assert_eq!(j(u, v), j(v, u));
        prop_assert_eq!(j(u, u), u);
        prop_assert_eq!(j(j(u, v), w), j(u, j(v, w)));
        prop_assert!(leq_weak(g, u, j(u, v)) && leq_weak(g, v, j(u, v)));
    }

    #[test]
    fn reachability_is_monotone_in_labels((name, a, b, _c) in triple(), mask in any::<u128>()) {
        let sys = cached(name);
        let g = sys.group();
        let labels = pair_labels(g, ElemId(a), ElemId(b));
        let sub = RootSubset::from_bits(labels.bits() & mask);
        prop_assert!(bruhat_reachable(g, sub).is_subset(&bruhat_reachable(g, labels)));
        let reached = reflections_reached(g, labels);
        prop_assert!(labels.is_subset(reached));
        for s in 0..g.rank() {
            prop_assert_eq!(reached.contains(s), labels.contains(s));
        }
    }

    #[test]
    fn words_round_trip_through_text((name, a, _b, _c) in triple()) {
        let sys = cached(name);
        let w = ElemId(a);
        let text = sys.group().format_word(w);
        let parsed = sys.parse_element(&text).unwrap();
        prop_assert_eq!(parsed.element, w);
        prop_assert!(parsed.reduced);
    }
}

#[test]
fn complements_of_inversion_sets_are_closed() {
    for name in ["A3", "B3", "H3", "D4"] {
        let sys = cached(name);
        let n = sys.table().len();
        for w in sys.group().elements() {
            let inv = sys.group().inversions(w);
            assert!(is_closed(sys.table(), inv), "{name}");
            assert!(is_closed(sys.table(), inv.complement(n)), "{name}");
        }
    }
}

#[test]
fn generators_change_length_by_one() {
    for name in ["A3", "B3", "H3"] {
        let g = cached(name).group();
        for w in g.elements() {
            for s in 0..g.rank() {
                let lw = g.length(w) as i64;
                let ls = g.length(g.left_mul(s, w)) as i64;
                let rs = g.length(g.right_mul(w, s)) as i64;
                assert_eq!((ls - lw).abs(), 1);
                assert_eq!((rs - lw).abs(), 1);
                // two ways to compute the inversion set of s w
                let mut word = vec![s];
                word.extend(g.word(w));
                assert_eq!(g.from_word(&word).unwrap(), g.left_mul(s, w));
            }
        }
    }
}

#[test]
fn phi_is_a_bijection_onto_reflections() {
    for name in ["A3", "B3", "H3", "D4"] {
        let sys = cached(name);
        let g = sys.group();
        let mut seen = std::collections::HashSet::new();
        for r in 0..sys.table().len() {
            let t = g.phi(r);
            assert_eq!(g.phi_inverse(t), Ok(r));
            assert_eq!(g.inverse(t), t);
            assert_eq!(g.length(t) % 2, 1);
            assert!(seen.insert(t));
        }
        let reflections = g
            .elements()
            .filter(|&w| g.reflection_root(w).is_some())
            .count();
        assert_eq!(reflections, sys.table().len());
    }
}

/// Reduced dihedral name of an element: `first` and length.
fn dihedral(sys: &CoxeterSystem, w: ElemId) -> DihedralWord {
    let word = sys.group().word(w);
    let first = if word.first() == Some(&1) {
        Generator::R
    } else {
        Generator::S
    };
    let m = sys.graph().dihedral_order().unwrap() as usize;
    DihedralWord::new(first, word.len()).normalize(m)
}

#[test]
fn dihedral_case_analysis() {
    for m in 3..=12usize {
        let sys = CoxeterSystem::named(&format!("I2({m})")).unwrap();
        let g = sys.group();
        for u in g.elements() {
            for v in g.elements() {
                let reached = reflections_reached(g, pair_labels(g, u, v));
                let comparable = leq_weak(g, u, v) || leq_weak(g, v, u);
                if !comparable {
                    assert_eq!(reached, sys.table().all(), "m={m}");
                    continue;
                }
                let top = if leq_weak(g, u, v) { v } else { u };
                let name = dihedral(&sys, top);
                let d = name.len.saturating_sub(1);
                if top == g.identity() || 2 * d + 1 > m {
                    continue;
                }
                // every reflection reached is (first other)^b first with b <= d
                for r in reached.iter() {
                    let t = dihedral(&sys, g.phi(r));
                    // a word of length m has both forms
                    assert!(t.first == name.first || t.len == m, "m={m}");
                    assert!(t.len / 2 <= d, "m={m}");
                }
                let profile = dihedral_profile_words(m, name);
                assert_eq!(profile.len(), reached.len());
            }
        }
    }
}
