//! Property tests for the algebraic identities the library relies on.

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ratxs::automata::{loop_erase_path, Automaton, Letter, Word};
use ratxs::grigorchuk::{
    complexity_level, quotient_orders, sec_n_count, Complexity, GrigWord, HnnElement,
};
use ratxs::groups::{Group, GroupElement, HoughtonPerm};
use ratxs::orders::{build_cone, wreath_cross_section};
use ratxs::verify::{
    bounded_power_membership, find_relation, pv_analysis, verify_relation, PvClass, ThreeValued,
    RELATION_BUDGET,
};

fn seeded_nfa(seed: u64, letters: &[&str], max_states: usize) -> Automaton {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=max_states);
    let mut edges = Vec::new();
    for from in 0..n {
        for l in letters {
            for to in 0..n {
                if rng.random_bool(0.25) {
                    edges.push((from, *l, to));
                }
            }
        }
    }
    let terminals: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.4)).collect();
    Automaton::from_parts(letters, n, 0, &terminals, &edges).unwrap()
}

fn words_upto(letters: &[&str], n: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut v = w.clone();
                    v.push(l.to_string());
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn grig(max: usize) -> impl Strategy<Value = GrigWord> {
    prop::string::string_regex(&format!("[abcd]{{0,{max}}}"))
        .unwrap()
        .prop_map(|s| s.parse::<GrigWord>().unwrap())
}

fn hnn() -> impl Strategy<Value = HnnElement> {
    (0u32..=3, grig(6)).prop_map(|(k, g)| HnnElement::new(k, g, 0))
}

fn vertex(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinize_and_trim_keep_the_language(seed in any::<u64>()) {
        let m = seeded_nfa(seed, &["a", "b"], 6);
        let d = m.determinize();
        let t = m.trim();
        prop_assert!(d.is_deterministic());
        for w in words_upto(&["a", "b"], 6) {
            let want = m.recognize(&w).unwrap();
            prop_assert_eq!(d.recognize(&w).unwrap(), want);
            prop_assert_eq!(t.recognize(&w).unwrap(), want);
        }
    }

    #[test]
    fn loop_erasure_reassembles(seed in any::<u64>()) {
        let m = seeded_nfa(seed, &["a", "b"], 5);
        for w in m.enumerate_words(7) {
            let p = loop_erase_path(&m, &w).unwrap();
            prop_assert_eq!(p.reassemble(), w);
            prop_assert!(p.anchors.len() <= m.num_states());
        }
    }

    #[test]
    fn evaluation_is_a_morphism(
        spec in prop::sample::select(vec!["Z^2", "F2", "BS(1,2)", "wr(C2,Z)", "wr(Z,Z)", "H2"]),
        seed in any::<u64>(),
    ) {
        let g = Group::parse(spec).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut word = |n: usize| -> Word {
            (0..rng.random_range(0..=n))
                .map(|_| g.alphabet()[rng.random_range(0..g.alphabet().len())].clone())
                .collect()
        };
        let (u, v, x) = (word(8), word(8), word(8));
        let uv = [u.clone(), v.clone()].concat();
        let eu = g.evaluate(&u).unwrap();
        let ev = g.evaluate(&v).unwrap();
        let ex = g.evaluate(&x).unwrap();
        prop_assert_eq!(g.evaluate(&uv).unwrap(), g.mul(&eu, &ev).unwrap());
        let left = g.mul(&g.mul(&eu, &ev).unwrap(), &ex).unwrap();
        let right = g.mul(&eu, &g.mul(&ev, &ex).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(g.is_identity(&g.mul(&eu, &g.inverse(&eu).unwrap()).unwrap()));
    }

    #[test]
    fn sections_follow_the_chain_rule(x in grig(10), y in grig(10), v in vertex(4)) {
        let lhs = x.mul(&y).section(&v);
        let rhs = x.section(&y.act(&v)).mul(&y.section(&v));
        prop_assert!(lhs.equals(&rhs), "(xy)_v = {} vs {}", lhs, rhs);
        prop_assert_eq!(x.mul(&y).act(&v), x.act(&y.act(&v)));
    }

    #[test]
    fn phi_stabilises_the_left_half(g in grig(10), v in vertex(3)) {
        let p = g.phi();
        prop_assert!(p.section(&[1]).equals(&g));
        let mut w = vec![0u8];
        w.extend(&v);
        prop_assert_eq!(p.act(&w)[0], 0);
    }

    #[test]
    fn lifting_keeps_the_element(x in hnn(), extra in 0u32..3, m in -2i64..=2) {
        let x = HnnElement::new(x.k, x.g.clone(), m);
        let y = x.lift(x.k + extra);
        prop_assert!(y.equals(&x));
        prop_assert!(x.mul(&x.inverse()).is_identity());
    }

    #[test]
    fn complexity_levels(x in hnn(), y in hnn()) {
        const CAP: i64 = 12;
        let kx = complexity_level(&x, CAP).unwrap();
        let ky = complexity_level(&y, CAP).unwrap();
        let conj = HnnElement::t().mul(&x).mul(&HnnElement::t_inv());
        let shifted = match kx {
            Complexity::NegInfinity => Complexity::NegInfinity,
            Complexity::Level(k) => Complexity::Level(k - 1),
        };
        prop_assert_eq!(complexity_level(&conj, CAP).unwrap(), shifted);
        let bound = match kx.max(ky) {
            Complexity::NegInfinity => Complexity::NegInfinity,
            Complexity::Level(k) => Complexity::Level(k + 1),
        };
        prop_assert!(complexity_level(&x.mul(&y), CAP).unwrap() <= bound);
    }

    #[test]
    fn compare_is_left_invariant(
        recipe in prop::sample::select(vec!["z+", "lex:2", "ext(z+,z+)", "wr(z+,z+)", "bs1:2"]),
        seed in any::<u64>(),
    ) {
        let cone = build_cone(recipe).unwrap();
        let g = cone.group();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut elem = || {
            let w: Word = (0..rng.random_range(0..=6))
                .map(|_| g.alphabet()[rng.random_range(0..g.alphabet().len())].clone())
                .collect();
            g.evaluate(&w).unwrap()
        };
        let (x, a, b) = (elem(), elem(), elem());
        let xa = g.mul(&x, &a).unwrap();
        let xb = g.mul(&x, &b).unwrap();
        prop_assert_eq!(cone.compare(&xa, &xb).unwrap(), cone.compare(&a, &b).unwrap());
    }

    #[test]
    fn wreath_cross_sections_have_signed_cycles(q in 2u32..=5) {
        let g = Group::parse(&format!("wr(C{q},Z)")).unwrap();
        let (lamp, base) = g.wreath_factors().unwrap();
        let lamp_words: Vec<String> = (0..q).map(|i| "a".repeat(i as usize)).collect();
        let l_all = Automaton::from_words(
            lamp.alphabet().to_vec(),
            &lamp_words.iter().map(|s| ratxs::automata::word(s)).collect::<Vec<_>>(),
        )
        .unwrap();
        let q_all = Automaton::from_regex("t+|T+|ε", Some(base.alphabet())).unwrap();
        let q_plus = Automaton::from_regex("t+", Some(base.alphabet())).unwrap();
        let m = wreath_cross_section(&g, &l_all, &q_all, &q_plus).unwrap();
        let pi: BTreeMap<Letter, i64> = g
            .alphabet()
            .iter()
            .map(|l| (l.clone(), g.z_projection(g.generator(l).unwrap()).unwrap()))
            .collect();
        for c in pv_analysis(&m, &pi).unwrap().components {
            prop_assert_ne!(c.class, PvClass::Mixed);
        }
    }

    #[test]
    fn membership_witnesses_reassemble(seed in any::<u64>()) {
        let g = Group::parse("H2").unwrap();
        let s: Vec<GroupElement> = vec![
            g.identity(),
            GroupElement::Houghton(HoughtonPerm::transposition(0, 1)),
            GroupElement::Houghton(HoughtonPerm::transposition(1, 2)),
        ];
        let t = g.generator("t").unwrap().clone();
        let tinv = g.generator("T").unwrap().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut target = g.identity();
        for _ in 0..rng.random_range(0..=5) {
            let step = if rng.random_bool(0.5) { &t } else { &tinv };
            target = g.mul(&g.mul(&target, &s[rng.random_range(0..3)]).unwrap(), step).unwrap();
        }
        match bounded_power_membership(&g, &target, &s, 2, 5).unwrap() {
            ThreeValued::Yes => prop_assert!(g.is_identity(&target)),
            ThreeValued::YesWitness(w) => {
                prop_assert!(w.len() <= 5);
                let mut acc = g.identity();
                for f in &w {
                    let step = if f.up { &t } else { &tinv };
                    acc = g.mul(&g.mul(&acc, &s[f.s]).unwrap(), step).unwrap();
                }
                prop_assert_eq!(acc, target);
            }
            ThreeValued::NoWithinBounds => {}
        }
    }

    #[test]
    fn found_relations_hold(
        spec in prop::sample::select(vec!["Sym_3", "C4", "Z^2", "C6"]),
        seed in any::<u64>(),
    ) {
        let g = Group::parse(spec).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut elem = || {
            let w: Word = (0..rng.random_range(1..=4))
                .map(|_| g.alphabet()[rng.random_range(0..g.alphabet().len())].clone())
                .collect();
            g.evaluate(&w).unwrap()
        };
        let (x, y) = (elem(), elem());
        let (w1, w2) = find_relation(&g, &x, &y, RELATION_BUDGET).unwrap();
        prop_assert_eq!(w1.len(), w2.len());
        prop_assert_ne!(&w1, &w2);
        prop_assert!(verify_relation(&g, &w1, &w2, &x, &y).unwrap());
    }
}

#[test]
fn quotient_orders_divide_powers_of_two() {
    for n in 1..=4 {
        let orders = quotient_orders(n, 1 << 13).unwrap();
        for o in orders {
            assert!(o.is_power_of_two() && o <= 1 << n, "order {o} in G_{n}");
        }
    }
}

#[test]
fn extension_cone_is_lexicographic() {
    let ext = build_cone("ext(z+,z+)").unwrap();
    let lex = build_cone("lex:2").unwrap();
    let ball = ext.group().ball(6, 100_000).unwrap();
    for x in &ball.elements {
        assert_eq!(ext.contains(x), lex.contains(x), "{}", ext.group().display(x));
    }
}

#[test]
fn section_counts_stay_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 0..=4u32 {
        let xs: Vec<HnnElement> = (0..60)
            .map(|_| {
                let len = rng.random_range(0..=10);
                HnnElement::from_grig(GrigWord::random(&mut rng, len).phi_pow(n as usize))
            })
            .collect();
        let count = sec_n_count(&xs, n).unwrap();
        assert!(count <= 522, "sec_{n} = {count}");
    }
}
