//! Small hand-built automata used as fixtures and examples.

use crate::automata::{reduced_words, Automaton};
use crate::groups::Group;

/// `{ε} ∪ {tⁿ} ∪ {Tⁿ}` over `{t, T}`: a cross-section of Z.
pub fn integers() -> Automaton {
    Automaton::from_parts(
        &["t", "T"],
        3,
        0,
        &[0, 1, 2],
        &[(0, "t", 1), (1, "t", 1), (0, "T", 2), (2, "T", 2)],
    )
    .expect("valid automaton")
    .with_state_names(vec!["*".into(), "v+".into(), "v-".into()])
}

/// `{tⁿ : n ≡ 1, 2 mod 3}` with an extra state that is not reachable.
pub fn residues_mod3() -> Automaton {
    Automaton::from_parts(
        &["t", "T"],
        5,
        0,
        &[1, 2],
        &[
            (0, "t", 1),
            (1, "t", 2),
            (2, "t", 0),
            (2, "T", 3),
            (4, "t", 1),
        ],
    )
    .expect("valid automaton")
    .with_state_names(vec![
        "*".into(),
        "r1".into(),
        "r2".into(),
        "sink".into(),
        "orphan".into(),
    ])
}

/// Nondeterministic automaton for `𝒯 ⊔ 𝒯a(t⁺a)*𝒯` with
/// `𝒯 = t⁺ ⊔ T⁺ ⊔ {ε}`: a cross-section of `C₂ ≀ Z` over `{a, t, T}`.
pub fn lamplighter() -> Automaton {
    // 0 *, 1 t⁺, 2 T⁺, 3 after a, 4 t⁺ between lamps, 5 final t⁺, 6 final T⁺
    Automaton::from_parts(
        &["a", "t", "T"],
        7,
        0,
        &[0, 1, 2, 3, 5, 6],
        &[
            (0, "t", 1),
            (0, "T", 2),
            (0, "a", 3),
            (1, "a", 3),
            (2, "a", 3),
            (1, "t", 1),
            (2, "T", 2),
            (3, "t", 4),
            (4, "a", 3),
            (4, "t", 4),
            (3, "t", 5),
            (3, "T", 6),
            (5, "t", 5),
            (6, "T", 6),
        ],
    )
    .expect("valid automaton")
    .with_state_names(
        ["*", "p1", "m1", "a1", "p2", "tail+", "tail-"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    )
}

/// Freely reduced words of F₂ over `{a, A, b, B}`.
pub fn free_reduced() -> Automaton {
    let g = Group::parse("F2").expect("F2");
    reduced_words(g.alphabet(), &g.inverse_map()).expect("valid inverse map")
}
