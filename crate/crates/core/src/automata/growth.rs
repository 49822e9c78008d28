//! Growth of regular languages: finite, polynomial (bounded), exponential.
//!
//! Classification works on the minimal DFA. A trimmed DFA has polynomially
//! bounded language exactly when every strongly connected component is
//! acyclic or a single simple cycle. Otherwise some state has two distinct loops starting with
//! different letters, and their labels do not commute.

use std::collections::VecDeque;

use super::scc::Sccs;
use super::{Automaton, AutomatonError, Result, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowthClass {
    Finite,
    /// The language lies in `w₁* w₂* ⋯ wₘ*` for the listed words.
    PolynomialBounded(Vec<Word>),
    /// `v₁ {w₁, w₂}* v₂` lies in the language and `w₁w₂ ≠ w₂w₁`.
    Exponential {
        v1: Word,
        w1: Word,
        w2: Word,
        v2: Word,
    },
}

/// Internal edges of each component in a DFA, as `(state, letter, target)`.
struct Structure {
    d: Automaton,
    sccs: Sccs,
    cyclic: Vec<bool>,
    internal_edges: Vec<usize>,
}

impl Structure {
    fn new(m: &Automaton) -> Self {
        let d = m.minimize();
        let adj: Vec<Vec<usize>> = (0..d.num_states())
            .map(|s| d.out(s).iter().map(|e| e.to).collect())
            .collect();
        let sccs = Sccs::compute(d.num_states(), &adj);
        let cyclic = (0..sccs.members.len())
            .map(|c| sccs.is_cyclic(c, &adj))
            .collect();
        let mut internal_edges = vec![0; sccs.members.len()];
        for e in d.edges() {
            if sccs.comp[e.from] == sccs.comp[e.to] {
                internal_edges[sccs.comp[e.from]] += 1;
            }
        }
        Structure {
            d,
            sccs,
            cyclic,
            internal_edges,
        }
    }

    fn is_simple_cycle(&self, c: usize) -> bool {
        self.internal_edges[c] == self.sccs.members[c].len()
    }

    fn same(&self, a: usize, b: usize) -> bool {
        self.sccs.comp[a] == self.sccs.comp[b]
    }
}

/// Shortest word from `from` to a state satisfying `goal`, optionally
/// staying inside the component of `from`. BFS visits letters in order, so
/// ties break length-lexicographically.
pub(crate) fn shortest_path(
    m: &Automaton,
    from: usize,
    goal: impl Fn(usize) -> bool,
    within: Option<&dyn Fn(usize) -> bool>,
) -> Option<Vec<usize>> {
    if goal(from) {
        return Some(vec![]);
    }
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; m.num_states()];
    let mut seen = vec![false; m.num_states()];
    seen[from] = true;
    let mut q = VecDeque::from([from]);
    while let Some(s) = q.pop_front() {
        for e in m.out(s) {
            if seen[e.to] || within.is_some_and(|f| !f(e.to)) {
                continue;
            }
            seen[e.to] = true;
            parent[e.to] = Some((s, e.letter));
            if goal(e.to) {
                let mut w = Vec::new();
                let mut cur = e.to;
                while let Some((p, l)) = parent[cur] {
                    w.push(l);
                    cur = p;
                }
                w.reverse();
                return Some(w);
            }
            q.push_back(e.to);
        }
    }
    None
}

pub fn growth_classify(m: &Automaton) -> GrowthClass {
    let st = Structure::new(m);
    let d = &st.d;
    if !st.cyclic.iter().any(|&c| c) {
        return GrowthClass::Finite;
    }
    // States in BFS order are just 0..n because the DFA is canonical.
    for v in 0..d.num_states() {
        let c = st.sccs.comp[v];
        if !st.cyclic[c] || st.is_simple_cycle(c) {
            continue;
        }
        let inner: Vec<_> = d.out(v).iter().filter(|e| st.same(v, e.to)).collect();
        if inner.len() < 2 {
            continue;
        }
        let within = |s: usize| st.same(v, s);
        let loop_via = |e: &super::Edge| {
            let mut w = vec![e.letter];
            w.extend(shortest_path(d, e.to, |s| s == v, Some(&within)).expect("same component"));
            w
        };
        let w1 = loop_via(inner[0]);
        let w2 = loop_via(inner[1]);
        let v1 = shortest_path(d, d.initial(), |s| s == v, None).expect("trimmed");
        let v2 = shortest_path(d, v, |s| d.is_terminal(s), None).expect("trimmed");
        return GrowthClass::Exponential {
            v1: d.letters_of(&v1),
            w1: d.letters_of(&w1),
            w2: d.letters_of(&w2),
            v2: d.letters_of(&v2),
        };
    }
    GrowthClass::PolynomialBounded(
        bounded_decomposition_inner(&st, DEFAULT_PATH_CAP)
            .expect("polynomial language with more condensation paths than the default cap"),
    )
}

/// Default cap on the number of condensation paths explored.
pub const DEFAULT_PATH_CAP: usize = 10_000;

/// Words `w₁, …, wₘ` with `L ⊆ w₁* ⋯ wₘ*`, for a polynomially bounded `L`.
///
/// Each accepted path visits a chain of components; inside a cycle component
/// it contributes a power of the cycle word read from the entry state
/// followed by a fixed partial cycle. Fixed words `u` are covered by `u*`.
/// The chains of all condensation paths are concatenated and adjacent equal
/// words merged (`w* w* = w*`).
pub fn bounded_decomposition(m: &Automaton, cap: usize) -> Result<Vec<Word>> {
    let st = Structure::new(m);
    let bad = (0..st.sccs.members.len()).any(|c| st.cyclic[c] && !st.is_simple_cycle(c));
    if bad {
        return Err(AutomatonError::NotPolynomial);
    }
    bounded_decomposition_inner(&st, cap)
}

fn bounded_decomposition_inner(st: &Structure, cap: usize) -> Result<Vec<Word>> {
    let d = &st.d;
    if d.is_empty() {
        return Ok(vec![]);
    }
    let mut chains: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    walk(st, d.initial(), &mut current, &mut chains, cap)?;
    let mut unique: Vec<Vec<Vec<usize>>> = Vec::new();
    for c in chains {
        if !unique.contains(&c) {
            unique.push(c);
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for w in unique.into_iter().flatten() {
        if w.is_empty() || out.last() == Some(&w) {
            continue;
        }
        out.push(w);
    }
    Ok(out.iter().map(|w| d.letters_of(w)).collect())
}

fn walk(
    st: &Structure,
    entry: usize,
    current: &mut Vec<Vec<usize>>,
    chains: &mut Vec<Vec<Vec<usize>>>,
    cap: usize,
) -> Result<()> {
    let d = &st.d;
    let c = st.sccs.comp[entry];
    // Visit the cycle (or the lone state) starting at the entry state.
    let mut ring = vec![entry];
    let mut cycle_word = Vec::new();
    if st.cyclic[c] {
        let mut s = entry;
        loop {
            let e = d
                .out(s)
                .iter()
                .find(|e| st.same(s, e.to))
                .expect("cycle edge");
            cycle_word.push(e.letter);
            s = e.to;
            if s == entry {
                break;
            }
            ring.push(s);
        }
    }
    let mut prefix: Vec<usize> = Vec::new();
    for (i, &u) in ring.iter().enumerate() {
        if i > 0 {
            prefix.push(cycle_word[i - 1]);
        }
        let base = current.len();
        current.push(cycle_word.clone());
        if d.is_terminal(u) {
            current.push(prefix.clone());
            if chains.len() == cap {
                return Err(AutomatonError::Capacity {
                    what: "condensation paths",
                    cap,
                });
            }
            chains.push(current.clone());
            current.pop();
        }
        for e in d.out(u).iter().filter(|e| !st.same(u, e.to)) {
            let mut step = prefix.clone();
            step.push(e.letter);
            current.push(step);
            walk(st, e.to, current, chains, cap)?;
            current.pop();
        }
        current.truncate(base);
    }
    Ok(())
}
