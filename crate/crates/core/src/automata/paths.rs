use super::growth::shortest_path;
use super::scc::Sccs;
use super::{Automaton, AutomatonError, Result, Word};

/// `(v₁, w, v₂)` with `w ≠ ε` and `v₁ w* v₂ ⊆ L`, or `None` for a finite
/// language. Uses the first state (in breadth-first order of the minimal
/// DFA) lying on a cycle, and shortest words around it.
pub fn pumping_triple(m: &Automaton) -> Option<(Word, Word, Word)> {
    let t = m.minimize();
    let adj: Vec<Vec<usize>> = (0..t.num_states())
        .map(|s| t.out(s).iter().map(|e| e.to).collect())
        .collect();
    let sccs = Sccs::compute(t.num_states(), &adj);
    let v = (0..t.num_states()).find(|&s| sccs.is_cyclic(sccs.comp[s], &adj))?;
    let within = |s: usize| sccs.comp[s] == sccs.comp[v];
    let (e, rest) = t
        .out(v)
        .iter()
        .filter(|e| within(e.to))
        .filter_map(|e| shortest_path(&t, e.to, |s| s == v, Some(&within)).map(|p| (e, p)))
        .min_by_key(|(_, p)| p.len())?;
    let mut w = vec![e.letter];
    w.extend(rest);
    let v1 = shortest_path(&t, t.initial(), |s| s == v, None)?;
    let v2 = shortest_path(&t, v, |s| t.is_terminal(s), None)?;
    Some((t.letters_of(&v1), t.letters_of(&w), t.letters_of(&v2)))
}

/// Loop-erased decomposition of an accepting path.
///
/// The path visits the pairwise distinct `anchors` in order; `spine[i]` is
/// the letter leading from `anchors[i]` to `anchors[i + 1]`. Every loop is a
/// first-return excursion at its anchor. The original word is recovered by
/// [`PathDecomposition::reassemble`]: at each anchor, its loops in order,
/// then the next spine letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub anchors: Vec<usize>,
    pub spine: Vec<Word>,
    pub loops: Vec<(usize, Word)>,
}

impl PathDecomposition {
    pub fn reassemble(&self) -> Word {
        let mut out = Vec::new();
        for (i, &a) in self.anchors.iter().enumerate() {
            for (_, w) in self.loops.iter().filter(|(s, _)| *s == a) {
                out.extend(w.iter().cloned());
            }
            if let Some(s) = self.spine.get(i) {
                out.extend(s.iter().cloned());
            }
        }
        out
    }
}

/// Decompose the accepting path of `w` by skipping, at each newly entered
/// state, to its last visit.
///
/// For a nondeterministic automaton the path is the one taking the first
/// usable edge (in edge order) at every step.
pub fn loop_erase_path(m: &Automaton, w: &[super::Letter]) -> Result<PathDecomposition> {
    let idx = m.letter_indices(w)?;
    let n = idx.len();
    // alive[i][s]: from state s at position i the rest of w can be accepted.
    let mut alive = vec![vec![false; m.num_states()]; n + 1];
    for s in m.terminals() {
        alive[n][s] = true;
    }
    for i in (0..n).rev() {
        for s in 0..m.num_states() {
            alive[i][s] = m
                .out(s)
                .iter()
                .any(|e| e.letter == idx[i] && alive[i + 1][e.to]);
        }
    }
    if !alive[0][m.initial()] {
        return Err(AutomatonError::Rejected);
    }
    let mut path = vec![m.initial()];
    for (i, &l) in idx.iter().enumerate() {
        let s = *path.last().unwrap();
        let e = m
            .out(s)
            .iter()
            .find(|e| e.letter == l && alive[i + 1][e.to])
            .unwrap();
        path.push(e.to);
    }
    let mut anchors = Vec::new();
    let mut spine = Vec::new();
    let mut loops = Vec::new();
    let mut i = 0;
    loop {
        let s = path[i];
        anchors.push(s);
        let visits: Vec<usize> = (i..=n).filter(|&k| path[k] == s).collect();
        for pair in visits.windows(2) {
            loops.push((s, w[pair[0]..pair[1]].to_vec()));
        }
        let j = *visits.last().unwrap();
        if j == n {
            break;
        }
        spine.push(vec![w[j].clone()]);
        i = j + 1;
    }
    Ok(PathDecomposition {
        anchors,
        spine,
        loops,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{format_word, word};

    fn integers_dfa() -> Automaton {
        Automaton::from_parts(
            &["t", "T"],
            3,
            0,
            &[0, 1, 2],
            &[(0, "t", 1), (0, "T", 2), (1, "t", 1), (2, "T", 2)],
        )
        .unwrap()
    }

    fn f3(t: (Word, Word, Word)) -> [String; 3] {
        [format_word(&t.0), format_word(&t.1), format_word(&t.2)]
    }

    #[test]
    fn pumping_integers() {
        assert_eq!(f3(pumping_triple(&integers_dfa()).unwrap()), ["t", "t", "ε"]);
    }

    #[test]
    fn pumping_ab_star() {
        let m = Automaton::from_regex("(ab)*", None).unwrap();
        assert_eq!(f3(pumping_triple(&m).unwrap()), ["ε", "ab", "ε"]);
    }

    #[test]
    fn pumping_finite_is_none() {
        let m = Automaton::from_regex("ab|b", None).unwrap();
        assert_eq!(pumping_triple(&m), None);
    }

    #[test]
    fn loop_erasure_integers() {
        let d = loop_erase_path(&integers_dfa(), &word("ttt")).unwrap();
        assert_eq!(d.spine, vec![word("t")]);
        assert_eq!(d.loops, vec![(1, word("t")), (1, word("t"))]);
        assert_eq!(d.reassemble(), word("ttt"));
    }

    #[test]
    fn loop_erasure_rejects() {
        assert_eq!(
            loop_erase_path(&integers_dfa(), &word("tT")),
            Err(AutomatonError::Rejected)
        );
    }
}
