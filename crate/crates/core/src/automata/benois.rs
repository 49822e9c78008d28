//! Free reduction of regular languages.
//!
//! Saturate with epsilon moves: whenever a path reads `x` then `x⁻¹`
//! (possibly through existing epsilon moves), add an epsilon move across it.
//! The saturated automaton accepts every word obtained from an accepted word
//! by cancellations; intersecting with the reduced words keeps exactly the
//! free reductions.

use std::collections::{BTreeMap, HashSet};

use super::regex::EpsNfa;
use super::{Automaton, AutomatonError, Letter, Result};

/// Validate that `inverse` is a fixed-point-free involution of the alphabet
/// and return it as a letter-index table.
fn inverse_table(alphabet: &[Letter], inverse: &BTreeMap<Letter, Letter>) -> Result<Vec<usize>> {
    alphabet
        .iter()
        .map(|x| {
            let y = inverse
                .get(x)
                .ok_or_else(|| AutomatonError::InvalidInverse(format!("no inverse for `{x}`")))?;
            if y == x {
                return Err(AutomatonError::InvalidInverse(format!(
                    "`{x}` is its own inverse"
                )));
            }
            if inverse.get(y) != Some(x) {
                return Err(AutomatonError::InvalidInverse(format!(
                    "inverse of `{y}` is not `{x}`"
                )));
            }
            alphabet
                .iter()
                .position(|a| a == y)
                .ok_or_else(|| AutomatonError::InvalidInverse(format!("`{y}` not in alphabet")))
        })
        .collect()
}

/// Automaton of all freely reduced words over `alphabet`.
pub fn reduced_words(alphabet: &[Letter], inverse: &BTreeMap<Letter, Letter>) -> Result<Automaton> {
    let inv = inverse_table(alphabet, inverse)?;
    let k = alphabet.len();
    // state 0: start; state 1 + x: last letter was x
    let mut edges = Vec::new();
    for from in 0..=k {
        for x in 0..k {
            if from == 0 || inv[from - 1] != x {
                edges.push((from, x, 1 + x));
            }
        }
    }
    let names = std::iter::once("start".to_string())
        .chain(alphabet.iter().cloned())
        .collect();
    Ok(Automaton::new(alphabet.to_vec(), k + 1, 0, 0..=k, edges)?.with_state_names(names))
}

/// The language of free reductions of the words of `m`.
pub fn benois_reduce(m: &Automaton, inverse: &BTreeMap<Letter, Letter>) -> Result<Automaton> {
    let inv = inverse_table(m.alphabet(), inverse)?;
    let n = m.num_states();
    let mut eps: HashSet<(usize, usize)> = HashSet::new();
    loop {
        let closure = eps_closure(n, &eps);
        let mut added = Vec::new();
        for e in m.edges() {
            for &r in &closure[e.to] {
                for f in m.out(r).iter().filter(|f| f.letter == inv[e.letter]) {
                    if e.from != f.to && !eps.contains(&(e.from, f.to)) {
                        added.push((e.from, f.to));
                    }
                }
            }
        }
        if added.is_empty() {
            break;
        }
        eps.extend(added);
    }
    let mut sat = EpsNfa::default();
    sat.embed(m);
    sat.eps = eps.into_iter().collect();
    sat.eps.sort_unstable();
    sat.initial = m.initial();
    for t in m.terminals() {
        sat.terminal[t] = true;
    }
    let saturated = sat.into_automaton(m.alphabet().to_vec());
    Ok(saturated.intersect(&reduced_words(m.alphabet(), inverse)?))
}

fn eps_closure(n: usize, eps: &HashSet<(usize, usize)>) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for &(p, q) in eps {
        out[p].push(q);
    }
    (0..n)
        .map(|p| {
            let mut seen = vec![false; n];
            seen[p] = true;
            let mut stack = vec![p];
            let mut res = vec![p];
            while let Some(q) = stack.pop() {
                for &r in &out[q] {
                    if !seen[r] {
                        seen[r] = true;
                        res.push(r);
                        stack.push(r);
                    }
                }
            }
            res
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{format_word, word};

    fn f2_inverse() -> BTreeMap<Letter, Letter> {
        [("a", "A"), ("A", "a"), ("b", "B"), ("B", "b")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect()
    }

    fn f2() -> Vec<Letter> {
        word("aAbB")
    }

    /// Free reduction by a stack.
    fn reduce(w: &[Letter], inv: &BTreeMap<Letter, Letter>) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::new();
        for x in w {
            if out.last() == inv.get(x) {
                out.pop();
            } else {
                out.push(x.clone());
            }
        }
        out
    }

    #[test]
    fn cancelling_pairs() {
        let m = Automaton::from_regex("aA|bB", Some(&f2())).unwrap();
        let r = benois_reduce(&m, &f2_inverse()).unwrap();
        let got: Vec<String> = r
            .enumerate_words(4)
            .iter()
            .map(|w| format_word(w))
            .collect();
        assert_eq!(got, ["ε"]);
    }

    #[test]
    fn conjugates() {
        let m = Automaton::from_regex("a(bB)*A b", Some(&f2())).unwrap();
        let r = benois_reduce(&m, &f2_inverse()).unwrap();
        let got: Vec<String> = r
            .enumerate_words(6)
            .iter()
            .map(|w| format_word(w))
            .collect();
        assert_eq!(got, ["b"]);
    }

    #[test]
    fn agrees_with_stack_reduction() {
        let inv = f2_inverse();
        let m = Automaton::from_regex("(ab|BA|aA)*b?", Some(&f2())).unwrap();
        let r = benois_reduce(&m, &inv).unwrap();
        let mut expected: Vec<Vec<Letter>> = m
            .enumerate_words(10)
            .iter()
            .map(|w| reduce(w, &inv))
            .filter(|w| w.len() <= 4)
            .collect();
        expected.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        expected.dedup();
        let mut got = r.enumerate_words(4);
        got.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        assert_eq!(got, expected);
    }

    #[test]
    fn rejects_bad_involution() {
        let mut inv = f2_inverse();
        inv.insert("a".into(), "a".into());
        let m = Automaton::from_regex("a", Some(&f2())).unwrap();
        assert!(matches!(
            benois_reduce(&m, &inv),
            Err(AutomatonError::InvalidInverse(_))
        ));
    }
}
