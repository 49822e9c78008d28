use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use super::{Result, VerifyError};
use crate::automata::scc::Sccs;
use crate::automata::{Automaton, Letter};
use crate::groups::{Group, GroupElement};

/// Simple cycles enumerated per strongly connected component.
pub const CYCLE_CAP: usize = 100_000;

/// Sign pattern of the cycle weights of one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PvClass {
    StrictlyPositive,
    StrictlyNegative,
    ZeroOnly,
    /// Any other combination, including positive with zero.
    Mixed,
}

impl PvClass {
    pub fn of(weights: &[i64]) -> PvClass {
        if weights.iter().all(|&w| w > 0) {
            PvClass::StrictlyPositive
        } else if weights.iter().all(|&w| w < 0) {
            PvClass::StrictlyNegative
        } else if weights.iter().all(|&w| w == 0) {
            PvClass::ZeroOnly
        } else {
            PvClass::Mixed
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PvComponent {
    pub states: Vec<String>,
    pub class: PvClass,
    /// Weight of each simple cycle, in enumeration order.
    pub weights: Vec<i64>,
    /// Label of each simple cycle, read from its smallest state.
    pub cycles: Vec<String>,
}

impl PvComponent {
    /// Cycles of both strict signs: the loop image is not contained in a
    /// half-line.
    pub fn has_both_signs(&self) -> bool {
        self.weights.iter().any(|&w| w > 0) && self.weights.iter().any(|&w| w < 0)
    }
}

/// Cyclic components of a trimmed automaton, in topological order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PvReport {
    pub components: Vec<PvComponent>,
}

impl PvReport {
    pub fn component_of(&self, state: &str) -> Option<&PvComponent> {
        self.components
            .iter()
            .find(|c| c.states.iter().any(|s| s == state))
    }
}

fn adjacency(m: &Automaton) -> Vec<Vec<usize>> {
    (0..m.num_states())
        .map(|s| m.out(s).iter().map(|e| e.to).collect())
        .collect()
}

fn letter_weights(m: &Automaton, pi: &BTreeMap<Letter, i64>) -> Result<Vec<i64>> {
    m.alphabet()
        .iter()
        .map(|l| {
            pi.get(l)
                .copied()
                .ok_or_else(|| VerifyError::Domain(format!("no weight for letter `{l}`")))
        })
        .collect()
}

/// Simple cycles of the component `members`, each rooted at its smallest
/// state, in depth-first order.
fn simple_cycles(
    m: &Automaton,
    members: &[usize],
    w: &[i64],
    cap: usize,
) -> Result<(Vec<i64>, Vec<String>)> {
    let inside: HashSet<usize> = members.iter().copied().collect();
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    let mut weights = Vec::new();
    let mut labels = Vec::new();
    for &root in &sorted {
        // (state, next edge offset), path letters, on-path flags
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        let mut path: Vec<usize> = Vec::new();
        let mut on_path: HashSet<usize> = HashSet::from([root]);
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            let out = m.out(v);
            if *i == out.len() {
                stack.pop();
                on_path.remove(&v);
                path.pop();
                continue;
            }
            let e = out[*i];
            *i += 1;
            if !inside.contains(&e.to) || e.to < root {
                continue;
            }
            if e.to == root {
                if weights.len() == cap {
                    return Err(VerifyError::capacity(
                        format!(
                            "simple cycles in component {:?} ({} weights so far: {:?}…)",
                            sorted.iter().map(|&s| m.state_name(s)).collect::<Vec<_>>(),
                            weights.len(),
                            &weights[..weights.len().min(8)]
                        ),
                        cap,
                    ));
                }
                let mut letters: Vec<usize> = path.clone();
                letters.push(e.letter);
                weights.push(letters.iter().map(|&l| w[l]).sum());
                labels.push(letters.iter().map(|&l| m.alphabet()[l].as_str()).collect());
            } else if !on_path.contains(&e.to) {
                on_path.insert(e.to);
                path.push(e.letter);
                stack.push((e.to, 0));
            }
        }
    }
    Ok((weights, labels))
}

/// Sum the letter weights `pi` along every simple cycle of every cyclic
/// component and classify the signs.
pub fn pv_analysis(m: &Automaton, pi: &BTreeMap<Letter, i64>) -> Result<PvReport> {
    let m = m.trim();
    let w = letter_weights(&m, pi)?;
    let adj = adjacency(&m);
    let sccs = Sccs::compute(m.num_states(), &adj);
    let mut components = Vec::new();
    for c in 0..sccs.members.len() {
        if !sccs.is_cyclic(c, &adj) {
            continue;
        }
        let (weights, cycles) = simple_cycles(&m, &sccs.members[c], &w, CYCLE_CAP)?;
        let mut states: Vec<usize> = sccs.members[c].clone();
        states.sort_unstable();
        components.push(PvComponent {
            states: states
                .iter()
                .map(|&s| m.state_name(s).to_string())
                .collect(),
            class: PvClass::of(&weights),
            weights,
            cycles,
        });
    }
    Ok(PvReport { components })
}

/// The finite fiber set built from a cross-section automaton of a group
/// mapping onto Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSet {
    /// Largest `|π|` of a letter.
    pub j: i64,
    /// Sorted, contains the identity.
    pub s: Vec<GroupElement>,
    /// `2|V| − 1` for the trimmed automaton.
    pub m: usize,
    /// Largest loop-word length explored, `J·|K|² + |K|` over components.
    pub length_bound: usize,
}

/// `S = {e} ∪ h(ev(𝒜) ∪ {w̄ : w a path inside one component, |π(w̄)| ≤ J})`
/// with `h(g) = g·t^(−π(g))`, loop words of length at most `J·|K|² + |K|`.
///
/// Fails if some component has loops of both signs, or if more than `cap`
/// (state, element) pairs are visited in one component.
pub fn fiber_set(m: &Automaton, group: &Group, cap: usize) -> Result<SSet> {
    let mut gens = BTreeMap::new();
    for l in m.alphabet() {
        gens.insert(l.clone(), group.generator(l)?.clone());
    }
    fiber_set_with(m, group, &gens, cap)
}

/// As [`fiber_set`] with letters standing for arbitrary elements (say
/// `t²`).
pub fn fiber_set_with(
    m: &Automaton,
    group: &Group,
    gens: &BTreeMap<Letter, GroupElement>,
    cap: usize,
) -> Result<SSet> {
    let m = m.trim();
    let mut letters = Vec::with_capacity(m.alphabet().len());
    let mut pi = BTreeMap::new();
    for l in m.alphabet() {
        let g = gens
            .get(l)
            .ok_or_else(|| VerifyError::Domain(format!("no element for letter `{l}`")))?;
        let p = group.z_projection(g).ok_or_else(|| {
            VerifyError::Domain(format!("{} has no projection onto Z", group.spec()))
        })?;
        pi.insert(l.clone(), p);
        letters.push(g.clone());
    }
    let report = pv_analysis(&m, &pi)?;
    if let Some(c) = report.components.iter().find(|c| c.has_both_signs()) {
        return Err(VerifyError::Domain(format!(
            "component {:?} has loops of both signs",
            c.states
        )));
    }
    let j = pi.values().map(|p| p.abs()).max().unwrap_or(0);
    let kernel = |g: &GroupElement| {
        group
            .kernel_part(g)
            .ok_or_else(|| VerifyError::Domain("kernel part undefined".into()))
    };
    let mut s: BTreeSet<GroupElement> = BTreeSet::from([group.identity()]);
    for g in &letters {
        s.insert(kernel(g)?);
    }
    let adj = adjacency(&m);
    let sccs = Sccs::compute(m.num_states(), &adj);
    let mut length_bound = 0;
    for members in &sccs.members {
        let k = members.len();
        let bound = j as usize * k * k + k;
        length_bound = length_bound.max(bound);
        let inside: HashSet<usize> = members.iter().copied().collect();
        let mut seen: HashSet<(usize, GroupElement)> = HashSet::new();
        let mut q: VecDeque<(usize, GroupElement, usize)> = VecDeque::new();
        for &u in members {
            let e = group.identity();
            seen.insert((u, e.clone()));
            q.push_back((u, e, 0));
        }
        while let Some((v, g, len)) = q.pop_front() {
            if group.z_projection(&g).is_some_and(|p| p.abs() <= j) {
                s.insert(kernel(&g)?);
            }
            if len == bound {
                continue;
            }
            for e in m.out(v) {
                if !inside.contains(&e.to) {
                    continue;
                }
                let h = group.mul(&g, &letters[e.letter])?;
                if seen.insert((e.to, h.clone())) {
                    if seen.len() > cap {
                        return Err(VerifyError::capacity("fiber set search states", cap));
                    }
                    q.push_back((e.to, h, len + 1));
                }
            }
        }
    }
    Ok(SSet {
        j,
        s: s.into_iter().collect(),
        m: 2 * m.num_states() - 1,
        length_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn pi(pairs: &[(&str, i64)]) -> BTreeMap<Letter, i64> {
        pairs.iter().map(|&(l, w)| (l.to_string(), w)).collect()
    }

    #[test]
    fn integers_split_by_sign() {
        let r = pv_analysis(&catalog::integers(), &pi(&[("t", 1), ("T", -1)])).unwrap();
        assert_eq!(r.components.len(), 2);
        let plus = r.component_of("v+").unwrap();
        assert_eq!(plus.class, PvClass::StrictlyPositive);
        assert_eq!(plus.weights, vec![1]);
        let minus = r.component_of("v-").unwrap();
        assert_eq!(minus.class, PvClass::StrictlyNegative);
        assert_eq!(minus.weights, vec![-1]);
    }

    #[test]
    fn lamplighter_loops() {
        let r = pv_analysis(
            &catalog::lamplighter(),
            &pi(&[("a", 0), ("t", 1), ("T", -1)]),
        )
        .unwrap();
        let c = r.component_of("a1").unwrap();
        assert_eq!(c.states, vec!["a1", "p2"]);
        assert_eq!(c.cycles, vec!["ta", "t"]);
        assert_eq!(c.weights, vec![1, 1]);
        assert_eq!(c.class, PvClass::StrictlyPositive);
        assert!(r.components.iter().all(|c| c.class != PvClass::Mixed));
    }

    #[test]
    fn opposite_loops_are_mixed() {
        let m =
            Automaton::from_parts(&["t", "T"], 1, 0, &[0], &[(0, "t", 0), (0, "T", 0)]).unwrap();
        let r = pv_analysis(&m, &pi(&[("t", 1), ("T", -1)])).unwrap();
        assert_eq!(r.components[0].class, PvClass::Mixed);
        assert!(r.components[0].has_both_signs());
        let g = Group::parse("Z").unwrap();
        assert!(fiber_set(&m, &g, 1000).is_err());
    }

    #[test]
    fn brute_force_cycle_count() {
        // complete digraph on 4 vertices with self-loops: simple cycles are
        // the cyclic orderings of nonempty subsets
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                edges.push((a, "t", b));
            }
        }
        let m = Automaton::from_parts(&["t"], 4, 0, &[0], &edges).unwrap();
        let r = pv_analysis(&m, &pi(&[("t", 1)])).unwrap();
        // 4·0! + 6·1! + 4·2! + 1·3! = 24
        assert_eq!(r.components[0].weights.len(), 24);
    }

    #[test]
    fn integers_fiber_set() {
        let g = Group::parse("Z").unwrap();
        let s = fiber_set(&catalog::integers(), &g, 10_000).unwrap();
        assert_eq!(s.j, 1);
        assert_eq!(s.s, vec![g.identity()]);
        assert_eq!(s.m, 5);
    }

    #[test]
    fn lamplighter_fiber_set() {
        let g = Group::parse("wr(C2,Z)").unwrap();
        let s = fiber_set(&catalog::lamplighter(), &g, 100_000).unwrap();
        assert_eq!(s.j, 1);
        assert!(s.s.contains(&g.identity()));
        assert!(s.s.contains(g.generator("a").unwrap()));
        assert!(s.s.iter().all(|x| g.z_projection(x) == Some(0)));
        assert_eq!(s.m, 13);
    }

    #[test]
    fn jump_of_two() {
        let g = Group::parse("Z").unwrap();
        let m = Automaton::from_regex("{t2}+|t", None).unwrap();
        let gens = BTreeMap::from([
            ("t2".to_string(), GroupElement::Lattice(vec![2])),
            ("t".to_string(), GroupElement::Lattice(vec![1])),
        ]);
        let s = fiber_set_with(&m, &g, &gens, 1000).unwrap();
        assert_eq!(s.j, 2);
        assert_eq!(s.s, vec![g.identity()]);
    }
}
