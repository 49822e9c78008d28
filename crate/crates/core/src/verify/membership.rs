use std::collections::HashMap;

use serde::Serialize;

use super::{Result, VerifyError};
use crate::groups::{Group, GroupElement, GroupSpec};

/// One factor `s·t` (`up`) or `s·t⁻¹` of a power-product factorization;
/// `s` indexes the set `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Factor {
    pub s: usize,
    pub up: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThreeValued {
    /// The identity: the empty product.
    Yes,
    YesWitness(Vec<Factor>),
    /// No factorization of at most the searched length exists.
    NoWithinBounds,
}

impl ThreeValued {
    pub fn is_yes(&self) -> bool {
        !matches!(self, ThreeValued::NoWithinBounds)
    }
}

/// `(at)(eT)…` given a label per element of `S`.
pub fn format_witness(w: &[Factor], labels: &[&str]) -> String {
    w.iter()
        .map(|f| format!("({}{})", labels[f.s], if f.up { "t" } else { "T" }))
        .collect()
}

/// Crossing numbers for H₂: `c(g) ≤ c(x) + c(x⁻¹g)` and every ascent or
/// descent run over `Sym[a, b]` has crossing number at most `b − a`.
struct CrossingBound {
    width: usize,
}

impl CrossingBound {
    fn new(group: &Group, s: &[GroupElement]) -> Option<Self> {
        if *group.spec() != GroupSpec::Houghton2 {
            return None;
        }
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for x in s {
            let GroupElement::Houghton(h) = x else {
                return None;
            };
            if h.shift() != 0 {
                return None;
            }
            for (p, _) in h.support() {
                lo = lo.min(p);
                hi = hi.max(p);
            }
        }
        Some(CrossingBound {
            width: if lo > hi { 0 } else { (hi - lo) as usize },
        })
    }

    fn c(g: &GroupElement) -> usize {
        match g {
            GroupElement::Houghton(h) => h.translation_part().0.crossing_number().unwrap_or(0),
            _ => 0,
        }
    }
}

/// Position in `((St)*(St⁻¹)*)^m`: `rank = 2·(block − 1) + descending`.
fn next_rank(rank: usize, up: bool) -> usize {
    match (rank % 2 == 1, up) {
        (false, true) => rank,
        (false, false) => rank + 1,
        (true, false) => rank,
        (true, true) => rank + 1,
    }
}

struct Node {
    elem: GroupElement,
    key: usize,
    parent: usize,
    factor: Option<Factor>,
}

/// Search tree keyed by `(element, key)`.
#[derive(Default)]
struct Tree {
    nodes: Vec<Node>,
    index: HashMap<(GroupElement, usize), usize>,
    by_elem: HashMap<GroupElement, Vec<usize>>,
}

impl Tree {
    fn insert(
        &mut self,
        elem: GroupElement,
        key: usize,
        parent: usize,
        factor: Option<Factor>,
    ) -> Option<usize> {
        if self.index.contains_key(&(elem.clone(), key)) {
            return None;
        }
        let i = self.nodes.len();
        self.index.insert((elem.clone(), key), i);
        self.by_elem.entry(elem.clone()).or_default().push(i);
        self.nodes.push(Node {
            elem,
            key,
            parent,
            factor,
        });
        Some(i)
    }

    /// Factors from the root to node `i`.
    fn path(&self, mut i: usize) -> Vec<Factor> {
        let mut out = Vec::new();
        while let Some(f) = self.nodes[i].factor {
            out.push(f);
            i = self.nodes[i].parent;
        }
        out.reverse();
        out
    }
}

/// Backward key: a suffix `f₁⋯f_k` is summarized by the number of
/// descent-to-ascent switches inside it and whether it starts ascending.
/// `key = 2·switches + starts_up`; the empty suffix has key 0.
fn suffix_key(key: usize, empty: bool, up: bool) -> usize {
    if empty {
        return up as usize;
    }
    let (switches, first_up) = (key / 2, key % 2 == 1);
    let switches = switches + (!up && first_up) as usize;
    2 * switches + up as usize
}

/// Blocks used by a prefix at `rank` followed by a suffix with `key`.
fn compatible(rank: usize, key: usize, m: usize) -> bool {
    let block = rank / 2 + 1;
    let descending = rank % 2 == 1;
    let (switches, first_up) = (key / 2, key % 2 == 1);
    block + switches + (descending && first_up) as usize <= m
}

/// Search for `g ∈ ((S·t)*(S·t⁻¹)*)^m` using at most `depth_cap` factors,
/// meeting in the middle. The group must map onto Z with `t` projecting to
/// 1. On H₂ with finitary `S`, prefixes are pruned by crossing numbers.
pub fn bounded_power_membership(
    group: &Group,
    g: &GroupElement,
    s: &[GroupElement],
    m: usize,
    depth_cap: usize,
) -> Result<ThreeValued> {
    let no_z = || VerifyError::Domain(format!("{} has no projection onto Z", group.spec()));
    let target_pi = group.z_projection(g).ok_or_else(no_z)?;
    let t = group.z_generator().ok_or_else(no_z)?.clone();
    let t_inv = group.inverse(&t)?;
    if group.is_identity(g) {
        return Ok(ThreeValued::Yes);
    }
    if m == 0 || s.is_empty() {
        return Ok(ThreeValued::NoWithinBounds);
    }
    let mut factors = Vec::with_capacity(2 * s.len());
    for (i, x) in s.iter().enumerate() {
        factors.push((Factor { s: i, up: true }, group.mul(x, &t)?));
        factors.push((Factor { s: i, up: false }, group.mul(x, &t_inv)?));
    }
    let mut inverse_factors = Vec::with_capacity(factors.len());
    for (f, x) in &factors {
        inverse_factors.push((*f, group.inverse(x)?));
    }
    let crossing = CrossingBound::new(group, s);
    let target_c = CrossingBound::c(g);
    if let Some(cb) = &crossing {
        if target_c > 2 * m * cb.width {
            return Ok(ThreeValued::NoWithinBounds);
        }
    }
    let max_rank = 2 * m - 1;
    let fwd_depth = depth_cap.div_ceil(2);
    let bwd_depth = depth_cap / 2;

    let mut fwd = Tree::default();
    fwd.insert(group.identity(), 0, usize::MAX, None);
    let mut frontier = vec![0usize];
    for depth in 0..fwd_depth {
        let mut next = Vec::new();
        for &i in &frontier {
            let (x, rank) = (fwd.nodes[i].elem.clone(), fwd.nodes[i].key);
            for (f, y) in &factors {
                let r = next_rank(rank, f.up);
                if r > max_rank {
                    continue;
                }
                let z = group.mul(&x, y)?;
                let pi = group.z_projection(&z).ok_or_else(no_z)?;
                if (target_pi - pi).unsigned_abs() as usize > depth_cap - depth - 1 {
                    continue;
                }
                if let Some(cb) = &crossing {
                    let runs_left = max_rank - r + 1;
                    if target_c > CrossingBound::c(&z) + runs_left * cb.width {
                        continue;
                    }
                }
                if let Some(j) = fwd.insert(z, r, i, Some(*f)) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }

    let mut bwd = Tree::default();
    let check = |bwd: &Tree, j: usize| -> Option<Vec<Factor>> {
        let node = &bwd.nodes[j];
        let hits = fwd.by_elem.get(&node.elem)?;
        let &i = hits
            .iter()
            .find(|&&i| compatible(fwd.nodes[i].key, node.key, m))?;
        let mut w = fwd.path(i);
        let mut suffix = bwd.path(j);
        suffix.reverse();
        w.extend(suffix);
        Some(w)
    };
    bwd.insert(g.clone(), 0, usize::MAX, None);
    let mut found = check(&bwd, 0);
    let mut frontier = vec![0usize];
    let mut depth = 0;
    while found.is_none() && depth < bwd_depth {
        let mut next = Vec::new();
        'outer: for &j in &frontier {
            let (x, key) = (bwd.nodes[j].elem.clone(), bwd.nodes[j].key);
            let empty = bwd.nodes[j].factor.is_none();
            for (f, y) in &inverse_factors {
                let k = suffix_key(key, empty, f.up);
                if k / 2 >= m {
                    continue;
                }
                let z = group.mul(&x, y)?;
                if let Some(n) = bwd.insert(z, k, j, Some(*f)) {
                    if let Some(w) = check(&bwd, n) {
                        found = Some(w);
                        break 'outer;
                    }
                    next.push(n);
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    let Some(w) = found else {
        return Ok(ThreeValued::NoWithinBounds);
    };
    let mut acc = group.identity();
    for f in &w {
        acc = group.mul(&acc, &factors[2 * f.s + (!f.up) as usize].1)?;
    }
    if acc != *g {
        return Err(VerifyError::Domain(
            "factorization witness does not reassemble".into(),
        ));
    }
    Ok(ThreeValued::YesWitness(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::word;
    use crate::groups::HoughtonPerm;

    fn lamplighter() -> (Group, Vec<GroupElement>) {
        let g = Group::parse("wr(C2,Z)").unwrap();
        let s = vec![g.identity(), g.generator("a").unwrap().clone()];
        (g, s)
    }

    /// Shape check: ascents then descents, at most `m` blocks.
    fn blocks(w: &[Factor]) -> usize {
        let mut rank = 0;
        for f in w {
            rank = next_rank(rank, f.up);
        }
        rank / 2 + 1
    }

    #[test]
    fn three_lamps() {
        let (g, s) = lamplighter();
        let x = g.evaluate(&word("atatatTTT")).unwrap();
        let r = bounded_power_membership(&g, &x, &s, 1, 8).unwrap();
        let ThreeValued::YesWitness(w) = r else {
            panic!("{r:?}")
        };
        // (at)(at)(aT)(eT) is shorter than the explicit witness below
        assert_eq!(w.len(), 4);
        assert_eq!(blocks(&w), 1);
        let stated = [
            Factor { s: 1, up: true },
            Factor { s: 1, up: true },
            Factor { s: 1, up: true },
            Factor { s: 0, up: false },
            Factor { s: 0, up: false },
            Factor { s: 0, up: false },
        ];
        assert_eq!(
            format_witness(&stated, &["e", "a"]),
            "(at)(at)(at)(eT)(eT)(eT)"
        );
        let mut acc = g.identity();
        for f in &stated {
            let step = g
                .mul(&s[f.s], g.generator(if f.up { "t" } else { "T" }).unwrap())
                .unwrap();
            acc = g.mul(&acc, &step).unwrap();
        }
        assert_eq!(acc, x);
    }

    #[test]
    fn identity_is_empty_product() {
        let (g, s) = lamplighter();
        assert_eq!(
            bounded_power_membership(&g, &g.identity(), &s, 1, 0).unwrap(),
            ThreeValued::Yes
        );
    }

    #[test]
    fn one_block_cannot_go_down_then_up() {
        let (g, s) = lamplighter();
        // lamp at -1, cursor 0: needs a descent before an ascent
        let x = g.evaluate(&word("Tat")).unwrap();
        assert_eq!(
            bounded_power_membership(&g, &x, &s, 1, 10).unwrap(),
            ThreeValued::NoWithinBounds
        );
        assert!(bounded_power_membership(&g, &x, &s, 2, 10)
            .unwrap()
            .is_yes());
    }

    #[test]
    fn witnesses_match_brute_force() {
        // every product of at most 4 factors is found, and nothing else
        let (g, s) = lamplighter();
        let mut reach = std::collections::HashSet::new();
        let mut layer = vec![(g.identity(), 0usize)];
        reach.insert(g.identity());
        for _ in 0..4 {
            let mut next = Vec::new();
            for (x, rank) in &layer {
                for si in &s {
                    for up in [true, false] {
                        let r = next_rank(*rank, up);
                        if r > 1 {
                            continue;
                        }
                        let step = g
                            .mul(si, g.generator(if up { "t" } else { "T" }).unwrap())
                            .unwrap();
                        let y = g.mul(x, &step).unwrap();
                        reach.insert(y.clone());
                        next.push((y, r));
                    }
                }
            }
            layer = next;
        }
        let ball = g.ball(4, 10_000).unwrap();
        for x in &ball.elements {
            let r = bounded_power_membership(&g, x, &s, 1, 4).unwrap();
            assert_eq!(r.is_yes(), reach.contains(x), "{}", g.display(x));
        }
    }

    #[test]
    fn crossing_bound_rules_out_long_crossings() {
        let g = Group::parse("H2").unwrap();
        let s: Vec<GroupElement> = [(0, 1), (1, 2), (2, 3)]
            .iter()
            .map(|&(a, b)| GroupElement::Houghton(HoughtonPerm::transposition(a, b)))
            .chain([g.identity()])
            .collect();
        let h = GroupElement::Houghton(HoughtonPerm::crossing_witness(13));
        assert_eq!(
            bounded_power_membership(&g, &h, &s, 2, 16).unwrap(),
            ThreeValued::NoWithinBounds
        );
        // (0 1)·t·T is reachable with one block
        let y = g
            .mul(
                &g.mul(&s[0], g.generator("t").unwrap()).unwrap(),
                g.generator("T").unwrap(),
            )
            .unwrap();
        assert!(bounded_power_membership(&g, &y, &s, 1, 2).unwrap().is_yes());
    }
}
