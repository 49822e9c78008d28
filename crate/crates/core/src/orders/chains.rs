use std::collections::VecDeque;

use rayon::prelude::*;

use super::{Comparison, Cone, OrderError, Result};
use crate::groups::{GroupElement, GroupError};

pub const DEFAULT_CHAIN_CAP: usize = 2000;

/// Longest chain of a finite set under a cone's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub size: usize,
    pub max_chain: usize,
    /// A longest chain in increasing order.
    pub witness: Vec<GroupElement>,
}

impl ChainReport {
    /// `max_chain / size` in lowest terms.
    pub fn density_ratio(&self) -> (usize, usize) {
        let g = num_integer::gcd(self.max_chain, self.size).max(1);
        (self.max_chain / g, self.size / g)
    }

    pub fn density(&self) -> f64 {
        self.max_chain as f64 / self.size as f64
    }
}

fn dedup(s: &[GroupElement]) -> Vec<GroupElement> {
    let mut out: Vec<GroupElement> = Vec::with_capacity(s.len());
    let mut seen = std::collections::HashSet::new();
    for g in s {
        if seen.insert(g) {
            out.push(g.clone());
        }
    }
    out
}

/// Exact maximum chain by longest path in the strict order's DAG.
pub fn chain_density(cone: &Cone, s: &[GroupElement], cap: usize) -> Result<ChainReport> {
    let s = dedup(s);
    if s.len() > cap {
        return Err(OrderError::Capacity {
            what: "chain density set",
            cap,
        });
    }
    if s.is_empty() {
        return Err(OrderError::Domain("chain density of an empty set".into()));
    }
    let n = s.len();
    let less: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::new();
            for j in 0..n {
                if i != j && cone.compare(&s[i], &s[j])? == Comparison::Less {
                    row.push(j);
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let mut indeg = vec![0usize; n];
    for row in &less {
        for &j in row {
            indeg[j] += 1;
        }
    }
    let mut q: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut best = vec![1usize; n];
    let mut prev = vec![usize::MAX; n];
    let mut done = 0;
    while let Some(i) = q.pop_front() {
        done += 1;
        for &j in &less[i] {
            if best[i] + 1 > best[j] {
                best[j] = best[i] + 1;
                prev[j] = i;
            }
            indeg[j] -= 1;
            if indeg[j] == 0 {
                q.push_back(j);
            }
        }
    }
    if done < n {
        return Err(OrderError::Domain(format!(
            "cone `{}` does not define a strict order on this set",
            cone.name()
        )));
    }
    let mut end = (0..n)
        .max_by_key(|&i| (best[i], std::cmp::Reverse(i)))
        .unwrap();
    let max_chain = best[end];
    let mut witness = vec![s[end].clone()];
    while prev[end] != usize::MAX {
        end = prev[end];
        witness.push(s[end].clone());
    }
    witness.reverse();
    Ok(ChainReport {
        size: n,
        max_chain,
        witness,
    })
}

/// A comparable pair found by [`antichain_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub cone: usize,
    pub first: GroupElement,
    pub second: GroupElement,
    pub relation: Comparison,
}

/// `None` if every pair of distinct elements of `s` is incomparable under
/// every cone; otherwise the first comparable pair.
pub fn antichain_check(cones: &[Cone], s: &[GroupElement]) -> Result<Option<Violation>> {
    if let Some(c0) = cones.first() {
        if cones.iter().any(|c| c.group().spec() != c0.group().spec()) {
            return Err(GroupError::WrongBackend.into());
        }
    }
    let s = dedup(s);
    for (k, c) in cones.iter().enumerate() {
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                let rel = c.compare(&s[i], &s[j])?;
                if rel != Comparison::Incomparable {
                    return Ok(Some(Violation {
                        cone: k,
                        first: s[i].clone(),
                        second: s[j].clone(),
                        relation: rel,
                    }));
                }
            }
        }
    }
    Ok(None)
}
