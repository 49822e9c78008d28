//! Strongly connected components (iterative Tarjan).

/// SCC decomposition of a directed graph on `0..n`.
#[derive(Debug, Clone)]
pub struct Sccs {
    /// Component index of each vertex. Components are numbered in
    /// topological order of the condensation: edges go from lower to higher
    /// or stay inside a component.
    pub comp: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl Sccs {
    pub fn compute(n: usize, adj: &[Vec<usize>]) -> Self {
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut next = 0;
        // (vertex, next child position)
        let mut call: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            call.push((root, 0));
            while let Some(&mut (v, ref mut ci)) = call.last_mut() {
                if *ci == 0 && index[v] == UNSEEN {
                    index[v] = next;
                    low[v] = next;
                    next += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                if let Some(&w) = adj[v].get(*ci) {
                    *ci += 1;
                    if index[w] == UNSEEN {
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut c = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        c.push(w);
                        if w == v {
                            break;
                        }
                    }
                    c.sort_unstable();
                    comps.push(c);
                }
            }
        }
        comps.reverse();
        let mut comp = vec![0; n];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp[v] = i;
            }
        }
        Sccs {
            comp,
            members: comps,
        }
    }

    /// Whether component `c` carries a cycle (more than one vertex or a
    /// self-loop).
    pub fn is_cyclic(&self, c: usize, adj: &[Vec<usize>]) -> bool {
        let m = &self.members[c];
        m.len() > 1 || adj[m[0]].contains(&m[0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycles_and_a_bridge() {
        let adj = vec![vec![1], vec![0, 2], vec![3], vec![2], vec![]];
        let s = Sccs::compute(5, &adj);
        assert_eq!(s.members.len(), 3);
        assert_eq!(s.comp[0], s.comp[1]);
        assert_eq!(s.comp[2], s.comp[3]);
        assert!(s.comp[0] < s.comp[2]);
        assert!(s.is_cyclic(s.comp[0], &adj));
        assert!(!s.is_cyclic(s.comp[4], &adj));
    }

    #[test]
    fn topological_numbering() {
        let adj = vec![vec![], vec![0], vec![1], vec![2]];
        let s = Sccs::compute(4, &adj);
        for (v, succ) in adj.iter().enumerate() {
            for &w in succ {
                assert!(s.comp[v] < s.comp[w]);
            }
        }
    }
}
