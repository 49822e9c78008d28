use std::collections::HashMap;

use super::regex::EpsNfa;
use super::{Automaton, AutomatonError, Edge, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
    Concat,
    Star,
    Complement,
}

impl std::str::FromStr for BoolOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "union" => BoolOp::Union,
            "intersection" | "intersect" => BoolOp::Intersection,
            "difference" | "minus" => BoolOp::Difference,
            "concat" => BoolOp::Concat,
            "star" => BoolOp::Star,
            "complement" => BoolOp::Complement,
            _ => return Err(format!("unknown operation `{s}`")),
        })
    }
}

/// Combine automata. Unary operations (`Star`, `Complement`) ignore `b`;
/// binary operations require `b` with the same alphabet (as a set). The
/// result uses `a`'s letter order and is trimmed.
pub fn boolean_combine(op: BoolOp, a: &Automaton, b: Option<&Automaton>) -> Result<Automaton> {
    match op {
        BoolOp::Star => return Ok(a.star()),
        BoolOp::Complement => return Ok(a.complement()),
        _ => {}
    }
    let b =
        b.ok_or_else(|| AutomatonError::Schema("binary operation needs two automata".into()))?;
    let b = align(a, b)?;
    Ok(match op {
        BoolOp::Union => a.union(&b),
        BoolOp::Intersection => a.intersect(&b),
        BoolOp::Difference => a.difference(&b),
        BoolOp::Concat => a.concat(&b),
        BoolOp::Star | BoolOp::Complement => unreachable!(),
    })
}

/// Re-express `b` over `a`'s alphabet order; the letter sets must agree.
fn align(a: &Automaton, b: &Automaton) -> Result<Automaton> {
    let mut sa = a.alphabet().to_vec();
    let mut sb = b.alphabet().to_vec();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Err(AutomatonError::AlphabetMismatch(
            a.alphabet().to_vec(),
            b.alphabet().to_vec(),
        ));
    }
    b.with_alphabet(a.alphabet())
}

impl Automaton {
    pub fn union(&self, other: &Automaton) -> Automaton {
        debug_assert_eq!(self.alphabet(), other.alphabet());
        let mut m = EpsNfa::default();
        let s = m.add_state();
        let oa = m.embed(self);
        let ob = m.embed(other);
        m.eps.push((s, oa + self.initial()));
        m.eps.push((s, ob + other.initial()));
        for t in self.terminals() {
            m.terminal[oa + t] = true;
        }
        for t in other.terminals() {
            m.terminal[ob + t] = true;
        }
        m.initial = s;
        m.into_automaton(self.alphabet().to_vec())
    }

    pub fn concat(&self, other: &Automaton) -> Automaton {
        debug_assert_eq!(self.alphabet(), other.alphabet());
        let mut m = EpsNfa::default();
        let oa = m.embed(self);
        let ob = m.embed(other);
        for t in self.terminals() {
            m.eps.push((oa + t, ob + other.initial()));
        }
        for t in other.terminals() {
            m.terminal[ob + t] = true;
        }
        m.initial = oa + self.initial();
        m.into_automaton(self.alphabet().to_vec())
    }

    pub fn star(&self) -> Automaton {
        let mut m = EpsNfa::default();
        let s = m.add_state();
        let o = m.embed(self);
        m.terminal[s] = true;
        m.eps.push((s, o + self.initial()));
        for t in self.terminals() {
            m.eps.push((o + t, s));
        }
        m.initial = s;
        m.into_automaton(self.alphabet().to_vec())
    }

    pub fn intersect(&self, other: &Automaton) -> Automaton {
        debug_assert_eq!(self.alphabet(), other.alphabet());
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = vec![(self.initial(), other.initial())];
        ids.insert(pairs[0], 0);
        let mut edges = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for ea in self.out(p) {
                for eb in other.out(q).iter().filter(|e| e.letter == ea.letter) {
                    let key = (ea.to, eb.to);
                    let to = *ids.entry(key).or_insert_with(|| {
                        pairs.push(key);
                        pairs.len() - 1
                    });
                    edges.push(Edge {
                        from: i,
                        letter: ea.letter,
                        to,
                    });
                }
            }
            i += 1;
        }
        let terminal = pairs
            .iter()
            .map(|&(p, q)| self.is_terminal(p) && other.is_terminal(q))
            .collect();
        let n = pairs.len();
        let names = (0..n).map(|i| format!("s{i}")).collect();
        Automaton::from_raw(self.alphabet().to_vec(), n, 0, terminal, edges, names).trim()
    }

    /// Complement with respect to all words over the alphabet.
    pub fn complement(&self) -> Automaton {
        let d = self.determinize().complete();
        let terminal: Vec<bool> = (0..d.num_states()).map(|s| !d.is_terminal(s)).collect();
        Automaton::from_raw(
            d.alphabet().to_vec(),
            d.num_states(),
            d.initial(),
            terminal,
            d.edges().to_vec(),
            d.state_names().to_vec(),
        )
        .trim()
    }

    pub fn difference(&self, other: &Automaton) -> Automaton {
        self.intersect(&other.complement())
    }

    /// Language equality via two emptiness checks.
    pub fn equivalent(&self, other: &Automaton) -> Result<bool> {
        let b = align(self, other)?;
        Ok(self.difference(&b).is_empty() && b.difference(self).is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{word, Letter};

    fn re(s: &str) -> Automaton {
        let a: Vec<Letter> = word("ab");
        Automaton::from_regex(s, Some(&a)).unwrap()
    }

    /// All words over {a, b} up to length n.
    fn all_words(n: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &frontier {
                for l in ["a", "b"] {
                    let mut w2: Vec<Letter> = w.clone();
                    w2.push(l.to_string());
                    next.push(w2);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn set_operations_agree_with_membership() {
        let x = re("a*b");
        let y = re("(a|b)*b(a|b)?");
        let u = boolean_combine(BoolOp::Union, &x, Some(&y)).unwrap();
        let i = boolean_combine(BoolOp::Intersection, &x, Some(&y)).unwrap();
        let d = boolean_combine(BoolOp::Difference, &y, Some(&x)).unwrap();
        let c = boolean_combine(BoolOp::Complement, &x, None).unwrap();
        let cat = boolean_combine(BoolOp::Concat, &x, Some(&y)).unwrap();
        let st = boolean_combine(BoolOp::Star, &x, None).unwrap();
        for w in all_words(6) {
            let (px, py) = (x.recognize(&w).unwrap(), y.recognize(&w).unwrap());
            assert_eq!(u.recognize(&w).unwrap(), px || py);
            assert_eq!(i.recognize(&w).unwrap(), px && py);
            assert_eq!(d.recognize(&w).unwrap(), py && !px);
            assert_eq!(c.recognize(&w).unwrap(), !px);
            let split = (0..=w.len())
                .any(|k| x.recognize(&w[..k]).unwrap() && y.recognize(&w[k..]).unwrap());
            assert_eq!(cat.recognize(&w).unwrap(), split);
        }
        // a*b is prefix-free so its star factors uniquely.
        assert!(st.recognize(&word("abaabb")).unwrap());
        assert!(st.recognize(&[]).unwrap());
        assert!(!st.recognize(&word("aba")).unwrap());
    }

    #[test]
    fn mismatched_alphabets_rejected() {
        let x = re("a");
        let z = Automaton::from_regex("c", None).unwrap();
        assert!(matches!(
            boolean_combine(BoolOp::Union, &x, Some(&z)),
            Err(AutomatonError::AlphabetMismatch(..))
        ));
    }

    #[test]
    fn alphabet_order_is_normalised() {
        let x = re("a");
        let a2: Vec<Letter> = word("ba");
        let y = Automaton::from_regex("b", Some(&a2)).unwrap();
        let u = boolean_combine(BoolOp::Union, &x, Some(&y)).unwrap();
        assert_eq!(u.alphabet(), ["a", "b"]);
        assert!(u.recognize(&word("b")).unwrap());
    }
}
