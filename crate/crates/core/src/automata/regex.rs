//! Regular expressions over opaque letters.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! union  := concat ('|' concat)*
//! concat := postfix*
//! postfix:= atom ('*' | '+' | '?')*
//! atom   := letter | '{' name '}' | 'ε' | '∅' | '(' union ')'
//! ```
//!
//! A bare letter is a single character; multi-character letters are written
//! in braces, e.g. `{x1}`. An empty concatenation denotes `ε`.

use super::{Automaton, AutomatonError, Edge, Letter, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Letter(Letter),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
}

pub fn parse_regex(src: &str) -> Result<Regex> {
    let toks: Vec<(usize, char)> = src
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = Parser {
        toks,
        i: 0,
        len: src.chars().count(),
    };
    let re = p.union()?;
    if let Some(&(pos, c)) = p.toks.get(p.i) {
        return Err(AutomatonError::Parse {
            pos,
            msg: format!("unexpected `{c}`"),
        });
    }
    Ok(re)
}

struct Parser {
    toks: Vec<(usize, char)>,
    i: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.toks.get(self.i).map(|t| t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.len, |t| t.0)
    }

    fn union(&mut self) -> Result<Regex> {
        let mut alts = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.i += 1;
            alts.push(self.concat()?);
        }
        Ok(if alts.len() == 1 {
            alts.pop().unwrap()
        } else {
            Regex::Union(alts)
        })
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            parts.push(self.postfix()?);
        }
        Ok(match parts.len() {
            0 => Regex::Epsilon,
            1 => parts.pop().unwrap(),
            _ => Regex::Concat(parts),
        })
    }

    fn postfix(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        while let Some(c) = self.peek() {
            r = match c {
                '*' => Regex::Star(Box::new(r)),
                '+' => Regex::Concat(vec![r.clone(), Regex::Star(Box::new(r))]),
                '?' => Regex::Union(vec![Regex::Epsilon, r]),
                _ => break,
            };
            self.i += 1;
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex> {
        let pos = self.pos();
        let Some(c) = self.peek() else {
            return Err(AutomatonError::Parse {
                pos,
                msg: "unexpected end of input".into(),
            });
        };
        self.i += 1;
        match c {
            '(' => {
                let r = self.union()?;
                if self.peek() != Some(')') {
                    return Err(AutomatonError::Parse {
                        pos: self.pos(),
                        msg: "expected `)`".into(),
                    });
                }
                self.i += 1;
                Ok(r)
            }
            '{' => {
                let mut name = String::new();
                loop {
                    match self.peek() {
                        Some('}') => {
                            self.i += 1;
                            break;
                        }
                        Some(ch) => {
                            name.push(ch);
                            self.i += 1;
                        }
                        None => {
                            return Err(AutomatonError::Parse {
                                pos: self.pos(),
                                msg: "unterminated `{`".into(),
                            })
                        }
                    }
                }
                if name.is_empty() {
                    return Err(AutomatonError::Parse {
                        pos,
                        msg: "empty letter name".into(),
                    });
                }
                Ok(Regex::Letter(name))
            }
            'ε' => Ok(Regex::Epsilon),
            '∅' => Ok(Regex::Empty),
            '*' | '+' | '?' | ')' | '|' | '}' => Err(AutomatonError::Parse {
                pos,
                msg: format!("unexpected `{c}`"),
            }),
            _ => Ok(Regex::Letter(c.to_string())),
        }
    }
}

/// Automaton with epsilon moves, used only during construction.
#[derive(Debug, Clone, Default)]
pub(crate) struct EpsNfa {
    pub n: usize,
    pub edges: Vec<Edge>,
    pub eps: Vec<(usize, usize)>,
    pub initial: usize,
    pub terminal: Vec<bool>,
}

impl EpsNfa {
    pub fn add_state(&mut self) -> usize {
        self.n += 1;
        self.terminal.push(false);
        self.n - 1
    }

    /// Copy `m` in; returns the offset of its states.
    pub fn embed(&mut self, m: &Automaton) -> usize {
        let off = self.n;
        for _ in 0..m.num_states() {
            self.add_state();
        }
        for e in m.edges() {
            self.edges.push(Edge {
                from: e.from + off,
                letter: e.letter,
                to: e.to + off,
            });
        }
        off
    }

    /// Eliminate epsilon moves. The result is trimmed.
    pub fn into_automaton(self, alphabet: Vec<Letter>) -> Automaton {
        let mut eps_out = vec![Vec::new(); self.n];
        for &(p, q) in &self.eps {
            eps_out[p].push(q);
        }
        let mut out = vec![Vec::new(); self.n];
        for e in &self.edges {
            out[e.from].push(*e);
        }
        let mut edges = Vec::new();
        let mut terminal = vec![false; self.n];
        for p in 0..self.n {
            let mut seen = vec![false; self.n];
            seen[p] = true;
            let mut stack = vec![p];
            while let Some(q) = stack.pop() {
                if self.terminal[q] {
                    terminal[p] = true;
                }
                for e in &out[q] {
                    edges.push(Edge {
                        from: p,
                        letter: e.letter,
                        to: e.to,
                    });
                }
                for &r in &eps_out[q] {
                    if !seen[r] {
                        seen[r] = true;
                        stack.push(r);
                    }
                }
            }
        }
        let names = (0..self.n).map(|i| format!("s{i}")).collect();
        Automaton::from_raw(
            alphabet,
            self.n.max(1),
            self.initial,
            terminal,
            edges,
            names,
        )
        .trim()
    }
}

impl Regex {
    /// Letters occurring in the expression, in order of first occurrence.
    pub fn letters(&self) -> Vec<Letter> {
        fn go(r: &Regex, out: &mut Vec<Letter>) {
            match r {
                Regex::Letter(l) => {
                    if !out.contains(l) {
                        out.push(l.clone())
                    }
                }
                Regex::Concat(v) | Regex::Union(v) => v.iter().for_each(|x| go(x, out)),
                Regex::Star(x) => go(x, out),
                Regex::Empty | Regex::Epsilon => {}
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    /// Thompson construction followed by epsilon elimination and trimming.
    pub fn to_automaton(&self, alphabet: &[Letter]) -> Result<Automaton> {
        let mut m = EpsNfa::default();
        let (s, f) = self.build(&mut m, alphabet)?;
        m.initial = s;
        m.terminal[f] = true;
        Ok(m.into_automaton(alphabet.to_vec()))
    }

    fn build(&self, m: &mut EpsNfa, alphabet: &[Letter]) -> Result<(usize, usize)> {
        let s = m.add_state();
        let f = m.add_state();
        match self {
            Regex::Empty => {}
            Regex::Epsilon => m.eps.push((s, f)),
            Regex::Letter(l) => {
                let li = alphabet
                    .iter()
                    .position(|a| a == l)
                    .ok_or_else(|| AutomatonError::UnknownLetter(l.clone()))?;
                m.edges.push(Edge {
                    from: s,
                    letter: li,
                    to: f,
                });
            }
            Regex::Concat(parts) => {
                let mut cur = s;
                for p in parts {
                    let (ps, pf) = p.build(m, alphabet)?;
                    m.eps.push((cur, ps));
                    cur = pf;
                }
                m.eps.push((cur, f));
            }
            Regex::Union(alts) => {
                for a in alts {
                    let (as_, af) = a.build(m, alphabet)?;
                    m.eps.push((s, as_));
                    m.eps.push((af, f));
                }
            }
            Regex::Star(x) => {
                let (xs, xf) = x.build(m, alphabet)?;
                m.eps.push((s, xs));
                m.eps.push((xf, xs));
                m.eps.push((xf, f));
                m.eps.push((s, f));
            }
        }
        Ok((s, f))
    }
}
