//! Finite automata over alphabets of opaque string letters.
//!
//! An [`Automaton`] is an epsilon-free NFA with a single initial state. States
//! are dense indices `0..num_states`; letters are indices into the alphabet,
//! whose declaration order is the total order used for length-lexicographic
//! enumeration and for canonical state numbering.

mod benois;
mod growth;
pub mod io;
mod ops;
mod paths;
mod regex;
pub mod scc;

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

pub use benois::{benois_reduce, reduced_words};
pub use growth::{bounded_decomposition, growth_classify, GrowthClass};
pub use ops::{boolean_combine, BoolOp};
pub use paths::{loop_erase_path, pumping_triple, PathDecomposition};
pub use regex::{parse_regex, Regex};

/// A letter is an opaque, non-empty string.
pub type Letter = String;
/// A finite sequence of letters. The empty word is `ε`.
pub type Word = Vec<Letter>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("regex parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("letter `{0}` is not in the alphabet")]
    UnknownLetter(String),
    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(String),
    #[error("state {0} out of range")]
    StateOutOfRange(usize),
    #[error("alphabets differ: {0:?} vs {1:?}")]
    AlphabetMismatch(Vec<Letter>, Vec<Letter>),
    #[error("language has exponential growth; no bounded decomposition exists")]
    NotPolynomial,
    #[error("capacity exceeded: {what} (cap {cap})")]
    Capacity { what: &'static str, cap: usize },
    #[error("word is not accepted")]
    Rejected,
    #[error("invalid inverse pairing: {0}")]
    InvalidInverse(String),
    #[error("{0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, AutomatonError>;

/// Render a word for humans: letters concatenated, `ε` for the empty word.
pub fn format_word(w: &[Letter]) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.concat()
    }
}

/// Split a string into letters of `alphabet` by greedy longest match.
///
/// Whitespace separates letters and is otherwise ignored; `ε` and the empty
/// string denote the empty word.
pub fn parse_word(s: &str, alphabet: &[Letter]) -> Result<Word> {
    let mut out = Vec::new();
    for chunk in s.split_whitespace() {
        let mut rest = chunk;
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('ε') {
                rest = r;
                continue;
            }
            let best = alphabet
                .iter()
                .filter(|l| rest.starts_with(l.as_str()))
                .max_by_key(|l| l.len());
            match best {
                Some(l) => {
                    out.push(l.clone());
                    rest = &rest[l.len()..];
                }
                None => {
                    let c = rest.chars().next().unwrap();
                    return Err(AutomatonError::UnknownLetter(c.to_string()));
                }
            }
        }
    }
    Ok(out)
}

/// Build a word from a string whose letters are single characters.
pub fn word(s: &str) -> Word {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != 'ε')
        .map(|c| c.to_string())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub letter: usize,
    pub to: usize,
}

/// Epsilon-free NFA with one initial state.
#[derive(Debug, Clone)]
pub struct Automaton {
    alphabet: Vec<Letter>,
    num_states: usize,
    initial: usize,
    terminal: Vec<bool>,
    /// Sorted by `(from, letter, to)` and deduplicated.
    edges: Vec<Edge>,
    /// `edges[offsets[s]..offsets[s + 1]]` leave state `s`.
    offsets: Vec<usize>,
    deterministic: bool,
    names: Vec<String>,
}

impl PartialEq for Automaton {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.num_states == other.num_states
            && self.initial == other.initial
            && self.terminal == other.terminal
            && self.edges == other.edges
    }
}

impl Eq for Automaton {}

impl Automaton {
    /// Build an automaton from index data. Edges are `(from, letter, to)`.
    pub fn new(
        alphabet: Vec<Letter>,
        num_states: usize,
        initial: usize,
        terminals: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for l in &alphabet {
            if l.is_empty() {
                return Err(AutomatonError::Schema("empty letter in alphabet".into()));
            }
            if !seen.insert(l.as_str()) {
                return Err(AutomatonError::DuplicateLetter(l.clone()));
            }
        }
        let num_states = num_states.max(1);
        if initial >= num_states {
            return Err(AutomatonError::StateOutOfRange(initial));
        }
        let mut terminal = vec![false; num_states];
        for t in terminals {
            if t >= num_states {
                return Err(AutomatonError::StateOutOfRange(t));
            }
            terminal[t] = true;
        }
        let mut es = Vec::new();
        for (from, letter, to) in edges {
            if from >= num_states {
                return Err(AutomatonError::StateOutOfRange(from));
            }
            if to >= num_states {
                return Err(AutomatonError::StateOutOfRange(to));
            }
            if letter >= alphabet.len() {
                return Err(AutomatonError::Schema(format!(
                    "letter index {letter} out of range"
                )));
            }
            es.push(Edge { from, letter, to });
        }
        let names = (0..num_states).map(|i| format!("s{i}")).collect();
        Ok(Self::from_raw(
            alphabet, num_states, initial, terminal, es, names,
        ))
    }

    /// Build an automaton using letter names on edges.
    pub fn from_parts(
        alphabet: &[&str],
        num_states: usize,
        initial: usize,
        terminals: &[usize],
        edges: &[(usize, &str, usize)],
    ) -> Result<Self> {
        let alphabet: Vec<Letter> = alphabet.iter().map(|s| s.to_string()).collect();
        let mut es = Vec::with_capacity(edges.len());
        for &(f, l, t) in edges {
            let li = alphabet
                .iter()
                .position(|a| a == l)
                .ok_or_else(|| AutomatonError::UnknownLetter(l.to_string()))?;
            es.push((f, li, t));
        }
        Self::new(alphabet, num_states, initial, terminals.iter().copied(), es)
    }

    pub(crate) fn from_raw(
        alphabet: Vec<Letter>,
        num_states: usize,
        initial: usize,
        terminal: Vec<bool>,
        mut edges: Vec<Edge>,
        names: Vec<String>,
    ) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut offsets = vec![0usize; num_states + 1];
        for e in &edges {
            offsets[e.from + 1] += 1;
        }
        for i in 0..num_states {
            offsets[i + 1] += offsets[i];
        }
        let deterministic = edges
            .windows(2)
            .all(|w| (w[0].from, w[0].letter) != (w[1].from, w[1].letter));
        Self {
            alphabet,
            num_states,
            initial,
            terminal,
            edges,
            offsets,
            deterministic,
            names,
        }
    }

    /// Replace the display names of the states (used by JSON and DOT output).
    pub fn with_state_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.num_states, "one name per state");
        self.names = names;
        self
    }

    /// The automaton accepting no word.
    pub fn empty(alphabet: Vec<Letter>) -> Self {
        Self::from_raw(alphabet, 1, 0, vec![false], vec![], vec!["s0".into()])
    }

    /// The automaton accepting only the empty word.
    pub fn epsilon(alphabet: Vec<Letter>) -> Self {
        Self::from_raw(alphabet, 1, 0, vec![true], vec![], vec!["s0".into()])
    }

    /// A trie accepting exactly the given words.
    pub fn from_words(alphabet: Vec<Letter>, words: &[Word]) -> Result<Self> {
        let index: HashMap<&str, usize> = alphabet
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut children: Vec<HashMap<usize, usize>> = vec![HashMap::new()];
        let mut terminal = vec![false];
        for w in words {
            let mut s = 0;
            for l in w {
                let li = *index
                    .get(l.as_str())
                    .ok_or_else(|| AutomatonError::UnknownLetter(l.clone()))?;
                let next = children.len();
                let t = *children[s].entry(li).or_insert(next);
                if t == next {
                    children.push(HashMap::new());
                    terminal.push(false);
                }
                s = t;
            }
            terminal[s] = true;
        }
        let edges = children
            .iter()
            .enumerate()
            .flat_map(|(f, m)| {
                m.iter().map(move |(&l, &t)| Edge {
                    from: f,
                    letter: l,
                    to: t,
                })
            })
            .collect();
        let n = terminal.len();
        let names = (0..n).map(|i| format!("s{i}")).collect();
        Ok(Self::from_raw(alphabet, n, 0, terminal, edges, names).canonical())
    }

    /// Build an automaton from a regular expression (see [`parse_regex`]).
    ///
    /// With `alphabet = None` the alphabet is the set of letters occurring in
    /// the expression, in order of first occurrence.
    pub fn from_regex(expr: &str, alphabet: Option<&[Letter]>) -> Result<Self> {
        let re = parse_regex(expr)?;
        let alphabet = match alphabet {
            Some(a) => a.to_vec(),
            None => re.letters(),
        };
        re.to_automaton(&alphabet)
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_terminal(&self, s: usize) -> bool {
        self.terminal[s]
    }

    pub fn terminals(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_states).filter(|&s| self.terminal[s])
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges leaving `s`, sorted by letter then target.
    pub fn out(&self, s: usize) -> &[Edge] {
        &self.edges[self.offsets[s]..self.offsets[s + 1]]
    }

    pub fn is_deterministic(&self) -> bool {
        self.deterministic
    }

    pub fn state_name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn letter_index(&self, l: &str) -> Option<usize> {
        self.alphabet.iter().position(|a| a == l)
    }

    pub(crate) fn letter_indices(&self, w: &[Letter]) -> Result<Vec<usize>> {
        w.iter()
            .map(|l| {
                self.letter_index(l)
                    .ok_or_else(|| AutomatonError::UnknownLetter(l.clone()))
            })
            .collect()
    }

    pub(crate) fn letters_of(&self, w: &[usize]) -> Word {
        w.iter().map(|&i| self.alphabet[i].clone()).collect()
    }

    /// Successor set of a sorted state set under one letter.
    pub(crate) fn step(&self, set: &[usize], letter: usize) -> Vec<usize> {
        let mut next: Vec<usize> = set
            .iter()
            .flat_map(|&s| {
                self.out(s)
                    .iter()
                    .filter(move |e| e.letter == letter)
                    .map(|e| e.to)
            })
            .collect();
        next.sort_unstable();
        next.dedup();
        next
    }

    /// Membership test. Letters outside the alphabet are an error.
    pub fn recognize(&self, w: &[Letter]) -> Result<bool> {
        let idx = self.letter_indices(w)?;
        Ok(self.accepts_indices(&idx))
    }

    pub(crate) fn accepts_indices(&self, w: &[usize]) -> bool {
        let mut cur = vec![self.initial];
        for &l in w {
            cur = self.step(&cur, l);
            if cur.is_empty() {
                return false;
            }
        }
        cur.iter().any(|&s| self.terminal[s])
    }

    /// Per-state forward reachability from the initial state.
    pub(crate) fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states];
        seen[self.initial] = true;
        let mut q = VecDeque::from([self.initial]);
        while let Some(s) = q.pop_front() {
            for e in self.out(s) {
                if !seen[e.to] {
                    seen[e.to] = true;
                    q.push_back(e.to);
                }
            }
        }
        seen
    }

    /// Per-state reachability of some terminal state.
    pub(crate) fn coreachable(&self) -> Vec<bool> {
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); self.num_states];
        for e in &self.edges {
            rev[e.to].push(e.from);
        }
        let mut seen = self.terminal.clone();
        let mut q: VecDeque<usize> = self.terminals().collect();
        while let Some(s) = q.pop_front() {
            for &p in &rev[s] {
                if !seen[p] {
                    seen[p] = true;
                    q.push_back(p);
                }
            }
        }
        seen
    }

    /// Keep only the states in `keep` (the initial state must be kept) and
    /// renumber them canonically.
    fn restrict(&self, keep: &[bool]) -> Self {
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.from] && keep[e.to])
            .copied()
            .collect();
        Self::from_raw(
            self.alphabet.clone(),
            self.num_states,
            self.initial,
            self.terminal
                .iter()
                .zip(keep)
                .map(|(&t, &k)| t && k)
                .collect(),
            edges,
            self.names.clone(),
        )
        .canonical()
    }

    /// Renumber states in breadth-first discovery order from the initial
    /// state, visiting edges by letter order. Unreachable states are dropped.
    pub fn canonical(&self) -> Self {
        let mut id = vec![usize::MAX; self.num_states];
        let mut order = vec![self.initial];
        id[self.initial] = 0;
        let mut head = 0;
        while head < order.len() {
            let s = order[head];
            head += 1;
            for e in self.out(s) {
                if id[e.to] == usize::MAX {
                    id[e.to] = order.len();
                    order.push(e.to);
                }
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| id[e.from] != usize::MAX)
            .map(|e| Edge {
                from: id[e.from],
                letter: e.letter,
                to: id[e.to],
            })
            .collect();
        let terminal = order.iter().map(|&s| self.terminal[s]).collect();
        let names = order.iter().map(|&s| self.names[s].clone()).collect();
        Self::from_raw(
            self.alphabet.clone(),
            order.len(),
            0,
            terminal,
            edges,
            names,
        )
    }

    /// Remove states that are unreachable or cannot reach a terminal state.
    ///
    /// For the empty language the result is a single non-terminal state with
    /// no edges.
    pub fn trim(&self) -> Self {
        let r = self.reachable();
        let c = self.coreachable();
        if !c[self.initial] {
            return Self::empty(self.alphabet.clone());
        }
        let keep: Vec<bool> = r.iter().zip(&c).map(|(&a, &b)| a && b).collect();
        self.restrict(&keep)
    }

    /// Subset construction on the trimmed automaton. The result is
    /// deterministic, trimmed and canonically numbered.
    pub fn determinize(&self) -> Self {
        let m = self.trim();
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut sets = vec![vec![m.initial]];
        ids.insert(sets[0].clone(), 0);
        let mut edges = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            for l in 0..m.alphabet.len() {
                let next = m.step(&sets[i], l);
                if next.is_empty() {
                    continue;
                }
                let to = match ids.get(&next) {
                    Some(&t) => t,
                    None => {
                        let t = sets.len();
                        ids.insert(next.clone(), t);
                        sets.push(next);
                        t
                    }
                };
                edges.push(Edge {
                    from: i,
                    letter: l,
                    to,
                });
            }
            i += 1;
        }
        let terminal: Vec<bool> = sets
            .iter()
            .map(|s| s.iter().any(|&q| m.terminal[q]))
            .collect();
        let n = sets.len();
        let names = (0..n).map(|i| format!("s{i}")).collect();
        Self::from_raw(m.alphabet.clone(), n, 0, terminal, edges, names).trim()
    }

    /// The minimal DFA (Moore partition refinement), trimmed and canonically
    /// numbered. Two automata accept the same language exactly when their
    /// minimal DFAs are equal.
    pub fn minimize(&self) -> Self {
        let d = self.determinize().complete();
        let n = d.num_states;
        let k = d.alphabet.len();
        let mut delta = vec![0usize; n * k];
        for e in &d.edges {
            delta[e.from * k + e.letter] = e.to;
        }
        let mut class: Vec<usize> = d.terminal.iter().map(|&t| t as usize).collect();
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let next: Vec<usize> = (0..n)
                .map(|s| {
                    let mut sig = Vec::with_capacity(k + 1);
                    sig.push(class[s]);
                    sig.extend((0..k).map(|l| class[delta[s * k + l]]));
                    let len = ids.len();
                    *ids.entry(sig).or_insert(len)
                })
                .collect();
            let before = class.iter().collect::<std::collections::HashSet<_>>().len();
            class = next;
            if ids.len() == before {
                break;
            }
        }
        let classes = class.iter().max().map_or(0, |m| m + 1);
        let mut terminal = vec![false; classes];
        let mut edges = Vec::new();
        for s in 0..n {
            terminal[class[s]] = d.terminal[s];
            for l in 0..k {
                edges.push(Edge {
                    from: class[s],
                    letter: l,
                    to: class[delta[s * k + l]],
                });
            }
        }
        let names = (0..classes).map(|i| format!("s{i}")).collect();
        Self::from_raw(
            d.alphabet.clone(),
            classes,
            class[d.initial],
            terminal,
            edges,
            names,
        )
        .trim()
    }

    /// Add a non-accepting sink so that every state has an edge on every
    /// letter. Only meaningful for deterministic automata.
    pub(crate) fn complete(&self) -> Self {
        let k = self.alphabet.len();
        let sink = self.num_states;
        let mut edges = self.edges.clone();
        let mut need_sink = false;
        for s in 0..self.num_states {
            let present: Vec<usize> = self.out(s).iter().map(|e| e.letter).collect();
            for l in 0..k {
                if !present.contains(&l) {
                    edges.push(Edge {
                        from: s,
                        letter: l,
                        to: sink,
                    });
                    need_sink = true;
                }
            }
        }
        if !need_sink {
            return self.clone();
        }
        for l in 0..k {
            edges.push(Edge {
                from: sink,
                letter: l,
                to: sink,
            });
        }
        let mut terminal = self.terminal.clone();
        terminal.push(false);
        let mut names = self.names.clone();
        names.push("sink".into());
        Self::from_raw(
            self.alphabet.clone(),
            sink + 1,
            self.initial,
            terminal,
            edges,
            names,
        )
    }

    /// Same language over a larger alphabet containing the current one. The
    /// new alphabet's order is used.
    pub fn with_alphabet(&self, alphabet: &[Letter]) -> Result<Self> {
        let map: Vec<usize> = self
            .alphabet
            .iter()
            .map(|l| {
                alphabet
                    .iter()
                    .position(|a| a == l)
                    .ok_or_else(|| AutomatonError::UnknownLetter(l.clone()))
            })
            .collect::<Result<_>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                from: e.from,
                letter: map[e.letter],
                to: e.to,
            })
            .collect();
        Ok(Self::from_raw(
            alphabet.to_vec(),
            self.num_states,
            self.initial,
            self.terminal.clone(),
            edges,
            self.names.clone(),
        )
        .canonical())
    }

    /// Rename letters through `f` into the alphabet `alphabet`.
    pub fn relabel(&self, alphabet: &[Letter], f: impl Fn(&str) -> String) -> Result<Self> {
        let map: Vec<usize> = self
            .alphabet
            .iter()
            .map(|l| {
                let img = f(l);
                alphabet
                    .iter()
                    .position(|a| *a == img)
                    .ok_or(AutomatonError::UnknownLetter(img))
            })
            .collect::<Result<_>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                from: e.from,
                letter: map[e.letter],
                to: e.to,
            })
            .collect();
        Ok(Self::from_raw(
            alphabet.to_vec(),
            self.num_states,
            self.initial,
            self.terminal.clone(),
            edges,
            self.names.clone(),
        )
        .canonical())
    }

    /// Automaton for the reversed language.
    pub fn reverse(&self) -> Self {
        let n = self.num_states;
        let fresh = n;
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge {
                from: e.to,
                letter: e.letter,
                to: e.from,
            })
            .collect();
        for e in &self.edges {
            if self.terminal[e.to] {
                edges.push(Edge {
                    from: fresh,
                    letter: e.letter,
                    to: e.from,
                });
            }
        }
        let mut terminal = vec![false; n + 1];
        terminal[self.initial] = true;
        terminal[fresh] = self.terminal[self.initial];
        let mut names = self.names.clone();
        names.push("rev".into());
        Self::from_raw(self.alphabet.clone(), n + 1, fresh, terminal, edges, names).trim()
    }

    /// Whether the language is empty.
    pub fn is_empty(&self) -> bool {
        !self.coreachable()[self.initial]
    }

    /// Accepted words of length at most `max_len` in length-lexicographic
    /// order, without duplicates.
    pub fn enumerate_words(&self, max_len: usize) -> Vec<Word> {
        self.enumerate_words_capped(max_len, usize::MAX)
            .expect("uncapped enumeration cannot overflow")
    }

    /// As [`Automaton::enumerate_words`], failing once more than `cap` words
    /// would be returned.
    pub fn enumerate_words_capped(&self, max_len: usize, cap: usize) -> Result<Vec<Word>> {
        let idx = self.enumerate_indices(max_len, cap)?;
        Ok(idx.iter().map(|w| self.letters_of(w)).collect())
    }

    pub(crate) fn enumerate_indices(&self, max_len: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
        let m = self.trim();
        let mut out = Vec::new();
        let mut level: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![], vec![m.initial])];
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (w, set) in &level {
                if set.iter().any(|&s| m.terminal[s]) {
                    if out.len() == cap {
                        return Err(AutomatonError::Capacity {
                            what: "enumerated words",
                            cap,
                        });
                    }
                    out.push(w.clone());
                }
                if len == max_len {
                    continue;
                }
                for l in 0..m.alphabet.len() {
                    let s = m.step(set, l);
                    if !s.is_empty() {
                        let mut w2 = w.clone();
                        w2.push(l);
                        next.push((w2, s));
                    }
                }
            }
            level = next;
        }
        Ok(out)
    }

    /// Number of accepted words of each length `0..=max_len` (saturating).
    pub fn count_words(&self, max_len: usize) -> Vec<u128> {
        let d = self.determinize();
        let mut counts = vec![0u128; d.num_states];
        counts[d.initial] = 1;
        let mut out = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            out.push(
                d.terminals()
                    .fold(0u128, |acc, s| acc.saturating_add(counts[s])),
            );
            if len == max_len {
                break;
            }
            let mut next = vec![0u128; d.num_states];
            for e in &d.edges {
                next[e.to] = next[e.to].saturating_add(counts[e.from]);
            }
            counts = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn recognize_basic() {
        let m = integers_dfa();
        assert!(m.recognize(&word("ttt")).unwrap());
        assert!(m.recognize(&[]).unwrap());
        assert!(!m.recognize(&word("tT")).unwrap());
        assert_eq!(
            m.recognize(&word("a")),
            Err(AutomatonError::UnknownLetter("a".into()))
        );
    }

    #[test]
    fn enumerate_length_lex() {
        let m = integers_dfa();
        let got: Vec<String> = m
            .enumerate_words(2)
            .iter()
            .map(|w| format_word(w))
            .collect();
        assert_eq!(got, ["ε", "t", "T", "tt", "TT"]);
    }

    #[test]
    fn trim_drops_dead_and_unreachable() {
        // t^n with n ≡ 1, 2 (mod 3), plus a dead end and an unreachable state.
        let m = Automaton::from_parts(
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
        .unwrap();
        let t = m.trim();
        assert_eq!(t.num_states(), 3);
        assert_eq!(t.edges().len(), 3);
        for n in 0..12 {
            let w: Word = vec!["t".into(); n];
            assert_eq!(t.recognize(&w).unwrap(), n % 3 != 0, "n = {n}");
        }
    }

    #[test]
    fn determinize_of_dfa_is_isomorphic() {
        let m = integers_dfa();
        assert_eq!(m.determinize(), m.canonical());
    }

    #[test]
    fn minimize_merges_equivalent_states() {
        let m = Automaton::from_regex("(ab)*|(ab)*ab", None).unwrap();
        let min = m.minimize();
        assert_eq!(min.num_states(), 2);
        assert_eq!(
            min,
            Automaton::from_regex("(ab)*", None).unwrap().minimize()
        );
        assert_eq!(integers_dfa().minimize(), integers_dfa());
    }

    #[test]
    fn empty_language_trim() {
        let m = Automaton::from_parts(&["a"], 2, 0, &[], &[(0, "a", 1)]).unwrap();
        let t = m.trim();
        assert_eq!(t.num_states(), 1);
        assert!(t.is_empty());
        assert!(t.enumerate_words(3).is_empty());
    }

    #[test]
    fn parse_word_longest_match() {
        let a: Vec<Letter> = vec!["x".into(), "x1".into(), "y".into()];
        assert_eq!(parse_word("x1x y", &a).unwrap(), vec!["x1", "x", "y"]);
        assert_eq!(parse_word("ε", &a).unwrap(), Vec::<String>::new());
        assert!(parse_word("z", &a).is_err());
    }

    #[test]
    fn count_words_matches_enumeration() {
        let m = integers_dfa();
        assert_eq!(m.count_words(3), vec![1, 2, 2, 2]);
    }
}
