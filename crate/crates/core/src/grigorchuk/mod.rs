//! The first Grigorchuk group 𝔊 acting on the binary tree.
//!
//! Generators: `a` swaps the first letter; `b = (a, c)`, `c = (a, d)`,
//! `d = (e, b)`. Composition is that of functions, `(gh)(v) = g(h(v))`, so
//! sections obey `(gh)_v = g_{h(v)} h_v`. The Lysenok endomorphism φ is
//! `a ↦ aca, b ↦ d, c ↦ b, d ↦ c`; it satisfies `φ(g)_1 = g`.

mod graded;
mod hnn;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

pub use graded::{
    branch_section, complexity_level, dihedral_section_set, graded_section, graded_section_word,
    level0_sections, nonroot_level0_sections, periodic_branch_table, sec_n_count, Complexity,
    GradedVertex,
};
pub use hnn::HnnElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrigError {
    #[error("bad generator `{0}`")]
    BadLetter(char),
    #[error("bad vertex `{0}`: use letters 0 and 1")]
    BadVertex(String),
    #[error("cannot parse HNN element `{0}`: {1}")]
    BadHnn(String, String),
    #[error("capacity exceeded: {what} (cap {cap})")]
    Capacity { what: &'static str, cap: i64 },
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, GrigError>;

/// Generator of 𝔊.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
    C,
    D,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::C, Gen::D];

    pub fn char(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::C => 'c',
            Gen::D => 'd',
        }
    }

    pub fn from_char(c: char) -> Option<Gen> {
        Some(match c {
            'a' => Gen::A,
            'b' => Gen::B,
            'c' => Gen::C,
            'd' => Gen::D,
            _ => return None,
        })
    }

    /// Product inside the Klein group `{e, b, c, d}`.
    fn klein(x: Gen, y: Gen) -> Option<Gen> {
        use Gen::*;
        match (x, y) {
            _ if x == y => None,
            (B, C) | (C, B) => Some(D),
            (B, D) | (D, B) => Some(C),
            (C, D) | (D, C) => Some(B),
            _ => unreachable!("klein product of non-Klein letters"),
        }
    }

    /// `(x(s), x_s)` for a first letter `s`.
    fn step(self, s: u8) -> (u8, Option<Gen>) {
        use Gen::*;
        match (self, s) {
            (A, _) => (1 - s, None),
            (B, 0) | (C, 0) => (0, Some(A)),
            (B, _) => (1, Some(C)),
            (C, _) => (1, Some(D)),
            (D, 0) => (0, None),
            (D, _) => (1, Some(B)),
        }
    }
}

/// A word in `a, b, c, d`, kept in reduced (alternating) form: no `aa`, and
/// no two adjacent letters from `{b, c, d}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GrigWord(Vec<Gen>);

impl GrigWord {
    pub fn identity() -> Self {
        GrigWord(Vec::new())
    }

    pub fn gen(g: Gen) -> Self {
        GrigWord(vec![g])
    }

    /// Reduce an arbitrary letter sequence.
    pub fn from_gens(gens: impl IntoIterator<Item = Gen>) -> Self {
        let mut out: Vec<Gen> = Vec::new();
        for x in gens {
            match out.last().copied() {
                Some(Gen::A) if x == Gen::A => {
                    out.pop();
                }
                Some(y) if y != Gen::A && x != Gen::A => {
                    out.pop();
                    if let Some(z) = Gen::klein(y, x) {
                        out.push(z);
                    }
                }
                _ => out.push(x),
            }
        }
        GrigWord(out)
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &GrigWord) -> GrigWord {
        GrigWord::from_gens(self.0.iter().chain(other.0.iter()).copied())
    }

    /// All generators are involutions, so the inverse is the reversal.
    pub fn inverse(&self) -> GrigWord {
        GrigWord::from_gens(self.0.iter().rev().copied())
    }

    pub fn pow(&self, k: usize) -> GrigWord {
        GrigWord::from_gens(std::iter::repeat_n(self.0.iter().copied(), k).flatten())
    }

    /// Whether the first level is swapped.
    pub fn swaps_root(&self) -> bool {
        self.0.iter().filter(|&&g| g == Gen::A).count() % 2 == 1
    }

    /// `(g(s), g_s)` for a single letter `s ∈ {0, 1}`.
    pub fn step(&self, s: u8) -> (u8, GrigWord) {
        let mut cur = s;
        let mut parts = Vec::with_capacity(self.0.len());
        for &x in self.0.iter().rev() {
            let (img, sec) = x.step(cur);
            if let Some(g) = sec {
                parts.push(g);
            }
            cur = img;
        }
        parts.reverse();
        (cur, GrigWord::from_gens(parts))
    }

    /// The section `g_v`.
    pub fn section(&self, v: &[u8]) -> GrigWord {
        v.iter().fold(self.clone(), |g, &s| g.step(s).1)
    }

    /// The image `g(v)`.
    pub fn act(&self, v: &[u8]) -> Vec<u8> {
        let mut g = self.clone();
        v.iter()
            .map(|&s| {
                let (img, sec) = g.step(s);
                g = sec;
                img
            })
            .collect()
    }

    /// Letterwise image under φ, reduced.
    pub fn phi(&self) -> GrigWord {
        GrigWord::from_gens(self.0.iter().flat_map(|&g| match g {
            Gen::A => vec![Gen::A, Gen::C, Gen::A],
            Gen::B => vec![Gen::D],
            Gen::C => vec![Gen::B],
            Gen::D => vec![Gen::C],
        }))
    }

    pub fn phi_pow(&self, i: usize) -> GrigWord {
        (0..i).fold(self.clone(), |g, _| g.phi())
    }

    pub fn is_trivial(&self) -> bool {
        WordProblem::default().is_trivial(self)
    }

    /// Equality in 𝔊.
    pub fn equals(&self, other: &GrigWord) -> bool {
        self.mul(&other.inverse()).is_trivial()
    }

    /// Portrait of the action on the first `depth` levels.
    pub fn portrait(&self, depth: u32) -> Portrait {
        Portrait::from_bits(depth, self.swap_bits(depth))
    }

    /// Swap labels of the internal vertices of depth `< depth`, indexed in
    /// heap order (root 1, children `2v` and `2v + 1`).
    pub(crate) fn swap_bits(&self, depth: u32) -> u64 {
        assert!(depth <= 6, "portrait depth limited to 6");
        let mut bits = 0u64;
        let mut level = vec![(1u64, self.clone())];
        for _ in 0..depth {
            let mut next = Vec::with_capacity(level.len() * 2);
            for (v, g) in level {
                if g.is_empty() {
                    continue;
                }
                if g.swaps_root() {
                    bits |= 1 << v;
                }
                next.push((2 * v, g.step(0).1));
                next.push((2 * v + 1, g.step(1).1));
            }
            level = next;
        }
        bits
    }

    /// A uniformly random word of `len` letters, reduced.
    pub fn random(rng: &mut impl Rng, len: usize) -> GrigWord {
        GrigWord::from_gens((0..len).map(|_| Gen::ALL[rng.random_range(0..4)]))
    }
}

impl fmt::Display for GrigWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for g in &self.0 {
            write!(f, "{}", g.char())?;
        }
        Ok(())
    }
}

impl FromStr for GrigWord {
    type Err = GrigError;

    fn from_str(s: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for c in s.chars() {
            if c.is_whitespace() || c == 'e' || c == 'ε' {
                continue;
            }
            gens.push(Gen::from_char(c).ok_or(GrigError::BadLetter(c))?);
        }
        Ok(GrigWord::from_gens(gens))
    }
}

/// Parse a vertex such as `"110"`.
pub fn parse_vertex(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .filter(|c| *c != 'ε')
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(GrigError::BadVertex(s.to_string())),
        })
        .collect()
}

/// Word problem by contraction: `g = e` iff `g` fixes the first level and
/// both sections are trivial. Sections of reduced words of length `ℓ ≥ 2`
/// have length at most `(ℓ + 1) / 2`, so the recursion terminates. Results
/// are memoised per instance (keep one per worker).
#[derive(Debug, Default)]
pub struct WordProblem {
    memo: HashMap<GrigWord, bool>,
}

impl WordProblem {
    pub fn is_trivial(&mut self, g: &GrigWord) -> bool {
        if g.is_empty() {
            return true;
        }
        if g.swaps_root() {
            return false;
        }
        if let Some(&r) = self.memo.get(g) {
            return r;
        }
        let r = self.is_trivial(&g.step(0).1) && self.is_trivial(&g.step(1).1);
        self.memo.insert(g.clone(), r);
        r
    }
}

/// The action on the leaves of depth `depth`, as the images of leaves
/// `0..2^depth` (leaf index = binary value of the vertex, first letter most
/// significant).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Portrait {
    pub depth: u32,
    pub leaf_perm: Vec<u32>,
}

impl Portrait {
    fn from_bits(depth: u32, bits: u64) -> Portrait {
        let n = 1u32 << depth;
        let leaf_perm = (0..n)
            .map(|leaf| {
                let mut v = 1u64;
                let mut img = 0u32;
                for i in (0..depth).rev() {
                    let x = (leaf >> i) & 1;
                    let y = x ^ ((bits >> v) & 1) as u32;
                    img = img * 2 + y;
                    v = 2 * v + x as u64;
                }
                img
            })
            .collect();
        Portrait { depth, leaf_perm }
    }

    pub fn is_identity(&self) -> bool {
        self.leaf_perm
            .iter()
            .enumerate()
            .all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Portrait) -> Portrait {
        assert_eq!(self.depth, other.depth);
        Portrait {
            depth: self.depth,
            leaf_perm: other
                .leaf_perm
                .iter()
                .map(|&x| self.leaf_perm[x as usize])
                .collect(),
        }
    }
}

/// `(g∘h)` on swap labels: `label_{gh}(v) = label_h(v) ⊕ label_g(h(v))`.
fn compose_bits(g: u64, h: u64, depth: u32) -> u64 {
    let internal = 1u64 << depth; // vertices 1..internal are internal
    let mut img = vec![0u64; internal as usize];
    img[1] = 1;
    let mut out = 0u64;
    for v in 1..internal {
        let hv = (h >> v) & 1;
        let iv = img[v as usize];
        out |= (hv ^ ((g >> iv) & 1)) << v;
        if 2 * v < internal {
            img[(2 * v) as usize] = 2 * iv + hv;
            img[(2 * v + 1) as usize] = 2 * iv + (1 ^ hv);
        }
    }
    out
}

/// Size of the quotient `G_n` acting on level `n`, by breadth-first closure
/// of the generator portraits. `n ≤ 6`.
pub fn quotient_size(n: u32, cap: usize) -> Result<usize> {
    Ok(quotient_elements(n, cap)?.len())
}

fn quotient_elements(n: u32, cap: usize) -> Result<Vec<u64>> {
    if n > 6 {
        return Err(GrigError::Domain("quotient level limited to 6".into()));
    }
    let gens: Vec<u64> = Gen::ALL
        .iter()
        .map(|&g| GrigWord::gen(g).swap_bits(n))
        .collect();
    let mut seen: HashSet<u64> = HashSet::from([0]);
    let mut order = vec![0u64];
    let mut q = VecDeque::from([0u64]);
    while let Some(x) = q.pop_front() {
        for &g in &gens {
            let y = compose_bits(x, g, n);
            if seen.insert(y) {
                if order.len() == cap {
                    return Err(GrigError::Capacity {
                        what: "quotient elements",
                        cap: cap as i64,
                    });
                }
                order.push(y);
                q.push_back(y);
            }
        }
    }
    Ok(order)
}

/// Orders of all elements of `G_n`.
pub fn quotient_orders(n: u32, cap: usize) -> Result<Vec<u64>> {
    Ok(quotient_elements(n, cap)?
        .into_iter()
        .map(|x| {
            let mut p = x;
            let mut k = 1;
            while p != 0 {
                p = compose_bits(p, x, n);
                k += 1;
            }
            k
        })
        .collect())
}

/// `φⁱ(a²)`, `φⁱ((ad)⁴)`, `φⁱ((adacac)⁴)`.
pub fn relators(i: usize) -> Vec<GrigWord> {
    let raw = |s: &str| {
        s.chars()
            .map(|c| Gen::from_char(c).unwrap())
            .collect::<Vec<_>>()
    };
    let phi_raw = |w: Vec<Gen>| -> Vec<Gen> {
        w.into_iter()
            .flat_map(|g| match g {
                Gen::A => vec![Gen::A, Gen::C, Gen::A],
                Gen::B => vec![Gen::C, Gen::D],
                Gen::C => vec![Gen::B],
                Gen::D => vec![Gen::C],
            })
            .collect()
    };
    ["aa", &"ad".repeat(4), &"adacac".repeat(4)]
        .iter()
        .map(|s| {
            let mut w = raw(s);
            for _ in 0..i {
                w = phi_raw(w);
            }
            // Keep the unreduced word so that triviality is a real check.
            GrigWord(w)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> GrigWord {
        s.parse().unwrap()
    }

    #[test]
    fn generator_sections() {
        assert_eq!(w("b").section(&[0]), w("a"));
        assert_eq!(w("b").section(&[1, 0]), w("a"));
        assert_eq!(w("b").section(&[1, 1, 0]), w("e"));
        assert_eq!(w("c").section(&[1]), w("d"));
    }

    #[test]
    fn reduction() {
        assert_eq!(w("bc"), w("d"));
        assert_eq!(w("abba"), w("e"));
        assert_eq!(w("cdc"), w("d"));
        assert_eq!(w("adda").len(), 0);
    }

    #[test]
    fn phi_images() {
        assert_eq!(w("b").phi(), w("cdc"));
        assert_eq!(w("b").phi(), w("d"));
        assert_eq!(w("a").phi(), w("aca"));
    }

    #[test]
    fn relators_are_trivial() {
        for i in 0..3 {
            for r in relators(i) {
                assert!(r.is_trivial(), "relator {r} at i = {i}");
            }
        }
        assert!(!w("ad").is_trivial());
        assert!(!w("adad").is_trivial());
        assert!(!w("b").is_trivial());
    }

    #[test]
    fn phi_fixes_zero_and_has_section_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let g = GrigWord::random(&mut rng, 12);
            let p = g.phi();
            assert!(!p.swaps_root());
            assert!(p.step(1).1.equals(&g));
        }
    }

    #[test]
    fn portraits_compose_like_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = GrigWord::random(&mut rng, 9);
            let h = GrigWord::random(&mut rng, 9);
            let gh = g.mul(&h);
            assert_eq!(gh.portrait(5), g.portrait(5).compose(&h.portrait(5)));
            let bits = compose_bits(g.swap_bits(5), h.swap_bits(5), 5);
            assert_eq!(Portrait::from_bits(5, bits), gh.portrait(5));
        }
    }

    #[test]
    fn portrait_matches_action() {
        let g = w("abacad");
        let p = g.portrait(4);
        for leaf in 0..16u32 {
            let v: Vec<u8> = (0..4).rev().map(|i| ((leaf >> i) & 1) as u8).collect();
            let img = g.act(&v);
            let idx = img.iter().fold(0u32, |acc, &x| acc * 2 + x as u32);
            assert_eq!(p.leaf_perm[leaf as usize], idx);
        }
    }

    #[test]
    fn small_quotients() {
        assert_eq!(quotient_size(1, 1 << 20).unwrap(), 2);
        assert_eq!(quotient_size(2, 1 << 20).unwrap(), 8);
        assert_eq!(quotient_size(3, 1 << 20).unwrap(), 128);
        assert!(quotient_size(4, 100).is_err());
    }
}
