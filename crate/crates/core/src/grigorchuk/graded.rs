//! Action of the level-preserving part of the HNN extension on the graded
//! tree.
//!
//! Vertices are `(n, w)` with `n ∈ ℤ` and `w` binary; `(n, 1w) = (n + 1, w)`,
//! so every vertex has a canonical form with `w` empty or starting with `0`.
//! The level of `(n, w)` is `n + |w|`, and `t` shifts the first coordinate.
//! An element `g ∈ 𝔊` acts on `(n, w)` with `n ≥ 0` through `1ⁿw`. On the
//! branch hanging below `(−j, ε)` it acts through `hⱼ(g) = φʲ(g)₀`, an
//! element of the dihedral group `⟨a, d⟩`. This is the unique extension
//! compatible with `t⁻¹gt = φ(g)`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::{Gen, GrigError, GrigWord, HnnElement, Result, WordProblem};

/// `{e, a, b, c, d, ad, da, ada, dad, adad}`: every section at a level-0
/// vertex off the root of `t⁻ʲ s tʲ` (`s` a generator) lies here.
pub fn dihedral_section_set() -> Vec<GrigWord> {
    ["e", "a", "b", "c", "d", "ad", "da", "ada", "dad", "adad"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

/// A fixed branch table indexed by `i mod 3`: `a ↦ d` on every branch;
/// `b, c, d` map to `e` on branches 0, 1, 2 respectively and to `a`
/// otherwise. It agrees with [`branch_section`] except for `a` below the
/// first branch, and is not compatible with `t⁻¹at = aca` (see tests).
pub fn periodic_branch_table(i: usize, g: Gen) -> GrigWord {
    let s = match (i % 3, g) {
        (_, Gen::A) => "d",
        (0, Gen::D) | (1, Gen::C) | (2, Gen::B) => "e",
        _ => "a",
    };
    s.parse().unwrap()
}

const D8: [&str; 8] = ["e", "a", "d", "ad", "da", "ada", "dad", "adad"];

struct Dihedral {
    reps: Vec<GrigWord>,
    by_bits: HashMap<u64, usize>,
}

fn dihedral() -> &'static Dihedral {
    static CELL: OnceLock<Dihedral> = OnceLock::new();
    CELL.get_or_init(|| {
        let reps: Vec<GrigWord> = D8.iter().map(|s| s.parse().unwrap()).collect();
        let by_bits: HashMap<u64, usize> = reps
            .iter()
            .enumerate()
            .map(|(i, r)| (r.swap_bits(3), i))
            .collect();
        assert_eq!(by_bits.len(), 8, "⟨a, d⟩ must act faithfully on level 3");
        Dihedral { reps, by_bits }
    })
}

/// Index of a word over `a, d` among the eight dihedral representatives.
fn d8_index(w: &GrigWord) -> usize {
    debug_assert!(w.letters().iter().all(|g| matches!(g, Gen::A | Gen::D)));
    dihedral().by_bits[&w.swap_bits(3)]
}

/// `hⱼ` on the four generators, as dihedral indices.
type BranchMaps = [usize; 4];

fn gen_slot(g: Gen) -> usize {
    g as usize
}

fn first_branch_maps() -> BranchMaps {
    Gen::ALL.map(|g| d8_index(&GrigWord::gen(g).phi().step(0).1))
}

/// `h_{j+1}(a) = hⱼ(a)hⱼ(c)hⱼ(a)`, `h_{j+1}(b) = hⱼ(d)`, `h_{j+1}(c) = hⱼ(b)`,
/// `h_{j+1}(d) = hⱼ(c)`.
fn next_branch_maps(h: &BranchMaps) -> BranchMaps {
    let r = &dihedral().reps;
    let a = r[h[0]].mul(&r[h[2]]).mul(&r[h[0]]);
    [d8_index(&a), h[3], h[1], h[2]]
}

fn apply_maps(h: &BranchMaps, g: &GrigWord) -> usize {
    let r = &dihedral().reps;
    let w = GrigWord::from_gens(
        g.letters()
            .iter()
            .flat_map(|&x| r[h[gen_slot(x)]].letters().iter().copied()),
    );
    d8_index(&w)
}

/// `hⱼ(g) = φʲ(g)₀` for `j ≥ 1`, as a shortest dihedral word.
pub fn branch_section(j: usize, g: &GrigWord) -> GrigWord {
    assert!(j >= 1, "branches start at j = 1");
    let mut h = first_branch_maps();
    for _ in 1..j {
        h = next_branch_maps(&h);
    }
    dihedral().reps[apply_maps(&h, g)].clone()
}

/// A vertex `(n, w)` of the graded tree in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedVertex {
    pub n: i64,
    pub w: Vec<u8>,
}

impl GradedVertex {
    pub fn new(mut n: i64, w: &[u8]) -> Self {
        let ones = w.iter().take_while(|&&x| x == 1).count();
        n += ones as i64;
        GradedVertex {
            n,
            w: w[ones..].to_vec(),
        }
    }

    pub fn level(&self) -> i64 {
        self.n + self.w.len() as i64
    }
}

impl fmt::Display for GradedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: String = self
            .w
            .iter()
            .map(|x| if *x == 0 { '0' } else { '1' })
            .collect();
        write!(f, "({}, {})", self.n, if w.is_empty() { "ε" } else { &w })
    }
}

/// Parses `n:w`, `(n, w)` or `n` alone.
impl FromStr for GradedVertex {
    type Err = GrigError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || GrigError::BadVertex(s.to_string());
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (n, w) = t.split_once([':', ',']).unwrap_or((t, ""));
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let w = super::parse_vertex(w.trim()).map_err(|_| bad())?;
        Ok(GradedVertex::new(n, &w))
    }
}

fn require_level_preserving(x: &HnnElement) -> Result<()> {
    if x.m != 0 {
        return Err(GrigError::Domain(format!(
            "{x} does not preserve levels (m = {})",
            x.m
        )));
    }
    Ok(())
}

/// Section of `x = t^k g t^{-k}` at the vertex `v`.
pub fn graded_section(x: &HnnElement, v: &GradedVertex) -> Result<GrigWord> {
    require_level_preserving(x)?;
    let n = v.n + x.k as i64;
    if n >= 0 {
        let mut path = vec![1u8; n as usize];
        path.extend_from_slice(&v.w);
        return Ok(x.g.section(&path));
    }
    let j = (-n) as usize;
    match v.w.split_first() {
        None => Ok(x.g.phi_pow(j)),
        Some((_, rest)) => Ok(branch_section(j, &x.g).section(rest)),
    }
}

/// Convenience wrapper taking string arguments.
pub fn graded_section_word(x: &str, v: &str) -> Result<GrigWord> {
    graded_section(&x.parse()?, &v.parse()?)
}

// Generators and identity as indices into a 5-bit mask.
const SMALL: [&str; 5] = ["e", "a", "b", "c", "d"];

fn small_index(w: &GrigWord) -> usize {
    match w.letters() {
        [] => 0,
        [g] => 1 + gen_slot(*g),
        _ => panic!("{w} is not a generator"),
    }
}

/// Sections one level down of a set of generators.
fn small_step(mask: u8) -> u8 {
    const CHILDREN: [u8; 5] = [
        0b00001,           // e -> e
        0b00001,           // a -> e
        0b00010 | 0b01000, // b -> a, c
        0b00010 | 0b10000, // c -> a, d
        0b00001 | 0b00100, // d -> e, b
    ];
    (0..5)
        .filter(|i| mask >> i & 1 == 1)
        .fold(0, |acc, i| acc | CHILDREN[i])
}

const SMALL_PREPERIOD: usize = 40;

/// Common period of `small_step` on all masks, after `SMALL_PREPERIOD` steps.
fn small_period() -> usize {
    let mut q = 1;
    for start in 0u8..32 {
        let mut x = start;
        for _ in 0..SMALL_PREPERIOD {
            x = small_step(x);
        }
        let (y0, mut y, mut p) = (x, small_step(x), 1);
        while y != y0 {
            y = small_step(y);
            p += 1;
        }
        q = num_integer::lcm(q, p);
    }
    q
}

fn small_step_pow(mut mask: u8, p: usize) -> u8 {
    for _ in 0..p {
        mask = small_step(mask);
    }
    mask
}

/// Distinct elements among the sections of `x` at level-0 vertices,
/// optionally excluding the vertex `(0, ε)`.
///
/// Vertices `(n, w)` with `n ≥ -k` read `g` along binary strings of length
/// `k`. Deeper branches `j = 1, 2, …` read `hⱼ(g)` at depth `k + j - 1`;
/// these are eventually periodic in `j`, which bounds the enumeration.
pub fn level0_sections(x: &HnnElement, include_root: bool) -> Result<Vec<GrigWord>> {
    require_level_preserving(x)?;
    let k = x.k as usize;
    let mut words: BTreeSet<GrigWord> = BTreeSet::new();

    let mut level: HashSet<(GrigWord, bool)> = HashSet::from([(x.g.clone(), true)]);
    for _ in 0..k {
        let mut next = HashSet::new();
        for (g, ones) in &level {
            next.insert((g.step(0).1, false));
            next.insert((g.step(1).1, *ones));
        }
        level = next;
    }
    words.extend(
        level
            .into_iter()
            .filter(|(_, ones)| include_root || !ones)
            .map(|(g, _)| g),
    );

    let q = small_period();
    let phase = |p: usize| {
        if p < SMALL_PREPERIOD {
            p
        } else {
            SMALL_PREPERIOD + (p - SMALL_PREPERIOD) % q
        }
    };
    let reps = &dihedral().reps;
    let mut mask = 0u8;
    let mut seen: HashSet<(BranchMaps, usize)> = HashSet::new();
    let mut h = first_branch_maps();
    for j in 1.. {
        let depth = k + j - 1;
        let key = (h, phase(depth.saturating_sub(1)));
        if depth > 0 && !seen.insert(key) {
            break;
        }
        let y = &reps[apply_maps(&h, &x.g)];
        if depth == 0 {
            words.insert(y.clone());
        } else {
            let first = (1 << small_index(&y.step(0).1)) | (1 << small_index(&y.step(1).1));
            mask |= small_step_pow(first, key.1);
        }
        h = next_branch_maps(&h);
    }
    for (i, s) in SMALL.iter().enumerate() {
        if mask >> i & 1 == 1 {
            words.insert(s.parse().unwrap());
        }
    }
    Ok(distinct_elements(words))
}

fn distinct_elements(words: impl IntoIterator<Item = GrigWord>) -> Vec<GrigWord> {
    let mut wp = WordProblem::default();
    let mut out: Vec<GrigWord> = Vec::new();
    for w in words {
        if !out.iter().any(|u| wp.is_trivial(&u.mul(&w.inverse()))) {
            out.push(w);
        }
    }
    out
}

/// Sections at level-0 vertices other than `(0, ε)`.
pub fn nonroot_level0_sections(x: &HnnElement) -> Result<Vec<GrigWord>> {
    level0_sections(x, false)
}

/// Number of distinct depth-`n` actions among the sections of elements of
/// `xs` at level-0 vertices.
pub fn sec_n_count(xs: &[HnnElement], n: u32) -> Result<usize> {
    if n > 6 {
        return Err(GrigError::Capacity {
            what: "section depth",
            cap: 6,
        });
    }
    let mut portraits = HashSet::new();
    for x in xs {
        for s in level0_sections(x, true)? {
            portraits.insert(s.swap_bits(n));
        }
    }
    Ok(portraits.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Complexity {
    NegInfinity,
    Level(i64),
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Complexity::NegInfinity => write!(f, "-inf"),
            Complexity::Level(k) => write!(f, "{k}"),
        }
    }
}

fn is_small(wp: &mut WordProblem, g: &GrigWord) -> bool {
    g.len() <= 1
        || SMALL
            .iter()
            .any(|s| wp.is_trivial(&g.mul(&s.parse::<GrigWord>().unwrap())))
}

/// Whether every section of `g` at level `level` (in `g`'s own frame) is
/// `e` or a generator. Branch vertices are covered automatically: their
/// sections at positive depth are products of `b`, and at depth 0 they are
/// sections of an element already checked one level up.
fn level_ok(wp: &mut WordProblem, g: &GrigWord, level: i64) -> bool {
    if level < 0 {
        return is_small(wp, &g.phi_pow((-level) as usize));
    }
    let mut cur: HashSet<GrigWord> = HashSet::from([g.clone()]);
    for _ in 0..level {
        cur = cur
            .iter()
            .flat_map(|h| [h.step(0).1, h.step(1).1])
            .collect();
    }
    cur.iter().all(|h| is_small(wp, h))
}

/// Smallest level `L` at which every section of `x` lies in
/// `{e, a, b, c, d}`; `−∞` for `e, b, c, d`. Levels above `cap` are not
/// searched and give a capacity error.
pub fn complexity_level(x: &HnnElement, cap: i64) -> Result<Complexity> {
    require_level_preserving(x)?;
    let mut wp = WordProblem::default();
    let g = &x.g;
    if ["e", "b", "c", "d"]
        .iter()
        .any(|s| g.equals(&s.parse().unwrap()))
    {
        return Ok(Complexity::NegInfinity);
    }
    let k = x.k as i64;
    if !level_ok(&mut wp, g, cap + k) {
        return Err(GrigError::Capacity {
            what: "complexity level",
            cap,
        });
    }
    // Monotone in the level; fails at frame level -1 for g ∉ {e, b, c, d}.
    let mut level = cap;
    while level_ok(&mut wp, g, level - 1 + k) {
        level -= 1;
    }
    Ok(Complexity::Level(level))
}
