//! Exact group backends and evaluation of words.
//!
//! A [`Group`] couples a [`GroupSpec`] with its generator table: letters,
//! the elements they denote and a formal inverse for each letter. Words are
//! evaluated as left-to-right products.
//!
//! | spec string | letters |
//! |---|---|
//! | `Z` | `t T` |
//! | `Z^d` (d ≥ 2) | `a A b B …` |
//! | `F<r>` | `a A b B …` |
//! | `BS(1,n)` | `a A t T` |
//! | `wr(L,Q)` | lamp letters renamed `a (A) b (B) …`, then `Q`'s letters |
//! | `H2` | `a t T` with `a = (1 2)`, `t: x ↦ x+1` |
//! | `C_q` | `a` (and `A` when q > 2) |
//! | `Sym_q` | `s = (1 2)`, `r = (1 2 … q)`, `R = r⁻¹` |

pub mod bs;
pub mod houghton;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::automata::{Letter, Word};
pub use bs::BsElem;
pub use houghton::HoughtonPerm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("letter `{0}` is not a generator")]
    UnknownLetter(String),
    #[error("cannot parse group spec `{0}`: {1}")]
    BadSpec(String, String),
    #[error("element does not belong to this group")]
    WrongBackend,
    #[error("capacity exceeded: {what} (cap {cap})")]
    Capacity { what: &'static str, cap: usize },
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Free(u32),
    IntLattice(u32),
    Bs1n(u32),
    Wreath(Box<GroupSpec>, Box<GroupSpec>),
    Houghton2,
    CyclicFinite(u32),
    SymmetricFinite(u32),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Free(r) => write!(f, "F{r}"),
            GroupSpec::IntLattice(1) => write!(f, "Z"),
            GroupSpec::IntLattice(d) => write!(f, "Z^{d}"),
            GroupSpec::Bs1n(n) => write!(f, "BS(1,{n})"),
            GroupSpec::Wreath(l, q) => write!(f, "wr({l},{q})"),
            GroupSpec::Houghton2 => write!(f, "H2"),
            GroupSpec::CyclicFinite(q) => write!(f, "C{q}"),
            GroupSpec::SymmetricFinite(q) => write!(f, "Sym_{q}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| GroupError::BadSpec(s.to_string(), why.to_string());
        let num = |x: &str| x.parse::<u32>().map_err(|_| bad("expected a number"));
        if t == "Z" {
            return Ok(GroupSpec::IntLattice(1));
        }
        if t == "H2" {
            return Ok(GroupSpec::Houghton2);
        }
        if let Some(d) = t.strip_prefix("Z^") {
            let d = num(d)?;
            if d == 0 || d > 26 {
                return Err(bad("dimension must be in 1..=26"));
            }
            return Ok(GroupSpec::IntLattice(d));
        }
        if let Some(inner) = t.strip_prefix("BS(").and_then(|r| r.strip_suffix(')')) {
            let (one, n) = inner
                .split_once(',')
                .ok_or_else(|| bad("expected BS(1,n)"))?;
            if one != "1" {
                return Err(bad("only BS(1,n) is supported"));
            }
            let n = num(n)?;
            if n == 0 {
                return Err(bad("n must be positive"));
            }
            return Ok(GroupSpec::Bs1n(n));
        }
        if let Some(inner) = t.strip_prefix("wr(").and_then(|r| r.strip_suffix(')')) {
            // split at the top-level comma
            let mut depth = 0;
            let mut cut = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' if depth == 0 => {
                        cut = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let i = cut.ok_or_else(|| bad("expected wr(L,Q)"))?;
            let l: GroupSpec = inner[..i].parse()?;
            let q: GroupSpec = inner[i + 1..].parse()?;
            return Ok(GroupSpec::Wreath(Box::new(l), Box::new(q)));
        }
        if let Some(q) = t.strip_prefix("Sym") {
            let q = num(q.trim_start_matches('_'))?;
            if q == 0 || q > 12 {
                return Err(bad("degree must be in 1..=12"));
            }
            return Ok(GroupSpec::SymmetricFinite(q));
        }
        if let Some(q) = t.strip_prefix('C') {
            let q = num(q.trim_start_matches('_'))?;
            if q == 0 {
                return Err(bad("order must be positive"));
            }
            return Ok(GroupSpec::CyclicFinite(q));
        }
        if let Some(r) = t.strip_prefix('F') {
            let r = num(r)?;
            if r == 0 || r > 26 {
                return Err(bad("rank must be in 1..=26"));
            }
            return Ok(GroupSpec::Free(r));
        }
        Err(bad("unknown group"))
    }
}

/// Elements in canonical form; equal elements compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    /// Freely reduced word; generator `i` is `i + 1`, its inverse `-(i + 1)`.
    Free(Vec<i32>),
    Lattice(Vec<i64>),
    Bs(BsElem),
    Wreath(Box<WreathElem>),
    Houghton(HoughtonPerm),
    Cyclic(u32),
    /// Images of `0..q`.
    Perm(Vec<u16>),
}

/// Finitely supported lamp configuration and cursor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElem {
    /// Only non-identity lamps are stored.
    pub lamps: BTreeMap<GroupElement, GroupElement>,
    pub cursor: GroupElement,
}

/// A group with its generator table.
#[derive(Debug, Clone)]
pub struct Group {
    spec: GroupSpec,
    letters: Vec<Letter>,
    gens: Vec<GroupElement>,
    inverse: Vec<usize>,
    index: HashMap<Letter, usize>,
    lamp: Option<Box<Group>>,
    base: Option<Box<Group>>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Group {}

fn lower(i: usize) -> String {
    ((b'a' + i as u8) as char).to_string()
}

fn upper(i: usize) -> String {
    ((b'A' + i as u8) as char).to_string()
}

impl Group {
    pub fn new(spec: GroupSpec) -> Result<Self> {
        // (letter, element, inverse letter)
        let mut table: Vec<(Letter, GroupElement, Letter)> = Vec::new();
        let mut lamp = None;
        let mut base = None;
        match &spec {
            GroupSpec::Free(r) => {
                for i in 0..*r as usize {
                    let g = i as i32 + 1;
                    table.push((lower(i), GroupElement::Free(vec![g]), upper(i)));
                    table.push((upper(i), GroupElement::Free(vec![-g]), lower(i)));
                }
            }
            GroupSpec::IntLattice(1) => {
                table.push(("t".into(), GroupElement::Lattice(vec![1]), "T".into()));
                table.push(("T".into(), GroupElement::Lattice(vec![-1]), "t".into()));
            }
            GroupSpec::IntLattice(d) => {
                let d = *d as usize;
                for i in 0..d {
                    let mut v = vec![0; d];
                    v[i] = 1;
                    table.push((lower(i), GroupElement::Lattice(v.clone()), upper(i)));
                    v[i] = -1;
                    table.push((upper(i), GroupElement::Lattice(v), lower(i)));
                }
            }
            GroupSpec::Bs1n(n) => {
                let a = BsElem::a();
                let t = BsElem::t();
                table.push(("a".into(), GroupElement::Bs(a.clone()), "A".into()));
                table.push(("A".into(), GroupElement::Bs(a.inverse(*n)), "a".into()));
                table.push(("t".into(), GroupElement::Bs(t.clone()), "T".into()));
                table.push(("T".into(), GroupElement::Bs(t.inverse(*n)), "t".into()));
            }
            GroupSpec::Houghton2 => {
                table.push((
                    "a".into(),
                    GroupElement::Houghton(HoughtonPerm::transposition(1, 2)),
                    "a".into(),
                ));
                table.push((
                    "t".into(),
                    GroupElement::Houghton(HoughtonPerm::translation(1)),
                    "T".into(),
                ));
                table.push((
                    "T".into(),
                    GroupElement::Houghton(HoughtonPerm::translation(-1)),
                    "t".into(),
                ));
            }
            GroupSpec::CyclicFinite(q) => {
                let q = *q;
                if q <= 2 {
                    table.push(("a".into(), GroupElement::Cyclic(1 % q), "a".into()));
                } else {
                    table.push(("a".into(), GroupElement::Cyclic(1), "A".into()));
                    table.push(("A".into(), GroupElement::Cyclic(q - 1), "a".into()));
                }
            }
            GroupSpec::SymmetricFinite(q) => {
                let q = *q as usize;
                if q >= 2 {
                    let mut s: Vec<u16> = (0..q as u16).collect();
                    s.swap(0, 1);
                    table.push(("s".into(), GroupElement::Perm(s), "s".into()));
                }
                if q >= 3 {
                    let r: Vec<u16> = (0..q).map(|i| ((i + 1) % q) as u16).collect();
                    let rinv: Vec<u16> = (0..q).map(|i| ((i + q - 1) % q) as u16).collect();
                    table.push(("r".into(), GroupElement::Perm(r), "R".into()));
                    table.push(("R".into(), GroupElement::Perm(rinv), "r".into()));
                }
            }
            GroupSpec::Wreath(l, q) => {
                let lg = Group::new((**l).clone())?;
                let qg = Group::new((**q).clone())?;
                // Rename lamp letters: the k-th inverse pair becomes (lower k, upper k).
                let mut rename: HashMap<usize, Letter> = HashMap::new();
                let mut k = 0;
                for i in 0..lg.letters.len() {
                    if rename.contains_key(&i) {
                        continue;
                    }
                    let j = lg.inverse[i];
                    rename.insert(i, lower(k));
                    if j != i {
                        rename.insert(j, upper(k));
                    }
                    k += 1;
                }
                let e_q = qg.identity();
                for i in 0..lg.letters.len() {
                    let mut lamps = BTreeMap::new();
                    if lg.gens[i] != lg.identity() {
                        lamps.insert(e_q.clone(), lg.gens[i].clone());
                    }
                    let el = GroupElement::Wreath(Box::new(WreathElem {
                        lamps,
                        cursor: e_q.clone(),
                    }));
                    table.push((rename[&i].clone(), el, rename[&lg.inverse[i]].clone()));
                }
                for i in 0..qg.letters.len() {
                    let el = GroupElement::Wreath(Box::new(WreathElem {
                        lamps: BTreeMap::new(),
                        cursor: qg.gens[i].clone(),
                    }));
                    table.push((qg.letters[i].clone(), el, qg.letters[qg.inverse[i]].clone()));
                }
                lamp = Some(Box::new(lg));
                base = Some(Box::new(qg));
            }
        }
        let mut index = HashMap::new();
        for (i, (l, _, _)) in table.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GroupError::BadSpec(
                    spec.to_string(),
                    format!("letter `{l}` used twice"),
                ));
            }
        }
        let inverse = table.iter().map(|(_, _, inv)| index[inv]).collect();
        Ok(Group {
            spec,
            letters: table.iter().map(|t| t.0.clone()).collect(),
            gens: table.into_iter().map(|t| t.1).collect(),
            inverse,
            index,
            lamp,
            base,
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Group::new(s.parse()?)
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Generator letters in their fixed order.
    pub fn alphabet(&self) -> &[Letter] {
        &self.letters
    }

    pub fn generator(&self, letter: &str) -> Result<&GroupElement> {
        self.index
            .get(letter)
            .map(|&i| &self.gens[i])
            .ok_or_else(|| GroupError::UnknownLetter(letter.to_string()))
    }

    /// The letter denoting the inverse generator.
    pub fn inverse_letter(&self, letter: &str) -> Result<&Letter> {
        self.index
            .get(letter)
            .map(|&i| &self.letters[self.inverse[i]])
            .ok_or_else(|| GroupError::UnknownLetter(letter.to_string()))
    }

    /// The formal inverse `w⁻¹` (reverse, invert letters).
    pub fn inverse_word(&self, w: &[Letter]) -> Result<Word> {
        w.iter()
            .rev()
            .map(|l| self.inverse_letter(l).cloned())
            .collect()
    }

    /// Letter-to-inverse map for the whole alphabet.
    pub fn inverse_map(&self) -> BTreeMap<Letter, Letter> {
        self.letters
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), self.letters[self.inverse[i]].clone()))
            .collect()
    }

    /// The lamp and base groups of a wreath product.
    pub fn wreath_factors(&self) -> Option<(&Group, &Group)> {
        Some((self.lamp.as_deref()?, self.base.as_deref()?))
    }

    /// Rename a letter of the lamp group into this wreath product's alphabet.
    pub fn lamp_letter(&self, lamp_letter: &str) -> Result<Letter> {
        let lg = self.lamp.as_ref().ok_or(GroupError::WrongBackend)?;
        let i = *lg
            .index
            .get(lamp_letter)
            .ok_or_else(|| GroupError::UnknownLetter(lamp_letter.to_string()))?;
        Ok(self.letters[i].clone())
    }

    pub fn identity(&self) -> GroupElement {
        match &self.spec {
            GroupSpec::Free(_) => GroupElement::Free(vec![]),
            GroupSpec::IntLattice(d) => GroupElement::Lattice(vec![0; *d as usize]),
            GroupSpec::Bs1n(_) => GroupElement::Bs(BsElem::identity()),
            GroupSpec::Houghton2 => GroupElement::Houghton(HoughtonPerm::identity()),
            GroupSpec::CyclicFinite(_) => GroupElement::Cyclic(0),
            GroupSpec::SymmetricFinite(q) => GroupElement::Perm((0..*q as u16).collect()),
            GroupSpec::Wreath(..) => GroupElement::Wreath(Box::new(WreathElem {
                lamps: BTreeMap::new(),
                cursor: self.base.as_ref().expect("wreath base").identity(),
            })),
        }
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        *g == self.identity()
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        use GroupElement as E;
        Ok(match (&self.spec, g, h) {
            (GroupSpec::Free(_), E::Free(a), E::Free(b)) => {
                let mut out = a.clone();
                for &x in b {
                    if out.last() == Some(&-x) {
                        out.pop();
                    } else {
                        out.push(x);
                    }
                }
                E::Free(out)
            }
            (GroupSpec::IntLattice(d), E::Lattice(a), E::Lattice(b))
                if a.len() == *d as usize && b.len() == a.len() =>
            {
                E::Lattice(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (GroupSpec::Bs1n(n), E::Bs(a), E::Bs(b)) => E::Bs(a.mul(b, *n)),
            (GroupSpec::Houghton2, E::Houghton(a), E::Houghton(b)) => E::Houghton(a.compose(b)),
            (GroupSpec::CyclicFinite(q), E::Cyclic(a), E::Cyclic(b)) => E::Cyclic((a + b) % q),
            (GroupSpec::SymmetricFinite(q), E::Perm(a), E::Perm(b))
                if a.len() == *q as usize && b.len() == a.len() =>
            {
                E::Perm(b.iter().map(|&x| a[x as usize]).collect())
            }
            (GroupSpec::Wreath(..), E::Wreath(a), E::Wreath(b)) => {
                let lg = self.lamp.as_ref().unwrap();
                let qg = self.base.as_ref().unwrap();
                let mut lamps = a.lamps.clone();
                for (p, l) in &b.lamps {
                    let key = qg.mul(&a.cursor, p)?;
                    let v = match lamps.get(&key) {
                        Some(old) => lg.mul(old, l)?,
                        None => l.clone(),
                    };
                    if lg.is_identity(&v) {
                        lamps.remove(&key);
                    } else {
                        lamps.insert(key, v);
                    }
                }
                E::Wreath(Box::new(WreathElem {
                    lamps,
                    cursor: qg.mul(&a.cursor, &b.cursor)?,
                }))
            }
            _ => return Err(GroupError::WrongBackend),
        })
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        use GroupElement as E;
        Ok(match (&self.spec, g) {
            (GroupSpec::Free(_), E::Free(a)) => E::Free(a.iter().rev().map(|x| -x).collect()),
            (GroupSpec::IntLattice(_), E::Lattice(a)) => E::Lattice(a.iter().map(|x| -x).collect()),
            (GroupSpec::Bs1n(n), E::Bs(a)) => E::Bs(a.inverse(*n)),
            (GroupSpec::Houghton2, E::Houghton(a)) => E::Houghton(a.inverse()),
            (GroupSpec::CyclicFinite(q), E::Cyclic(a)) => E::Cyclic((q - a) % q),
            (GroupSpec::SymmetricFinite(_), E::Perm(a)) => {
                let mut inv = vec![0u16; a.len()];
                for (i, &x) in a.iter().enumerate() {
                    inv[x as usize] = i as u16;
                }
                E::Perm(inv)
            }
            (GroupSpec::Wreath(..), E::Wreath(a)) => {
                // (f, q)⁻¹ = (q⁻¹·f⁻¹, q⁻¹)
                let lg = self.lamp.as_ref().unwrap();
                let qg = self.base.as_ref().unwrap();
                let qi = qg.inverse(&a.cursor)?;
                let mut lamps = BTreeMap::new();
                for (p, l) in &a.lamps {
                    lamps.insert(qg.mul(&qi, p)?, lg.inverse(l)?);
                }
                E::Wreath(Box::new(WreathElem { lamps, cursor: qi }))
            }
            _ => return Err(GroupError::WrongBackend),
        })
    }

    /// Left-to-right product of the letters of `w`.
    pub fn evaluate(&self, w: &[Letter]) -> Result<GroupElement> {
        let mut g = self.identity();
        for l in w {
            let i = *self
                .index
                .get(l)
                .ok_or_else(|| GroupError::UnknownLetter(l.clone()))?;
            g = self.mul(&g, &self.gens[i])?;
        }
        Ok(g)
    }

    /// `g^k` for `k ≥ 0`.
    pub fn pow(&self, g: &GroupElement, k: u64) -> Result<GroupElement> {
        let mut out = self.identity();
        for _ in 0..k {
            out = self.mul(&out, g)?;
        }
        Ok(out)
    }

    /// The ball of the given radius in the word metric, in breadth-first
    /// order (generators tried in alphabet order).
    pub fn ball(&self, radius: usize, cap: usize) -> Result<Ball> {
        let mut ball = Ball::default();
        let e = self.identity();
        ball.insert(e, vec![]);
        let mut q = VecDeque::from([0usize]);
        while let Some(i) = q.pop_front() {
            if ball.words[i].len() == radius {
                continue;
            }
            for (j, gen) in self.gens.iter().enumerate() {
                let g = self.mul(&ball.elements[i], gen)?;
                if ball.index.contains_key(&g) {
                    continue;
                }
                if ball.elements.len() == cap {
                    return Err(GroupError::Capacity {
                        what: "ball elements",
                        cap,
                    });
                }
                let mut w = ball.words[i].clone();
                w.push(self.letters[j].clone());
                ball.insert(g, w);
                q.push_back(ball.elements.len() - 1);
            }
        }
        Ok(ball)
    }

    /// Image in Z for groups with a canonical map onto Z: the t-exponent
    /// (`Z`, `BS(1,n)`), the cursor of a wreath product over `Z`, the shift of
    /// an `H2` element.
    pub fn z_projection(&self, g: &GroupElement) -> Option<i64> {
        match (&self.spec, g) {
            (GroupSpec::IntLattice(1), GroupElement::Lattice(v)) => Some(v[0]),
            (GroupSpec::Bs1n(_), GroupElement::Bs(b)) => Some(b.k),
            (GroupSpec::Houghton2, GroupElement::Houghton(h)) => Some(h.shift()),
            (GroupSpec::Wreath(_, q), GroupElement::Wreath(w))
                if **q == GroupSpec::IntLattice(1) =>
            {
                match &w.cursor {
                    GroupElement::Lattice(v) => Some(v[0]),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// The element projecting to `1` under [`Group::z_projection`] and
    /// denoted by the letter `t`.
    pub fn z_generator(&self) -> Option<&GroupElement> {
        self.z_projection(&self.identity())?;
        self.generator("t").ok()
    }

    /// `g · t^(-π(g))`, the kernel part of `g` for groups mapping onto Z.
    pub fn kernel_part(&self, g: &GroupElement) -> Option<GroupElement> {
        let pi = self.z_projection(g)?;
        let t = self.z_generator()?;
        let step = if pi >= 0 {
            self.inverse(t).ok()?
        } else {
            t.clone()
        };
        let mut out = g.clone();
        for _ in 0..pi.unsigned_abs() {
            out = self.mul(&out, &step).ok()?;
        }
        Some(out)
    }

    /// Human-readable element.
    pub fn display(&self, g: &GroupElement) -> String {
        match (&self.spec, g) {
            (GroupSpec::Free(_), GroupElement::Free(v)) => {
                if v.is_empty() {
                    return "ε".into();
                }
                v.iter()
                    .map(|&x| {
                        let i = x.unsigned_abs() as usize - 1;
                        if x > 0 {
                            lower(i)
                        } else {
                            upper(i)
                        }
                    })
                    .collect()
            }
            (GroupSpec::IntLattice(1), GroupElement::Lattice(v)) => v[0].to_string(),
            (_, GroupElement::Lattice(v)) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(", "))
            }
            (GroupSpec::Bs1n(n), GroupElement::Bs(b)) => b.display(*n).to_string(),
            (_, GroupElement::Houghton(h)) => h.to_string(),
            (GroupSpec::CyclicFinite(_), GroupElement::Cyclic(a)) => a.to_string(),
            (_, GroupElement::Perm(p)) => {
                let mut seen = vec![false; p.len()];
                let mut out = String::new();
                for i in 0..p.len() {
                    if seen[i] || p[i] as usize == i {
                        continue;
                    }
                    let mut c = vec![i + 1];
                    seen[i] = true;
                    let mut j = p[i] as usize;
                    while j != i {
                        seen[j] = true;
                        c.push(j + 1);
                        j = p[j] as usize;
                    }
                    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!("({})", parts.join(" ")));
                }
                if out.is_empty() {
                    "()".into()
                } else {
                    out
                }
            }
            (GroupSpec::Wreath(..), GroupElement::Wreath(w)) => {
                let lg = self.lamp.as_ref().unwrap();
                let qg = self.base.as_ref().unwrap();
                let lamps: Vec<String> = w
                    .lamps
                    .iter()
                    .map(|(p, l)| format!("{}:{}", qg.display(p), lg.display(l)))
                    .collect();
                format!(
                    "lamps{{{}}} cursor={}",
                    lamps.join(", "),
                    qg.display(&w.cursor)
                )
            }
            _ => format!("{g:?}"),
        }
    }
}

/// A finite set of group elements with geodesic representative words.
#[derive(Debug, Clone, Default)]
pub struct Ball {
    pub elements: Vec<GroupElement>,
    pub words: Vec<Word>,
    index: HashMap<GroupElement, usize>,
}

impl Ball {
    fn insert(&mut self, g: GroupElement, w: Word) {
        self.index.insert(g.clone(), self.elements.len());
        self.elements.push(g);
        self.words.push(w);
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g)
    }

    /// Word length of `g` if it lies in the ball.
    pub fn length(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).map(|&i| self.words[i].len())
    }
}

/// Evaluate a word in a spec (convenience wrapper).
pub fn evaluate(spec: &GroupSpec, w: &[Letter]) -> Result<GroupElement> {
    Group::new(spec.clone())?.evaluate(w)
}

/// Ball of radius `r` around the identity (convenience wrapper).
pub fn ball_enumerate(spec: &GroupSpec, radius: usize, cap: usize) -> Result<Ball> {
    Group::new(spec.clone())?.ball(radius, cap)
}
