//! Permutations of Z that are eventually a translation (Houghton's H₂).
//!
//! Composition is that of functions, `(στ)(x) = σ(τ(x))`, and a word is the
//! product of its letters from left to right. With `a = (1 2)` and
//! `t: x ↦ x + 1`, the word `taT` is the transposition `(2 3)`.

use std::collections::BTreeMap;
use std::fmt;

/// `σ(x) = map[x]` where listed, `x + shift` elsewhere. Entries with
/// `map[x] == x + shift` are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HoughtonPerm {
    map: BTreeMap<i64, i64>,
    shift: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotBijective(pub String);

impl HoughtonPerm {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn translation(shift: i64) -> Self {
        HoughtonPerm {
            map: BTreeMap::new(),
            shift,
        }
    }

    pub fn transposition(x: i64, y: i64) -> Self {
        Self::from_map([(x, y), (y, x)], 0).expect("transposition is bijective")
    }

    /// Build from exceptions and a shift, checking bijectivity.
    pub fn from_map(
        entries: impl IntoIterator<Item = (i64, i64)>,
        shift: i64,
    ) -> Result<Self, NotBijective> {
        let mut map = BTreeMap::new();
        for (x, y) in entries {
            if map.insert(x, y).is_some_and(|old| old != y) {
                return Err(NotBijective(format!("{x} has two images")));
            }
        }
        // The image of the exception set must be {x + shift : x ∈ S} with the
        // images of non-exceptions removed, i.e. the multiset of images of
        // S equals the set of values not hit by translated non-exceptions.
        let images: std::collections::BTreeSet<i64> = map.values().copied().collect();
        if images.len() != map.len() {
            return Err(NotBijective("two points share an image".into()));
        }
        for &y in &images {
            let pre = y - shift;
            if !map.contains_key(&pre) {
                return Err(NotBijective(format!("{y} is hit twice")));
            }
        }
        let p = HoughtonPerm { map, shift };
        Ok(p.canonical())
    }

    fn canonical(mut self) -> Self {
        let s = self.shift;
        self.map.retain(|&x, &mut y| y != x + s);
        self
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn apply(&self, x: i64) -> i64 {
        self.map.get(&x).copied().unwrap_or(x + self.shift)
    }

    /// Points where `σ` differs from translation by its shift.
    pub fn support(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.map.iter().map(|(&x, &y)| (x, y))
    }

    pub fn inverse(&self) -> Self {
        let map = self.map.iter().map(|(&x, &y)| (y, x)).collect();
        HoughtonPerm {
            map,
            shift: -self.shift,
        }
        .canonical()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let other_inv = other.inverse();
        let mut pts: Vec<i64> = other.map.keys().copied().collect();
        pts.extend(self.map.keys().map(|&y| other_inv.apply(y)));
        let map = pts
            .into_iter()
            .map(|x| (x, self.apply(other.apply(x))))
            .collect();
        HoughtonPerm {
            map,
            shift: self.shift + other.shift,
        }
        .canonical()
    }

    /// Split `g = h · t^π` with `h` finitary; returns `(h, π)`.
    pub fn translation_part(&self) -> (Self, i64) {
        let pi = self.shift;
        (self.compose(&Self::translation(-pi)), pi)
    }

    /// `max_p #{x : x < p < h(x)}` over half-integers `p`. Requires a
    /// finitary permutation (shift 0).
    pub fn crossing_number(&self) -> Option<usize> {
        if self.shift != 0 {
            return None;
        }
        // +1 at x + 1/2, -1 at h(x) + 1/2 for every rising point.
        let mut events: BTreeMap<i64, i64> = BTreeMap::new();
        for (x, y) in self.support() {
            if y > x {
                *events.entry(x).or_default() += 1;
                *events.entry(y).or_default() -= 1;
            }
        }
        let mut cur = 0i64;
        let mut best = 0i64;
        for d in events.values() {
            cur += d;
            best = best.max(cur);
        }
        Some(best as usize)
    }

    /// `h_K = (1 -1)(2 -2)⋯(K -K)`.
    pub fn crossing_witness(k: u32) -> Self {
        let k = k as i64;
        Self::from_map((1..=k).flat_map(|i| [(i, -i), (-i, i)]), 0).expect("involution")
    }

    /// Disjoint cycles of the finitary part `self · t^(-shift)`, each
    /// starting at its smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<i64>> {
        let (h, _) = self.translation_part();
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for (x, _) in h.support() {
            if seen.contains(&x) {
                continue;
            }
            let mut c = vec![x];
            seen.insert(x);
            let mut y = h.apply(x);
            while y != x {
                seen.insert(y);
                c.push(y);
                y = h.apply(y);
            }
            out.push(c);
        }
        out
    }

    /// Parse `"(1 -1)(2 -2); shift=0"` (the shift part is optional).
    pub fn parse(s: &str) -> Result<Self, String> {
        let (cyc, shift) = match s.split_once(';') {
            Some((c, rest)) => {
                let rest = rest.trim();
                let v = rest
                    .strip_prefix("shift=")
                    .ok_or_else(|| format!("expected `shift=` in `{rest}`"))?;
                (c, v.trim().parse::<i64>().map_err(|e| e.to_string())?)
            }
            None => (s, 0),
        };
        let mut map = BTreeMap::new();
        let mut rest = cyc.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| format!("expected `(` at `{rest}`"))?;
            let (body, after) = open.split_once(')').ok_or("unclosed `(`")?;
            let pts: Vec<i64> = body
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
                .collect::<Result<_, _>>()?;
            for (i, &x) in pts.iter().enumerate() {
                let y = pts[(i + 1) % pts.len()];
                if map.insert(x, y).is_some() {
                    return Err(format!("{x} appears in two cycles"));
                }
            }
            rest = after.trim_start();
        }
        let h = Self::from_map(map, 0).map_err(|e| e.0)?;
        Ok(h.compose(&Self::translation(shift)))
    }
}

impl fmt::Display for HoughtonPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            write!(f, "()")?;
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        write!(f, "; shift={}", self.shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> HoughtonPerm {
        HoughtonPerm::translation(1)
    }

    #[test]
    fn conjugated_transposition() {
        let a = HoughtonPerm::transposition(1, 2);
        let g = t().compose(&a).compose(&t().inverse());
        assert_eq!(g, HoughtonPerm::transposition(2, 3));
    }

    #[test]
    fn witness_crossing() {
        for k in 0..8 {
            assert_eq!(
                HoughtonPerm::crossing_witness(k).crossing_number(),
                Some(k as usize)
            );
        }
        assert_eq!(HoughtonPerm::identity().crossing_number(), Some(0));
        assert_eq!(t().crossing_number(), None);
    }

    #[test]
    fn display_and_parse() {
        let h = HoughtonPerm::crossing_witness(2);
        assert_eq!(h.to_string(), "(-2 2)(-1 1); shift=0");
        assert_eq!(HoughtonPerm::parse("(1 -1)(2 -2); shift=0").unwrap(), h);
        let g = h.compose(&HoughtonPerm::translation(3));
        assert_eq!(HoughtonPerm::parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn translation_split() {
        let g = HoughtonPerm::transposition(0, 5).compose(&HoughtonPerm::translation(-2));
        let (h, pi) = g.translation_part();
        assert_eq!(pi, -2);
        assert_eq!(h.shift(), 0);
        assert_eq!(h.compose(&HoughtonPerm::translation(pi)), g);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(HoughtonPerm::from_map([(0, 1)], 0).is_err());
        assert!(HoughtonPerm::from_map([(0, 1), (1, 1)], 0).is_err());
    }
}
