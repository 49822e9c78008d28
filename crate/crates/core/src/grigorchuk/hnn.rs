use std::fmt;
use std::str::FromStr;

use super::{GrigError, GrigWord, Result};

/// `t^k g t^{-k} t^m` in the ascending HNN extension of 𝔊 by φ, where
/// `t⁻¹ g t = φ(g)`. Consequently `(k, g) ≡ (k + 1, φ(g))`.
///
/// The form is not normalised; [`HnnElement::equals`] lifts both sides to a
/// common `k` and solves the word problem.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HnnElement {
    pub k: u32,
    pub g: GrigWord,
    pub m: i64,
}

impl HnnElement {
    pub fn new(k: u32, g: GrigWord, m: i64) -> Self {
        HnnElement { k, g, m }
    }

    pub fn identity() -> Self {
        HnnElement::new(0, GrigWord::identity(), 0)
    }

    pub fn from_grig(g: GrigWord) -> Self {
        HnnElement::new(0, g, 0)
    }

    pub fn t() -> Self {
        HnnElement::new(0, GrigWord::identity(), 1)
    }

    pub fn t_inv() -> Self {
        HnnElement::new(0, GrigWord::identity(), -1)
    }

    /// Same element with `k` raised to `to ≥ self.k`.
    pub fn lift(&self, to: u32) -> HnnElement {
        assert!(to >= self.k);
        HnnElement::new(to, self.g.phi_pow((to - self.k) as usize), self.m)
    }

    /// `t^j g t^{-j}` for any integer `j`.
    fn conj(j: i64, g: &GrigWord) -> (u32, GrigWord) {
        if j >= 0 {
            (j as u32, g.clone())
        } else {
            (0, g.phi_pow((-j) as usize))
        }
    }

    pub fn mul(&self, other: &HnnElement) -> HnnElement {
        // t^{m1} (t^{k2} g2 t^{-k2}) = (t^{m1+k2} g2 t^{-(m1+k2)}) t^{m1}
        let (k2, g2) = Self::conj(self.m + other.k as i64, &other.g);
        let top = self.k.max(k2);
        let a = self.g.phi_pow((top - self.k) as usize);
        let b = g2.phi_pow((top - k2) as usize);
        HnnElement::new(top, a.mul(&b), self.m + other.m)
    }

    pub fn inverse(&self) -> HnnElement {
        // t^{-m} t^k g⁻¹ t^{-k} = (t^{k-m} g⁻¹ t^{-(k-m)}) t^{-m}
        let (k, g) = Self::conj(self.k as i64 - self.m, &self.g.inverse());
        HnnElement::new(k, g, -self.m)
    }

    pub fn pow(&self, e: u32) -> HnnElement {
        (0..e).fold(HnnElement::identity(), |acc, _| acc.mul(self))
    }

    pub fn equals(&self, other: &HnnElement) -> bool {
        if self.m != other.m {
            return false;
        }
        let top = self.k.max(other.k);
        self.lift(top).g.equals(&other.lift(top).g)
    }

    pub fn is_identity(&self) -> bool {
        self.m == 0 && self.g.is_trivial()
    }

    /// Evaluate a word over `a, b, c, d, t, T` (`T = t⁻¹`).
    pub fn from_word(s: &str) -> Result<HnnElement> {
        let mut acc = HnnElement::identity();
        for c in s.chars().filter(|c| !c.is_whitespace()) {
            let x = match c {
                't' => HnnElement::t(),
                'T' => HnnElement::t_inv(),
                'e' | 'ε' => continue,
                _ => HnnElement::from_grig(c.to_string().parse()?),
            };
            acc = acc.mul(&x);
        }
        Ok(acc)
    }
}

impl fmt::Display for HnnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}[{}]t^-{} t^{}", self.k, self.g, self.k, self.m)
    }
}

/// Accepts the display form `t^k[word]t^-k t^m` or a word over
/// `a, b, c, d, t, T`.
impl FromStr for HnnElement {
    type Err = GrigError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if !s.contains('[') {
            return HnnElement::from_word(s);
        }
        let bad = |msg: &str| GrigError::BadHnn(s.to_string(), msg.to_string());
        let rest = s.strip_prefix("t^").ok_or_else(|| bad("expected `t^k[`"))?;
        let (k, rest) = rest.split_once('[').ok_or_else(|| bad("missing `[`"))?;
        let (g, rest) = rest.split_once(']').ok_or_else(|| bad("missing `]`"))?;
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|_| bad("k must be a non-negative integer"))?;
        let rest = rest.trim_start();
        let rest = rest
            .strip_prefix("t^-")
            .ok_or_else(|| bad("expected `t^-k`"))?;
        let (k2, m) = rest.split_once("t^").ok_or_else(|| bad("expected `t^m`"))?;
        if k2.trim().parse::<u32>().ok() != Some(k) {
            return Err(bad("conjugating exponents differ"));
        }
        let m: i64 = m.trim().parse().map_err(|_| bad("m must be an integer"))?;
        Ok(HnnElement::new(k, g.parse()?, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GrigWord {
        s.parse().unwrap()
    }

    #[test]
    fn a_squared_is_identity() {
        let a = HnnElement::from_grig(w("a"));
        assert!(a.mul(&a).is_identity());
    }

    #[test]
    fn lift_preserves_element() {
        let x = HnnElement::new(0, w("ac"), 0);
        let y = HnnElement::new(1, w("ac").phi(), 0);
        assert!(x.equals(&y));
        assert!(!x.equals(&HnnElement::new(1, w("ac"), 0)));
    }

    #[test]
    fn conjugation_bookkeeping() {
        let x = HnnElement::from_word("taT").unwrap();
        assert_eq!(x, HnnElement::new(1, w("a"), 0));
        let y = HnnElement::from_word("Tat").unwrap();
        assert!(y.equals(&HnnElement::from_grig(w("aca"))));
    }

    #[test]
    fn inverse_cancels() {
        for s in ["taTb", "TTacttd", "tatbTTc", "ttt", "Tab"] {
            let x = HnnElement::from_word(s).unwrap();
            assert!(x.mul(&x.inverse()).is_identity(), "{s}");
            assert!(x.inverse().mul(&x).is_identity(), "{s}");
        }
    }

    #[test]
    fn display_round_trip() {
        let x = HnnElement::new(2, w("acab"), -3);
        assert_eq!(x.to_string(), "t^2[acab]t^-2 t^-3");
        assert_eq!(x.to_string().parse::<HnnElement>().unwrap(), x);
        assert!("t^2[a]t^-1 t^0".parse::<HnnElement>().is_err());
    }
}
