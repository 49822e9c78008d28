//! Positive cones of left-invariant orders.
//!
//! A [`Cone`] is a membership predicate on a group, optionally with a regular
//! language whose evaluation is the cone (bijectively, where stated). Orders
//! are recovered as `g ≺ h ⟺ g⁻¹h ∈ P`.
//!
//! Recipes (see [`ConeRecipe`]): `z+`, `lex:d`, `ext(A,C)`, `wr(L,Q)`, `bs1:n`.

mod chains;
mod languages;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::automata::{Automaton, AutomatonError, Letter};
use crate::groups::{Group, GroupElement, GroupError, GroupSpec};

pub use chains::{antichain_check, chain_density, ChainReport, Violation, DEFAULT_CHAIN_CAP};
pub use languages::{
    mirror_completion, mirror_language, wreath_cone_language, wreath_cross_section,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("cannot parse cone recipe `{0}`: {1}")]
    BadRecipe(String, String),
    #[error("{0}")]
    Domain(String),
    #[error("capacity exceeded: {what} (cap {cap})")]
    Capacity { what: &'static str, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

pub type Result<T> = std::result::Result<T, OrderError>;

type Predicate = Arc<dyn Fn(&GroupElement) -> bool + Send + Sync>;

/// A positive cone: predicate, optional language witness, totality claim.
#[derive(Clone)]
pub struct Cone {
    group: Group,
    pred: Predicate,
    language: Option<Automaton>,
    total: bool,
    name: String,
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cone")
            .field("name", &self.name)
            .field("group", &self.group.spec().to_string())
            .field("total", &self.total)
            .field("language", &self.language.as_ref().map(|m| m.num_states()))
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Less => "less",
            Comparison::Greater => "greater",
            Comparison::Equal => "equal",
            Comparison::Incomparable => "incomparable",
        })
    }
}

impl Cone {
    pub fn new(
        group: Group,
        name: impl Into<String>,
        total: bool,
        language: Option<Automaton>,
        pred: impl Fn(&GroupElement) -> bool + Send + Sync + 'static,
    ) -> Self {
        Cone {
            group,
            pred: Arc::new(pred),
            language,
            total,
            name: name.into(),
        }
    }

    /// The empty cone (every pair of distinct elements is incomparable).
    pub fn empty(group: Group) -> Self {
        let lang = Automaton::empty(group.alphabet().to_vec());
        Cone::new(group, "empty", false, Some(lang), |_| false)
    }

    pub fn build(recipe: &ConeRecipe) -> Result<Cone> {
        match recipe {
            ConeRecipe::ZPositive => Cone::lex(1),
            ConeRecipe::ZdLex(d) => Cone::lex(*d),
            ConeRecipe::Extension(a, c) => Cone::extension(Cone::build(a)?, Cone::build(c)?),
            ConeRecipe::Wreath(l, q) => Cone::wreath(Cone::build(l)?, Cone::build(q)?),
            ConeRecipe::Bs1n(n) => Cone::bs1n(*n),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_total(&self) -> bool {
        self.total
    }

    pub fn language(&self) -> Option<&Automaton> {
        self.language.as_ref()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        (self.pred)(g)
    }

    /// `Less` iff `g⁻¹h ∈ P`, `Greater` iff `h⁻¹g ∈ P`.
    pub fn compare(&self, g: &GroupElement, h: &GroupElement) -> Result<Comparison> {
        if g == h {
            // still reject foreign elements
            self.group.mul(g, h)?;
            return Ok(Comparison::Equal);
        }
        let x = self.group.mul(&self.group.inverse(g)?, h)?;
        if self.contains(&x) {
            Ok(Comparison::Less)
        } else if self.contains(&self.group.inverse(&x)?) {
            Ok(Comparison::Greater)
        } else {
            Ok(Comparison::Incomparable)
        }
    }
}

/// Parse and build a cone from its recipe string.
pub fn build_cone(recipe: &str) -> Result<Cone> {
    Cone::build(&recipe.parse()?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeRecipe {
    /// `z+`: `g > 0` on `Z`.
    ZPositive,
    /// `lex:d`: first nonzero coordinate positive on `Z^d`.
    ZdLex(u32),
    /// `ext(A,C)`: on `C × A` (lattices, `C`'s coordinates first), positive
    /// iff the `C` part is positive, or it vanishes and the `A` part is.
    Extension(Box<ConeRecipe>, Box<ConeRecipe>),
    /// `wr(L,Q)`: on `L ≀ Q`.
    Wreath(Box<ConeRecipe>, Box<ConeRecipe>),
    /// `bs1:n`: on `BS(1,n)`.
    Bs1n(u32),
}

impl fmt::Display for ConeRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeRecipe::ZPositive => write!(f, "z+"),
            ConeRecipe::ZdLex(d) => write!(f, "lex:{d}"),
            ConeRecipe::Extension(a, c) => write!(f, "ext({a},{c})"),
            ConeRecipe::Wreath(l, q) => write!(f, "wr({l},{q})"),
            ConeRecipe::Bs1n(n) => write!(f, "bs1:{n}"),
        }
    }
}

fn split_pair(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

impl FromStr for ConeRecipe {
    type Err = OrderError;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| OrderError::BadRecipe(s.to_string(), why.to_string());
        let num = |x: &str| {
            x.parse::<u32>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| bad("expected a positive number"))
        };
        if t == "z+" {
            return Ok(ConeRecipe::ZPositive);
        }
        if let Some(d) = t.strip_prefix("lex:") {
            let d = num(d)?;
            if d > 26 {
                return Err(bad("dimension must be at most 26"));
            }
            return Ok(ConeRecipe::ZdLex(d));
        }
        if let Some(n) = t.strip_prefix("bs1:") {
            return Ok(ConeRecipe::Bs1n(num(n)?));
        }
        for (prefix, wreath) in [("ext(", false), ("wr(", true)] {
            if let Some(inner) = t.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
                let (x, y) = split_pair(inner).ok_or_else(|| bad("expected two arguments"))?;
                let (x, y) = (Box::new(x.parse()?), Box::new(y.parse()?));
                return Ok(if wreath {
                    ConeRecipe::Wreath(x, y)
                } else {
                    ConeRecipe::Extension(x, y)
                });
            }
        }
        Err(bad("unknown recipe"))
    }
}

/// Letter for coordinate `i` of `Z^d` with the given sign.
pub(crate) fn lattice_letter(d: u32, i: usize, positive: bool) -> Letter {
    if d == 1 {
        return if positive { "t" } else { "T" }.to_string();
    }
    let base = if positive { b'a' } else { b'A' };
    ((base + i as u8) as char).to_string()
}

fn lattice_spec(d: u32) -> GroupSpec {
    GroupSpec::IntLattice(d)
}

fn lattice_dim(c: &Cone) -> Option<u32> {
    match c.group().spec() {
        GroupSpec::IntLattice(d) => Some(*d),
        _ => None,
    }
}

impl Cone {
    /// Lexicographic cone on `Z^d` (`z+` for `d = 1`), with language
    pub fn lex(d: u32) -> Result<Cone> {
        let name = if d == 1 {
            "z+".to_string()
        } else {
            format!("lex:{d}")
        };
        let group = Group::new(lattice_spec(d))?;
        let alts: Vec<String> = (0..d as usize)
            .map(|i| {
                let mut s = format!("{}+", lattice_letter(d, i, true));
                for j in i + 1..d as usize {
                    s += &format!(
                        "({}+|{}+)?",
                        lattice_letter(d, j, true),
                        lattice_letter(d, j, false)
                    );
                }
                s
            })
            .collect();
        let lang = Automaton::from_regex(&alts.join("|"), Some(group.alphabet()))?;
        Ok(Cone::new(group, name, true, Some(lang), |g| match g {
            GroupElement::Lattice(v) => v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0),
            _ => false,
        }))
    }

    /// See [`ConeRecipe::Extension`]. Language `𝒞₊𝒜 ∪ 𝒜₊`.
    pub fn extension(a: Cone, c: Cone) -> Result<Cone> {
        let name = format!("ext({},{})", a.name(), c.name());
        let (Some(da), Some(dc)) = (lattice_dim(&a), lattice_dim(&c)) else {
            return Err(OrderError::Domain(
                "extension cones need lattice factors".into(),
            ));
        };
        let d = da + dc;
        let group = Group::new(lattice_spec(d))?;
        let language = match (a.language(), c.language()) {
            (Some(la), Some(lc)) => {
                // Embed the factor alphabets into Z^d.
                let embed = |m: &Automaton, dim: u32, offset: usize| {
                    m.relabel(group.alphabet(), |l| {
                        let i = (0..dim as usize)
                            .find(|&i| {
                                lattice_letter(dim, i, true) == l
                                    || lattice_letter(dim, i, false) == l
                            })
                            .expect("lattice letter");
                        lattice_letter(d, offset + i, lattice_letter(dim, i, true) == l)
                    })
                };
                let a_all = embed(&mirror_completion(&a)?, da, dc as usize)?;
                let a_plus = embed(la, da, dc as usize)?;
                let c_plus = embed(lc, dc, 0)?;
                Some(c_plus.concat(&a_all).union(&a_plus).minimize())
            }
            _ => None,
        };
        let total = a.is_total() && c.is_total();
        Ok(Cone::new(group, name, total, language, move |g| {
            let GroupElement::Lattice(v) = g else {
                return false;
            };
            if v.len() != d as usize {
                return false;
            }
            let (vc, va) = v.split_at(dc as usize);
            if vc.iter().any(|&x| x != 0) {
                c.contains(&GroupElement::Lattice(vc.to_vec()))
            } else {
                a.contains(&GroupElement::Lattice(va.to_vec()))
            }
        }))
    }

    /// Positive iff all lamps are off and the cursor is positive, or the
    /// lamp at the least support point is positive. Needs a total base
    /// order.
    pub fn wreath(l: Cone, q: Cone) -> Result<Cone> {
        let name = format!("wr({},{})", l.name(), q.name());
        if !q.is_total() {
            return Err(OrderError::Domain(format!(
                "wreath cone needs a total order on the base, `{}` is not total",
                q.name()
            )));
        }
        let spec = GroupSpec::Wreath(
            Box::new(l.group().spec().clone()),
            Box::new(q.group().spec().clone()),
        );
        let group = Group::new(spec)?;
        let language = match (l.language(), q.language()) {
            (Some(lp), Some(qp)) => {
                let l_all = mirror_completion(&l)?;
                let q_all = mirror_completion(&q)?;
                Some(wreath_cone_language(&group, lp, &l_all, qp, &q_all)?)
            }
            _ => None,
        };
        let total = l.is_total();
        let qg = q.group().clone();
        Ok(Cone::new(group, name, total, language, move |g| {
            let GroupElement::Wreath(w) = g else {
                return false;
            };
            // least support point in the base order
            let mut min: Option<&GroupElement> = None;
            for p in w.lamps.keys() {
                min = match min {
                    None => Some(p),
                    Some(m) => {
                        let below = qg
                            .inverse(p)
                            .and_then(|pi| qg.mul(&pi, m))
                            .is_ok_and(|x| q.contains(&x));
                        Some(if below { p } else { m })
                    }
                };
            }
            match min {
                None => q.contains(&w.cursor),
                Some(m) => l.contains(&w.lamps[m]),
            }
        }))
    }

    /// `r > 0`, or `r = 0` and `k > 0`. The language `t⁺ ⊔ 𝒯a(t⁺a)*𝒯` with
    /// `𝒯 = t⁺ ⊔ T⁺ ⊔ {ε}` evaluates onto this cone only for `n = 2`; for
    /// other `n` its image is not closed under products (it contains `a`
    /// but not `a²`), so no language is attached.
    pub fn bs1n(n: u32) -> Result<Cone> {
        let group = Group::new(GroupSpec::Bs1n(n))?;
        let language = if n == 2 {
            Some(Automaton::from_regex(
                "t+|(t+|T+)?a(t+a)*(t+|T+)?",
                Some(group.alphabet()),
            )?)
        } else {
            None
        };
        Ok(Cone::new(
            group,
            format!("bs1:{n}"),
            true,
            language,
            |g| match g {
                GroupElement::Bs(b) => b.r_sign() > 0 || (b.r_sign() == 0 && b.k > 0),
                _ => false,
            },
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::word;

    #[test]
    fn recipes_round_trip() {
        for s in [
            "z+",
            "lex:3",
            "ext(lex:1,lex:2)",
            "wr(z+,ext(z+,z+))",
            "bs1:2",
        ] {
            assert_eq!(s.parse::<ConeRecipe>().unwrap().to_string(), s);
        }
        assert!("wr(z+)".parse::<ConeRecipe>().is_err());
        assert!("lex:0".parse::<ConeRecipe>().is_err());
    }

    #[test]
    fn z_positive() {
        let c = build_cone("z+").unwrap();
        let g = c.group().clone();
        assert!(c.contains(&g.evaluate(&word("t")).unwrap()));
        assert!(!c.contains(&g.evaluate(&word("T")).unwrap()));
        assert!(!c.contains(&g.identity()));
    }

    #[test]
    fn lex_plane() {
        let c = build_cone("lex:2").unwrap();
        assert!(!c.contains(&GroupElement::Lattice(vec![0, -5])));
        assert!(c.contains(&GroupElement::Lattice(vec![1, -5])));
        let cmp = c.compare(
            &GroupElement::Lattice(vec![0, 0]),
            &GroupElement::Lattice(vec![0, 1]),
        );
        assert_eq!(cmp.unwrap(), Comparison::Less);
    }

    #[test]
    fn bs_t_is_positive() {
        let c = build_cone("bs1:2").unwrap();
        assert!(c.contains(&c.group().evaluate(&word("t")).unwrap()));
        assert!(c.language().unwrap().recognize(&word("t")).unwrap());
        assert!(build_cone("bs1:3").unwrap().language().is_none());
    }

    #[test]
    fn compare_equal_and_empty() {
        let g = Group::parse("Z^2").unwrap();
        let c = Cone::empty(g.clone());
        let x = g.evaluate(&word("ab")).unwrap();
        assert_eq!(c.compare(&x, &x).unwrap(), Comparison::Equal);
        assert_eq!(
            c.compare(&x, &g.identity()).unwrap(),
            Comparison::Incomparable
        );
    }

    #[test]
    fn wreath_needs_total_base() {
        let base = Cone::empty(Group::parse("Z").unwrap());
        let err = Cone::wreath(build_cone("z+").unwrap(), base).unwrap_err();
        assert!(matches!(err, OrderError::Domain(_)));
        assert!(build_cone("wr(lex:2,z+)").unwrap().is_total());
    }

    #[test]
    fn wreath_cone_two_cases() {
        let c = build_cone("wr(z+,z+)").unwrap();
        let g = c.group().clone();
        assert!(c.contains(&g.evaluate(&word("tt")).unwrap()));
        assert!(!c.contains(&g.evaluate(&word("TT")).unwrap()));
        // lamp +1 at 0, lamp -1 at 1, cursor far left: min support has +1
        assert!(c.contains(&g.evaluate(&word("atATTT")).unwrap()));
        assert!(!c.contains(&g.evaluate(&word("AtaTTT")).unwrap()));
        assert!(!c.contains(&g.identity()));
    }
}
