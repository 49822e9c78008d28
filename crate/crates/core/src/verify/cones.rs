use std::collections::HashMap;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{Result, VerifyError};
use crate::automata::format_word;
use crate::groups::GroupElement;
use crate::orders::Cone;

/// Cone axioms over a ball. Violations name the offending elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeAxiomReport {
    pub cone: String,
    pub radius: usize,
    pub ball_size: usize,
    pub positives: usize,
    pub identity_excluded: bool,
    /// Some `g ≠ e` with `g` and `g⁻¹` both positive.
    pub antisymmetry_violation: Option<String>,
    /// Whether the cone claims `G = P ⊔ {e} ⊔ P⁻¹`.
    pub total: bool,
    pub trichotomy_violation: Option<String>,
    pub semigroup_pairs: usize,
    pub semigroup_violation: Option<(String, String)>,
}

impl ConeAxiomReport {
    pub fn ok(&self) -> bool {
        self.identity_excluded
            && self.antisymmetry_violation.is_none()
            && self.trichotomy_violation.is_none()
            && self.semigroup_violation.is_none()
    }
}

/// Exhaustive anti-symmetry (and trichotomy for total cones) over the ball of
/// the given radius; closure under products on `pairs` positive pairs drawn
/// with a seeded generator, or on all pairs if there are fewer.
pub fn cone_axioms_check(
    cone: &Cone,
    radius: usize,
    ball_cap: usize,
    pairs: usize,
    seed: u64,
) -> Result<ConeAxiomReport> {
    let g = cone.group();
    let ball = g.ball(radius, ball_cap)?;
    let e = g.identity();
    let inverses: Vec<GroupElement> = ball
        .elements
        .par_iter()
        .map(|x| g.inverse(x))
        .collect::<std::result::Result<_, _>>()?;
    let pos: Vec<bool> = ball.elements.par_iter().map(|x| cone.contains(x)).collect();
    let neg: Vec<bool> = inverses.par_iter().map(|x| cone.contains(x)).collect();
    let n = ball.len();
    let antisymmetry_violation = (0..n)
        .find(|&i| ball.elements[i] != e && pos[i] && neg[i])
        .map(|i| g.display(&ball.elements[i]));
    let trichotomy_violation = if cone.is_total() {
        (0..n)
            .find(|&i| ball.elements[i] != e && !pos[i] && !neg[i])
            .map(|i| g.display(&ball.elements[i]))
    } else {
        None
    };
    let positive: Vec<&GroupElement> = (0..n)
        .filter(|&i| pos[i])
        .map(|i| &ball.elements[i])
        .collect();
    let sample: Vec<(&GroupElement, &GroupElement)> = if positive.len() * positive.len() <= pairs {
        positive
            .iter()
            .flat_map(|&a| positive.iter().map(move |&b| (a, b)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..pairs)
            .map(|_| {
                (
                    *positive.choose(&mut rng).expect("nonempty"),
                    *positive.choose(&mut rng).expect("nonempty"),
                )
            })
            .collect()
    };
    let products: Vec<bool> = sample
        .par_iter()
        .map(|(a, b)| g.mul(a, b).map(|p| cone.contains(&p)))
        .collect::<std::result::Result<_, _>>()?;
    let semigroup_violation = products
        .iter()
        .position(|&ok| !ok)
        .map(|i| (g.display(sample[i].0), g.display(sample[i].1)));
    Ok(ConeAxiomReport {
        cone: cone.name().to_string(),
        radius,
        ball_size: n,
        positives: positive.len(),
        identity_excluded: !cone.contains(&e),
        antisymmetry_violation,
        total: cone.is_total(),
        trichotomy_violation,
        semigroup_pairs: sample.len(),
        semigroup_violation,
    })
}

/// Cone language against the cone predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    pub word_cap: usize,
    pub words: usize,
    /// An accepted word whose value is not positive.
    pub non_positive: Option<String>,
    /// Two accepted words with the same value.
    pub collision: Option<(String, String)>,
    pub radius: usize,
    pub ball_positives: usize,
    /// Positive ball elements with no accepted word of length ≤ `word_cap`.
    pub unhit: Vec<String>,
}

impl AgreementReport {
    pub fn ok(&self) -> bool {
        self.non_positive.is_none() && self.collision.is_none() && self.unhit.is_empty()
    }
}

/// Every accepted word of length ≤ `word_cap` must evaluate into the cone,
/// injectively, and every positive element of the radius-`radius` ball must
/// be hit.
pub fn language_agreement(
    cone: &Cone,
    word_cap: usize,
    radius: usize,
    ball_cap: usize,
) -> Result<AgreementReport> {
    let g = cone.group();
    let lang = cone
        .language()
        .ok_or_else(|| VerifyError::Domain(format!("cone `{}` has no language", cone.name())))?
        .with_alphabet(g.alphabet())?;
    let words = lang.enumerate_words(word_cap);
    let values: Vec<GroupElement> = words
        .par_iter()
        .map(|w| g.evaluate(w))
        .collect::<std::result::Result<_, _>>()?;
    let non_positive = values
        .iter()
        .position(|v| !cone.contains(v))
        .map(|i| format_word(&words[i]));
    let mut first: HashMap<&GroupElement, usize> = HashMap::new();
    let mut collision = None;
    for (i, v) in values.iter().enumerate() {
        if let Some(&j) = first.get(v) {
            collision = Some((format_word(&words[j]), format_word(&words[i])));
            break;
        }
        first.insert(v, i);
    }
    let ball = g.ball(radius, ball_cap)?;
    let positives: Vec<&GroupElement> = ball.elements.iter().filter(|x| cone.contains(x)).collect();
    let unhit = positives
        .iter()
        .filter(|x| !first.contains_key(**x))
        .map(|x| g.display(x))
        .collect();
    Ok(AgreementReport {
        word_cap,
        words: words.len(),
        non_positive,
        collision,
        radius,
        ball_positives: positives.len(),
        unhit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Group;
    use crate::orders::build_cone;

    #[test]
    fn integers_pass() {
        let r = cone_axioms_check(&build_cone("z+").unwrap(), 5, 10_000, 1000, 7).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.ball_size, 11);
        assert_eq!(r.positives, 5);
        assert_eq!(r.semigroup_pairs, 25);
    }

    #[test]
    fn everything_positive_fails_antisymmetry() {
        let c = Cone::new(Group::parse("Z").unwrap(), "all", true, None, |_| true);
        let r = cone_axioms_check(&c, 3, 100, 100, 1).unwrap();
        assert!(!r.identity_excluded);
        assert_eq!(r.antisymmetry_violation.as_deref(), Some("1"));
    }

    #[test]
    fn partial_cone_skips_trichotomy() {
        let c = Cone::empty(Group::parse("Z^2").unwrap());
        let r = cone_axioms_check(&c, 3, 1000, 100, 1).unwrap();
        assert!(r.ok());
        assert!(!r.total);
    }

    #[test]
    fn baumslag_solitar() {
        let c = build_cone("bs1:2").unwrap();
        let r = cone_axioms_check(&c, 6, 100_000, 20_000, 3).unwrap();
        assert!(r.ok(), "{r:?}");
    }

    #[test]
    fn integer_language() {
        let r = language_agreement(&build_cone("z+").unwrap(), 6, 6, 1000).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.words, 6);
    }

    #[test]
    fn wrong_language_is_caught() {
        let g = Group::parse("Z").unwrap();
        let lang = crate::automata::Automaton::from_regex("t*", Some(g.alphabet())).unwrap();
        let c = Cone::new(
            g,
            "bad",
            true,
            Some(lang),
            |x| matches!(x, GroupElement::Lattice(v) if v[0] > 0),
        );
        let r = language_agreement(&c, 3, 2, 100).unwrap();
        assert_eq!(r.non_positive.as_deref(), Some("ε"));
    }
}
