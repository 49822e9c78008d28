use super::{Cone, OrderError, Result};
use crate::automata::Automaton;
use crate::groups::Group;

/// `𝒢₊ ⊔ 𝒢₋ ⊔ {ε}` where `𝒢₋` reverses the words of `𝒢₊` and replaces every
/// letter by its formal inverse. Requires `ε ∉ 𝒢₊`.
pub fn mirror_language(plus: &Automaton, group: &Group) -> Result<Automaton> {
    if plus.recognize(&[])? {
        return Err(OrderError::Domain("positive language contains ε".into()));
    }
    let alphabet = group.alphabet();
    let plus = plus.with_alphabet(alphabet)?;
    let inv = group.inverse_map();
    let minus = plus.reverse().relabel(alphabet, |l| inv[l].clone())?;
    let eps = Automaton::epsilon(alphabet.to_vec());
    Ok(plus.union(&minus).union(&eps).minimize())
}

/// [`mirror_language`] of the cone's language.
pub fn mirror_completion(cone: &Cone) -> Result<Automaton> {
    let lang = cone
        .language()
        .ok_or_else(|| OrderError::Domain(format!("cone `{}` has no language", cone.name())))?;
    mirror_language(lang, cone.group())
}

/// Move a lamp-group language and base-group languages into the wreath
/// product's alphabet.
struct WreathAlphabet<'a> {
    group: &'a Group,
    lamp: &'a Group,
}

impl<'a> WreathAlphabet<'a> {
    fn new(group: &'a Group) -> Result<Self> {
        let (lamp, _) = group.wreath_factors().ok_or_else(|| {
            OrderError::Domain(format!("{} is not a wreath product", group.spec()))
        })?;
        Ok(WreathAlphabet { group, lamp })
    }

    fn lamp_lang(&self, m: &Automaton) -> Result<Automaton> {
        let m = m.with_alphabet(self.lamp.alphabet())?;
        Ok(m.relabel(self.group.alphabet(), |l| {
            self.group.lamp_letter(l).unwrap_or_else(|_| l.to_string())
        })?)
    }

    fn base_lang(&self, m: &Automaton) -> Result<Automaton> {
        Ok(m.with_alphabet(self.group.alphabet())?)
    }

    /// `𝓛₀ = 𝓛 ∖ {ε}`; the identity of `L` must be represented by `ε`.
    fn nontrivial_lamps(&self, l_all: &Automaton) -> Result<Automaton> {
        if !l_all.recognize(&[])? {
            return Err(OrderError::Domain(
                "lamp language must represent the identity by ε".into(),
            ));
        }
        let l = self.lamp_lang(l_all)?;
        Ok(l.difference(&Automaton::epsilon(self.group.alphabet().to_vec())))
    }
}

/// `𝒬 ⊔ 𝒬𝓛₀(𝒬₊𝓛₀)*𝒬`: lamps are set in increasing order of position, so
/// cross-sections of `L`, `Q` and `Q₊` give one of `L ≀ Q`.
pub fn wreath_cross_section(
    group: &Group,
    l_all: &Automaton,
    q_all: &Automaton,
    q_plus: &Automaton,
) -> Result<Automaton> {
    let w = WreathAlphabet::new(group)?;
    let l0 = w.nontrivial_lamps(l_all)?;
    let q = w.base_lang(q_all)?;
    let qp = w.base_lang(q_plus)?;
    let body = q.concat(&l0).concat(&qp.concat(&l0).star()).concat(&q);
    Ok(q.union(&body).minimize())
}

/// `𝒢₊ = 𝒬₊ ∪ 𝒬𝓛₊(𝒬₊𝓛₀)*𝒬`: positive iff the lamp at the least support
/// point is positive, or no lamp is lit and the cursor is positive.
pub fn wreath_cone_language(
    group: &Group,
    l_plus: &Automaton,
    l_all: &Automaton,
    q_plus: &Automaton,
    q_all: &Automaton,
) -> Result<Automaton> {
    let w = WreathAlphabet::new(group)?;
    let l0 = w.nontrivial_lamps(l_all)?;
    let lp = w.lamp_lang(l_plus)?;
    let q = w.base_lang(q_all)?;
    let qp = w.base_lang(q_plus)?;
    let body = q.concat(&lp).concat(&qp.concat(&l0).star()).concat(&q);
    Ok(qp.union(&body).minimize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{format_word, word};
    use crate::orders::build_cone;
    use std::collections::HashSet;

    #[test]
    fn mirror_of_integers() {
        let c = build_cone("z+").unwrap();
        let m = mirror_completion(&c).unwrap();
        let expect = Automaton::from_regex("t+|T+|ε", Some(c.group().alphabet())).unwrap();
        assert!(m.equivalent(&expect).unwrap());
    }

    #[test]
    fn mirror_of_trivial_group() {
        let c = Cone::empty(Group::parse("C1").unwrap());
        let m = mirror_completion(&c).unwrap();
        assert_eq!(m.enumerate_words(4), vec![Vec::<String>::new()]);
    }

    #[test]
    fn mirror_rejects_epsilon() {
        let g = Group::parse("Z").unwrap();
        let m = Automaton::from_regex("t*", Some(g.alphabet())).unwrap();
        assert!(mirror_language(&m, &g).is_err());
    }

    #[test]
    fn lamplighter_cross_section() {
        let g = Group::parse("wr(C2,Z)").unwrap();
        let lamp = Automaton::from_regex("ε|a", None).unwrap();
        let z = Group::parse("Z").unwrap();
        let q = Automaton::from_regex("t+|T+|ε", Some(z.alphabet())).unwrap();
        let qp = Automaton::from_regex("t+", Some(z.alphabet())).unwrap();
        let m = wreath_cross_section(&g, &lamp, &q, &qp).unwrap();
        let expect =
            Automaton::from_regex("(t+|T+)?|(t+|T+)?a(t+a)*(t+|T+)?", Some(g.alphabet())).unwrap();
        assert!(m.equivalent(&expect).unwrap());
        let mut seen = HashSet::new();
        for w in m.enumerate_words(8) {
            assert!(
                seen.insert(g.evaluate(&w).unwrap()),
                "{} collides",
                format_word(&w)
            );
        }
    }

    #[test]
    fn trivial_lamps_give_base_language() {
        let g = Group::parse("wr(C1,Z)").unwrap();
        let z = Group::parse("Z").unwrap();
        let q = Automaton::from_regex("t+|T+|ε", Some(z.alphabet())).unwrap();
        let qp = Automaton::from_regex("t+", Some(z.alphabet())).unwrap();
        let lamp = Automaton::epsilon(Group::parse("C1").unwrap().alphabet().to_vec());
        let m = wreath_cross_section(&g, &lamp, &q, &qp).unwrap();
        assert!(m
            .equivalent(&q.with_alphabet(g.alphabet()).unwrap())
            .unwrap());
    }

    #[test]
    fn lamp_language_without_identity_is_rejected() {
        let g = Group::parse("wr(C2,Z)").unwrap();
        let lamp = Automaton::from_regex("a", None).unwrap();
        let z = Group::parse("Z").unwrap();
        let q = Automaton::from_regex("t+|T+|ε", Some(z.alphabet())).unwrap();
        assert!(wreath_cross_section(&g, &lamp, &q, &q).is_err());
    }

    #[test]
    fn wreath_cone_words_are_positive() {
        let c = build_cone("wr(z+,z+)").unwrap();
        let g = c.group();
        for w in c.language().unwrap().enumerate_words(6) {
            let x = g.evaluate(&w).unwrap();
            assert!(c.contains(&x), "{}", format_word(&w));
        }
        assert!(c.language().unwrap().recognize(&word("tt")).unwrap());
    }
}
