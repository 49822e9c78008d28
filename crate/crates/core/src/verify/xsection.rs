use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{Result, VerifyError};
use crate::automata::{format_word, Automaton};
use crate::groups::{Group, GroupElement};

/// Words longer than this many are never enumerated in one report.
const WORD_LIMIT: usize = 5_000_000;

/// Outcome of evaluating every accepted word up to a length cap.
///
/// Elements are listed by their display form. `uncovered` means "no
/// representative of length ≤ `word_cap`", nothing more.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XSectionReport {
    pub word_cap: usize,
    pub ball_radius: Option<usize>,
    pub words: usize,
    pub injective: bool,
    /// First pair of accepted words (in length-lexicographic order) with the
    /// same value.
    pub collision: Option<(String, String)>,
    pub collisions: usize,
    pub target_size: usize,
    pub covered: Vec<String>,
    pub uncovered: Vec<String>,
    /// Targets hit by two or more words.
    pub multiply_covered: Vec<String>,
}

impl XSectionReport {
    /// Injective and every target hit.
    pub fn bijective(&self) -> bool {
        self.injective && self.uncovered.is_empty()
    }
}

fn check_language(lang: &Automaton, group: &Group) -> Result<Automaton> {
    for l in lang.alphabet() {
        group.generator(l)?;
    }
    Ok(lang.with_alphabet(group.alphabet())?)
}

/// Evaluate accepted words of length ≤ `word_cap` and compare against the
/// ball of radius `ball_radius`.
pub fn check_cross_section(
    lang: &Automaton,
    group: &Group,
    word_cap: usize,
    ball_radius: usize,
    ball_cap: usize,
) -> Result<XSectionReport> {
    let ball = group.ball(ball_radius, ball_cap)?;
    let mut r = check_cross_section_on(lang, group, word_cap, &ball.elements)?;
    r.ball_radius = Some(ball_radius);
    Ok(r)
}

/// As [`check_cross_section`] with an explicit finite target set.
pub fn check_cross_section_on(
    lang: &Automaton,
    group: &Group,
    word_cap: usize,
    target: &[GroupElement],
) -> Result<XSectionReport> {
    let lang = check_language(lang, group)?;
    let words = lang
        .enumerate_words_capped(word_cap, WORD_LIMIT)
        .map_err(|_| VerifyError::capacity("enumerated words", WORD_LIMIT))?;
    let values: Vec<GroupElement> = words
        .par_iter()
        .map(|w| group.evaluate(w))
        .collect::<std::result::Result<_, _>>()?;
    let mut first: HashMap<&GroupElement, usize> = HashMap::with_capacity(values.len());
    let mut hits: HashMap<&GroupElement, usize> = HashMap::new();
    let mut collision = None;
    let mut collisions = 0;
    for (i, v) in values.iter().enumerate() {
        *hits.entry(v).or_default() += 1;
        if let Some(&j) = first.get(v) {
            collisions += 1;
            if collision.is_none() {
                collision = Some((format_word(&words[j]), format_word(&words[i])));
            }
        } else {
            first.insert(v, i);
        }
    }
    let mut covered = Vec::new();
    let mut uncovered = Vec::new();
    let mut multiply_covered = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for g in target {
        if !seen.insert(g) {
            continue;
        }
        let name = group.display(g);
        match hits.get(g) {
            Some(&n) => {
                if n > 1 {
                    multiply_covered.push(name.clone());
                }
                covered.push(name);
            }
            None => uncovered.push(name),
        }
    }
    Ok(XSectionReport {
        word_cap,
        ball_radius: None,
        words: words.len(),
        injective: collision.is_none(),
        collision,
        collisions,
        target_size: seen.len(),
        covered,
        uncovered,
        multiply_covered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn collision_on_integers() {
        let g = Group::parse("Z").unwrap();
        let m = Automaton::from_regex("ε|t|tT", Some(g.alphabet())).unwrap();
        let r = check_cross_section(&m, &g, 4, 1, 100).unwrap();
        assert!(!r.injective);
        assert_eq!(r.collision, Some(("ε".into(), "tT".into())));
    }

    #[test]
    fn uncovered_at_cap() {
        let g = Group::parse("Z").unwrap();
        let m = Automaton::from_regex("t*", Some(g.alphabet())).unwrap();
        let r = check_cross_section(&m, &g, 5, 1, 100).unwrap();
        assert!(r.injective);
        assert_eq!(r.uncovered, vec!["-1".to_string()]);
        assert_eq!(r.covered.len() + r.uncovered.len(), r.target_size);
    }

    #[test]
    fn lamplighter_ball() {
        let g = Group::parse("wr(C2,Z)").unwrap();
        let r = check_cross_section(&catalog::lamplighter(), &g, 14, 3, 10_000).unwrap();
        assert!(r.injective, "{:?}", r.collision);
        assert!(r.uncovered.is_empty());
        assert!(r.bijective());
    }

    #[test]
    fn foreign_letters_rejected() {
        let g = Group::parse("Z").unwrap();
        let m = Automaton::from_regex("a", None).unwrap();
        assert!(check_cross_section(&m, &g, 2, 1, 10).is_err());
    }
}
