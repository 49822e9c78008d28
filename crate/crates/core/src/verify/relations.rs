//! Positive relations `w₁(x, y) = w₂(x, y)` between two elements, with
//! `w₁ ≠ w₂` words of equal length over `{x, y}`.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use super::{Result, VerifyError};
use crate::groups::{Group, GroupElement};

/// Words evaluated by one relation search.
pub const RELATION_BUDGET: usize = 1_000_000;

/// Anything with an associative product and an identity.
pub trait Magma {
    type Elem: Clone + Eq + Hash + Debug;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn identity(&self) -> Self::Elem;
}

impl Magma for Group {
    type Elem = GroupElement;

    fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        Ok(Group::mul(self, a, b)?)
    }

    fn identity(&self) -> GroupElement {
        Group::identity(self)
    }
}

#[derive(Debug, Clone)]
pub struct DirectProduct<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Magma, B: Magma> Magma for DirectProduct<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok((self.left.mul(&a.0, &b.0)?, self.right.mul(&a.1, &b.1)?))
    }

    fn identity(&self) -> Self::Elem {
        (self.left.identity(), self.right.identity())
    }
}

fn check_word(w: &str) -> Result<()> {
    match w.chars().find(|&c| c != 'x' && c != 'y') {
        Some(c) => Err(VerifyError::Domain(format!(
            "`{c}` in `{w}`: relation words use only x and y"
        ))),
        None => Ok(()),
    }
}

/// Evaluate a word over `{x, y}`.
pub fn evaluate_xy<M: Magma>(g: &M, w: &str, x: &M::Elem, y: &M::Elem) -> Result<M::Elem> {
    check_word(w)?;
    let mut acc = g.identity();
    for c in w.chars() {
        acc = g.mul(&acc, if c == 'x' { x } else { y })?;
    }
    Ok(acc)
}

/// Replace `x` by `u1` and `y` by `u2`.
pub fn substitute(w: &str, u1: &str, u2: &str) -> String {
    w.chars().map(|c| if c == 'x' { u1 } else { u2 }).collect()
}

/// `w1(x, y) = w2(x, y)` as elements.
pub fn verify_relation<M: Magma>(
    g: &M,
    w1: &str,
    w2: &str,
    x: &M::Elem,
    y: &M::Elem,
) -> Result<bool> {
    Ok(evaluate_xy(g, w1, x, y)? == evaluate_xy(g, w2, x, y)?)
}

/// Turn `v1 = v2` into a relation of equal lengths: `(v1·y·v2, v2·y·v1)`,
/// or the inputs if they already have equal lengths.
pub fn relation_equalize(v1: &str, v2: &str) -> Result<(String, String)> {
    check_word(v1)?;
    check_word(v2)?;
    if v1 == v2 {
        return Err(VerifyError::Domain(
            "the two sides are the same word".into(),
        ));
    }
    if v1.len() == v2.len() {
        return Ok((v1.to_string(), v2.to_string()));
    }
    Ok((format!("{v1}y{v2}"), format!("{v2}y{v1}")))
}

/// Breadth-first search for an equal-length relation between `x` and `y`:
/// `xy = yx` is tried first, then all words of length 1, 2, … until two
/// share a value or `budget` words have been evaluated.
pub fn find_relation<M: Magma>(
    g: &M,
    x: &M::Elem,
    y: &M::Elem,
    budget: usize,
) -> Result<(String, String)> {
    if g.mul(x, y)? == g.mul(y, x)? {
        return Ok(("xy".into(), "yx".into()));
    }
    let mut spent = 0;
    let mut layer: Vec<(String, M::Elem)> = vec![(String::new(), g.identity())];
    loop {
        let mut seen: HashMap<M::Elem, usize> = HashMap::new();
        let mut next = Vec::with_capacity(layer.len() * 2);
        for (w, v) in &layer {
            for (c, z) in [('x', x), ('y', y)] {
                spent += 1;
                if spent > budget {
                    return Err(VerifyError::capacity("relation search words", budget));
                }
                let val = g.mul(v, z)?;
                let mut w2 = w.clone();
                w2.push(c);
                if let Some(&i) = seen.get(&val) {
                    let first: &(String, M::Elem) = &next[i];
                    return Ok((first.0.clone(), w2));
                }
                seen.insert(val.clone(), next.len());
                next.push((w2, val));
            }
        }
        layer = next;
    }
}

fn checked<M: Magma>(
    g: &M,
    (w1, w2): (String, String),
    x: &M::Elem,
    y: &M::Elem,
) -> Result<(String, String)> {
    if w1 == w2 || w1.len() != w2.len() || !verify_relation(g, &w1, &w2, x, y)? {
        return Err(VerifyError::Domain(format!(
            "relation {w1} = {w2} failed verification"
        )));
    }
    Ok((w1, w2))
}

/// Relation in `A × B` from relations in each factor:
/// `u1(g₁, g₂) = u2(g₁, g₂)` in `A`, then `v1(U1, U2) = v2(U1, U2)` in `B`
/// with `Ui = ui(h₁, h₂)`, giving `wi = vi(u1, u2)`.
pub fn relation_combine<A: Magma, B: Magma>(
    p: &DirectProduct<A, B>,
    x: &(A::Elem, B::Elem),
    y: &(A::Elem, B::Elem),
    budget: usize,
) -> Result<(String, String)> {
    let (u1, u2) = find_relation(&p.left, &x.0, &y.0, budget)?;
    let big1 = evaluate_xy(&p.right, &u1, &x.1, &y.1)?;
    let big2 = evaluate_xy(&p.right, &u2, &x.1, &y.1)?;
    let (v1, v2) = find_relation(&p.right, &big1, &big2, budget)?;
    checked(
        p,
        (substitute(&v1, &u1, &u2), substitute(&v2, &u1, &u2)),
        x,
        y,
    )
}

/// Relation between `g₁, g₂` in an extension with torsion quotient: with
/// `nᵢ` the order of the image of `gᵢ`, a relation between the kernel
/// elements `g₁^{n₁}, g₂^{n₂}` is pulled back by substituting powers.
pub fn torsion_extension_relation<M: Magma, Q: Magma>(
    g: &M,
    quotient: &Q,
    project: impl Fn(&M::Elem) -> Q::Elem,
    g1: &M::Elem,
    g2: &M::Elem,
    order_cap: usize,
    budget: usize,
) -> Result<(String, String)> {
    let order = |x: &M::Elem| -> Result<usize> {
        let q = project(x);
        let mut acc = q.clone();
        for n in 1..=order_cap {
            if acc == quotient.identity() {
                return Ok(n);
            }
            acc = quotient.mul(&acc, &q)?;
        }
        Err(VerifyError::capacity("order in the quotient", order_cap))
    };
    let (n1, n2) = (order(g1)?, order(g2)?);
    let pow = |x: &M::Elem, n: usize| -> Result<M::Elem> {
        (0..n).try_fold(g.identity(), |acc, _| g.mul(&acc, x))
    };
    let (k1, k2) = (pow(g1, n1)?, pow(g2, n2)?);
    let (w1, w2) = find_relation(g, &k1, &k2, budget)?;
    let (p1, p2) = ("x".repeat(n1), "y".repeat(n2));
    checked(
        g,
        (substitute(&w1, &p1, &p2), substitute(&w2, &p1, &p2)),
        g1,
        g2,
    )
}
