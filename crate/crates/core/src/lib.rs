//! Rational cross-sections of finitely generated groups.
//!
//! - [`automata`]: finite automata over opaque letters, growth and path tools.
//! - [`groups`]: exact group backends and word evaluation.
//! - [`grigorchuk`]: the first Grigorchuk group, its Lysenok endomorphism and
//!   the ascending HNN extension acting on a graded tree.
//! - [`orders`]: cones (left orders), cone languages and cross-section
//!   constructions.
//! - [`catalog`]: small hand-built automata.
//! - [`verify`]: bounded harnesses for cross-sections, cones and relations.

pub mod automata;
pub mod catalog;
pub mod grigorchuk;
pub mod groups;
pub mod orders;
pub mod verify;
