//! Bounded, honestly labelled diagnostics.
//!
//! Every check here works on finite data (words up to a cap, balls of a given
//! radius, searches of a given depth). A miss at a cap is reported as such and
//! never turned into a claim of non-existence.

mod cones;
mod membership;
mod pv;
mod relations;
mod xsection;

use thiserror::Error;

use crate::automata::AutomatonError;
use crate::groups::GroupError;
use crate::orders::OrderError;

pub use cones::{cone_axioms_check, language_agreement, AgreementReport, ConeAxiomReport};
pub use membership::{bounded_power_membership, format_witness, Factor, ThreeValued};
pub use pv::{
    fiber_set, fiber_set_with, pv_analysis, PvClass, PvComponent, PvReport, SSet, CYCLE_CAP,
};
pub use relations::{
    evaluate_xy, find_relation, relation_combine, relation_equalize, substitute,
    torsion_extension_relation, verify_relation, DirectProduct, Magma, RELATION_BUDGET,
};
pub use xsection::{check_cross_section, check_cross_section_on, XSectionReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("capacity exceeded: {what} (cap {cap})")]
    Capacity { what: String, cap: usize },
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error(transparent)]
    Order(#[from] OrderError),
}

impl VerifyError {
    fn capacity(what: impl Into<String>, cap: usize) -> Self {
        VerifyError::Capacity {
            what: what.into(),
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, VerifyError>;
