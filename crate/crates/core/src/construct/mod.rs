//! Derived ring constructions and transported ideals: quotients, direct
//! products, idealizations, amalgamations along an ideal, localizations,
//! and truncated polynomial rings.

mod amalgam;
mod idealization;
mod localize;
mod module;
mod poly;
mod product;
mod quotient;

pub use amalgam::{amalgamation, duplication, Amalgamation, SubringView};
pub use idealization::{ideal_in_idealization, idealization, Idealization};
pub use localize::{localization, Localization};
pub use module::{
    ideal_action_image, module_annihilator, quotient_module, ring_as_module, submodules,
    validate_module, zero_module, zm_over_zn, ModuleTable,
};
pub use poly::{truncated_poly, TruncatedPoly};
pub use product::{product_ring, ProductRing};
pub use quotient::{quotient_ring, QuotientRing};

use thiserror::Error;

use crate::elem::ElementId;
use crate::ideal::IdealError;
use crate::ring::RingError;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("resulting order {requested} exceeds cap {cap}")]
    OrderCapExceeded { requested: usize, cap: usize },
    #[error("invalid module: {reason}, witness {witness:?}")]
    InvalidModule {
        reason: &'static str,
        witness: Vec<ElementId>,
    },
    #[error("containment violated: {0}")]
    ContainmentViolation(&'static str),
    #[error("invalid multiplicative set: {0}")]
    InvalidMultSet(&'static str),
    #[error("ideal does not live in f(R)+J")]
    KNotIdealOfImagePlusJ,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
