//! A laboratory for finite commutative rings with identity.
//!
//! The crate constructs rings as explicit Cayley tables, enumerates their
//! ideal lattices, decides a family of radical-based ideal classes (J-ideals,
//! weakly J-ideals and their relatives), builds derived rings (quotients,
//! products, idealizations, amalgamated duplications, localizations,
//! truncated polynomial rings), and machine-checks a catalog of theorems
//! about those classes over generated corpora.
//!
//! Everything is exact arithmetic over element indices; all structures are
//! immutable after construction and safe to share across worker threads.

pub mod classify;
pub mod construct;
pub mod dsl;
pub mod elem;
pub mod ideal;
pub mod ring;
pub mod theorem;

pub use elem::{ElemSet, ElementId};
pub use ideal::{IdealSet, MultSet};
pub use ring::{make_zn, validate_ring, OrderCaps, Ring, RingHom, RingTable};
