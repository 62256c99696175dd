//! Bitmask toolkit for intersecting k-uniform set families over [n], n ≤ 64.
//!
//! The crate has four layers:
//! * primitive family operations (links, deletions, diversity, shadows,
//!   shifts, quotients, covering numbers, isomorphism, switching),
//! * generators for the named extremal families,
//! * exact and real-valued size formulas,
//! * brute-force and randomized oracles that check the formulas and the
//!   classification statements at desk scale.
//!
//! Everything is a pure function over immutable values; results are
//! canonically ordered so equal families compare bit-identical.

mod error;
mod set;

mod family;
mod iso;
mod shadow;
mod shift;
mod switch;
mod witness;

pub mod bounds;
pub mod constructions;
pub mod oracles;

pub use error::{Error, Result};
pub use set::{
    elements_of, format_set, k_subsets, k_subsets_of_mask, mask_full, mask_interval, mask_of,
    word_from_elements, Params, SetWord,
};

pub use family::{
    common_intersection, covering_number, delete, diversity, full_family, is_cross_intersecting,
    is_intersecting, link, make_family, max_cross_partner, maximal_extension, normalize_diversity,
    relabel, Family,
};
pub use iso::are_isomorphic;
pub use shadow::{quotient, shadow};
pub use shift::{shift_closure, shift_family, shift_set};
pub use switch::{bipartite_switch, SwitchContext, SwitchOutcome};
pub use witness::{minimality_witness, MinimalWitness, MinimalityCheck};
