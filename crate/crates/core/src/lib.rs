//! Canonical forms for automorphism classes of elements in finitely
//! generated abelian groups.
//!
//! A group is described by a list of cyclic factors (`"Z8 x Z4^2 x Z"`),
//! normalized to its primary decomposition, and every element is mapped to
//! the unique representative element of its automorphism orbit. Two
//! elements are automorphic exactly when their representatives agree.
//!
//! Besides canonicalization the crate counts and enumerates automorphism
//! classes of finite groups in closed form, and ships a brute-force orbit
//! oracle used to verify both on small groups.
//!
//! ```
//! use abelcanon::{canonicalize, Group};
//!
//! let group = Group::parse("Z8 x Z8").unwrap();
//! let e = group.parse_element("6,4").unwrap();
//! let canon = canonicalize(&e, group.schema()).canonical;
//! assert_eq!(group.user_coordinates(&canon.to_element(group.schema())), vec![2.into(), 0.into()]);
//! ```

pub mod arith;
pub mod counting;
mod error;
pub mod group;
pub mod json;
pub mod oracle;
pub mod reduction;

pub use counting::{
    count_by_support_size, count_classes, count_classes_rf, count_last_nonzero,
    enumerate_representatives, gaps, ClassCount, GapVector, PrimeCount,
};
pub use error::{Error, Result};
pub use group::{
    element_order, parse_element, parse_group_spec, to_primary, Element, ElementOrder, Factor,
    Group, GroupSpec, Layer, PrimaryComponent, PrimarySchema,
};
pub use oracle::{
    all_orbits, apply, enumerate_automorphisms, is_automorphism, mixed_orbit, verify_schema,
    HomMatrix, Limits, OrbitPartition, VerificationReport,
};
pub use reduction::{
    are_equivalent, basic_reduction, block_reduce, canonicalize, free_reduce, is_representative,
    CanonicalElement, Canonicalization, Equivalence, ReductionTrace, RepeatFreeVector, TraceStep,
};
