//! Exact combinatorics of the Shi arrangement for the classical root
//! systems A, B, C, D.
//!
//! The crate computes, for any region of the Shi arrangement given by its
//! sign type, the unique minimal alcove of that region — via the arc-diagram
//! reading of the region's parking function — and cross-checks every formula
//! against a brute-force oracle that enumerates alcoves by exact rational
//! reflections.
//!
//! * [`roots`] — root systems, the root poset, heights, antichains.
//! * [`weyl`] — (signed) permutation realizations of the Weyl groups.
//! * [`arcs`] — line layouts, arc diagrams, crossing/nesting, arc counts.
//! * [`shi`] — sign types, Shi vectors and relations, parking functions,
//!   region bijections, minimal elements.
//! * [`oracle`] — alcove enumeration and region census in exact arithmetic.
//! * [`render`] — text and SVG pictures of arc diagrams.
//!
//! The core is `no_std` (with `alloc`); the `std` feature only adds the
//! standard error trait.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(any(feature = "std", test))]
extern crate std;

mod error;

pub mod arcs;
pub mod oracle;
pub mod render;
pub mod roots;
pub mod shi;
pub mod weyl;

pub use arcs::ArcDiagram;
pub use error::{Error, Result};
pub use roots::{Family, NonNestingPartition, Root, RootSystem, RootSystemKind};
pub use shi::{ParkingFunction, ShiVector, Sign, SignType};
pub use weyl::SignedPermutation;
