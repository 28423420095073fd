//! Exact combinatorics of the Pieri rule for the symmetric group `S_n` and
//! for the spherical principal series of `GL_n(F_q)`.
//!
//! Everything here is pure computation over partitions: dominance order,
//! horizontal strips, contingency-table intertwining numbers, Kostka tables,
//! Grothendieck-group basis changes and q-polynomial dimension formulas. The
//! [`oracle`] module recomputes the same quantities by brute force (explicit
//! permutation characters, tableau fillings, matrices over `F_2`/`F_3`) so
//! every result can be checked along an independent route.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

mod error;

pub mod oracle;
pub mod partitions;
pub mod pieri;
pub mod qside;
pub mod rep_ring;
pub mod tabloid;

pub use error::{Error, Result};
pub use partitions::{Partition, SkewShape};
pub use pieri::KostkaTable;
pub use qside::QPoly;
pub use rep_ring::{Basis, Group, RepRing, VirtualRep};
pub use tabloid::IntersectionMatrix;
