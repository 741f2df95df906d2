//! Permutation codes from finite groups.
//!
//! A finite group `T` together with a tuple of degree-`q` permutation
//! representations yields a code of length `r·q`: each element's codeword is
//! the concatenation of its image tables across the tuple. Taking `r` copies
//! of one representation gives a repetition code; mixing inequivalent
//! representations gives a twisted code, which can have strictly larger
//! minimum distance at the same length and size.
//!
//! The crate enumerates groups explicitly (up to ~10⁵ elements), computes
//! minimum distances and inner distance distributions exactly, ships a
//! catalogue of built-in constructions (S6 with its outer twist, A6, M12 with
//! its second 12-point action, AGL(3,2)/ASL(3,2), PSL(3,2) on points and
//! hyperplanes, the four coset actions of S6 on order-12 subgroups, and the
//! ASL(2,2^f) family), and checks the computed tables against golden files.

pub mod asl2r;
pub mod builtin;
pub mod code;
pub mod group;
pub mod neighbour;
pub mod perm;
pub mod repr;
pub mod tables;

pub use code::{hamming, repetition_min_distance, Code, CodeError};
pub use group::{ConjugacyClass, CosetTable, GroupError, PermGroup};
pub use perm::{Perm, PermError};
pub use repr::{Action, Automorphism, ReprError};
