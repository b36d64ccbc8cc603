//! Exact computation of finite-type invariants of welded string links.
//!
//! A welded string link is stored as a [`GaussDiagram`]: `n` ordered strands
//! carrying the endpoints of signed chords (classical crossings). Virtual
//! crossings carry no information in this model and are never stored.
//!
//! On top of the diagram model the crate provides:
//!
//! * arrow calculus: w-tree presentations, recursive expansion and surgery
//!   ([`wtree`]), plus the library of basic generators ([`generators`]);
//! * the welded group, Fox calculus and the normalized Alexander polynomial
//!   with its coefficients `alpha_k` ([`group`], [`alexander`]);
//! * closure invariants `I_{R;k}`, welded linking numbers and Milnor
//!   invariants via truncated Magnus expansion ([`invariants`], [`milnor`]);
//! * normal forms up to w2-, w3- and (two-strand) w4-equivalence with
//!   round-trip verification ([`normal_form`]);
//! * finite-type degree testing by alternating sums over virtualization
//!   subsets ([`ft`]).
//!
//! All arithmetic is exact: arbitrary-precision integers, exact rationals
//! for w-tree positions, fraction-free determinants. No floating point.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod alexander;
pub mod catalog;
pub mod diagram;
pub mod ft;
pub mod gauss_text;
pub mod generators;
pub mod group;
pub mod invariants;
pub mod laurent;
pub mod magnus;
pub mod milnor;
pub mod moves;
pub mod normal_form;
pub mod rational;
pub mod rng;
pub mod verification;
pub mod wtree;

mod error;

pub use diagram::{Chord, ChordId, ClosureEntry, ClosureList, EndpointId, GaussDiagram, Sign};
pub use error::{Error, Result};
pub use generators::{GenName, GeneratorId};
pub use invariants::{Descriptor, InvariantVector};
pub use laurent::LaurentPoly;
pub use normal_form::NormalFormWord;
