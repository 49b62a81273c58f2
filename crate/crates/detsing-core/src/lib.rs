//! Exact invariants of the non-commutative desingularization of the generic
//! determinantal variety cut out by the maximal minors of an `m × n` matrix.
//!
//! Everything is computed over the rationals with no floating point anywhere:
//! higher direct image tables on projective space, resolution shapes, the
//! quiverized Clifford algebra with its minimal presentations, quiver
//! representations over a field, Ext between graded simples, and a brute-force
//! graded linear algebra oracle that certifies the closed forms.
#![no_std]

extern crate alloc;

pub mod clifford;
pub mod cohomology;
pub mod error;
pub mod ext;
pub mod graded;
pub mod linalg;
pub mod matrix;
pub mod moduli;
pub mod module;
pub mod oracle;
pub mod partitions;
pub mod poly;
pub mod resolutions;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::QMatrix;
pub use matrix::PolyMatrix;
pub use module::{Generator, GradedFreeModule, Label};
pub use poly::{Monomial, SparsePoly};
pub use ring::{IndexSet, RingContext};
pub use scalar::Rational;
