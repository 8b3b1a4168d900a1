//! Exact signature and first Betti number of positive braid closures.
//!
//! Two independent routes compute the signature of the closure of a
//! positive braid word:
//!
//! - [`goeritz`]: the closed-braid diagram is built combinatorially
//!   ([`diagram`]), checkerboard colored, and the Goeritz matrix together with
//!   the type II crossing correction gives `sigma = sigma(G) - mu`.
//! - [`seifert`]: the Seifert matrix of the Bennequin surface in the brick
//!   basis gives `sigma = sigma(V + V^T)`.
//!
//! All arithmetic is exact ([`forms`]). The crate is `no_std` and only needs
//! `alloc`.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod braid;
pub mod diagram;
mod error;
pub mod forms;
pub mod goeritz;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod seifert;

pub use braid::{BraidWord, CanonicalKey, Family, FamilySpec, StrandPermutation};
pub use diagram::{Coloring, CrossingClass, CrossingType, PlanarDiagram};
pub use error::Error;
pub use forms::SignatureTriple;
pub use goeritz::{FirstRowBasis, FirstRowReport, GoeritzData};
pub use matrix::IntMatrix;
pub use report::{InvariantReport, Method};
pub use seifert::SeifertData;

pub type Result<T, E = Error> = core::result::Result<T, E>;
