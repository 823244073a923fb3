//! Exact computer algebra for multiplication rules in coordinate rings of
//! affine spherical homogeneous spaces.
//!
//! The library has three layers:
//!
//! * symmetric functions over `Q(k)` with the deformed scalar product, Jack
//!   symmetric functions in the J-normalization, their norms and structure
//!   constants ([`symfunc`], [`jack`]);
//! * root systems, based root data, restricted coroots and integer lattice
//!   diagnostics ([`rootsys`], [`datum`], [`lattice`], [`repcalc`]);
//! * a database of spherical pair cases with their weight monoids, spherical
//!   roots and isogeny maps, together with the scan harness that compares
//!   product-support oracles against tensor/order predicates ([`sphdata`],
//!   [`harness`]).
//!
//! All arithmetic is exact (arbitrary precision rationals); there is no
//! floating point anywhere in the crate.

pub mod datum;
pub mod error;
pub mod harness;
pub mod jack;
pub mod lattice;
pub mod linalg;
pub mod param;
pub mod partition;
pub mod repcalc;
pub mod rootsys;
pub mod sphdata;
pub mod symfunc;

pub use error::{Error, Result};
